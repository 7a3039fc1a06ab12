#include <doctest.h>

#include <vector>

#include "wpmec/energy.hpp"
#include "wpmec/offline_fading.hpp"
#include "wpmec/offline_static.hpp"
#include "wpmec/online.hpp"
#include "wpmec/rng.hpp"
#include "wpmec/scenario.hpp"
#include "wpmec/verify.hpp"

using namespace wpmec;

namespace {

ChannelTrace flat_channels(std::size_t n, double h, double g) {
  ChannelTrace c;
  c.wpt_gain.assign(n, h);
  c.offl_gain.assign(n, g);
  c.mean_wpt = h;
  c.mean_offl = g;
  return c;
}

double plan_energy(const AllocationPlan& plan, const SystemParams& p) {
  double total = 0.0;
  for (double pw : plan.power) total += p.slot_len * pw;
  return total;
}

}  // namespace

TEST_SUITE_BEGIN("online");

TEST_CASE("static step commits the running-average total") {
  SystemParams p;
  OnlineState state;
  const OnlineMeans means{1e5, 0.0, 0.0};
  // N=2, A1=2e5: averages are 2e5 and (2e5+1e5)/2, so slot 1 commits 1.5e5
  const SlotDecision d = online_static_step(state, 2e5, 1e-4, 1e-6, means, 2, p);
  CHECK(d.local_bits + d.offl_bits == doctest::Approx(1.5e5).epsilon(1e-9));
  CHECK(state.residual_bits == doctest::Approx(5e4).epsilon(1e-9));
  // the transferred energy equals the consumed energy
  const double consumed = slot_consumption(d.local_bits, d.offl_bits, 1e-6, p);
  CHECK(harvested_energy(d.power, 1e-4, p) == doctest::Approx(consumed).epsilon(1e-12));
}

TEST_CASE("last slot forces completion") {
  SystemParams p;
  OnlineState state;
  state.slot = 1;
  state.residual_bits = 3e5;
  const OnlineMeans means{1e5, 0.0, 0.0};
  const SlotDecision d = online_static_step(state, 2e5, 1e-4, 1e-6, means, 2, p);
  CHECK(d.local_bits + d.offl_bits == doctest::Approx(5e5).epsilon(1e-9));
  CHECK(state.residual_bits == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("idle state stays idle") {
  SystemParams p;
  OnlineState state;
  const OnlineMeans means{0.0, 0.0, 0.0};
  const SlotDecision d = online_static_step(state, 0.0, 1e-4, 1e-6, means, 4, p);
  CHECK(d.local_bits == 0.0);
  CHECK(d.offl_bits == 0.0);
  CHECK(d.power == 0.0);
}

TEST_CASE("perfect forecast reproduces the offline static plan") {
  SystemParams p;
  p.num_slots = 6;
  TaskTrace t;
  t.arrivals.assign(6, 1.5e5);
  t.mean_arrival = 1.5e5;
  const ChannelTrace c = flat_channels(6, 1e-4, 1e-6);

  const AllocationPlan online = run_online(OnlinePolicy::static_channel, t, c, p);
  const OfflineSolution offline = solve_static(t, 1e-4, 1e-6, p);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(online.local_bits[i] == doctest::Approx(offline.plan.local_bits[i]).epsilon(1e-8));
    CHECK(online.offl_bits[i] == doctest::Approx(offline.plan.offl_bits[i]).epsilon(1e-8));
    CHECK(online.power[i] == doctest::Approx(offline.plan.power[i]).epsilon(1e-8));
  }
}

TEST_CASE("time-varying power rule clamps, over-provisions, and drains") {
  SystemParams p;
  p.online_gamma = 2.0;
  const OnlineMeans means{1e5, 2e-4, 1e-6};

  // battery already covers the need on an unfavorable channel: no transfer
  {
    OnlineState state;
    state.residual_energy = 1.0;  // far more than any one slot needs
    const SlotDecision d = online_fading_step(state, 1e5, 1e-4, 1e-6, means, 3, p);
    CHECK(d.power == 0.0);
  }

  // favorable channel with empty battery: gamma times the need
  {
    OnlineState state;
    const SlotDecision d = online_fading_step(state, 1e5, 4e-4, 1e-6, means, 3, p);
    const double need = slot_consumption(d.local_bits, d.offl_bits, 1e-6, p);
    CHECK(harvested_energy(d.power, 4e-4, p) == doctest::Approx(2.0 * need).epsilon(1e-9));
    CHECK(state.residual_energy == doctest::Approx(need).epsilon(1e-9));
  }

  // last slot with a stocked battery: no transfer even when favorable
  {
    OnlineState state;
    state.slot = 2;
    state.residual_bits = 0.0;
    state.residual_energy = 1.0;
    const SlotDecision d = online_fading_step(state, 1e5, 4e-4, 1e-6, means, 3, p);
    CHECK(d.power == 0.0);
  }
}

TEST_CASE("online runs are feasible and dominated by offline") {
  SystemParams p;
  p.num_slots = 10;
  Philox rng(31, 0);
  for (int trial = 0; trial < 40; ++trial) {
    TaskTrace t;
    ChannelTrace c;
    for (int i = 0; i < 10; ++i) {
      t.arrivals.push_back(rng.next_uniform(5e5));
      c.wpt_gain.push_back(2e-5 + rng.next_uniform(3e-4));
      c.offl_gain.push_back(2e-7 + rng.next_uniform(3e-6));
    }
    t.mean_arrival = 2.5e5;
    c.mean_wpt = 1.7e-4;
    c.mean_offl = 1.7e-6;

    const AllocationPlan online = run_online(OnlinePolicy::time_varying, t, c, p);
    CHECK(check_feasible(online, t, c, p).pass);
    const OfflineSolution offline = solve_fading(t, c, p);
    CHECK(offline.total_et_energy <= plan_energy(online, p) * (1.0 + 1e-9));

    // static-channel policy on the constant version of the same draw
    const ChannelTrace flat = flat_channels(10, c.wpt_gain[0], c.offl_gain[0]);
    const AllocationPlan online_sta = run_online(OnlinePolicy::static_channel, t, flat, p);
    CHECK(check_feasible(online_sta, t, flat, p).pass);
    const OfflineSolution offline_sta = solve_static(t, flat.wpt_gain[0], flat.offl_gain[0], p);
    CHECK(offline_sta.total_et_energy <= plan_energy(online_sta, p) * (1.0 + 1e-9));
  }
}

TEST_CASE("zero arrivals produce a zero plan") {
  SystemParams p;
  p.num_slots = 4;
  TaskTrace t;
  t.arrivals.assign(4, 0.0);
  const ChannelTrace c = flat_channels(4, 1e-4, 1e-6);
  for (OnlinePolicy policy : {OnlinePolicy::static_channel, OnlinePolicy::time_varying}) {
    const AllocationPlan plan = run_online(policy, t, c, p);
    CHECK(plan_energy(plan, p) == 0.0);
  }
}

TEST_SUITE_END();
