#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "wpmec/energy.hpp"
#include "wpmec/offline_fading.hpp"
#include "wpmec/offline_static.hpp"
#include "wpmec/rng.hpp"
#include "wpmec/scenario.hpp"
#include "wpmec/verify.hpp"

using namespace wpmec;

namespace {

TaskTrace tasks_of(std::vector<double> a) {
  TaskTrace t;
  t.arrivals = std::move(a);
  return t;
}

ChannelTrace channels_of(std::vector<double> h, std::vector<double> g) {
  ChannelTrace c;
  c.wpt_gain = std::move(h);
  c.offl_gain = std::move(g);
  c.mean_wpt = 1e-4;
  c.mean_offl = 1e-6;
  return c;
}

}  // namespace

TEST_SUITE_BEGIN("offline_fading");

TEST_CASE("dominating slots and effective gains") {
  const CdsDecomposition cds = compute_cds(std::vector<double>{1, 3, 2, 5, 4});
  CHECK(cds.cds_slots == std::vector<std::size_t>{0, 1, 3});
  CHECK(cds.eff_gain == std::vector<double>{1, 3, 3, 5, 5});

  const CdsDecomposition inc = compute_cds(std::vector<double>{1, 2, 3});
  CHECK(inc.cds_slots == std::vector<std::size_t>{0, 1, 2});
  CHECK(inc.eff_gain == std::vector<double>{1, 2, 3});

  const CdsDecomposition dec = compute_cds(std::vector<double>{3, 2, 1});
  CHECK(dec.cds_slots == std::vector<std::size_t>{0});
  CHECK(dec.eff_gain == std::vector<double>{3, 3, 3});

  // an equal gain never opens a new dominating slot
  const CdsDecomposition tie = compute_cds(std::vector<double>{2, 2, 2});
  CHECK(tie.cds_slots == std::vector<std::size_t>{0});

  CHECK_THROWS_AS(compute_cds(std::vector<double>{}), std::domain_error);
}

TEST_CASE("interval solver inverts closed forms") {
  SystemParams p;
  const std::vector<double> zero{0.0, 0.0};
  const std::vector<SlotGains> gains{{1e-4, 1e-6}, {1e-4, 1e-6}};
  const IntervalSolution empty = solve_interval(zero, gains, p);
  CHECK(empty.level == 0.0);
  CHECK(empty.weighted_energy == 0.0);

  // single slot, local only: analytic inverse of the sqrt law
  const std::vector<double> one{1e5};
  const std::vector<SlotGains> single{{1e-4, 1e-6}};
  const IntervalSolution loc = solve_interval(one, single, p, SplitMode::local_only);
  CHECK(loc.level == doctest::Approx(8e-6).epsilon(1e-9));
  CHECK(loc.local_bits[0] == doctest::Approx(1e5).epsilon(1e-9));

  // identical slots split a doubled load evenly
  const std::vector<double> two{3e5, 3e5};
  const IntervalSolution sym = solve_interval(two, gains, p);
  CHECK(sym.local_bits[0] == sym.local_bits[1]);
  CHECK(sym.offl_bits[0] == sym.offl_bits[1]);
  CHECK(sym.local_bits[0] + sym.offl_bits[0] == doctest::Approx(3e5).epsilon(1e-8));
}

TEST_CASE("cds power matches hand computation") {
  SystemParams p;
  ChannelTrace c = channels_of({4e-4, 1e-4, 9e-4}, {1e-6, 1e-6, 1e-6});
  const std::vector<double> local{1e5, 5e4, 2e5};
  const std::vector<double> offl{0.0, 1e5, 5e4};

  const std::vector<double> power = cds_power(local, offl, c, p);
  const double e0 = slot_consumption(local[0], offl[0], 1e-6, p);
  const double e1 = slot_consumption(local[1], offl[1], 1e-6, p);
  const double e2 = slot_consumption(local[2], offl[2], 1e-6, p);
  CHECK(power[0] == doctest::Approx((e0 + e1) / (0.1 * 0.3 * 4e-4)).epsilon(1e-12));
  CHECK(power[1] == 0.0);
  CHECK(power[2] == doctest::Approx(e2 / (0.1 * 0.3 * 9e-4)).epsilon(1e-12));

  CHECK(cds_power({0.0}, {0.0}, channels_of({1e-4}, {1e-6}), p)[0] == 0.0);
  const std::vector<double> one_power =
      cds_power({1e5}, {0.0}, channels_of({1e-4}, {1e-6}), p);
  CHECK(one_power[0] ==
        doctest::Approx(local_energy(1e5, p) / (0.1 * 0.3 * 1e-4)).epsilon(1e-12));
}

TEST_CASE("a constant trace reduces to the static solution") {
  SystemParams p;
  const TaskTrace t = tasks_of({4e5, 1e5, 4e5, 2e5});
  const ChannelTrace c = channels_of({1e-4, 1e-4, 1e-4, 1e-4}, {1e-6, 1e-6, 1e-6, 1e-6});

  const OfflineSolution fad = solve_fading(t, c, p);
  const OfflineSolution sta = solve_static(t, 1e-4, 1e-6, p);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(fad.plan.local_bits[i] == doctest::Approx(sta.plan.local_bits[i]).epsilon(1e-8));
    CHECK(fad.plan.offl_bits[i] == doctest::Approx(sta.plan.offl_bits[i]).epsilon(1e-8));
  }
  CHECK(fad.total_et_energy == doctest::Approx(sta.total_et_energy).epsilon(1e-8));
}

TEST_CASE("zero arrivals yield the zero plan") {
  SystemParams p;
  const OfflineSolution sol =
      solve_fading(tasks_of({0.0, 0.0}), channels_of({1e-4, 2e-4}, {1e-6, 1e-6}), p);
  CHECK(sol.total_et_energy == 0.0);
  CHECK(sol.plan.power[0] == 0.0);
  CHECK(sol.plan.power[1] == 0.0);
}

TEST_CASE("grid oracle confirms N=2 optimality with a gain jump") {
  SystemParams p;
  const TaskTrace t = tasks_of({3e5, 0.0});
  const ChannelTrace c = channels_of({1e-4, 2e-4}, {1e-6, 4e-6});

  const OfflineSolution sol = solve_fading(t, c, p);
  const double oracle = grid_oracle(t, c, p);
  CHECK(sol.total_et_energy <= oracle * (1.0 + 1e-9));
  CHECK(oracle - sol.total_et_energy <= 0.005 * oracle);
}

TEST_CASE("random instances satisfy the water-filling structure") {
  SystemParams p;
  Philox rng(23, 0);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 8;
    TaskTrace t;
    ChannelTrace c;
    for (std::size_t i = 0; i < n; ++i) {
      t.arrivals.push_back(rng.next_uniform(5e5));
      c.wpt_gain.push_back(2e-5 + rng.next_uniform(3e-4));
      c.offl_gain.push_back(2e-7 + rng.next_uniform(3e-6));
    }
    const OfflineSolution sol = solve_fading(t, c, p);

    const FeasibilityReport feas = check_feasible(sol.plan, t, c, p);
    CHECK(feas.pass);
    const StructureReport st =
        check_structure(sol.plan, sol.schedule, t, c, p, ChannelKind::fading);
    CHECK(st.pass);
    if (!st.pass) MESSAGE(st.detail);
  }
}

TEST_CASE("random N<=3 instances match the grid oracle in every mode") {
  SystemParams p;
  Philox rng(29, 0);
  for (int trial = 0; trial < 20; ++trial) {
    for (std::size_t n : {2u, 3u}) {
      TaskTrace t;
      ChannelTrace c;
      for (std::size_t i = 0; i < n; ++i) {
        t.arrivals.push_back(rng.next_uniform(5e5));
        c.wpt_gain.push_back(2e-5 + rng.next_uniform(3e-4));
        c.offl_gain.push_back(2e-7 + rng.next_uniform(3e-6));
      }
      for (SplitMode mode : {SplitMode::joint, SplitMode::local_only, SplitMode::offload_only}) {
        const OfflineSolution sol = solve_fading(t, c, p, mode);
        const double oracle = grid_oracle(t, c, p, mode);
        CHECK(sol.total_et_energy <= oracle * (1.0 + 1e-9));
        CHECK(oracle - sol.total_et_energy <= 0.005 * oracle + 1e-15);
      }
    }
  }
}

TEST_SUITE_END();
