#include "wpmec/online.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wpmec/energy.hpp"
#include "wpmec/offline_fading.hpp"
#include "wpmec/offline_static.hpp"

namespace wpmec {

namespace {

// Arrivals the remaining-horizon problem sees: the buffer plus the current
// arrival now, the forecast mean afterwards.
TaskTrace forecast_arrivals(double arrived_bits, double residual_bits, double mean,
                            std::size_t remaining) {
  TaskTrace t;
  t.arrivals.assign(remaining, mean);
  t.arrivals[0] = arrived_bits + residual_bits;
  t.mean_arrival = mean;
  return t;
}

void commit_bits(OnlineState& state, double arrived_bits, double local, double offl) {
  state.residual_bits += arrived_bits - local - offl;
  // Bisection residue may leave the buffer a hair below zero.
  const double tol = 1e-9 * (1.0 + arrived_bits + std::abs(state.residual_bits));
  if (state.residual_bits < 0.0 && state.residual_bits > -tol) state.residual_bits = 0.0;
  ++state.slot;
}

}  // namespace

SlotDecision online_static_step(OnlineState& state, double arrived_bits, double wpt_gain,
                                double offl_gain, const OnlineMeans& means,
                                std::size_t horizon, const SystemParams& p, SplitMode mode) {
  if (state.slot >= horizon) throw std::logic_error("online_static_step: horizon exhausted");
  const std::size_t remaining = horizon - state.slot;
  const TaskTrace forecast =
      forecast_arrivals(arrived_bits, state.residual_bits, means.arrival, remaining);

  const OfflineSolution sol = solve_static(forecast, wpt_gain, offl_gain, p, mode);
  SlotDecision d;
  d.local_bits = sol.plan.local_bits[0];
  d.offl_bits = sol.plan.offl_bits[0];
  // Transfer exactly what this slot consumes.
  d.power = slot_consumption(d.local_bits, d.offl_bits, offl_gain, p) /
            (p.slot_len * p.eh_efficiency * wpt_gain);
  commit_bits(state, arrived_bits, d.local_bits, d.offl_bits);
  return d;
}

SlotDecision online_fading_step(OnlineState& state, double arrived_bits, double wpt_gain,
                                double offl_gain, const OnlineMeans& means,
                                std::size_t horizon, const SystemParams& p, SplitMode mode) {
  if (state.slot >= horizon) throw std::logic_error("online_fading_step: horizon exhausted");
  const std::size_t remaining = horizon - state.slot;
  const TaskTrace forecast =
      forecast_arrivals(arrived_bits, state.residual_bits, means.arrival, remaining);

  ChannelTrace channels;
  channels.wpt_gain.assign(remaining, std::max(wpt_gain, means.wpt));
  channels.offl_gain.assign(remaining, means.offl);
  channels.wpt_gain[0] = wpt_gain;
  channels.offl_gain[0] = offl_gain;

  const OfflineSolution sol = solve_fading(forecast, channels, p, mode);
  SlotDecision d;
  d.local_bits = sol.plan.local_bits[0];
  d.offl_bits = sol.plan.offl_bits[0];

  const double need = slot_consumption(d.local_bits, d.offl_bits, offl_gain, p);
  const bool last = state.slot + 1 == horizon;
  const bool favorable = wpt_gain > means.wpt;
  // Battery-aware threshold rule: top up to the bare need, or to
  // online_gamma times it when the current gain beats the mean. The last
  // slot never over-provisions.
  const double supply_target = (favorable && !last) ? p.online_gamma * need : need;
  const double transfer = std::max(supply_target - state.residual_energy, 0.0);
  d.power = transfer / (p.slot_len * p.eh_efficiency * wpt_gain);

  state.residual_energy += transfer - need;
  if (state.residual_energy < 0.0) state.residual_energy = 0.0;
  commit_bits(state, arrived_bits, d.local_bits, d.offl_bits);
  return d;
}

AllocationPlan run_online(OnlinePolicy policy, const TaskTrace& tasks,
                          const ChannelTrace& channels, const SystemParams& p,
                          SplitMode mode) {
  tasks.validate();
  channels.validate();
  const std::size_t n = tasks.size();
  if (n == 0 || channels.size() != n)
    throw std::invalid_argument("run_online: trace length mismatch");

  OnlineMeans means{tasks.mean_arrival, channels.mean_wpt, channels.mean_offl};
  OnlineState state;
  AllocationPlan plan;
  plan.power.reserve(n);
  plan.local_bits.reserve(n);
  plan.offl_bits.reserve(n);

  const double total = tasks.total();
  const double tol = 1e-9 * (1.0 + total);
  for (std::size_t i = 0; i < n; ++i) {
    const SlotDecision d =
        (policy == OnlinePolicy::static_channel)
            ? online_static_step(state, tasks.arrivals[i], channels.wpt_gain[i],
                                 channels.offl_gain[i], means, n, p, mode)
            : online_fading_step(state, tasks.arrivals[i], channels.wpt_gain[i],
                                 channels.offl_gain[i], means, n, p, mode);
    plan.power.push_back(d.power);
    plan.local_bits.push_back(d.local_bits);
    plan.offl_bits.push_back(d.offl_bits);
    if (state.residual_bits < -tol || state.residual_energy < -tol)
      throw std::logic_error("run_online: causality state went negative");
  }
  if (std::abs(state.residual_bits) > tol)
    throw std::logic_error("run_online: horizon ended with uncompleted tasks");
  return plan;
}

}  // namespace wpmec
