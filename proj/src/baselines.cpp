#include "wpmec/baselines.hpp"

#include <stdexcept>

#include "wpmec/energy.hpp"

namespace wpmec {

namespace {

OfflineSolution restricted(const TaskTrace& tasks, const ChannelTrace& channels,
                           const SystemParams& p, ChannelKind kind, bool offline,
                           SplitMode mode) {
  if (offline) {
    if (kind == ChannelKind::constant)
      return solve_static(tasks, channels.wpt_gain.at(0), channels.offl_gain.at(0), p, mode);
    return solve_fading(tasks, channels, p, mode);
  }
  OfflineSolution out;
  const OnlinePolicy policy = (kind == ChannelKind::constant) ? OnlinePolicy::static_channel
                                                              : OnlinePolicy::time_varying;
  out.plan = run_online(policy, tasks, channels, p, mode);
  for (double pw : out.plan.power) out.total_et_energy += p.slot_len * pw;
  return out;
}

}  // namespace

OfflineSolution local_only(const TaskTrace& tasks, const ChannelTrace& channels,
                           const SystemParams& p, ChannelKind kind, bool offline) {
  return restricted(tasks, channels, p, kind, offline, SplitMode::local_only);
}

OfflineSolution full_offload(const TaskTrace& tasks, const ChannelTrace& channels,
                             const SystemParams& p, ChannelKind kind, bool offline) {
  return restricted(tasks, channels, p, kind, offline, SplitMode::offload_only);
}

AllocationPlan myopic(const TaskTrace& tasks, const ChannelTrace& channels,
                      const SystemParams& p) {
  tasks.validate();
  channels.validate();
  const std::size_t n = tasks.size();
  if (n == 0 || channels.size() != n)
    throw std::invalid_argument("myopic: trace length mismatch");

  AllocationPlan plan;
  plan.power.assign(n, 0.0);
  plan.local_bits.assign(n, 0.0);
  plan.offl_bits.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    // Each slot clears its own arrivals with the slot-optimal split and
    // harvests exactly what it consumes.
    const SlotGains gains{channels.wpt_gain[i], channels.offl_gain[i]};
    const double level = solve_level(tasks.arrivals[i], {&gains, 1}, p).joules_per_bit;
    plan.local_bits[i] = local_bits_of_level(level, gains.eff_wpt, p);
    plan.offl_bits[i] = offl_bits_of_level(level, gains.eff_wpt, gains.offl, p);
    plan.power[i] = slot_consumption(plan.local_bits[i], plan.offl_bits[i], gains.offl, p) /
                    (p.slot_len * p.eh_efficiency * channels.wpt_gain[i]);
  }
  return plan;
}

}  // namespace wpmec
