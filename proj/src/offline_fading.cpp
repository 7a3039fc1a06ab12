#include "wpmec/offline_fading.hpp"

#include <cassert>
#include <stdexcept>

#include "wpmec/energy.hpp"

namespace wpmec {

CdsDecomposition compute_cds(std::span<const double> wpt_gain) {
  if (wpt_gain.empty()) throw std::domain_error("compute_cds: empty gain sequence");
  CdsDecomposition out;
  out.eff_gain.resize(wpt_gain.size());
  double best = 0.0;
  for (std::size_t i = 0; i < wpt_gain.size(); ++i) {
    if (!(wpt_gain[i] > 0.0)) throw std::domain_error("compute_cds: non-positive gain");
    if (i == 0 || wpt_gain[i] > best) {
      best = wpt_gain[i];
      out.cds_slots.push_back(i);
    }
    out.eff_gain[i] = best;
  }
  return out;
}

IntervalSolution solve_interval(std::span<const double> arrivals,
                                std::span<const SlotGains> gains, const SystemParams& p,
                                SplitMode mode) {
  if (arrivals.size() != gains.size() || arrivals.empty())
    throw std::invalid_argument("solve_interval: bad window");
  double target = 0.0;
  for (double a : arrivals) target += a;

  IntervalSolution out;
  out.local_bits.assign(arrivals.size(), 0.0);
  out.offl_bits.assign(arrivals.size(), 0.0);
  if (target <= 0.0) return out;

  out.level = solve_level(target, gains, p, mode).joules_per_bit;
  for (std::size_t j = 0; j < gains.size(); ++j) {
    if (mode != SplitMode::offload_only)
      out.local_bits[j] = local_bits_of_level(out.level, gains[j].eff_wpt, p);
    if (mode != SplitMode::local_only)
      out.offl_bits[j] = offl_bits_of_level(out.level, gains[j].eff_wpt, gains[j].offl, p);
    out.weighted_energy +=
        slot_consumption(out.local_bits[j], out.offl_bits[j], gains[j].offl, p) /
        (p.eh_efficiency * gains[j].eff_wpt);
  }
  return out;
}

std::vector<double> cds_power(const std::vector<double>& local_bits,
                              const std::vector<double>& offl_bits,
                              const ChannelTrace& channels, const SystemParams& p) {
  const std::size_t n = local_bits.size();
  if (offl_bits.size() != n || channels.size() != n)
    throw std::invalid_argument("cds_power: length mismatch");
  const CdsDecomposition cds = compute_cds(channels.wpt_gain);

  std::vector<double> power(n, 0.0);
  for (std::size_t k = 0; k < cds.cds_slots.size(); ++k) {
    const std::size_t begin = cds.cds_slots[k];
    const std::size_t end = (k + 1 < cds.cds_slots.size()) ? cds.cds_slots[k + 1] : n;
    double consumed = 0.0;
    for (std::size_t j = begin; j < end; ++j)
      consumed += slot_consumption(local_bits[j], offl_bits[j], channels.offl_gain[j], p);
    power[begin] = consumed / (p.slot_len * p.eh_efficiency * channels.wpt_gain[begin]);
  }
  return power;
}

OfflineSolution solve_fading(const TaskTrace& tasks, const ChannelTrace& channels,
                             const SystemParams& p, SplitMode mode) {
  tasks.validate();
  channels.validate();
  const std::size_t n = tasks.size();
  if (n == 0 || channels.size() != n)
    throw std::invalid_argument("solve_fading: trace length mismatch");

  const CdsDecomposition cds = compute_cds(channels.wpt_gain);
  std::vector<SlotGains> gains(n);
  for (std::size_t i = 0; i < n; ++i)
    gains[i] = {cds.eff_gain[i], channels.offl_gain[i]};

  OfflineSolution out;
  out.plan.local_bits.assign(n, 0.0);
  out.plan.offl_bits.assign(n, 0.0);

  std::size_t start = 0;
  while (start < n) {
    // Farthest candidate end whose single-level interval solution stays
    // inside the arrival prefix at every interior slot.
    IntervalSolution best;
    std::size_t best_end = 0;
    for (std::size_t end = start + 1; end <= n; ++end) {
      IntervalSolution cand =
          solve_interval({tasks.arrivals.data() + start, end - start},
                         {gains.data() + start, end - start}, p, mode);
      double arrived = 0.0;
      double executed = 0.0;
      double slack_tol = 0.0;
      for (std::size_t j = start; j < end; ++j) slack_tol += tasks.arrivals[j];
      slack_tol = 1e-9 * (1.0 + slack_tol);
      bool feasible = true;
      for (std::size_t j = start; j + 1 < end && feasible; ++j) {
        arrived += tasks.arrivals[j];
        executed += cand.local_bits[j - start] + cand.offl_bits[j - start];
        feasible = executed <= arrived + slack_tol;
      }
      if (feasible) {
        best = std::move(cand);
        best_end = end;
      }
    }
    // A one-slot interval clears its own arrivals, so the feasible set is
    // never empty.
    assert(best_end > start);

    for (std::size_t j = start; j < best_end; ++j) {
      out.plan.local_bits[j] = best.local_bits[j - start];
      out.plan.offl_bits[j] = best.offl_bits[j - start];
    }
    out.schedule.interval_ends.push_back(best_end);
    out.schedule.levels.push_back(best.level);
    start = best_end;
  }

  out.plan.power = cds_power(out.plan.local_bits, out.plan.offl_bits, channels, p);
  for (double pw : out.plan.power) out.total_et_energy += p.slot_len * pw;
  return out;
}

}  // namespace wpmec
