#include "wpmec/offline_static.hpp"

#include <limits>
#include <stdexcept>

#include "wpmec/energy.hpp"

namespace wpmec {

std::vector<double> uniform_power(const std::vector<double>& local_bits,
                                  const std::vector<double>& offl_bits, double wpt_gain,
                                  double offl_gain, const SystemParams& p) {
  if (local_bits.size() != offl_bits.size())
    throw std::invalid_argument("uniform_power: length mismatch");
  const std::size_t n = local_bits.size();
  double consumed = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    consumed += slot_consumption(local_bits[i], offl_bits[i], offl_gain, p);
  const double per_slot =
      consumed / (p.slot_len * p.eh_efficiency * wpt_gain * static_cast<double>(n));
  return std::vector<double>(n, per_slot);
}

OfflineSolution solve_static(const TaskTrace& tasks, double wpt_gain, double offl_gain,
                             const SystemParams& p, SplitMode mode) {
  tasks.validate();
  if (wpt_gain <= 0.0 || offl_gain <= 0.0)
    throw std::domain_error("solve_static: non-positive channel gain");
  const std::size_t n = tasks.size();
  if (n == 0) throw std::invalid_argument("solve_static: empty horizon");

  OfflineSolution out;
  out.plan.local_bits.assign(n, 0.0);
  out.plan.offl_bits.assign(n, 0.0);
  const SlotGains gains{wpt_gain, offl_gain};

  std::size_t start = 0;
  while (start < n) {
    // Extend to the candidate end with the smallest running-average
    // arrival; on ties the farthest end wins, which merges intervals that
    // would share a level.
    double run = 0.0;
    double best_avg = std::numeric_limits<double>::infinity();
    std::size_t best_end = start + 1;
    for (std::size_t end = start + 1; end <= n; ++end) {
      run += tasks.arrivals[end - 1];
      const double avg = run / static_cast<double>(end - start);
      if (avg <= best_avg) {
        best_avg = avg;
        best_end = end;
      }
    }

    const ComputationLevel level = solve_level(best_avg, {&gains, 1}, p, mode);
    const double local = (mode == SplitMode::offload_only)
                             ? 0.0
                             : local_bits_of_level(level.joules_per_bit, wpt_gain, p);
    const double offl = (mode == SplitMode::local_only)
                            ? 0.0
                            : offl_bits_of_level(level.joules_per_bit, wpt_gain, offl_gain, p);
    for (std::size_t i = start; i < best_end; ++i) {
      out.plan.local_bits[i] = local;
      out.plan.offl_bits[i] = offl;
    }
    out.schedule.interval_ends.push_back(best_end);
    out.schedule.levels.push_back(level.joules_per_bit);
    start = best_end;
  }

  out.plan.power = uniform_power(out.plan.local_bits, out.plan.offl_bits, wpt_gain, offl_gain, p);
  for (double pw : out.plan.power) out.total_et_energy += p.slot_len * pw;
  return out;
}

}  // namespace wpmec
