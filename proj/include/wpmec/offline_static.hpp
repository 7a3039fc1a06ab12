#ifndef WPMEC_OFFLINE_STATIC_HPP
#define WPMEC_OFFLINE_STATIC_HPP

#include <cstddef>
#include <vector>

#include "wpmec/level.hpp"
#include "wpmec/traces.hpp"

namespace wpmec {

// Interval structure of an offline solution. interval_ends[k] is the
// exclusive end slot of interval k (equivalently its 1-based last slot);
// the final entry always equals the horizon length. levels[k] is the
// computation level shared by every slot of interval k and is
// non-decreasing across intervals.
struct TransitionSchedule {
  std::vector<std::size_t> interval_ends;
  std::vector<double> levels;

  std::size_t intervals() const { return interval_ends.size(); }
};

// An offline solver's output: the plan, its interval structure, and the
// ET-side objective (total transmitted energy, J).
struct OfflineSolution {
  AllocationPlan plan;
  TransitionSchedule schedule;
  double total_et_energy = 0.0;
};

// Uniform WPT power that exactly covers the plan's total consumption:
// every slot transmits sum(E_loc + E_offl) / (slot_len * eta * gain * N).
std::vector<double> uniform_power(const std::vector<double>& local_bits,
                                  const std::vector<double>& offl_bits, double wpt_gain,
                                  double offl_gain, const SystemParams& p);

// Optimal offline schedule for a static channel pair (wpt_gain, offl_gain):
// forward search over transition slots on running-average arrivals, a
// per-interval level from solve_level, and uniform WPT power.
OfflineSolution solve_static(const TaskTrace& tasks, double wpt_gain, double offl_gain,
                             const SystemParams& p, SplitMode mode = SplitMode::joint);

}  // namespace wpmec

#endif  // WPMEC_OFFLINE_STATIC_HPP
