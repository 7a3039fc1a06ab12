#ifndef WPMEC_VERIFY_HPP
#define WPMEC_VERIFY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "wpmec/baselines.hpp"
#include "wpmec/traces.hpp"

namespace wpmec {

// Per-slot slack audit of the three feasibility constraint families.
// Slacks are signed (>= 0 means satisfied); the pass flags apply a small
// relative-absolute hybrid tolerance so bisection residue never flips a
// verdict.
struct FeasibilityReport {
  bool pass = false;
  bool task_causality_ok = false;
  bool completion_ok = false;
  bool energy_causality_ok = false;
  double min_task_slack = 0.0;
  double min_energy_slack = 0.0;
  double completion_gap = 0.0;       // executed - arrived over the horizon
  std::size_t first_task_violation = 0;    // 1-based slot, 0 = none
  std::size_t first_energy_violation = 0;  // 1-based slot, 0 = none
  std::vector<double> task_slack;    // per slot, arrived - executed prefix
  std::vector<double> energy_slack;  // per slot, harvested - consumed prefix
};

FeasibilityReport check_feasible(const AllocationPlan& plan, const TaskTrace& tasks,
                                 const ChannelTrace& channels, const SystemParams& p);

// Structural diagnostics of an offline solution: staircase monotonicity,
// buffer clearing at interval ends, the offloading threshold rule, the
// level's consistency with the emitted bits, CDS-only power with
// per-interval energy balance (time-varying), and supply/demand tightness
// (static). Checks that do not apply to the given kind/mode pass
// trivially. rel_tol scales every comparison.
struct StructureReport {
  bool pass = false;
  bool local_monotone = false;
  bool offl_monotone = false;       // static channels only
  bool levels_monotone = false;
  bool buffer_cleared = false;
  bool waterfilling_ok = false;     // offloading branch enabled only
  bool level_consistent = false;    // bits reproduce the interval level
  bool cds_power_ok = false;        // time-varying only
  bool interval_balance_ok = false; // time-varying only
  bool tightness_ok = false;        // static only
  std::string detail;               // first failure, human readable
};

StructureReport check_structure(const AllocationPlan& plan, const TransitionSchedule& schedule,
                                const TaskTrace& tasks, const ChannelTrace& channels,
                                const SystemParams& p, ChannelKind kind,
                                SplitMode mode = SplitMode::joint, double rel_tol = 1e-8);

// Brute-force reference optimum for tiny instances (N <= 3): exhaustive
// grid over per-slot executed totals on the task-causality simplex (200
// points per axis, two 10x refinement passes around the incumbent), with
// the per-slot local/offload split minimized directly by golden-section
// search on the energy sum. WPT power is eliminated through the optimal
// closed form given bits, so the search is bits-only. Returns the total
// ET energy (J). Throws std::invalid_argument for N > 3.
double grid_oracle(const TaskTrace& tasks, const ChannelTrace& channels,
                   const SystemParams& p, SplitMode mode = SplitMode::joint);

}  // namespace wpmec

#endif  // WPMEC_VERIFY_HPP
