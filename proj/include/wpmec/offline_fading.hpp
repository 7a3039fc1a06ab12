#ifndef WPMEC_OFFLINE_FADING_HPP
#define WPMEC_OFFLINE_FADING_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "wpmec/offline_static.hpp"

namespace wpmec {

// Causality-dominating slots (CDSs) of a WPT gain sequence: slot 0 plus
// every slot whose gain strictly exceeds all earlier gains. eff_gain is
// the running maximum, i.e. the best gain causally available to each slot.
struct CdsDecomposition {
  std::vector<std::size_t> cds_slots;  // 0-based, strictly increasing, starts at 0
  std::vector<double> eff_gain;        // length N, non-decreasing
};

CdsDecomposition compute_cds(std::span<const double> wpt_gain);

// Minimum weighted-energy split of one buffer-clearing interval: a single
// level prices every slot, found by bisection so the interval's bits sum
// to its arrivals sum.
struct IntervalSolution {
  std::vector<double> local_bits;
  std::vector<double> offl_bits;
  double level = 0.0;
  double weighted_energy = 0.0;  // sum over slots of (E_loc + E_offl) / (eta * eff_gain)
};

IntervalSolution solve_interval(std::span<const double> arrivals,
                                std::span<const SlotGains> gains, const SystemParams& p,
                                SplitMode mode = SplitMode::joint);

// WPT power that transmits only at CDSs, each CDS harvesting exactly the
// consumption of the slots it dominates (up to the next CDS).
std::vector<double> cds_power(const std::vector<double>& local_bits,
                              const std::vector<double>& offl_bits,
                              const ChannelTrace& channels, const SystemParams& p);

// Optimal offline schedule under time-varying channels: effective gains
// from the CDS decomposition, a forward search that extends each interval
// to the farthest end whose single-level solution respects task causality,
// and CDS-only WPT power.
OfflineSolution solve_fading(const TaskTrace& tasks, const ChannelTrace& channels,
                             const SystemParams& p, SplitMode mode = SplitMode::joint);

}  // namespace wpmec

#endif  // WPMEC_OFFLINE_FADING_HPP
