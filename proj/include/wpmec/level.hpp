#ifndef WPMEC_LEVEL_HPP
#define WPMEC_LEVEL_HPP

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>

#include "wpmec/params.hpp"

namespace wpmec {

// Restricts the per-slot task split. Single-mode variants back the
// local-computing-only and full-offloading benchmark schemes.
enum class SplitMode { joint, local_only, offload_only };

// Marginal-energy multiplier (J/bit) that parameterizes the closed-form
// per-slot split between local and offloaded bits.
struct ComputationLevel {
  double joules_per_bit = 0.0;
};

// WPT/offloading gain pair seen by one slot. eff_wpt is the effective
// (causally best) WPT gain that prices this slot's consumption.
struct SlotGains {
  double eff_wpt = 0.0;
  double offl = 0.0;
};

// Optimal local bits at a given level: slot_len * sqrt(eff * eta * [level]+ /
// (3 * cap_coeff * cycles_per_bit^3)). Non-decreasing in level and eff_gain.
inline double local_bits_of_level(double level, double eff_gain, const SystemParams& p) {
  if (eff_gain <= 0.0) throw std::domain_error("local_bits_of_level: non-positive gain");
  if (level <= 0.0) return 0.0;
  const double c3 = p.cycles_per_bit * p.cycles_per_bit * p.cycles_per_bit;
  return p.slot_len * std::sqrt(p.eh_efficiency * eff_gain * level / (3.0 * p.cap_coeff * c3));
}

// Level below which offloading is not worth its marginal energy on this
// slot's channel pair.
inline double offload_threshold(double eff_gain, double offl_gain, const SystemParams& p) {
  if (eff_gain <= 0.0 || offl_gain <= 0.0)
    throw std::domain_error("offload_threshold: non-positive gain");
  return p.snr_gap * p.noise_power * std::numbers::ln2 /
         (p.bandwidth * p.eh_efficiency * eff_gain * offl_gain);
}

// Optimal offloaded bits at a given level: slot_len * B * log2(level /
// threshold) above the threshold, exactly zero at or below it.
inline double offl_bits_of_level(double level, double eff_gain, double offl_gain,
                                 const SystemParams& p) {
  const double t = offload_threshold(eff_gain, offl_gain, p);
  if (!(level > t)) return 0.0;
  return p.slot_len * p.bandwidth * std::log2(level / t);
}

// Total bits one slot executes at a given level under the split mode.
double slot_bits_of_level(double level, const SlotGains& gains, const SystemParams& p,
                          SplitMode mode);

// Inverts the level -> total-bits map over a slot window: returns the
// unique level >= 0 whose summed per-slot bits equal target_bits.
// Monotone bisection; throws std::runtime_error on numeric failure.
ComputationLevel solve_level(double target_bits, std::span<const SlotGains> slots,
                             const SystemParams& p, SplitMode mode = SplitMode::joint);

}  // namespace wpmec

#endif  // WPMEC_LEVEL_HPP
