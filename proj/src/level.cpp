#include "wpmec/level.hpp"

namespace wpmec {

double slot_bits_of_level(double level, const SlotGains& gains, const SystemParams& p,
                          SplitMode mode) {
  double bits = 0.0;
  if (mode != SplitMode::offload_only)
    bits += local_bits_of_level(level, gains.eff_wpt, p);
  if (mode != SplitMode::local_only)
    bits += offl_bits_of_level(level, gains.eff_wpt, gains.offl, p);
  return bits;
}

namespace {

double window_bits(double level, std::span<const SlotGains> slots, const SystemParams& p,
                   SplitMode mode) {
  double sum = 0.0;
  for (const SlotGains& g : slots) sum += slot_bits_of_level(level, g, p, mode);
  return sum;
}

}  // namespace

ComputationLevel solve_level(double target_bits, std::span<const SlotGains> slots,
                             const SystemParams& p, SplitMode mode) {
  if (target_bits < 0.0) throw std::domain_error("solve_level: negative target");
  if (slots.empty()) throw std::domain_error("solve_level: empty slot window");
  if (target_bits == 0.0) return {0.0};

  // Bracket: double from a tiny seed until the window overshoots the
  // target. The bits map is continuous, 0 at level 0 and unbounded, so a
  // bracket always exists; the cap only guards numeric breakdown.
  double hi = 1e-12;
  double lo = 0.0;
  int grow = 0;
  while (window_bits(hi, slots, p, mode) < target_bits) {
    lo = hi;
    hi *= 2.0;
    if (++grow > 400 || !std::isfinite(hi))
      throw std::runtime_error("solve_level: failed to bracket target");
  }

  for (int it = 0; it < 300 && (hi - lo) > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (window_bits(mid, slots, p, mode) < target_bits)
      lo = mid;
    else
      hi = mid;
  }
  return {0.5 * (lo + hi)};
}

}  // namespace wpmec
