#ifndef WPMEC_ENERGY_HPP
#define WPMEC_ENERGY_HPP

#include <cmath>
#include <stdexcept>

#include "wpmec/params.hpp"

namespace wpmec {

// Energy to execute `bits` locally within one slot. The CPU runs at the
// constant frequency cycles_per_bit*bits/slot_len (DVFS), which gives the
// cubic law cap_coeff * (cycles_per_bit*bits)^3 / slot_len^2.
inline double local_energy(double bits, const SystemParams& p) {
  if (bits < 0.0) throw std::domain_error("local_energy: negative bits");
  const double cycles = p.cycles_per_bit * bits;
  return p.cap_coeff * cycles * cycles * cycles / (p.slot_len * p.slot_len);
}

// Transmit energy to offload `bits` in one slot over a channel with power
// gain `gain`, inverting the slot-rate equation bits = slot_len * B *
// log2(1 + gain*q/(snr_gap*noise)).
inline double offload_energy(double bits, double gain, const SystemParams& p) {
  if (bits < 0.0) throw std::domain_error("offload_energy: negative bits");
  if (gain <= 0.0) throw std::domain_error("offload_energy: non-positive gain");
  return p.slot_len * p.snr_gap * p.noise_power / gain *
         (std::exp2(bits / (p.slot_len * p.bandwidth)) - 1.0);
}

// Energy harvested by the user in one slot when the ET transmits at
// `power` over a WPT channel with power gain `gain` (linear EH model).
inline double harvested_energy(double power, double gain, const SystemParams& p) {
  if (power < 0.0) throw std::domain_error("harvested_energy: negative power");
  if (gain <= 0.0) throw std::domain_error("harvested_energy: non-positive gain");
  return p.slot_len * p.eh_efficiency * gain * power;
}

// Slot consumption for a (local, offload) split.
inline double slot_consumption(double local_bits, double offl_bits, double offl_gain,
                               const SystemParams& p) {
  return local_energy(local_bits, p) + offload_energy(offl_bits, offl_gain, p);
}

}  // namespace wpmec

#endif  // WPMEC_ENERGY_HPP
