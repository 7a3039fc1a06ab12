#ifndef WPMEC_PARAMS_HPP
#define WPMEC_PARAMS_HPP

#include <cstddef>

namespace wpmec {

// Physical constants of the wireless-powered MEC system.
// SI base units throughout (seconds, Hz, watts, joules, bits).
struct SystemParams {
  double slot_len = 0.1;         // slot duration, s
  double bandwidth = 1e6;        // offloading bandwidth, Hz
  double noise_power = 1e-9;     // AWGN power at the AP receiver, W
  double eh_efficiency = 0.3;    // RF-to-DC conversion efficiency, (0,1]
  double cap_coeff = 1e-29;      // CPU switched capacitance, J*s^2/cycle^3
  double cycles_per_bit = 200.0; // CPU cycles per task input-bit
  std::size_t num_slots = 50;    // horizon length
  double online_gamma = 2.0;     // online over-provisioning factor, > 1
  double snr_gap = 1.0;          // SNR gap of the modulation scheme, >= 1

  // Throws std::invalid_argument when an invariant is violated.
  void validate() const;
};

}  // namespace wpmec

#endif  // WPMEC_PARAMS_HPP
