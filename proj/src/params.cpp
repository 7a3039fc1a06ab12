#include "wpmec/params.hpp"

#include <stdexcept>

#include "wpmec/traces.hpp"

namespace wpmec {

void SystemParams::validate() const {
  if (!(slot_len > 0.0)) throw std::invalid_argument("slot_len must be > 0");
  if (!(bandwidth > 0.0)) throw std::invalid_argument("bandwidth must be > 0");
  if (!(noise_power > 0.0)) throw std::invalid_argument("noise_power must be > 0");
  if (!(eh_efficiency > 0.0) || eh_efficiency > 1.0)
    throw std::invalid_argument("eh_efficiency must be in (0, 1]");
  if (!(cap_coeff > 0.0)) throw std::invalid_argument("cap_coeff must be > 0");
  if (!(cycles_per_bit > 0.0)) throw std::invalid_argument("cycles_per_bit must be > 0");
  if (num_slots < 1) throw std::invalid_argument("num_slots must be >= 1");
  if (!(online_gamma > 1.0)) throw std::invalid_argument("online_gamma must be > 1");
  if (!(snr_gap >= 1.0)) throw std::invalid_argument("snr_gap must be >= 1");
}

double TaskTrace::total() const {
  double sum = 0.0;
  for (double a : arrivals) sum += a;
  return sum;
}

void TaskTrace::validate() const {
  for (double a : arrivals)
    if (!(a >= 0.0)) throw std::invalid_argument("arrivals must be >= 0");
  if (!(mean_arrival >= 0.0)) throw std::invalid_argument("mean_arrival must be >= 0");
}

void ChannelTrace::validate() const {
  if (wpt_gain.size() != offl_gain.size())
    throw std::invalid_argument("channel gain sequences must have equal length");
  for (double h : wpt_gain)
    if (!(h > 0.0)) throw std::invalid_argument("wpt_gain entries must be > 0");
  for (double g : offl_gain)
    if (!(g > 0.0)) throw std::invalid_argument("offl_gain entries must be > 0");
}

void AllocationPlan::validate() const {
  if (local_bits.size() != power.size() || offl_bits.size() != power.size())
    throw std::invalid_argument("plan sequences must have equal length");
  for (double p : power)
    if (!(p >= 0.0)) throw std::invalid_argument("power entries must be >= 0");
  for (double l : local_bits)
    if (!(l >= 0.0)) throw std::invalid_argument("local_bits entries must be >= 0");
  for (double d : offl_bits)
    if (!(d >= 0.0)) throw std::invalid_argument("offl_bits entries must be >= 0");
}

}  // namespace wpmec
