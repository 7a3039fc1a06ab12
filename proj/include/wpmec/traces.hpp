#ifndef WPMEC_TRACES_HPP
#define WPMEC_TRACES_HPP

#include <cstddef>
#include <vector>

namespace wpmec {

// Per-slot task arrivals, bits. mean_arrival is consumed only by the
// online policies as their forecast of future arrivals.
struct TaskTrace {
  std::vector<double> arrivals;
  double mean_arrival = 0.0;

  std::size_t size() const { return arrivals.size(); }
  double total() const;
  void validate() const;
};

// Per-slot channel power gains for WPT (ET -> user) and offloading
// (user -> AP). The means feed the online policies' forecasts.
struct ChannelTrace {
  std::vector<double> wpt_gain;
  std::vector<double> offl_gain;
  double mean_wpt = 0.0;
  double mean_offl = 0.0;

  std::size_t size() const { return wpt_gain.size(); }
  void validate() const;
};

// Joint decision sequence: ET transmit power plus the user's task split.
struct AllocationPlan {
  std::vector<double> power;       // W
  std::vector<double> local_bits;  // executed locally
  std::vector<double> offl_bits;   // offloaded to the AP

  std::size_t size() const { return power.size(); }
  void validate() const;
};

}  // namespace wpmec

#endif  // WPMEC_TRACES_HPP
