#ifndef WPMEC_ONLINE_HPP
#define WPMEC_ONLINE_HPP

#include <cstddef>

#include "wpmec/level.hpp"
#include "wpmec/traces.hpp"

namespace wpmec {

// Mean values the online policies are allowed to know about the future.
struct OnlineMeans {
  double arrival = 0.0;  // bits
  double wpt = 0.0;      // WPT gain (time-varying policy only)
  double offl = 0.0;     // offloading gain (time-varying policy only)
};

// Causal state carried across slots of one online run.
struct OnlineState {
  std::size_t slot = 0;          // next slot to decide, 0-based
  double residual_bits = 0.0;    // task buffer after the previous slot
  double residual_energy = 0.0;  // battery after the previous slot (time-varying)
};

struct SlotDecision {
  double power = 0.0;
  double local_bits = 0.0;
  double offl_bits = 0.0;
};

enum class OnlinePolicy { static_channel, time_varying };

// One step of the static-channel policy: re-solves the static offline
// problem on slots i..N-1 with the buffer + current arrival now and the
// mean arrival later, commits the first slot, and transmits exactly the
// committed slot's consumption.
SlotDecision online_static_step(OnlineState& state, double arrived_bits, double wpt_gain,
                                double offl_gain, const OnlineMeans& means,
                                std::size_t horizon, const SystemParams& p,
                                SplitMode mode = SplitMode::joint);

// One step of the time-varying policy: forecasts future gains with
// max(h_i, mean) and the mean offloading gain, re-solves the fading
// offline problem on the remaining horizon, commits the first slot, and
// sets power by a battery-aware threshold rule (over-provisions by
// online_gamma when the current WPT gain beats the mean).
SlotDecision online_fading_step(OnlineState& state, double arrived_bits, double wpt_gain,
                                double offl_gain, const OnlineMeans& means,
                                std::size_t horizon, const SystemParams& p,
                                SplitMode mode = SplitMode::joint);

// Runs a policy over full traces, revealing them causally. The returned
// plan is feasible by construction; a violated buffer or battery
// invariant indicates a policy bug and throws std::logic_error.
AllocationPlan run_online(OnlinePolicy policy, const TaskTrace& tasks,
                          const ChannelTrace& channels, const SystemParams& p,
                          SplitMode mode = SplitMode::joint);

}  // namespace wpmec

#endif  // WPMEC_ONLINE_HPP
