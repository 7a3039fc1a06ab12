#ifndef WPMEC_BASELINES_HPP
#define WPMEC_BASELINES_HPP

#include "wpmec/offline_fading.hpp"
#include "wpmec/online.hpp"

namespace wpmec {

enum class ChannelKind { constant, fading };

// Local-computing-only benchmark (offl_bits identically zero). offline
// picks the restricted optimal schedule; otherwise the restricted online
// policy runs.
OfflineSolution local_only(const TaskTrace& tasks, const ChannelTrace& channels,
                           const SystemParams& p, ChannelKind kind, bool offline = true);

// Full-offloading benchmark (local_bits identically zero).
OfflineSolution full_offload(const TaskTrace& tasks, const ChannelTrace& channels,
                             const SystemParams& p, ChannelKind kind, bool offline = true);

// Myopic online benchmark: every slot fully executes its own arrivals with
// the slot-optimal split and harvests exactly what it consumes.
AllocationPlan myopic(const TaskTrace& tasks, const ChannelTrace& channels,
                      const SystemParams& p);

}  // namespace wpmec

#endif  // WPMEC_BASELINES_HPP
