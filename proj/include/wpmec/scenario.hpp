#ifndef WPMEC_SCENARIO_HPP
#define WPMEC_SCENARIO_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wpmec/baselines.hpp"
#include "wpmec/rng.hpp"
#include "wpmec/traces.hpp"

namespace wpmec {

// Deployment geometry and fading model of the experiments: the user sits
// on the line between the ET and the AP, both channels follow
// distance-dependent Rician fading with a common reference path loss.
struct GeometryConfig {
  double et_ap_distance = 10.0;  // m, ET <-> AP
  double user_distance = 3.0;    // m, ET -> user
  double pathloss_ref_db = -37.0;  // path loss at 1 m, dB
  double pathloss_exp = 3.0;
  double rician_factor = 2.0;  // may be +inf for a pure line-of-sight channel
  std::size_t num_antennas = 4;

  void validate() const;
  double pathloss_ref() const;  // linear scale
  // Analytic channel-gain means used by the online policies' forecasts.
  double mean_wpt_gain() const;
  double mean_offl_gain() const;
};

// Root of a reproducible experiment. Replication r consumes streams
// (stream + 2r) for channels and (stream + 2r + 1) for tasks, so any
// replication can be regenerated in isolation.
struct RngSpec {
  std::uint64_t seed = 1;
  std::uint64_t stream = 0;
};

// Draws one channel trace. ChannelKind::fading draws a fresh Rician
// realization per slot; ChannelKind::constant draws a single realization
// and holds it for the whole horizon. Analytic means fill mean_wpt/offl.
ChannelTrace gen_channels(const GeometryConfig& geom, std::size_t n, ChannelKind kind,
                          Philox& rng);

// Draws i.i.d. uniform arrivals on [0, a_max]; mean_arrival = a_max / 2.
TaskTrace gen_tasks(double a_max, std::size_t n, Philox& rng);

enum class Scheme { offline, online, myopic, local_only, full_offload };

std::string scheme_name(Scheme s);

// One scheme run on one realization: the plan, the interval structure
// when the scheme is an offline solver, and the ET energy totals.
struct SchemeRun {
  AllocationPlan plan;
  TransitionSchedule schedule;
  bool has_schedule = false;
  double total_et_energy = 0.0;
  double energy_per_slot = 0.0;
};

SchemeRun run_scheme(Scheme scheme, ChannelKind kind, const TaskTrace& tasks,
                     const ChannelTrace& channels, const SystemParams& p);

struct ScenarioConfig {
  SystemParams sys;
  GeometryConfig geom;
  RngSpec rng;
  ChannelKind kind = ChannelKind::constant;
  double a_max = 5e5;  // bits
};

// Monte Carlo aggregate for one scheme: mean and standard error of the
// per-slot ET energy across replications (pairwise summation, so the
// result does not depend on evaluation order).
struct SchemeStats {
  Scheme scheme = Scheme::offline;
  double mean_energy_per_slot = 0.0;
  double std_error = 0.0;
  std::size_t replications = 0;
};

struct MonteCarloResult {
  std::vector<SchemeStats> aggregates;           // one per requested scheme
  std::vector<std::vector<double>> energy_per_slot;  // [scheme][replication]
};

// Runs every requested scheme on the same realization, per replication.
// Each output plan is feasibility-checked; an infeasible plan aborts the
// experiment with the offending (seed, stream) in the exception message.
// threads = 0 uses the hardware concurrency.
MonteCarloResult run_montecarlo(const ScenarioConfig& config, std::span<const Scheme> schemes,
                                std::size_t replications, unsigned threads = 0);

}  // namespace wpmec

#endif  // WPMEC_SCENARIO_HPP
