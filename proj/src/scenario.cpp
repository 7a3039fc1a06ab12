#include "wpmec/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

#include "wpmec/verify.hpp"

namespace wpmec {

void GeometryConfig::validate() const {
  if (!(et_ap_distance > 0.0)) throw std::invalid_argument("et_ap_distance must be > 0");
  if (!(user_distance > 0.0) || !(user_distance < et_ap_distance))
    throw std::invalid_argument("user_distance must lie strictly between ET and AP");
  if (!(pathloss_exp > 0.0)) throw std::invalid_argument("pathloss_exp must be > 0");
  if (!(rician_factor > 0.0)) throw std::invalid_argument("rician_factor must be > 0");
  if (num_antennas < 1) throw std::invalid_argument("num_antennas must be >= 1");
}

double GeometryConfig::pathloss_ref() const { return std::pow(10.0, pathloss_ref_db / 10.0); }

double GeometryConfig::mean_wpt_gain() const {
  return static_cast<double>(num_antennas) * pathloss_ref() *
         std::pow(user_distance, -pathloss_exp);
}

double GeometryConfig::mean_offl_gain() const {
  return pathloss_ref() * std::pow(et_ap_distance - user_distance, -pathloss_exp);
}

namespace {

struct RicianScales {
  double los = 0.0;      // deterministic line-of-sight amplitude
  double scatter = 0.0;  // complex-normal amplitude
};

RicianScales rician_scales(double mean_gain_per_branch, double rician_factor) {
  const double los_frac =
      std::isinf(rician_factor) ? 1.0 : rician_factor / (1.0 + rician_factor);
  const double scatter_frac = std::isinf(rician_factor) ? 0.0 : 1.0 / (1.0 + rician_factor);
  return {std::sqrt(mean_gain_per_branch * los_frac),
          std::sqrt(mean_gain_per_branch * scatter_frac)};
}

// One slot's gain pair. Draw order per slot: the num_antennas WPT vector
// entries, then the offloading scalar (one complex normal each).
void draw_slot_gains(const GeometryConfig& geom, Philox& rng, double& wpt, double& offl) {
  const double omega = geom.pathloss_ref();
  const RicianScales hs = rician_scales(
      omega * std::pow(geom.user_distance, -geom.pathloss_exp), geom.rician_factor);
  const RicianScales gs = rician_scales(
      omega * std::pow(geom.et_ap_distance - geom.user_distance, -geom.pathloss_exp),
      geom.rician_factor);

  wpt = 0.0;
  for (std::size_t m = 0; m < geom.num_antennas; ++m) {
    const std::complex<double> z = rng.next_cgaussian();
    const std::complex<double> entry{hs.los + hs.scatter * z.real(), hs.scatter * z.imag()};
    wpt += std::norm(entry);
  }
  const std::complex<double> z = rng.next_cgaussian();
  const std::complex<double> entry{gs.los + gs.scatter * z.real(), gs.scatter * z.imag()};
  offl = std::norm(entry);
}

}  // namespace

ChannelTrace gen_channels(const GeometryConfig& geom, std::size_t n, ChannelKind kind,
                          Philox& rng) {
  geom.validate();
  ChannelTrace trace;
  trace.wpt_gain.resize(n);
  trace.offl_gain.resize(n);
  if (kind == ChannelKind::constant) {
    double h = 0.0, g = 0.0;
    draw_slot_gains(geom, rng, h, g);
    for (std::size_t i = 0; i < n; ++i) {
      trace.wpt_gain[i] = h;
      trace.offl_gain[i] = g;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      draw_slot_gains(geom, rng, trace.wpt_gain[i], trace.offl_gain[i]);
  }
  trace.mean_wpt = geom.mean_wpt_gain();
  trace.mean_offl = geom.mean_offl_gain();
  return trace;
}

TaskTrace gen_tasks(double a_max, std::size_t n, Philox& rng) {
  if (a_max < 0.0) throw std::invalid_argument("gen_tasks: a_max must be >= 0");
  TaskTrace trace;
  trace.arrivals.resize(n);
  for (std::size_t i = 0; i < n; ++i) trace.arrivals[i] = rng.next_uniform(a_max);
  trace.mean_arrival = 0.5 * a_max;
  return trace;
}

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::offline: return "offline";
    case Scheme::online: return "online";
    case Scheme::myopic: return "myopic";
    case Scheme::local_only: return "local_only";
    case Scheme::full_offload: return "full_offload";
  }
  return "unknown";
}

SchemeRun run_scheme(Scheme scheme, ChannelKind kind, const TaskTrace& tasks,
                     const ChannelTrace& channels, const SystemParams& p) {
  SchemeRun run;
  switch (scheme) {
    case Scheme::offline: {
      OfflineSolution sol = (kind == ChannelKind::constant)
                                ? solve_static(tasks, channels.wpt_gain.at(0),
                                               channels.offl_gain.at(0), p)
                                : solve_fading(tasks, channels, p);
      run.plan = std::move(sol.plan);
      run.schedule = std::move(sol.schedule);
      run.has_schedule = true;
      break;
    }
    case Scheme::local_only:
    case Scheme::full_offload: {
      OfflineSolution sol = (scheme == Scheme::local_only)
                                ? local_only(tasks, channels, p, kind)
                                : full_offload(tasks, channels, p, kind);
      run.plan = std::move(sol.plan);
      run.schedule = std::move(sol.schedule);
      run.has_schedule = true;
      break;
    }
    case Scheme::online: {
      const OnlinePolicy policy = (kind == ChannelKind::constant)
                                      ? OnlinePolicy::static_channel
                                      : OnlinePolicy::time_varying;
      run.plan = run_online(policy, tasks, channels, p);
      break;
    }
    case Scheme::myopic:
      run.plan = myopic(tasks, channels, p);
      break;
  }
  for (double pw : run.plan.power) run.total_et_energy += p.slot_len * pw;
  run.energy_per_slot = run.total_et_energy / static_cast<double>(run.plan.size());
  return run;
}

namespace {

double pairwise_sum(const double* x, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(x, half) + pairwise_sum(x + half, n - half);
}

}  // namespace

MonteCarloResult run_montecarlo(const ScenarioConfig& config, std::span<const Scheme> schemes,
                                std::size_t replications, unsigned threads) {
  config.sys.validate();
  config.geom.validate();
  if (schemes.empty()) throw std::invalid_argument("run_montecarlo: no schemes requested");
  if (replications == 0) throw std::invalid_argument("run_montecarlo: zero replications");

  MonteCarloResult result;
  result.energy_per_slot.assign(schemes.size(), std::vector<double>(replications, 0.0));

  const auto run_replication = [&](std::size_t rep) {
    const std::uint64_t channel_stream = config.rng.stream + 2 * rep;
    const std::uint64_t task_stream = channel_stream + 1;
    Philox channel_rng(config.rng.seed, channel_stream);
    Philox task_rng(config.rng.seed, task_stream);
    const ChannelTrace channels =
        gen_channels(config.geom, config.sys.num_slots, config.kind, channel_rng);
    const TaskTrace tasks = gen_tasks(config.a_max, config.sys.num_slots, task_rng);

    for (std::size_t s = 0; s < schemes.size(); ++s) {
      const SchemeRun run = run_scheme(schemes[s], config.kind, tasks, channels, config.sys);
      const FeasibilityReport feas = check_feasible(run.plan, tasks, channels, config.sys);
      if (!feas.pass)
        throw std::runtime_error("infeasible " + scheme_name(schemes[s]) + " plan at seed " +
                                 std::to_string(config.rng.seed) + ", stream " +
                                 std::to_string(channel_stream));
      result.energy_per_slot[s][rep] = run.energy_per_slot;
    }
  };

  unsigned workers = threads ? threads : std::thread::hardware_concurrency();
  if (workers < 1) workers = 1;
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, replications));
  if (workers == 1) {
    for (std::size_t rep = 0; rep < replications; ++rep) run_replication(rep);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t rep = w; rep < replications; rep += workers) run_replication(rep);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  for (std::size_t s = 0; s < schemes.size(); ++s) {
    const std::vector<double>& x = result.energy_per_slot[s];
    const double r = static_cast<double>(replications);
    const double mean = pairwise_sum(x.data(), x.size()) / r;
    double std_error = 0.0;
    if (replications > 1) {
      std::vector<double> sq(replications);
      for (std::size_t i = 0; i < replications; ++i) sq[i] = (x[i] - mean) * (x[i] - mean);
      std_error = std::sqrt(pairwise_sum(sq.data(), sq.size()) / (r * (r - 1.0)));
    }
    result.aggregates.push_back({schemes[s], mean, std_error, replications});
  }
  return result;
}

}  // namespace wpmec
