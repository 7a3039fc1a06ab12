#include "wpmec/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "wpmec/energy.hpp"
#include "wpmec/level.hpp"
#include "wpmec/offline_fading.hpp"

namespace wpmec {

FeasibilityReport check_feasible(const AllocationPlan& plan, const TaskTrace& tasks,
                                 const ChannelTrace& channels, const SystemParams& p) {
  const std::size_t n = tasks.size();
  if (plan.size() != n || channels.size() != n ||
      plan.local_bits.size() != n || plan.offl_bits.size() != n)
    throw std::invalid_argument("check_feasible: length mismatch");

  FeasibilityReport r;
  r.task_slack.resize(n);
  r.energy_slack.resize(n);

  double arrived = 0.0, executed = 0.0, harvested = 0.0, consumed = 0.0;
  double total_arrivals = tasks.total();
  double total_harvest = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    total_harvest += harvested_energy(plan.power[i], channels.wpt_gain[i], p);

  const double tol_task = 1e-9 * (1.0 + total_arrivals);
  const double tol_energy = 1e-9 * (1.0 + total_harvest);

  r.task_causality_ok = true;
  r.energy_causality_ok = true;
  r.min_task_slack = std::numeric_limits<double>::infinity();
  r.min_energy_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    arrived += tasks.arrivals[i];
    executed += plan.local_bits[i] + plan.offl_bits[i];
    harvested += harvested_energy(plan.power[i], channels.wpt_gain[i], p);
    consumed += slot_consumption(plan.local_bits[i], plan.offl_bits[i], channels.offl_gain[i], p);

    r.task_slack[i] = arrived - executed;
    r.energy_slack[i] = harvested - consumed;
    r.min_task_slack = std::min(r.min_task_slack, r.task_slack[i]);
    r.min_energy_slack = std::min(r.min_energy_slack, r.energy_slack[i]);
    if (r.task_slack[i] < -tol_task && r.task_causality_ok) {
      r.task_causality_ok = false;
      r.first_task_violation = i + 1;
    }
    if (r.energy_slack[i] < -tol_energy && r.energy_causality_ok) {
      r.energy_causality_ok = false;
      r.first_energy_violation = i + 1;
    }
  }
  r.completion_gap = executed - arrived;
  r.completion_ok = std::abs(r.completion_gap) <= tol_task;
  r.pass = r.task_causality_ok && r.energy_causality_ok && r.completion_ok;
  return r;
}

namespace {

// x >= y up to a hybrid tolerance scaled by the compared magnitudes.
bool geq(double x, double y, double rel_tol) {
  return x >= y - rel_tol * (1.0 + std::abs(x) + std::abs(y));
}

bool close(double x, double y, double rel_tol) {
  return std::abs(x - y) <= rel_tol * (1.0 + std::abs(x) + std::abs(y));
}

}  // namespace

StructureReport check_structure(const AllocationPlan& plan, const TransitionSchedule& schedule,
                                const TaskTrace& tasks, const ChannelTrace& channels,
                                const SystemParams& p, ChannelKind kind, SplitMode mode,
                                double rel_tol) {
  const std::size_t n = plan.size();
  if (tasks.size() != n || channels.size() != n || schedule.interval_ends.empty() ||
      schedule.interval_ends.back() != n)
    throw std::invalid_argument("check_structure: inconsistent inputs");

  StructureReport r;
  std::ostringstream detail;
  const bool has_local = mode != SplitMode::offload_only;
  const bool has_offl = mode != SplitMode::local_only;

  const CdsDecomposition cds = compute_cds(channels.wpt_gain);
  const double bits_scale = 1.0 + tasks.total();
  const double bits_tol = rel_tol * bits_scale;

  // Staircase monotonicity. Offloaded bits are only monotone when the
  // offloading channel does not move, i.e. under static channels.
  r.local_monotone = true;
  r.offl_monotone = true;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (plan.local_bits[i] > plan.local_bits[i + 1] + bits_tol) r.local_monotone = false;
    if (plan.offl_bits[i] > plan.offl_bits[i + 1] + bits_tol) r.offl_monotone = false;
  }
  if (kind == ChannelKind::fading) r.offl_monotone = true;
  if (!r.local_monotone) detail << "local bits not monotone; ";
  if (kind == ChannelKind::constant && !r.offl_monotone) detail << "offloaded bits not monotone; ";

  r.levels_monotone = true;
  for (std::size_t k = 0; k + 1 < schedule.levels.size(); ++k)
    if (schedule.levels[k] > schedule.levels[k + 1] * (1.0 + rel_tol) + rel_tol)
      r.levels_monotone = false;
  if (!r.levels_monotone) detail << "levels decrease across intervals; ";

  // Buffer cleared at every interval end.
  r.buffer_cleared = true;
  {
    double arrived = 0.0, executed = 0.0;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      arrived += tasks.arrivals[i];
      executed += plan.local_bits[i] + plan.offl_bits[i];
      if (k < schedule.interval_ends.size() && schedule.interval_ends[k] == i + 1) {
        if (!close(arrived, executed, rel_tol)) r.buffer_cleared = false;
        ++k;
      }
    }
  }
  if (!r.buffer_cleared) detail << "buffer not cleared at a transition; ";

  // Threshold rule and level consistency, slot by slot against the
  // interval level.
  r.waterfilling_ok = true;
  r.level_consistent = true;
  {
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i >= schedule.interval_ends[k]) ++k;
      const double level = schedule.levels[k];
      const double eff = cds.eff_gain[i];
      if (has_offl) {
        const double threshold = offload_threshold(eff, channels.offl_gain[i], p);
        const bool positive = plan.offl_bits[i] > bits_tol;
        if (positive && !geq(level, threshold, rel_tol)) r.waterfilling_ok = false;
        if (!positive && level > threshold * (1.0 + rel_tol)) r.waterfilling_ok = false;
        if (positive) {
          // Invert the offloading closed form back to the level.
          const double back = threshold * std::exp2(plan.offl_bits[i] / (p.slot_len * p.bandwidth));
          if (!close(back, level, rel_tol)) r.level_consistent = false;
        }
      }
      if (has_local && level > rel_tol && plan.local_bits[i] > bits_tol) {
        const double ratio = plan.local_bits[i] / p.slot_len;
        const double c3 = p.cycles_per_bit * p.cycles_per_bit * p.cycles_per_bit;
        const double back = 3.0 * p.cap_coeff * c3 * ratio * ratio / (p.eh_efficiency * eff);
        if (!close(back, level, rel_tol)) r.level_consistent = false;
      }
    }
  }
  if (!has_offl) r.waterfilling_ok = true;
  if (!r.waterfilling_ok) detail << "offloading threshold rule violated; ";
  if (!r.level_consistent) detail << "bits inconsistent with interval level; ";

  // Energy placement. Static: uniform supply exactly covers total demand.
  // Time-varying: power only at CDSs, each balancing its interval.
  double consumed_total = 0.0, harvested_total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    consumed_total += slot_consumption(plan.local_bits[i], plan.offl_bits[i],
                                       channels.offl_gain[i], p);
    harvested_total += harvested_energy(plan.power[i], channels.wpt_gain[i], p);
  }
  r.tightness_ok = true;
  r.cds_power_ok = true;
  r.interval_balance_ok = true;
  if (kind == ChannelKind::constant) {
    r.tightness_ok = close(consumed_total, harvested_total, rel_tol);
    if (!r.tightness_ok) detail << "supply/demand not tight; ";
  } else {
    const double power_tol = rel_tol * (1.0 + harvested_total);
    for (std::size_t i = 0; i < n; ++i) {
      const bool is_cds = std::binary_search(cds.cds_slots.begin(), cds.cds_slots.end(), i);
      if (!is_cds && harvested_energy(plan.power[i], channels.wpt_gain[i], p) > power_tol)
        r.cds_power_ok = false;
    }
    for (std::size_t k = 0; k < cds.cds_slots.size(); ++k) {
      const std::size_t begin = cds.cds_slots[k];
      const std::size_t end = (k + 1 < cds.cds_slots.size()) ? cds.cds_slots[k + 1] : n;
      double need = 0.0;
      for (std::size_t j = begin; j < end; ++j)
        need += slot_consumption(plan.local_bits[j], plan.offl_bits[j], channels.offl_gain[j], p);
      const double got = harvested_energy(plan.power[begin], channels.wpt_gain[begin], p);
      if (!close(need, got, rel_tol)) r.interval_balance_ok = false;
    }
    if (!r.cds_power_ok) detail << "power at a non-dominating slot; ";
    if (!r.interval_balance_ok) detail << "interval energy balance broken; ";
  }

  r.pass = r.local_monotone && r.offl_monotone && r.levels_monotone && r.buffer_cleared &&
           r.waterfilling_ok && r.level_consistent && r.cds_power_ok &&
           r.interval_balance_ok && r.tightness_ok;
  r.detail = detail.str();
  return r;
}

namespace {

// Cheapest local/offload split of `total` bits in one slot, by direct
// golden-section minimization of the energy sum (convex in the split).
// Deliberately ignorant of the closed-form allocation it cross-checks.
double best_split_energy(double total, double offl_gain, const SystemParams& p,
                         SplitMode mode) {
  if (total <= 0.0) return 0.0;
  if (mode == SplitMode::local_only) return local_energy(total, p);
  if (mode == SplitMode::offload_only) return offload_energy(total, offl_gain, p);

  const auto energy = [&](double local) {
    return local_energy(local, p) + offload_energy(std::max(total - local, 0.0), offl_gain, p);
  };
  constexpr double inv_phi = 0.6180339887498949;
  double a = 0.0, b = total;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = energy(x1), f2 = energy(x2);
  while (b - a > 1e-12 * total) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = energy(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = energy(x2);
    }
  }
  return std::min({energy(0.5 * (a + b)), energy(0.0), energy(total)});
}

struct OracleAxis {
  double lo = 0.0;
  double hi = 0.0;
};

constexpr int kOraclePoints = 200;
constexpr int kOraclePasses = 3;  // full box plus two 10x refinements

double axis_value(const OracleAxis& ax, int idx) {
  if (ax.hi <= ax.lo) return ax.lo;
  return ax.lo + (ax.hi - ax.lo) * static_cast<double>(idx) / (kOraclePoints - 1);
}

OracleAxis refine(const OracleAxis& ax, double center, const OracleAxis& bounds) {
  const double width = (ax.hi - ax.lo) / 10.0;
  OracleAxis out{center - 0.5 * width, center + 0.5 * width};
  out.lo = std::max(out.lo, bounds.lo);
  out.hi = std::min(out.hi, bounds.hi);
  return out;
}

}  // namespace

double grid_oracle(const TaskTrace& tasks, const ChannelTrace& channels,
                   const SystemParams& p, SplitMode mode) {
  const std::size_t n = tasks.size();
  if (n == 0 || n > 3)
    throw std::invalid_argument("grid_oracle: only horizons of 1..3 slots are supported");
  if (channels.size() != n) throw std::invalid_argument("grid_oracle: length mismatch");

  // Optimal power given bits prices slot i's consumption at the best
  // causally available WPT gain, so only the executed totals are searched.
  const CdsDecomposition cds = compute_cds(channels.wpt_gain);
  std::array<double, 3> weight{};
  for (std::size_t i = 0; i < n; ++i)
    weight[i] = 1.0 / (p.eh_efficiency * cds.eff_gain[i]);

  const double a1 = tasks.arrivals[0];
  const double a2 = n > 1 ? tasks.arrivals[1] : 0.0;
  const double total = tasks.total();
  if (total <= 0.0) return 0.0;

  const auto cost = [&](std::size_t slot, double bits) {
    return weight[slot] * best_split_energy(bits, channels.offl_gain[slot], p, mode);
  };

  if (n == 1) return cost(0, total);

  if (n == 2) {
    const OracleAxis bounds{0.0, std::min(a1, total)};
    OracleAxis ax = bounds;
    double best = std::numeric_limits<double>::infinity();
    double best_t1 = 0.0;
    for (int pass = 0; pass < kOraclePasses; ++pass) {
      for (int i = 0; i < kOraclePoints; ++i) {
        const double t1 = axis_value(ax, i);
        const double value = cost(0, t1) + cost(1, total - t1);
        if (value < best) {
          best = value;
          best_t1 = t1;
        }
      }
      ax = refine(ax, best_t1, bounds);
    }
    return best;
  }

  const OracleAxis bounds1{0.0, std::min(a1, total)};
  const OracleAxis bounds2{0.0, std::min(a1 + a2, total)};
  OracleAxis ax1 = bounds1;
  OracleAxis ax2 = bounds2;
  double best = std::numeric_limits<double>::infinity();
  double best_t1 = 0.0, best_t2 = 0.0;
  for (int pass = 0; pass < kOraclePasses; ++pass) {
    // Both grids are fixed per pass, so the first two slots' split costs
    // are shared across the whole pass; infeasible grid nodes (outside
    // the causality simplex) are skipped instead of clamped.
    std::array<double, kOraclePoints> cost2{};
    for (int j = 0; j < kOraclePoints; ++j) cost2[j] = cost(1, axis_value(ax2, j));
    for (int i = 0; i < kOraclePoints; ++i) {
      const double t1 = axis_value(ax1, i);
      const double c1 = cost(0, t1);
      const double t2_cap = std::min(a1 + a2 - t1, total - t1);
      for (int j = 0; j < kOraclePoints; ++j) {
        const double t2 = axis_value(ax2, j);
        if (t2 > t2_cap) break;
        const double t3 = total - t1 - t2;
        const double value = c1 + cost2[j] + cost(2, t3);
        if (value < best) {
          best = value;
          best_t1 = t1;
          best_t2 = t2;
        }
      }
    }
    ax1 = refine(ax1, best_t1, bounds1);
    ax2 = refine(ax2, best_t2, bounds2);
  }
  return best;
}

}  // namespace wpmec
