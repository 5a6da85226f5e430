#pragma once

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hardcopy/analytic.hpp"
#include "hardcopy/ensemble.hpp"
#include "hardcopy/multigraph.hpp"
#include "hardcopy/process.hpp"

namespace hardcopy {

/// Sparse degree histogram; sum of counts is t, sum of k*counts is 2e.
struct DegreeHistogram {
  std::uint64_t t = 0;
  std::map<std::uint64_t, std::uint64_t> counts;
};

inline DegreeHistogram degree_histogram(const MultiGraph& g) {
  return {g.vertex_count(), degree_histogram_of(g)};
}

/// Discrete power-law fit of the histogram tail k >= k_min.
struct PowerLawFit {
  double gamma_hat = 0.0;
  std::uint64_t k_min = 10;
  std::uint64_t n_tail = 0;
  double log_likelihood = 0.0;
  double ks_distance = 0.0;
};

/// Maximum-likelihood exponent of P(k) = k^-gamma / zeta(gamma, k_min) on the
/// tail k >= k_min, by bracketed scalar maximization over gamma in
/// (1.05, 6). Also reports the Kolmogorov-Smirnov distance between the
/// fitted and empirical tail CDFs.
inline PowerLawFit fit_power_law(const std::map<std::uint64_t, std::uint64_t>& counts,
                                 std::uint64_t k_min = 10) {
  if (k_min < 1) throw std::invalid_argument("fit_power_law: k_min must be >= 1");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> tail;
  std::uint64_t n = 0;
  double sum_logk = 0.0;
  for (const auto& [k, c] : counts) {
    if (k < k_min || c == 0) continue;
    tail.emplace_back(k, c);
    n += c;
    sum_logk += double(c) * std::log(double(k));
  }
  if (n < 10)
    throw std::invalid_argument("fit_power_law: tail needs at least 10 observations");
  if (tail.size() < 2)
    throw std::invalid_argument("fit_power_law: degenerate tail (single distinct degree)");

  const double lo = 1.05, hi = 6.0;
  auto nll = [&](double g) {
    return g * sum_logk + double(n) * std::log(hurwitz_zeta(g, double(k_min)));
  };

  // Coarse scan certifies an interior bracket before polishing with Brent.
  constexpr int kGrid = 64;
  int best = 0;
  double best_v = std::numeric_limits<double>::infinity();
  std::vector<double> gs(kGrid);
  for (int i = 0; i < kGrid; ++i) {
    gs[i] = lo + (hi - lo) * double(i) / double(kGrid - 1);
    const double v = nll(gs[i]);
    if (v < best_v) {
      best_v = v;
      best = i;
    }
  }
  if (best == 0 || best == kGrid - 1)
    throw std::domain_error("fit_power_law: likelihood optimum not bracketed in (1.05, 6)");
  const auto [gamma, min_nll] =
      boost::math::tools::brent_find_minima(nll, gs[best - 1], gs[best + 1], 30);

  PowerLawFit fit;
  fit.gamma_hat = gamma;
  fit.k_min = k_min;
  fit.n_tail = n;
  fit.log_likelihood = -min_nll;
  const double hz0 = hurwitz_zeta(gamma, double(k_min));
  double cum = 0.0, ks = 0.0;
  for (const auto& [k, c] : tail) {
    cum += double(c);
    const double f_emp = cum / double(n);
    const double f_fit = 1.0 - hurwitz_zeta(gamma, double(k) + 1.0) / hz0;
    ks = std::max(ks, std::abs(f_emp - f_fit));
  }
  fit.ks_distance = ks;
  return fit;
}

/// One row of the theory-vs-experiment table at the final checkpoint.
struct ComparisonRow {
  std::uint64_t k = 0;
  double empirical = 0.0;  // mean D_k(t)/t
  double theory = 0.0;     // d_k
  double std_error = 0.0;
  double z = 0.0;  // (empirical - theory)/std_error; 0 when the difference is 0
};

struct ComparisonTable {
  std::uint64_t t = 0;
  double epsilon1 = 0.0;
  std::vector<ComparisonRow> rows;
  double max_abs_diff = 0.0;
  double m_hat = 0.0;  // fitted slack: max_k |mean - d_k| * t^eps1
};

/// Compares the final checkpoint of an ensemble with the limit sequence for
/// k in [k_lo, k_hi]. m_hat rescales the worst deviation by t^eps1, the
/// slack exponent of the finite-t approximation bound.
inline ComparisonTable compare_to_theory(const EnsembleSummary& summary,
                                         const TheoreticalSequence& theory,
                                         std::uint64_t k_lo, std::uint64_t k_hi) {
  if (summary.checkpoints.empty())
    throw std::invalid_argument("compare_to_theory: summary has no checkpoints");
  if (k_lo > k_hi || k_hi > theory.k_max())
    throw std::invalid_argument("compare_to_theory: bad k range");
  const EnsembleCheckpoint& cp = summary.checkpoints.back();
  const Epsilons eps = default_epsilons(theory.alpha, theory.m);

  ComparisonTable table;
  table.t = cp.t;
  table.epsilon1 = eps.epsilon1;
  const double scale = std::pow(double(cp.t), eps.epsilon1);
  for (std::uint64_t k = k_lo; k <= k_hi; ++k) {
    ComparisonRow row;
    row.k = k;
    if (auto it = cp.dk.find(k); it != cp.dk.end()) {
      row.empirical = it->second.mean;
      row.std_error = it->second.std_error;
    }
    row.theory = theory.d[k];
    const double diff = row.empirical - row.theory;
    row.z = diff == 0.0 ? 0.0 : diff / row.std_error;
    table.max_abs_diff = std::max(table.max_abs_diff, std::abs(diff));
    table.rows.push_back(row);
  }
  table.m_hat = table.max_abs_diff * scale;
  return table;
}

/// Fake ensemble holding the theory values themselves as the empirical means
/// (zero spread); feeding it back through compare_to_theory is the identity
/// fixture.
inline EnsembleSummary theory_as_empirical(const TheoreticalSequence& theory,
                                           std::uint64_t t) {
  EnsembleSummary s;
  s.params.alpha = theory.alpha;
  s.params.m = theory.m;
  s.params.steps = t;
  s.replicas = 2;
  EnsembleCheckpoint cp;
  cp.t = t;
  for (std::uint64_t k = theory.m; k <= theory.k_max(); ++k)
    cp.dk[k] = ScalarStat{theory.d[k], 0.0};
  s.checkpoints.push_back(std::move(cp));
  return s;
}

/// Per-checkpoint quite-surely envelope checks. The statements are
/// asymptotic, so times below t_min are recorded but not counted; violations
/// are reported, never fatal.
struct QsFlags {
  std::uint64_t t = 0;
  bool checked = false;             // t >= t_min
  bool degree_ok = true;            // max degree within its envelope
  bool multi_edge_ok = true;        // X_t within its envelope
  bool concentration_checked = false;
  bool concentration_ok = true;     // |e - mu t| within the threshold
};

struct QsReport {
  double eps0 = 0.0;
  std::uint64_t t_min = 100;
  std::vector<QsFlags> checkpoints;
  std::uint64_t degree_violations = 0;
  std::uint64_t multi_edge_violations = 0;
  std::uint64_t concentration_violations = 0;
};

inline QsReport qs_diagnostics(const Trajectory& traj, const HardCopyParams& p,
                               double eps0, std::uint64_t t_min = 100) {
  QsReport rep;
  rep.eps0 = eps0;
  rep.t_min = t_min;
  bool eps0_valid = true;
  try {
    detail::require_eps0(p.alpha, p.m, eps0);
  } catch (const std::domain_error&) {
    eps0_valid = false;
  }
  const bool conc = p.alpha > 0.5 && eps0_valid;
  const double mu_v = conc ? mu(p.alpha, p.m) : 0.0;

  for (const TrajectoryPoint& pt : traj.points) {
    QsFlags f;
    f.t = pt.t;
    f.checked = pt.t >= t_min;
    f.degree_ok = double(pt.max_degree) <= max_degree_envelope(p.alpha, p.m, pt.t);
    f.multi_edge_ok = eps0_valid
                          ? double(pt.multi_edge_vertices) <=
                                multi_edge_envelope(p.alpha, p.m, eps0, pt.t)
                          : true;
    if (conc) {
      f.concentration_checked = true;
      f.concentration_ok = std::abs(double(pt.e) - mu_v * double(pt.t)) <=
                           concentration_threshold(p.alpha, p.m, eps0, pt.t);
    }
    if (f.checked) {
      rep.degree_violations += !f.degree_ok;
      rep.multi_edge_violations += !f.multi_edge_ok;
      rep.concentration_violations += f.concentration_checked && !f.concentration_ok;
    }
    rep.checkpoints.push_back(f);
  }
  return rep;
}

/// Least-squares slope of log Var(e_T) against log T. Degenerate when fewer
/// than two usable points or any variance is zero (e.g. pure preferential
/// attachment, where e_t is deterministic).
struct VarianceGrowthFit {
  double slope = std::numeric_limits<double>::quiet_NaN();
  bool degenerate = true;
  std::size_t points = 0;
};

inline VarianceGrowthFit variance_growth_fit(
    const std::vector<std::pair<std::uint64_t, double>>& var_by_T) {
  VarianceGrowthFit fit;
  fit.points = var_by_T.size();
  if (var_by_T.size() < 2) return fit;
  for (const auto& [T, v] : var_by_T)
    if (!(v > 0.0)) return fit;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = double(var_by_T.size());
  for (const auto& [T, v] : var_by_T) {
    const double x = std::log(double(T));
    const double y = std::log(v);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.degenerate = false;
  return fit;
}

}  // namespace hardcopy
