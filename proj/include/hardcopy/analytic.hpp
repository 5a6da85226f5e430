#pragma once

#include <gsl/gsl_sf_zeta.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hardcopy {

// Parameter regimes for the hard-copy model. The limit degree sequence needs
// the stronger 2m(1-alpha) < alpha; the degree/edge concentration bounds only
// need 2m(1-alpha) < 1; the edge growth rate mu needs alpha > 1/2.
inline bool theorem_regime(double alpha, std::uint64_t m) {
  return 2.0 * double(m) * (1.0 - alpha) < alpha;
}
inline bool lemma_regime(double alpha, std::uint64_t m) {
  return 2.0 * double(m) * (1.0 - alpha) < 1.0;
}

/// Linear edge-growth rate: mu = alpha*m / (2*alpha - 1), for alpha > 1/2.
inline double mu(double alpha, std::uint64_t m) {
  if (!(alpha > 0.5))
    throw std::domain_error("mu: undefined for alpha <= 1/2");
  return alpha * double(m) / (2.0 * alpha - 1.0);
}

/// Hurwitz zeta sum_{j>=0} (a+j)^-s, s > 1, a > 0.
inline double hurwitz_zeta(double s, double a) { return gsl_sf_hzeta(s, a); }

/// Power-law exponent of the hard-copy degree sequence: 1 + 2*alpha.
inline double asymptotic_exponent(double alpha) { return 1.0 + 2.0 * alpha; }

/// In-degree exponent of the Kumar copying baseline: (2-c)/(1-c).
inline double kumar_exponent(double copy_factor) {
  if (!(copy_factor > 0.0 && copy_factor < 1.0))
    throw std::domain_error("kumar_exponent: copy factor must lie in (0, 1)");
  return (2.0 - copy_factor) / (1.0 - copy_factor);
}

namespace detail {
inline void require_theorem_regime(double alpha, std::uint64_t m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::invalid_argument("alpha must lie in (0, 1]");
  if (!theorem_regime(alpha, m))
    throw std::domain_error("parameters outside the regime 2m(1-alpha) < alpha");
}
}  // namespace detail

/// Visits (k, d_k) for k = m..k_max, where d_m = 2a/(m+2a) and
/// d_k = d_{k-1} (k-1)/(k+2a). Ratios are < 1, so the forward product is
/// stable in plain double arithmetic for any feasible k_max.
template <typename F>
void visit_limit_degree_sequence(double alpha, std::uint64_t m, std::uint64_t k_max, F&& f) {
  detail::require_theorem_regime(alpha, m);
  if (k_max < m) throw std::invalid_argument("k_max must be >= m");
  double d = 2.0 * alpha / (double(m) + 2.0 * alpha);
  f(m, d);
  for (std::uint64_t k = m + 1; k <= k_max; ++k) {
    d *= double(k - 1) / (double(k) + 2.0 * alpha);
    f(k, d);
  }
}

/// Limit proportions d_k of vertices of degree k, tabulated up to k_max.
struct TheoreticalSequence {
  double alpha = 1.0;
  std::uint64_t m = 1;
  double mu = 0.0;        // edge growth rate (always defined in-regime)
  double exponent = 3.0;  // 1 + 2*alpha
  std::vector<double> d;  // d[k] for k = 0..k_max; zero below m

  std::uint64_t k_max() const { return d.size() - 1; }
};

inline TheoreticalSequence limit_degree_sequence(double alpha, std::uint64_t m,
                                                 std::uint64_t k_max) {
  TheoreticalSequence seq;
  seq.alpha = alpha;
  seq.m = m;
  seq.exponent = asymptotic_exponent(alpha);
  seq.d.assign(k_max + 1, 0.0);
  visit_limit_degree_sequence(alpha, m, k_max,
                              [&seq](std::uint64_t k, double dk) { seq.d[k] = dk; });
  seq.mu = mu(alpha, m);  // theorem regime with m >= 1 forces alpha > 2/3
  return seq;
}

/// sum_{k<=K} d_k (streaming, nothing tabulated).
inline double dk_partial_sum(double alpha, std::uint64_t m, std::uint64_t K) {
  double s = 0.0;
  visit_limit_degree_sequence(alpha, m, K, [&s](std::uint64_t, double dk) { s += dk; });
  return s;
}

/// Estimate of C in d_k ~ C k^-(1+2a), from the last tabulated term.
inline double dk_tail_constant(double alpha, std::uint64_t m, std::uint64_t K) {
  double last = 0.0;
  visit_limit_degree_sequence(alpha, m, K, [&last](std::uint64_t, double dk) { last = dk; });
  return last * std::pow(double(K), 1.0 + 2.0 * alpha);
}

/// sum_k k*d_k with the tail beyond K approximated by C*zeta(2a, K+1).
/// Converges to 2*mu.
inline double dk_mean_degree(double alpha, std::uint64_t m, std::uint64_t K) {
  double s = 0.0, last = 0.0;
  visit_limit_degree_sequence(alpha, m, K, [&](std::uint64_t k, double dk) {
    s += double(k) * dk;
    last = dk;
  });
  const double c = last * std::pow(double(K), 1.0 + 2.0 * alpha);
  return s + c * hurwitz_zeta(2.0 * alpha, double(K) + 1.0);
}

/// Exact forward iteration of E(e_{t+1}) = E(e_t)(1 + 2(1-a)/t) + a*m from
/// E(e_2) = 2m, plus the deviation eta_t = E(e_t) - mu*t when mu is defined.
struct EdgeGrowth {
  double alpha = 1.0;
  std::uint64_t m = 1;
  double mu = std::numeric_limits<double>::quiet_NaN();  // NaN when alpha <= 1/2
  std::vector<double> expected_e;                        // index t; valid for t >= 2

  double eta(std::uint64_t t) const { return expected_e[t] - mu * double(t); }
};

inline EdgeGrowth expected_edges_exact(double alpha, std::uint64_t m, std::uint64_t T) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::invalid_argument("alpha must lie in (0, 1]");
  if (T < 2) throw std::invalid_argument("T must be >= 2");
  EdgeGrowth g;
  g.alpha = alpha;
  g.m = m;
  if (alpha > 0.5) g.mu = mu(alpha, m);
  g.expected_e.assign(T + 1, std::numeric_limits<double>::quiet_NaN());
  g.expected_e[2] = 2.0 * double(m);
  for (std::uint64_t t = 2; t < T; ++t)
    g.expected_e[t + 1] =
        g.expected_e[t] * (1.0 + 2.0 * (1.0 - alpha) / double(t)) + alpha * double(m);
  return g;
}

/// qs envelopes of Lemmas 2.1 and 2.2 for an original vertex born at time s:
/// degree <= (t/s)^(a/2+m(1-a)) (ln t)^3, descendants <= (t/s)^(1-a) (ln t)^3.
struct LemmaBounds {
  double degree_bound = 0.0;
  double descendant_bound = 0.0;
};

inline LemmaBounds lemma_bounds(double alpha, std::uint64_t m, std::uint64_t s,
                                std::uint64_t t) {
  if (!(s >= 2 && s <= t)) throw std::invalid_argument("lemma_bounds: need 2 <= s <= t");
  if (!lemma_regime(alpha, m))
    throw std::domain_error("lemma_bounds: requires 2m(1-alpha) < 1");
  const double ratio = double(t) / double(s);
  const double log3 = std::pow(std::log(double(t)), 3.0);
  return {std::pow(ratio, alpha / 2.0 + double(m) * (1.0 - alpha)) * log3,
          std::pow(ratio, 1.0 - alpha) * log3};
}

/// Whole-graph max degree envelope: t^(a/2+m(1-a)) (ln t)^3.
inline double max_degree_envelope(double alpha, std::uint64_t m, std::uint64_t t) {
  return std::pow(double(t), alpha / 2.0 + double(m) * (1.0 - alpha)) *
         std::pow(std::log(double(t)), 3.0);
}

/// Envelope for the multi-edge vertex count: t^(a/2+m(1-a)+eps), any eps > 0.
inline double multi_edge_envelope(double alpha, std::uint64_t m, double eps,
                                  std::uint64_t t) {
  if (!(eps > 0.0)) throw std::invalid_argument("multi_edge_envelope: eps must be > 0");
  return std::pow(double(t), alpha / 2.0 + double(m) * (1.0 - alpha) + eps);
}

namespace detail {
inline void require_eps0(double alpha, std::uint64_t m, double eps0) {
  if (!(eps0 > 0.0) || !(1.0 + 2.0 * eps0 + 2.0 * double(m) * (1.0 - alpha) < 2.0))
    throw std::domain_error("eps0 must satisfy 0 < eps0 and 1 + 2*eps0 + 2m(1-alpha) < 2");
}
}  // namespace detail

/// Edge concentration radius t^(1/2+eps0+m(1-a)); |e_t - mu*t| exceeds it with
/// probability O(t^-eps0).
inline double concentration_threshold(double alpha, std::uint64_t m, double eps0,
                                      std::uint64_t t) {
  detail::require_eps0(alpha, m, eps0);
  return std::pow(double(t), 0.5 + eps0 + double(m) * (1.0 - alpha));
}

/// Exponent bound in Var(e_t) = O(t^(1+2m(1-a)+eps0)).
inline double variance_exponent_bound(double alpha, std::uint64_t m, double eps0) {
  detail::require_eps0(alpha, m, eps0);
  return 1.0 + 2.0 * double(m) * (1.0 - alpha) + eps0;
}

/// Default slack exponents: eps0 the midpoint of its feasible interval
/// (0, (1-2m(1-a))/2), eps1 = min{eps0, 1-a/2-m(1-a), 1/2-eps0-m(1-a)}/2.
struct Epsilons {
  double epsilon0 = 0.0;
  double epsilon1 = 0.0;
};

inline Epsilons default_epsilons(double alpha, std::uint64_t m) {
  detail::require_theorem_regime(alpha, m);
  const double q = double(m) * (1.0 - alpha);
  const double eps0 = (1.0 - 2.0 * q) / 4.0;
  const double eps1 =
      0.5 * std::min({eps0, 1.0 - alpha / 2.0 - q, 0.5 - eps0 - q});
  return {eps0, eps1};
}

}  // namespace hardcopy
