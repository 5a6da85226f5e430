#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "hardcopy/analytic.hpp"

namespace hardcopy {

// Exact expectations at time T from full probability-tree enumeration.
struct ExactExpectations {
  std::uint64_t T = 2;
  std::map<std::uint64_t, double> E_Dk;  // expected count of degree-k vertices
  double E_e = 0.0;
  double E_max_degree = 0.0;
  double total_probability = 0.0;  // leaf weights; 1 up to rounding
};

namespace detail {

// Compensated (Kahan) accumulator.
struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

// Self-contained dense state for the enumeration; deliberately independent
// of MultiGraph so the tree is a reference, not a re-run, of the simulator.
struct TinyGraph {
  static constexpr std::uint64_t kMaxV = 8;
  std::uint64_t n = 0;
  std::uint64_t e = 0;
  std::array<std::uint32_t, kMaxV> deg{};
  std::array<std::array<std::uint32_t, kMaxV>, kMaxV> mult{};

  void add_edges(std::uint64_t u, std::uint64_t v, std::uint32_t c) {
    mult[u][v] += c;
    mult[v][u] += c;
    deg[u] += c;
    deg[v] += c;
    e += c;
  }
};

struct OracleAccum {
  std::map<std::uint64_t, KahanSum> dk;
  KahanSum e, max_deg, prob;
};

inline void oracle_leaf(const TinyGraph& g, double p, OracleAccum& acc) {
  std::uint32_t mx = 0;
  for (std::uint64_t v = 0; v < g.n; ++v) {
    acc.dk[g.deg[v]].add(p);
    if (g.deg[v] > mx) mx = g.deg[v];
  }
  acc.e.add(p * double(g.e));
  acc.max_deg.add(p * double(mx));
  acc.prob.add(p);
}

// Expands the NewVertex branch over all ordered m-tuples of neighbors; the
// tuple weight multiplies deg(w)/(2e) factors of the pre-step graph.
template <typename Recurse>
void expand_new_vertex(const TinyGraph& g, double p, std::uint64_t m,
                       std::uint64_t slot, TinyGraph child, double w,
                       const Recurse& rec) {
  if (slot == m) {
    rec(child, p * w);
    return;
  }
  for (std::uint64_t v = 0; v < g.n; ++v) {
    if (g.deg[v] == 0) continue;
    TinyGraph next = child;
    next.add_edges(g.n, v, 1);
    expand_new_vertex(g, p, m, slot + 1, next,
                      w * double(g.deg[v]) / (2.0 * double(g.e)), rec);
  }
}

}  // namespace detail

/// Exhaustive expansion of the hard-copy process from the seed graph to time
/// T, guarded to T <= 6 and m <= 2 to keep the tree small. Branch weights:
/// alpha * prod(deg/2e) per ordered neighbor tuple, (1-alpha)/t per copy
/// target.
inline ExactExpectations enumerate_hard_copy(double alpha, std::uint64_t m,
                                             std::uint64_t T) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::invalid_argument("alpha must lie in (0, 1]");
  if (m < 1 || m > 2) throw std::invalid_argument("enumerate_hard_copy: m must be 1 or 2");
  if (T < 2 || T > 6) throw std::invalid_argument("enumerate_hard_copy: T must be in [2, 6]");

  detail::TinyGraph seed;
  seed.n = 2;
  seed.add_edges(0, 1, std::uint32_t(2 * m));

  detail::OracleAccum acc;
  // Depth-first over time steps; each level multiplies the branch weight in.
  auto step = [&](auto&& self, const detail::TinyGraph& g, double p) -> void {
    if (g.n == T) {
      detail::oracle_leaf(g, p, acc);
      return;
    }
    if (alpha > 0.0) {
      detail::expand_new_vertex(
          g, p * alpha, m, 0,
          [&] {
            detail::TinyGraph child = g;
            child.n += 1;
            return child;
          }(),
          1.0, [&](const detail::TinyGraph& c, double w) { self(self, c, w); });
    }
    if (alpha < 1.0) {
      const double pc = p * (1.0 - alpha) / double(g.n);
      for (std::uint64_t target = 0; target < g.n; ++target) {
        detail::TinyGraph child = g;
        child.n += 1;
        for (std::uint64_t w = 0; w < g.n; ++w)
          if (g.mult[target][w] > 0) child.add_edges(g.n, w, g.mult[target][w]);
        self(self, child, pc);
      }
    }
  };
  step(step, seed, 1.0);

  ExactExpectations out;
  out.T = T;
  for (const auto& [k, s] : acc.dk) out.E_Dk[k] = s.s;
  out.E_e = acc.e.s;
  out.E_max_degree = acc.max_deg.s;
  out.total_probability = acc.prob.s;
  return out;
}

/// Agreement between the oracle and the Eq-style expected-edge iteration.
struct RecurrenceCheck {
  double oracle_e = 0.0;
  double analytic_e = 0.0;
  double rel_error = 0.0;
  bool ok = false;  // rel_error <= 1e-9
};

inline RecurrenceCheck check_against_recurrence(const ExactExpectations& exact,
                                                double alpha, std::uint64_t m) {
  const EdgeGrowth growth = expected_edges_exact(alpha, m, exact.T);
  RecurrenceCheck c;
  c.oracle_e = exact.E_e;
  c.analytic_e = growth.expected_e[exact.T];
  c.rel_error = std::abs(c.oracle_e - c.analytic_e) / std::abs(c.analytic_e);
  c.ok = c.rel_error <= 1e-9;
  return c;
}

}  // namespace hardcopy
