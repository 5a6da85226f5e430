#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "hardcopy/multigraph.hpp"
#include "hardcopy/rng.hpp"

namespace hardcopy {

// Kumar et al. copying baseline: directed, constant out-degree d. Each step
// adds one vertex u and picks a prototype p uniformly at random; slot i of u
// copies p's i-th out-link with probability 1 - copy_factor, otherwise it
// points to a uniformly random existing vertex.
struct KumarParams {
  double copy_factor = 0.5;    // in (0, 1)
  std::uint64_t out_degree = 1;
  std::uint64_t seed = 1;
  std::uint64_t steps = 2;     // total vertex count to reach
};

inline void validate_kumar(const KumarParams& p) {
  if (!(p.copy_factor > 0.0 && p.copy_factor < 1.0))
    throw std::invalid_argument("copy_factor must lie in (0, 1)");
  if (p.out_degree < 1) throw std::invalid_argument("out_degree must be >= 1");
  if (p.steps < p.out_degree + 1)
    throw std::invalid_argument("steps must cover the d+1 bootstrap vertices");
}

struct KumarState {
  std::uint64_t out_degree = 1;
  std::vector<std::vector<VertexId>> out_links;  // exactly out_degree entries per vertex
  std::vector<std::uint64_t> in_degree;

  std::uint64_t vertex_count() const { return out_links.size(); }
};

struct KumarDelta {
  VertexId vertex = 0;
  VertexId prototype = 0;
  std::uint64_t copied_slots = 0;
};

// Deterministic bootstrap (the model is silent on initialization): d+1
// vertices, all d out-links of vertex i pointing to vertex (i mod (d+1)) + 1.
inline KumarState kumar_bootstrap(std::uint64_t d) {
  if (d < 1) throw std::invalid_argument("out_degree must be >= 1");
  KumarState s;
  s.out_degree = d;
  const std::uint64_t n = d + 1;
  s.out_links.resize(n);
  s.in_degree.assign(n, 0);
  for (std::uint64_t i = 1; i <= n; ++i) {
    const VertexId dst = VertexId(i % n + 1);
    s.out_links[i - 1].assign(d, dst);
    s.in_degree[dst - 1] += d;
  }
  return s;
}

inline KumarDelta step_kumar(KumarState& s, const KumarParams& p, Rng& rng) {
  const std::uint64_t n = s.vertex_count();
  KumarDelta delta;
  delta.vertex = VertexId(n + 1);
  delta.prototype = VertexId(1 + rng.uniform_below(n));
  std::vector<VertexId> links;
  links.reserve(s.out_degree);
  for (std::uint64_t i = 0; i < s.out_degree; ++i) {
    VertexId dst;
    if (rng.canonical() < p.copy_factor) {
      dst = VertexId(1 + rng.uniform_below(n));
    } else {
      dst = s.out_links[delta.prototype - 1][i];
      ++delta.copied_slots;
    }
    links.push_back(dst);
    ++s.in_degree[dst - 1];
  }
  s.out_links.push_back(std::move(links));
  s.in_degree.push_back(0);
  return delta;
}

inline KumarState run_kumar(const KumarParams& p) {
  validate_kumar(p);
  KumarState s = kumar_bootstrap(p.out_degree);
  Rng rng(p.seed);
  while (s.vertex_count() < p.steps) step_kumar(s, p, rng);
  return s;
}

inline std::map<std::uint64_t, std::uint64_t> in_degree_histogram(const KumarState& s) {
  std::map<std::uint64_t, std::uint64_t> h;
  for (std::uint64_t d : s.in_degree) ++h[d];
  return h;
}

}  // namespace hardcopy
