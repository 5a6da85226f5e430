#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <new>
#include <span>
#include <stdexcept>
#include <vector>

#include "hardcopy/analytic.hpp"
#include "hardcopy/multigraph.hpp"
#include "hardcopy/rng.hpp"

namespace hardcopy {

struct HardCopyParams {
  double alpha = 1.0;       // new-vertex probability, in (0, 1]
  std::uint64_t m = 1;      // edges per new vertex
  std::uint64_t seed = 1;   // master seed
  std::uint64_t steps = 2;  // target vertex count T
};

struct RegimeReport {
  bool theorem_regime = false;  // 2m(1-alpha) < alpha
  bool lemma_regime = false;    // 2m(1-alpha) < 1
  bool mu_defined = false;      // alpha > 1/2
};

/// Parameter check. alpha = 0 is rejected (the model requires alpha > 0);
/// alpha = 1 is plain preferential attachment. Out-of-regime parameters are
/// legal for simulation, so only the flags are reported here.
inline RegimeReport validate_hard_copy(double alpha, std::uint64_t m) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::invalid_argument("alpha must lie in (0, 1]");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  return {theorem_regime(alpha, m), lemma_regime(alpha, m), alpha > 0.5};
}

inline RegimeReport validate_hard_copy(const HardCopyParams& p) {
  if (p.steps < 2) throw std::invalid_argument("steps must be >= 2");
  return validate_hard_copy(p.alpha, p.m);
}

/// One preferential-attachment draw: returns w with probability
/// degree(w) / (2e), implemented as a uniform pick from the endpoint list.
inline VertexId sample_pa_neighbor(const MultiGraph& g, Rng& rng) {
  const auto& ep = g.endpoint_list();
  return ep[rng.uniform_below(ep.size())];
}

/// One growth step. Draw order is fixed: first the Bernoulli(alpha) branch
/// choice, then either the m neighbor draws (NewVertex) or the uniform
/// target draw (Copy). All m neighbor draws happen before the graph is
/// mutated, so they are i.i.d. from the pre-step degree distribution.
inline StepDelta step_hard_copy(MultiGraph& g, const HardCopyParams& p, Rng& rng) {
  StepDelta d;
  if (rng.canonical() < p.alpha) {
    d.kind = StepDelta::Kind::NewVertex;
    d.neighbors.reserve(p.m);
    for (std::uint64_t i = 0; i < p.m; ++i)
      d.neighbors.push_back(sample_pa_neighbor(g, rng));
    g.add_vertex_with_edges(d.neighbors);
    d.edges_added = p.m;
  } else {
    d.kind = StepDelta::Kind::Copy;
    d.target = VertexId(1 + rng.uniform_below(g.vertex_count()));
    d.edges_added = g.degree(d.target);
    g.copy_vertex(d.target);
  }
  return d;
}

/// State recorded at one checkpoint time.
struct TrajectoryPoint {
  std::uint64_t t = 0;
  std::uint64_t e = 0;
  std::uint64_t max_degree = 0;
  std::uint64_t multi_edge_vertices = 0;
  double eta = std::numeric_limits<double>::quiet_NaN();  // e - mu*t when mu defined
  std::map<std::uint64_t, std::uint64_t> degree_hist;
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;
  bool complete = true;  // false when the run stopped on memory exhaustion
};

using StepObserver = std::function<void(const MultiGraph&, const StepDelta&)>;

inline std::map<std::uint64_t, std::uint64_t> degree_histogram_of(const MultiGraph& g) {
  std::map<std::uint64_t, std::uint64_t> h;
  for (VertexId v = 1; v <= g.vertex_count(); ++v) ++h[g.degree(v)];
  return h;
}

/// Geometric schedule {2, 4, 8, ...} up to T, with T always included.
inline std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t T) {
  if (T < 2) throw std::invalid_argument("geometric_checkpoints: T must be >= 2");
  std::vector<std::uint64_t> cps;
  for (std::uint64_t c = 2; c <= T && c != 0; c *= 2) cps.push_back(c);
  if (cps.back() != T) cps.push_back(T);
  return cps;
}

/// Runs step_hard_copy until t = params.steps, recording each checkpoint
/// time. Checkpoints must be strictly increasing within [current t, T]. On
/// memory exhaustion the trajectory collected so far is returned with
/// complete = false.
inline Trajectory evolve(MultiGraph& g, const HardCopyParams& p, Rng& rng,
                         std::span<const std::uint64_t> checkpoints,
                         const StepObserver& observer = {}) {
  validate_hard_copy(p);
  if (p.m != g.m()) throw std::invalid_argument("evolve: params.m differs from graph m");
  const std::uint64_t T = p.steps;
  if (T < g.vertex_count())
    throw std::invalid_argument("evolve: steps below current vertex count");
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
      throw std::invalid_argument("evolve: checkpoints must be strictly increasing");
    if (checkpoints[i] < g.vertex_count() || checkpoints[i] > T)
      throw std::invalid_argument("evolve: checkpoint outside [t, T]");
  }
  const double mu_v =
      p.alpha > 0.5 ? mu(p.alpha, p.m) : std::numeric_limits<double>::quiet_NaN();

  Trajectory traj;
  std::size_t ci = 0;
  auto record_if_due = [&] {
    if (ci < checkpoints.size() && checkpoints[ci] == g.vertex_count()) {
      TrajectoryPoint pt;
      pt.t = g.vertex_count();
      pt.e = g.edge_count();
      pt.max_degree = g.max_degree();
      pt.multi_edge_vertices = g.multi_edge_vertex_count();
      if (!std::isnan(mu_v)) pt.eta = double(pt.e) - mu_v * double(pt.t);
      pt.degree_hist = degree_histogram_of(g);
      traj.points.push_back(std::move(pt));
      ++ci;
    }
  };

  record_if_due();
  try {
    while (g.vertex_count() < T) {
      const StepDelta d = step_hard_copy(g, p, rng);
      if (observer) observer(g, d);
      record_if_due();
    }
  } catch (const std::bad_alloc&) {
    traj.complete = false;
  }
  return traj;
}

}  // namespace hardcopy
