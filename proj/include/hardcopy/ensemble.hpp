#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hardcopy/process.hpp"

namespace hardcopy {

struct ScalarStat {
  double mean = 0.0;
  double std_error = 0.0;  // sample std / sqrt(R)
};

struct EnsembleCheckpoint {
  std::uint64_t t = 0;
  ScalarStat e, max_degree, multi_edge_vertices;
  double e_variance = 0.0;  // sample variance of e_t across replicas
  double eta_mean = std::numeric_limits<double>::quiet_NaN();
  std::map<std::uint64_t, ScalarStat> dk;  // D_k(t)/t across replicas
};

struct EnsembleSummary {
  HardCopyParams params;  // params.seed is the master seed
  std::uint64_t replicas = 0;
  bool complete = true;  // false when some replicas stopped early
  std::vector<std::uint64_t> replica_seeds;
  std::vector<EnsembleCheckpoint> checkpoints;
};

/// R independent replicas of evolve(), replica r seeded with
/// derive_seed(params.seed, r). Replicas run on up to `threads` workers
/// (0 = hardware concurrency); the reduction always walks replicas in index
/// order, so the summary is byte-identical regardless of scheduling.
inline EnsembleSummary run_ensemble(const HardCopyParams& p, std::uint64_t R,
                                    std::span<const std::uint64_t> checkpoints,
                                    unsigned threads = 0) {
  validate_hard_copy(p);
  if (R < 2) throw std::invalid_argument("run_ensemble: need at least 2 replicas");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = unsigned(std::min<std::uint64_t>(threads, R));

  EnsembleSummary out;
  out.params = p;
  out.replica_seeds.resize(R);
  for (std::uint64_t r = 0; r < R; ++r) out.replica_seeds[r] = derive_seed(p.seed, r);

  std::vector<Trajectory> trajs(R);
  std::atomic<std::uint64_t> next{0};
  std::vector<std::exception_ptr> errors(threads);

  auto worker = [&](unsigned w) {
    try {
      for (;;) {
        const std::uint64_t r = next.fetch_add(1);
        if (r >= R) break;
        MultiGraph g(p.m);
        Rng rng(out.replica_seeds[r]);
        trajs[r] = evolve(g, p, rng, checkpoints);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(worker, w);
  worker(0);
  for (auto& th : pool) th.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);

  std::uint64_t used = 0;
  for (const auto& tr : trajs)
    if (tr.complete) ++used;
  out.complete = used == R;
  out.replicas = used;
  if (used < 2)
    throw std::runtime_error("run_ensemble: fewer than 2 replicas completed");

  const double mu_v =
      p.alpha > 0.5 ? mu(p.alpha, p.m) : std::numeric_limits<double>::quiet_NaN();
  const double n = double(used);
  struct Acc {
    double s = 0.0, ss = 0.0;
  };
  auto finish = [n](const Acc& a) {
    ScalarStat st;
    st.mean = a.s / n;
    const double var = std::max(0.0, (a.ss - n * st.mean * st.mean) / (n - 1.0));
    st.std_error = std::sqrt(var / n);
    return st;
  };

  out.checkpoints.resize(checkpoints.size());
  for (std::size_t ci = 0; ci < checkpoints.size(); ++ci) {
    Acc ae, amax, ax;
    std::map<std::uint64_t, Acc> adk;
    for (std::uint64_t r = 0; r < R; ++r) {
      if (!trajs[r].complete) continue;
      const TrajectoryPoint& pt = trajs[r].points[ci];
      ae.s += double(pt.e);
      ae.ss += double(pt.e) * double(pt.e);
      amax.s += double(pt.max_degree);
      amax.ss += double(pt.max_degree) * double(pt.max_degree);
      ax.s += double(pt.multi_edge_vertices);
      ax.ss += double(pt.multi_edge_vertices) * double(pt.multi_edge_vertices);
      for (const auto& [k, c] : pt.degree_hist) {
        const double x = double(c) / double(pt.t);
        auto& a = adk[k];
        a.s += x;
        a.ss += x * x;
      }
    }
    EnsembleCheckpoint& cp = out.checkpoints[ci];
    cp.t = checkpoints[ci];
    cp.e = finish(ae);
    cp.max_degree = finish(amax);
    cp.multi_edge_vertices = finish(ax);
    cp.e_variance = std::max(0.0, (ae.ss - n * cp.e.mean * cp.e.mean) / (n - 1.0));
    if (!std::isnan(mu_v)) cp.eta_mean = cp.e.mean - mu_v * double(cp.t);
    for (const auto& [k, a] : adk) cp.dk[k] = finish(a);
  }
  return out;
}

}  // namespace hardcopy
