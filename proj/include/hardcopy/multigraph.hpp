#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hardcopy {

// Vertex ids are 1-based and assigned in creation order; v1, v2 are the seed pair.
using VertexId = std::uint32_t;

// Outcome of one growth step.
struct StepDelta {
  enum class Kind { NewVertex, Copy };
  Kind kind = Kind::NewVertex;
  std::vector<VertexId> neighbors;  // NewVertex: the m sampled endpoints, in draw order
  VertexId target = 0;              // Copy: the cloned vertex
  std::uint64_t edges_added = 0;    // NewVertex: m; Copy: degree(target) at copy time
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Undirected multigraph grown one vertex per step.
///
/// A flat endpoint list (each edge contributes both endpoints) makes
/// degree-proportional sampling a single uniform array draw. Parallel edges
/// are kept as per-pair multiplicities; self-loops cannot arise. Every vertex
/// records its mother (0 for originals) and the original root of its copy
/// lineage, so descendant counts are O(1).
class MultiGraph {
 public:
  /// Seed graph: v1 and v2 joined by 2m parallel edges.
  explicit MultiGraph(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("MultiGraph: m must be >= 1");
    if (m > (1ull << 30)) throw std::invalid_argument("MultiGraph: m too large");
    m_ = m;
    push_vertex(0);
    push_vertex(0);
    add_parallel_edges(1, 2, 2 * m);
  }

  std::uint64_t m() const { return m_; }
  std::uint64_t vertex_count() const { return degree_.size(); }  // == t
  std::uint64_t edge_count() const { return edges_; }
  std::uint64_t degree(VertexId v) const { return degree_[index(v)]; }
  std::uint64_t max_degree() const { return max_degree_; }

  /// Number of vertices incident to at least one parallel pair (|Z_t|).
  std::uint64_t multi_edge_vertex_count() const { return multi_edge_vertices_; }

  /// Flat list where vertex w appears exactly degree(w) times.
  const std::vector<VertexId>& endpoint_list() const { return endpoints_; }

  bool is_original(VertexId v) const { return mother_[index(v)] == 0; }
  VertexId mother(VertexId v) const { return mother_[index(v)]; }
  VertexId family_root(VertexId v) const { return root_[index(v)]; }

  std::uint64_t multiplicity(VertexId u, VertexId v) const {
    const std::size_t iu = index(u), iv = index(v);
    if (u == v) return 0;
    const bool scan_u = adj_[iu].size() <= adj_[iv].size();
    const auto& list = scan_u ? adj_[iu] : adj_[iv];
    const VertexId other = scan_u ? v : u;
    for (const auto& [w, c] : list)
      if (w == other) return c;
    return 0;
  }

  /// Size of v's descendant family, v included. v must be original.
  std::uint64_t descendant_count(VertexId v) const {
    if (!is_original(v))
      throw std::invalid_argument("descendant_count: vertex is not original");
    return family_size_[index(v)];
  }

  /// Append a vertex attached by one edge to each listed neighbor (repeats
  /// accumulate multiplicity). The list length must equal m.
  VertexId add_vertex_with_edges(std::span<const VertexId> neighbors) {
    if (neighbors.size() != m_)
      throw std::invalid_argument("add_vertex_with_edges: need exactly m neighbors");
    const std::uint64_t t = vertex_count();
    for (VertexId w : neighbors)
      if (w == 0 || w > t) throw std::out_of_range("add_vertex_with_edges: neighbor id out of range");
    const VertexId v = push_vertex(0);
    for (VertexId w : neighbors) add_parallel_edges(v, w, 1);
    return v;
  }

  /// Append a clone of target: the daughter inherits every neighbor with its
  /// multiplicity, so its birth degree equals degree(target). No edge is
  /// added between daughter and mother.
  VertexId copy_vertex(VertexId target) {
    const std::size_t it = index(target);
    const VertexId v = push_vertex(target);
    // add_parallel_edges only appends to the daughter's and the neighbors'
    // lists, so iterating the mother's list directly is safe.
    const auto& src = adj_[it];
    for (const auto& [w, c] : src) add_parallel_edges(v, w, c);
    return v;
  }

  /// Text export: "# t=<t> e=<e> m=<m>" then "u v multiplicity" with u<v,
  /// ascending by (u,v).
  void write_edge_list(std::ostream& os) const {
    os << "# t=" << vertex_count() << " e=" << edges_ << " m=" << m_ << "\n";
    std::vector<std::pair<VertexId, std::uint32_t>> row;
    for (VertexId u = 1; u <= vertex_count(); ++u) {
      row.clear();
      for (const auto& [w, c] : adj_[u - 1])
        if (w > u) row.emplace_back(w, c);
      std::sort(row.begin(), row.end());
      for (const auto& [w, c] : row) os << u << ' ' << w << ' ' << c << '\n';
    }
  }

  /// Full structural check; every violated invariant yields one message.
  ValidationReport validate() const {
    ValidationReport r;
    auto fail = [&r](std::string msg) { r.violations.push_back(std::move(msg)); };
    const std::uint64_t t = vertex_count();

    std::uint64_t degsum = 0;
    for (std::uint64_t d : degree_) degsum += d;
    if (degsum != 2 * edges_) fail("sum of degrees != 2e");
    if (edges_ < m_ * t) fail("e < m*t");
    if (endpoints_.size() != 2 * edges_) fail("endpoint list length != 2e");

    std::vector<std::uint64_t> occ(t, 0);
    bool ids_ok = true;
    for (VertexId w : endpoints_) {
      if (w == 0 || w > t) {
        fail("endpoint list holds an out-of-range id");
        ids_ok = false;
        break;
      }
      ++occ[w - 1];
    }
    if (ids_ok)
      for (std::uint64_t i = 0; i < t; ++i)
        if (occ[i] != degree_[i]) {
          fail("endpoint multiplicity != degree for v" + std::to_string(i + 1));
          break;
        }

    std::uint64_t real_max = 0, real_multi = 0;
    for (std::uint64_t i = 0; i < t; ++i) {
      const VertexId v = VertexId(i + 1);
      std::uint64_t s = 0;
      bool parallel = false;
      for (const auto& [w, c] : adj_[i]) {
        if (w == v) fail("self-loop at v" + std::to_string(v));
        if (c == 0) fail("zero multiplicity entry at v" + std::to_string(v));
        if (c > 2 * m_) fail("multiplicity above 2m at v" + std::to_string(v));
        if (multiplicity(w, v) != c) fail("asymmetric multiplicity for (" + std::to_string(v) + "," + std::to_string(w) + ")");
        if (c >= 2) parallel = true;
        s += c;
      }
      if (s != degree_[i]) fail("adjacency multiplicities do not sum to degree at v" + std::to_string(v));
      if (degree_[i] < m_) fail("degree below m at v" + std::to_string(v));
      real_max = std::max(real_max, degree_[i]);
      if (parallel) ++real_multi;
      if (parallel != (multi_partners_[i] > 0)) fail("stale multi-edge partner count at v" + std::to_string(v));
    }
    if (real_max != max_degree_) fail("cached max degree is stale");
    if (real_multi != multi_edge_vertices_) fail("cached multi-edge vertex count is stale");

    std::vector<std::uint64_t> fam(t, 0);
    std::uint64_t family_total = 0;
    for (std::uint64_t i = 0; i < t; ++i) {
      const VertexId v = VertexId(i + 1);
      const VertexId root = root_[i];
      if (mother_[i] == 0) {
        if (root != v) fail("original vertex with foreign family root");
      } else {
        if (mother_[i] >= v) fail("mother id not older than daughter");
        if (root != root_[mother_[i] - 1]) fail("family root differs from mother's");
        if (mother_[root - 1] != 0) fail("family root is not original");
      }
      ++fam[root - 1];
    }
    for (std::uint64_t i = 0; i < t; ++i) {
      if (mother_[i] == 0) {
        family_total += family_size_[i];
        if (fam[i] != family_size_[i]) fail("cached family size is stale for v" + std::to_string(i + 1));
      }
    }
    if (family_total != t) fail("families do not partition the vertex set");
    return r;
  }

 private:
  std::size_t index(VertexId v) const {
    if (v == 0 || v > vertex_count()) throw std::out_of_range("vertex id out of range");
    return v - 1;
  }

  VertexId push_vertex(VertexId mother) {
    const VertexId v = VertexId(degree_.size() + 1);
    degree_.push_back(0);
    adj_.emplace_back();
    mother_.push_back(mother);
    multi_partners_.push_back(0);
    if (mother == 0) {
      root_.push_back(v);
      family_size_.push_back(1);
    } else {
      const VertexId r = root_[mother - 1];
      root_.push_back(r);
      family_size_.push_back(0);
      ++family_size_[r - 1];
    }
    return v;
  }

  // Adds c to the (i -> w) entry, returns the previous multiplicity.
  std::uint32_t bump(std::size_t i, VertexId w, std::uint64_t c) {
    for (auto& [n, mult] : adj_[i])
      if (n == w) {
        const std::uint32_t old = mult;
        mult += std::uint32_t(c);
        return old;
      }
    adj_[i].emplace_back(w, std::uint32_t(c));
    return 0;
  }

  void mark_parallel(std::size_t i) {
    if (multi_partners_[i]++ == 0) ++multi_edge_vertices_;
  }

  // c parallel u-v edges; callers guarantee u != v.
  void add_parallel_edges(VertexId u, VertexId v, std::uint64_t c) {
    const std::size_t iu = u - 1, iv = v - 1;
    const std::uint32_t before = bump(iu, v, c);
    bump(iv, u, c);
    if (before < 2 && before + c >= 2) {
      mark_parallel(iu);
      mark_parallel(iv);
    }
    degree_[iu] += c;
    degree_[iv] += c;
    edges_ += c;
    max_degree_ = std::max({max_degree_, degree_[iu], degree_[iv]});
    for (std::uint64_t i = 0; i < c; ++i) {
      endpoints_.push_back(u);
      endpoints_.push_back(v);
    }
  }

  std::uint64_t m_ = 1;
  std::uint64_t edges_ = 0;
  std::uint64_t max_degree_ = 0;
  std::uint64_t multi_edge_vertices_ = 0;
  std::vector<std::uint64_t> degree_;
  std::vector<std::vector<std::pair<VertexId, std::uint32_t>>> adj_;  // neighbor -> multiplicity
  std::vector<VertexId> endpoints_;
  std::vector<VertexId> mother_;  // 0 = original
  std::vector<VertexId> root_;
  std::vector<std::uint32_t> multi_partners_;  // neighbors sharing a parallel pair
  std::vector<std::uint64_t> family_size_;     // meaningful for originals only
};

}  // namespace hardcopy
