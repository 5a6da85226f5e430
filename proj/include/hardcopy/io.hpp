#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "hardcopy/analytic.hpp"
#include "hardcopy/ensemble.hpp"
#include "hardcopy/multigraph.hpp"
#include "hardcopy/oracle.hpp"
#include "hardcopy/process.hpp"
#include "hardcopy/statistics.hpp"

namespace hardcopy {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// 12 significant digits, the serialization width of every data file.
inline std::string g12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline void write_degrees_csv(std::ostream& os, const DegreeHistogram& hist) {
  os << "k,count,fraction\n";
  for (const auto& [k, c] : hist.counts)
    os << k << ',' << c << ',' << g12(double(c) / double(hist.t)) << '\n';
}

inline void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << "t,e,max_degree,multi_edge_vertices,eta\n";
  for (const TrajectoryPoint& pt : traj.points)
    os << pt.t << ',' << pt.e << ',' << pt.max_degree << ','
       << pt.multi_edge_vertices << ',' << g12(pt.eta) << '\n';
}

inline void write_dk_theory_csv(std::ostream& os, const TheoreticalSequence& seq) {
  os << "k,d_k\n";
  for (std::uint64_t k = seq.m; k <= seq.k_max(); ++k)
    os << k << ',' << g12(seq.d[k]) << '\n';
}

inline void write_dk_empirical_csv(std::ostream& os, const EnsembleCheckpoint& cp) {
  os << "k,mean,stderr\n";
  for (const auto& [k, st] : cp.dk)
    os << k << ',' << g12(st.mean) << ',' << g12(st.std_error) << '\n';
}

inline void write_exact_csv(std::ostream& os, const ExactExpectations& exact) {
  os << "k,E_Dk\n";
  for (const auto& [k, v] : exact.E_Dk) os << k << ',' << g12(v) << '\n';
}

inline void write_edges_expected_csv(std::ostream& os, const EdgeGrowth& growth) {
  os << "t,E_e,eta\n";
  for (std::uint64_t t = 2; t < growth.expected_e.size(); ++t)
    os << t << ',' << g12(growth.expected_e[t]) << ',' << g12(growth.eta(t)) << '\n';
}

inline void write_compare_csv(std::ostream& os, const ComparisonTable& table) {
  os << "k,empirical,theory,stderr,z\n";
  for (const ComparisonRow& row : table.rows)
    os << row.k << ',' << g12(row.empirical) << ',' << g12(row.theory) << ','
       << g12(row.std_error) << ',' << g12(row.z) << '\n';
}

inline void write_edges_txt(std::ostream& os, const MultiGraph& g) {
  g.write_edge_list(os);
}

/// Opens for writing, throwing IoError on failure; used by the CLI so that
/// filesystem problems map onto their own exit code.
template <typename WriteFn>
void write_file(const std::filesystem::path& path, WriteFn&& fn) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  fn(os);
  os.flush();
  if (!os) throw IoError("write failed for " + path.string());
}

}  // namespace hardcopy
