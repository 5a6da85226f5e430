#pragma once

#include <gsl/gsl_cdf.h>

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "hardcopy/analytic.hpp"
#include "hardcopy/rng.hpp"

namespace testutil {

// Upper chi-square quantile for goodness-of-fit gates.
inline double chisq_quantile(double p, double df) { return gsl_cdf_chisq_Pinv(p, df); }

inline double chisq_stat(std::span<const std::uint64_t> observed,
                         std::span<const double> expected_prob, std::uint64_t n) {
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = expected_prob[i] * double(n);
    const double d = double(observed[i]) - e;
    stat += d * d / e;
  }
  return stat;
}

// Exact sampler for P(K = k) = k^-gamma / zeta(gamma, k_min), k >= k_min.
// Inverse CDF on a precomputed table, with a term-by-term extension for the
// (astronomically rare) draws beyond it. Test oracle only.
class PowerLawSampler {
 public:
  PowerLawSampler(double gamma, std::uint64_t k_min, std::size_t table = 100000)
      : gamma_(gamma), k_min_(k_min), z_(hardcopy::hurwitz_zeta(gamma, double(k_min))) {
    cdf_.reserve(table);
    double cum = 0.0;
    for (std::size_t i = 0; i < table; ++i) {
      cum += std::pow(double(k_min + i), -gamma_) / z_;
      cdf_.push_back(cum);
    }
  }

  std::uint64_t sample(hardcopy::Rng& rng) const {
    const double u = rng.canonical();
    if (u < cdf_.back()) {
      const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
      return k_min_ + std::uint64_t(it - cdf_.begin());
    }
    double cum = cdf_.back();
    std::uint64_t k = k_min_ + cdf_.size();
    for (;;) {
      const double term = std::pow(double(k), -gamma_) / z_;
      cum += term;
      if (u < cum || term < 1e-18) return k;
      ++k;
    }
  }

  std::map<std::uint64_t, std::uint64_t> histogram(hardcopy::Rng& rng,
                                                   std::uint64_t n) const {
    std::map<std::uint64_t, std::uint64_t> h;
    for (std::uint64_t i = 0; i < n; ++i) ++h[sample(rng)];
    return h;
  }

 private:
  double gamma_;
  std::uint64_t k_min_;
  double z_;
  std::vector<double> cdf_;
};

}  // namespace testutil
