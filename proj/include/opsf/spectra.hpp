#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "opsf/ttr.hpp"

namespace opsf {

// Zeros of the monic P_n, ascending: eigenvalues of the n x n truncated
// Jacobi matrix.
std::vector<double> op_zeros(const RecurrencePair& rec, int n);

enum class EdgeTrend { Bounded, MinusInfinity, PlusInfinity };
const char* edge_trend_name(EdgeTrend t);

// b_{n+1} / (a_n a_{n+1}); undefined whenever the diagonal product vanishes.
struct RatioPoint {
  int n = 0;
  bool defined = false;
  double value = 0.0;
};

struct TrendPoint {
  int size = 0;
  double lowest = 0.0;
  double highest = 0.0;
  std::vector<double> lower_zeros;  // first few zeros, ascending
  std::vector<double> upper_zeros;  // last few zeros, ascending
};

struct SpectrumTrendReport {
  std::string source;
  std::vector<TrendPoint> points;  // one per requested size, ascending sizes

  std::vector<RatioPoint> ratios;
  bool ratio_has_limit = false;
  double ratio_estimate = 0.0;

  // set when a_n, b_n look numerically convergent; both edge formulas are
  // reported: the standard c -+ 2 sqrt(lambda) and the halved variant
  bool coefficients_bounded = false;
  double c_limit = 0.0;
  double lambda_limit = 0.0;
  double sigma_standard = 0.0;
  double tau_standard = 0.0;
  double sigma_halved = 0.0;
  double tau_halved = 0.0;

  double sigma_hat = 0.0;  // lowest zero at the largest size
  double tau_hat = 0.0;    // highest zero at the largest size
  EdgeTrend lower_trend = EdgeTrend::Bounded;
  EdgeTrend upper_trend = EdgeTrend::Bounded;
};

// Extreme-zero trends across the given sizes, the quarter-ratio diagnostic
// sequence, and edge estimates when the recurrence coefficients converge.
SpectrumTrendReport blumenthal_experiment(const RecurrencePair& rec,
                                          const std::vector<int>& sizes,
                                          int tracked = 3);

struct SpectrumHistogram {
  std::vector<double> edges;      // bin count + 1, ascending
  std::vector<long long> counts;  // per bin, [edge_i, edge_{i+1})
  long long total = 0;            // includes values outside the edge range
};

SpectrumHistogram make_histogram(const std::vector<double>& values, double lo,
                                 double hi, int bins);

struct DistinctSpectrum {
  std::vector<double> eigenvalues;  // rounded multiset key
  long long count = 0;
};

struct BernoulliExhaustiveReport {
  int n = 0;
  long long matrix_count = 0;  // 2^(n(n+1)/2)
  SpectrumHistogram histogram;  // all eigenvalues, unscaled
  long long distinct_count = 0;
  std::vector<DistinctSpectrum> spectra;  // by count desc, then key; capped
  double max_trace_residual = 0.0;        // max |sum of eigenvalues - trace|
};

// Enumerates every symmetric n x n sign matrix (n <= 6).
BernoulliExhaustiveReport bernoulli_exhaustive(int n, int max_spectra = 32);

struct BernoulliMonteCarloReport {
  int n = 0;
  long long samples = 0;
  uint64_t seed = 0;
  SpectrumHistogram esd;  // eigenvalues / sqrt(n)
  double ks_distance = 0.0;  // against the semicircle law on [-2, 2]
};

// Seeded sampling of symmetric sign matrices; reproducible for a fixed seed
// independent of worker count.
BernoulliMonteCarloReport bernoulli_montecarlo(int n, long long samples,
                                               uint64_t seed);

// Semicircle CDF: 1/2 + x sqrt(4-x^2)/(4 pi) + asin(x/2)/pi on [-2,2].
double semicircle_cdf(double x);

}  // namespace opsf
