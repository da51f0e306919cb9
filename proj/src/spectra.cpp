#include "opsf/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <string>

#include "opsf/error.hpp"
#include "opsf/families.hpp"
#include "opsf/parallel.hpp"
#include "opsf/rational.hpp"
#include "opsf/tridiag.hpp"

namespace opsf {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kShards = 64;   // fixed shard count keeps merges scheduling-free
constexpr int kDenseCap = 64;

uint64_t splitmix64(uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Decorrelated starting state for the shard's own splitmix stream.
uint64_t stream_state(uint64_t seed, uint64_t shard) {
  uint64_t s = seed + shard * 0xD1B54A32D192ED03ULL;
  return splitmix64(s);
}

struct BitStream {
  uint64_t state;
  uint64_t word = 0;
  int left = 0;

  explicit BitStream(uint64_t s) : state(s) {}

  double next_sign() {
    if (left == 0) {
      word = splitmix64(state);
      left = 64;
    }
    const double v = (word & 1) ? 1.0 : -1.0;
    word >>= 1;
    --left;
    return v;
  }
};

int bin_index(double v, double lo, double hi, int bins) {
  if (!(v >= lo) || !(v <= hi)) return -1;
  int idx = static_cast<int>((v - lo) / (hi - lo) * bins);
  if (idx >= bins) idx = bins - 1;  // hi itself closes the last bin
  if (idx < 0) idx = 0;
  return idx;
}

std::vector<double> histogram_edges(double lo, double hi, int bins) {
  std::vector<double> edges(static_cast<size_t>(bins) + 1);
  for (int i = 0; i <= bins; ++i)
    edges[static_cast<size_t>(i)] = lo + (hi - lo) * i / bins;
  return edges;
}

std::vector<long long> spectrum_key(const std::vector<double>& eig) {
  std::vector<long long> key;
  key.reserve(eig.size());
  for (double v : eig) key.push_back(llround(v * 1e9));
  return key;
}

void fill_sign_matrix_from_bits(unsigned long long config, int n,
                                std::vector<double>& a) {
  int t = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double v = (config >> t) & 1ULL ? 1.0 : -1.0;
      a[static_cast<size_t>(i) * n + j] = v;
      a[static_cast<size_t>(j) * n + i] = v;
      ++t;
    }
}

}  // namespace

const char* edge_trend_name(EdgeTrend t) {
  switch (t) {
    case EdgeTrend::Bounded: return "bounded";
    case EdgeTrend::MinusInfinity: return "minus-infinity";
    case EdgeTrend::PlusInfinity: return "plus-infinity";
  }
  return "?";
}

std::vector<double> op_zeros(const RecurrencePair& rec, int n) {
  if (n < 1) fail(ErrorKind::DomainError, "zeros need n >= 1");
  return eigen_sym_tridiagonal(jacobi_matrix(rec, n));
}

SpectrumHistogram make_histogram(const std::vector<double>& values, double lo,
                                 double hi, int bins) {
  if (bins < 1) fail(ErrorKind::DomainError, "histogram needs bins >= 1");
  if (!(lo < hi)) fail(ErrorKind::DomainError, "histogram needs lo < hi");
  SpectrumHistogram h;
  h.edges = histogram_edges(lo, hi, bins);
  h.counts.assign(static_cast<size_t>(bins), 0);
  for (double v : values) {
    ++h.total;
    const int idx = bin_index(v, lo, hi, bins);
    if (idx >= 0) ++h.counts[static_cast<size_t>(idx)];
  }
  return h;
}

namespace {

EdgeTrend classify_trend(const std::vector<double>& extremes) {
  if (extremes.size() < 2) return EdgeTrend::Bounded;
  const double first = extremes[1] - extremes[0];
  const double last = extremes[extremes.size() - 1] - extremes[extremes.size() - 2];
  if (std::fabs(last) <= 0.5 * std::fabs(first) + 1e-12)
    return EdgeTrend::Bounded;
  return last < 0 ? EdgeTrend::MinusInfinity : EdgeTrend::PlusInfinity;
}

}  // namespace

SpectrumTrendReport blumenthal_experiment(const RecurrencePair& rec,
                                          const std::vector<int>& sizes,
                                          int tracked) {
  if (sizes.empty()) fail(ErrorKind::DomainError, "need at least one size");
  if (tracked < 1) fail(ErrorKind::DomainError, "tracked must be >= 1");
  for (size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) fail(ErrorKind::DomainError, "sizes must be >= 1");
    if (i > 0 && sizes[i] <= sizes[i - 1])
      fail(ErrorKind::DomainError, "sizes must be strictly increasing");
  }

  SpectrumTrendReport rep;
  rep.source = rec.source;
  rep.points.resize(sizes.size());
  parallel_for(sizes.size(), [&](size_t i) {
    const int n = sizes[i];
    const std::vector<double> zeros = op_zeros(rec, n);
    TrendPoint& p = rep.points[i];
    p.size = n;
    p.lowest = zeros.front();
    p.highest = zeros.back();
    const int k = std::min(tracked, n);
    p.lower_zeros.assign(zeros.begin(), zeros.begin() + k);
    p.upper_zeros.assign(zeros.end() - k, zeros.end());
  });

  const int max_size = sizes.back();
  const long long ratio_len =
      std::min<long long>({2LL * max_size, 400LL, rec.max_index});
  for (long long n = 0; n < ratio_len; ++n) {
    const Rational an = rec.a(static_cast<int>(n));
    const Rational an1 = rec.a(static_cast<int>(n) + 1);
    const Rational bn1 = rec.b(static_cast<int>(n) + 1);
    RatioPoint pt;
    pt.n = static_cast<int>(n);
    if (an != 0 && an1 != 0) {
      pt.defined = true;
      pt.value = to_double(bn1 / (an * an1));
    }
    rep.ratios.push_back(pt);
  }
  const size_t window = std::min<size_t>(8, rep.ratios.size());
  if (window >= 2) {
    bool ok = true;
    double spread = 0.0;
    const double last = rep.ratios.back().value;
    for (size_t i = rep.ratios.size() - window; i < rep.ratios.size(); ++i) {
      if (!rep.ratios[i].defined) {
        ok = false;
        break;
      }
      spread = std::max(spread, std::fabs(rep.ratios[i].value - last));
    }
    if (ok && spread <= 1e-4 * (1.0 + std::fabs(last))) {
      rep.ratio_has_limit = true;
      rep.ratio_estimate = last;
    }
  }

  const long long n1 = std::min<long long>(4LL * max_size, rec.max_index);
  const long long n2 = std::min<long long>(8LL * max_size, rec.max_index);
  if (n2 > n1) {
    const double a1 = to_double(rec.a(static_cast<int>(n1)));
    const double a2 = to_double(rec.a(static_cast<int>(n2)));
    const double b1 = to_double(rec.b(static_cast<int>(n1)));
    const double b2 = to_double(rec.b(static_cast<int>(n2)));
    if (std::fabs(a2 - a1) <= 1e-3 * (1.0 + std::fabs(a2)) &&
        std::fabs(b2 - b1) <= 1e-3 * (1.0 + std::fabs(b2)) && b2 >= 0.0) {
      rep.coefficients_bounded = true;
      rep.c_limit = a2;
      rep.lambda_limit = b2;
      const double root = 2.0 * std::sqrt(b2);
      rep.sigma_standard = a2 - root;
      rep.tau_standard = a2 + root;
      rep.sigma_halved = 0.5 * rep.sigma_standard;
      rep.tau_halved = 0.5 * rep.tau_standard;
    }
  }

  rep.sigma_hat = rep.points.back().lowest;
  rep.tau_hat = rep.points.back().highest;
  std::vector<double> lows, highs;
  for (const TrendPoint& p : rep.points) {
    lows.push_back(p.lowest);
    highs.push_back(p.highest);
  }
  rep.lower_trend = classify_trend(lows);
  rep.upper_trend = classify_trend(highs);
  return rep;
}

BernoulliExhaustiveReport bernoulli_exhaustive(int n, int max_spectra) {
  if (n < 1) fail(ErrorKind::DomainError, "matrix size must be >= 1");
  if (n > 6)
    fail(ErrorKind::SizeTooLarge,
         "exhaustive enumeration is capped at size 6 (2^21 matrices)");
  if (max_spectra < 1) fail(ErrorKind::DomainError, "max_spectra must be >= 1");

  const int m = n * (n + 1) / 2;
  const unsigned long long total = 1ULL << m;
  const int bins = 8 * n;
  const double lo = -static_cast<double>(n);
  const double hi = static_cast<double>(n);

  struct Shard {
    std::vector<long long> counts;
    std::map<std::vector<long long>, long long> spectra;
    double max_residual = 0.0;
  };
  std::vector<Shard> shards(kShards);

  parallel_for(kShards, [&](size_t s) {
    Shard& sh = shards[s];
    sh.counts.assign(static_cast<size_t>(bins), 0);
    const unsigned long long begin = total * s / kShards;
    const unsigned long long end = total * (s + 1) / kShards;
    std::vector<double> a(static_cast<size_t>(n) * n);
    for (unsigned long long config = begin; config < end; ++config) {
      fill_sign_matrix_from_bits(config, n, a);
      const std::vector<double> eig = eigen_dense_symmetric(a, n);
      double trace = 0.0, sum = 0.0;
      for (int i = 0; i < n; ++i) trace += a[static_cast<size_t>(i) * n + i];
      for (double v : eig) sum += v;
      sh.max_residual = std::max(sh.max_residual, std::fabs(sum - trace));
      for (double v : eig) {
        const int idx = bin_index(v, lo, hi, bins);
        if (idx >= 0) ++sh.counts[static_cast<size_t>(idx)];
      }
      ++sh.spectra[spectrum_key(eig)];
    }
  });

  BernoulliExhaustiveReport rep;
  rep.n = n;
  rep.matrix_count = static_cast<long long>(total);
  rep.histogram.edges = histogram_edges(lo, hi, bins);
  rep.histogram.counts.assign(static_cast<size_t>(bins), 0);
  rep.histogram.total = static_cast<long long>(total) * n;
  std::map<std::vector<long long>, long long> merged;
  for (const Shard& sh : shards) {
    for (int i = 0; i < bins; ++i)
      rep.histogram.counts[static_cast<size_t>(i)] += sh.counts[static_cast<size_t>(i)];
    for (const auto& [key, count] : sh.spectra) merged[key] += count;
    rep.max_trace_residual = std::max(rep.max_trace_residual, sh.max_residual);
  }

  rep.distinct_count = static_cast<long long>(merged.size());
  for (const auto& [key, count] : merged) {
    DistinctSpectrum d;
    d.count = count;
    for (long long k : key) d.eigenvalues.push_back(static_cast<double>(k) / 1e9);
    rep.spectra.push_back(std::move(d));
  }
  std::stable_sort(rep.spectra.begin(), rep.spectra.end(),
                   [](const DistinctSpectrum& x, const DistinctSpectrum& y) {
                     return x.count > y.count;
                   });
  if (static_cast<int>(rep.spectra.size()) > max_spectra)
    rep.spectra.resize(static_cast<size_t>(max_spectra));
  return rep;
}

double semicircle_cdf(double x) {
  if (x <= -2.0) return 0.0;
  if (x >= 2.0) return 1.0;
  return 0.5 + x * std::sqrt(4.0 - x * x) / (4.0 * kPi) +
         std::asin(0.5 * x) / kPi;
}

BernoulliMonteCarloReport bernoulli_montecarlo(int n, long long samples,
                                               uint64_t seed) {
  if (n < 1) fail(ErrorKind::DomainError, "matrix size must be >= 1");
  if (n > kDenseCap)
    fail(ErrorKind::SizeTooLarge, "dense reduction is capped at size 64");
  if (samples < 1) fail(ErrorKind::DomainError, "need at least one sample");

  std::vector<std::vector<double>> shard_values(kShards);
  parallel_for(kShards, [&](size_t s) {
    const long long begin = samples * static_cast<long long>(s) / kShards;
    const long long end = samples * (static_cast<long long>(s) + 1) / kShards;
    if (end <= begin) return;
    BitStream rng(stream_state(seed, s));
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<double> a(static_cast<size_t>(n) * n);
    std::vector<double>& out = shard_values[s];
    out.reserve(static_cast<size_t>(end - begin) * n);
    for (long long t = begin; t < end; ++t) {
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          const double v = rng.next_sign();
          a[static_cast<size_t>(i) * n + j] = v;
          a[static_cast<size_t>(j) * n + i] = v;
        }
      for (double v : eigen_dense_symmetric(a, n)) out.push_back(v * scale);
    }
  });

  std::vector<double> values;
  values.reserve(static_cast<size_t>(samples) * n);
  for (const auto& sv : shard_values)
    values.insert(values.end(), sv.begin(), sv.end());

  BernoulliMonteCarloReport rep;
  rep.n = n;
  rep.samples = samples;
  rep.seed = seed;
  rep.esd = make_histogram(values, -2.5, 2.5, 100);

  std::sort(values.begin(), values.end());
  const double count = static_cast<double>(values.size());
  double ks = 0.0;
  for (size_t i = 0; i < values.size(); ++i) {
    const double f = semicircle_cdf(values[i]);
    ks = std::max(ks, std::fabs(f - static_cast<double>(i) / count));
    ks = std::max(ks, std::fabs(static_cast<double>(i + 1) / count - f));
  }
  rep.ks_distance = ks;
  return rep;
}

}  // namespace opsf
