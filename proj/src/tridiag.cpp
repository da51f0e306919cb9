#include "opsf/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "opsf/error.hpp"

namespace opsf {

namespace {

double hypot2(double a, double b) { return std::hypot(a, b); }

}  // namespace

// Implicit QL with Wilkinson shift, after the EISPACK tql1 lineage.
std::vector<double> eigen_sym_tridiagonal(const TridiagonalMatrix& t) {
  const int n = t.size();
  std::vector<double> d = t.diag;
  std::vector<double> e(t.off);
  e.resize(static_cast<size_t>(std::max(n, 1)), 0.0);
  if (n == 0) return {};

  constexpr int kMaxIter = 50;
  const double eps = std::numeric_limits<double>::epsilon();

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    for (;;) {
      int m = l;
      while (m < n - 1) {
        const double scale = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= eps * scale) break;
        ++m;
      }
      if (m == l) break;
      if (++iter > kMaxIter)
        fail(ErrorKind::NoConvergence,
             "QL iteration cap reached at row " + std::to_string(l));

      // Wilkinson shift.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = hypot2(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = hypot2(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

TridiagonalMatrix householder_tridiagonalize(const std::vector<double>& a_in, int n) {
  std::vector<double> a = a_in;  // row-major, symmetric
  auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

  std::vector<double> d(static_cast<size_t>(n)), e(static_cast<size_t>(n), 0.0);
  for (int i = n - 1; i > 0; --i) {
    const int l = i - 1;
    double h = 0.0, scale = 0.0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::fabs(at(i, k));
      if (scale == 0.0) {
        e[i] = at(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          e[j] = g / h;
          f += e[j] * at(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = at(i, j);
          g = e[j] - hh * f;
          e[j] = g;
          for (int k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
        }
      }
    } else {
      e[i] = at(i, l);
    }
    d[i] = h;
  }
  for (int i = 0; i < n; ++i) d[i] = at(i, i);

  TridiagonalMatrix t;
  t.diag = std::move(d);
  t.off.resize(static_cast<size_t>(n) - 1);
  for (int i = 1; i < n; ++i) t.off[i - 1] = e[i];
  return t;
}

std::vector<double> eigen_dense_symmetric(const std::vector<double>& a, int n) {
  if (n == 1) return {a[0]};
  return eigen_sym_tridiagonal(householder_tridiagonalize(a, n));
}

}  // namespace opsf
