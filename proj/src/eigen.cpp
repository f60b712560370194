#include "lmg/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lmg/errors.hpp"

namespace lmg {
namespace {

// Householder reduction of a (overwritten with the accumulated orthogonal
// transform). On return d holds the diagonal and e[i] couples rows i-1 and i.
void householder_tridiagonalize(Matrix& a, std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = a.rows();
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (std::size_t k = 0; k <= l; ++k) scale += std::abs(a(i, k));
      if (scale == 0.0) {
        e[i] = a(i, l);
      } else {
        for (std::size_t k = 0; k <= l; ++k) {
          a(i, k) /= scale;
          h += a(i, k) * a(i, k);
        }
        double f = a(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        a(i, l) = f - g;
        f = 0.0;
        for (std::size_t j = 0; j <= l; ++j) {
          a(j, i) = a(i, j) / h;
          g = 0.0;
          for (std::size_t k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
          for (std::size_t k = j + 1; k <= l; ++k) g += a(k, j) * a(i, k);
          e[j] = g / h;
          f += e[j] * a(i, j);
        }
        const double hh = f / (h + h);
        for (std::size_t j = 0; j <= l; ++j) {
          f = a(i, j);
          g = e[j] - hh * f;
          e[j] = g;
          for (std::size_t k = 0; k <= j; ++k) a(j, k) -= f * e[k] + g * a(i, k);
        }
      }
    } else {
      e[i] = a(i, l);
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i] != 0.0) {
      for (std::size_t j = 0; j < i; ++j) {
        double g = 0.0;
        for (std::size_t k = 0; k < i; ++k) g += a(i, k) * a(k, j);
        for (std::size_t k = 0; k < i; ++k) a(k, j) -= g * a(k, i);
      }
    }
    d[i] = a(i, i);
    a(i, i) = 1.0;
    for (std::size_t j = 0; j < i; ++j) a(j, i) = a(i, j) = 0.0;
  }
}

// Implicit QL with Wilkinson-type shift. e[i] couples i and i+1 on entry.
// Rotations are accumulated into the columns of z.
void implicit_ql(std::vector<double>& d, std::vector<double>& e, Matrix& z,
                 const EigenOptions& opt) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return;
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (e[m] == 0.0 || std::abs(e[m]) <= opt.relative_tolerance * dd) break;
      }
      if (m != l) {
        if (iter++ >= opt.max_iterations)
          throw EigensolverFailure("implicit QL did not converge for eigenvalue " +
                                   std::to_string(l) + " within " +
                                   std::to_string(opt.max_iterations) + " iterations");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (std::size_t k = 0; k < z.rows(); ++k) {
            f = z(k, i + 1);
            z(k, i + 1) = s * z(k, i) + c * f;
            z(k, i) = c * z(k, i) - s * f;
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

Spectrum finalize(std::vector<double> d, const Matrix& z) {
  const std::size_t n = d.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  Spectrum out;
  out.values.resize(n);
  for (std::size_t j = 0; j < n; ++j) out.values[j] = d[order[j]];

  out.vectors = Matrix(z.rows(), n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    std::size_t arg = 0;
    for (std::size_t k = 1; k < z.rows(); ++k)
      if (std::abs(z(k, src)) > std::abs(z(arg, src))) arg = k;
    const double sign = z(arg, src) < 0.0 ? -1.0 : 1.0;
    for (std::size_t k = 0; k < z.rows(); ++k) out.vectors(k, j) = sign * z(k, src);
  }
  return out;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> degenerate_clusters(
    std::span<const double> ascending, double relative_tolerance) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  double scale = 0.0;
  for (double v : ascending) scale = std::max(scale, std::abs(v));
  const double tol = relative_tolerance * scale;
  std::size_t first = 0;
  for (std::size_t j = 1; j <= ascending.size(); ++j) {
    if (j == ascending.size() || ascending[j] - ascending[j - 1] > tol) {
      if (j - first > 1) out.emplace_back(first, j);
      first = j;
    }
  }
  return out;
}

Spectrum eigendecompose(const SymmetricMatrix& h, const EigenOptions& options) {
  const std::size_t n = h.order();
  if (n == 0) return {};
  for (double v : h.dense().data())
    if (!std::isfinite(v)) throw EigensolverFailure("matrix has non-finite entries");
  Matrix a = h.dense();
  std::vector<double> d, e;
  householder_tridiagonalize(a, d, e);
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  implicit_ql(d, e, a, options);
  return finalize(std::move(d), a);
}

Spectrum tridiagonal_eigen(std::span<const double> diag, std::span<const double> offdiag,
                           const EigenOptions& options) {
  const std::size_t n = diag.size();
  if (n == 0) return {};
  if (offdiag.size() + 1 != n) throw DimensionError("off-diagonal must have n-1 entries");
  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(n, 0.0);
  std::copy(offdiag.begin(), offdiag.end(), e.begin());
  for (double v : d)
    if (!std::isfinite(v)) throw EigensolverFailure("matrix has non-finite entries");
  for (double v : e)
    if (!std::isfinite(v)) throw EigensolverFailure("matrix has non-finite entries");
  Matrix z = Matrix::identity(n);
  implicit_ql(d, e, z, options);
  return finalize(std::move(d), z);
}

}  // namespace lmg
