#pragma once

#include <span>
#include <vector>

#include "lmg/matrix.hpp"

namespace lmg {

/// Eigenpairs of a real symmetric matrix.
///
/// Eigenvalues ascend; column j of `vectors` is the unit eigenvector of
/// `values[j]`. Each column is signed so that its largest-magnitude entry is
/// positive. Exactly equal eigenvalues keep the solver's original order.
struct Spectrum {
  std::vector<double> values;
  Matrix vectors;

  std::size_t size() const noexcept { return values.size(); }
};

struct EigenOptions {
  /// Implicit QL iterations allowed per eigenvalue.
  int max_iterations = 50;
  /// Off-diagonal convergence threshold relative to the neighbouring diagonal.
  double relative_tolerance = 1e-14;
};

/// Householder tridiagonalization followed by implicit-shift QL.
/// Throws EigensolverFailure when an eigenvalue does not converge within
/// the iteration cap or the input is not finite.
Spectrum eigendecompose(const SymmetricMatrix& h, const EigenOptions& options = {});

/// Eigenpairs of the symmetric tridiagonal matrix with the given diagonal and
/// off-diagonal (offdiag[i] couples rows i and i+1).
Spectrum tridiagonal_eigen(std::span<const double> diag, std::span<const double> offdiag,
                           const EigenOptions& options = {});

/// Half-open index ranges [first, last) of degenerate clusters in an
/// ascending eigenvalue list.
std::vector<std::pair<std::size_t, std::size_t>> degenerate_clusters(
    std::span<const double> ascending, double relative_tolerance = 1e-10);

}  // namespace lmg
