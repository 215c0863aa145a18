#pragma once

// Sigma matrices, the deformed Minkowski metric and the vector
// representation.
//
// Conventions:
//   bar_sigma^m = eps^ * (sigma^m)^t * eps^t            (eps^ contravariant)
//   eta^{mn}    = 1/2 Tr(bar_sigma^m sigma^n)
//   eta_{mn}    = exact inverse of eta^{mn}
//   bar_sigma_n = sum_m eta_{nm} bar_sigma^m
//   sigma_b     = sum_c sigma^c eta_{cb}
//   x^a         = 1/2 Tr(bar_sigma^a X),   X = sum_b x^b sigma_b
//   T^a_b       = 1/2 Tr(bar_sigma^a T sigma_b T^dagger)

#include <array>
#include <stdexcept>

#include "qlorentz/matrix.hpp"
#include "qlorentz/spinor.hpp"

namespace qlorentz {

using SigmaArray = std::array<LMatrix, 4>;

/// (1, sigma^1, sigma^2, sigma^3)
SigmaArray pauli_sigma();
/// diag(q, q^-1), [[0,-1],[-1,0]], [[0,i],[-i,0]], diag(-q, q^-1)
SigmaArray reference_bar_sigma();
/// 4x4 metric with (q+q^-1)/2 and -(q+q^-1)/2 on the 0/3 diagonal,
/// (q-q^-1)/2 on both 0/3 off-diagonal entries and -1 at (1,1), (2,2).
LMatrix reference_eta_upper();

class SigmaMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SigmaSet {
  SigmaArray sigma;
  SigmaArray bar_sigma;
};

/// Raises both indices of the Pauli set with eps^. With check_reference set,
/// throws SigmaMismatch unless the result equals reference_bar_sigma().
SigmaSet build_bar_sigma(const Metric& metric = {}, bool check_reference = true);

/// 1/2 Tr(bar_sigma^m sigma^n)
LMatrix eta_upper(const SigmaSet& set);
/// Exact inverse; throws std::domain_error if it does not exist.
LMatrix eta_lower(const LMatrix& upper);

/// sum_m eta_{nm} bar_sigma^m
SigmaArray lowered_bar_sigma(const SigmaSet& set, const LMatrix& lower);
/// sum_c sigma^c eta_{cb}
SigmaArray lowered_sigma(const SigmaSet& set, const LMatrix& lower);

struct CompletenessReport {
  bool pass = false;
  /// Row (A, Xdot) -> 2A + Xdot, column (Ydot, B) -> 2Ydot + B of
  /// sum_n sigma^n_{A Xdot} bar_sigma_n^{Ydot B} - 2 delta delta.
  LMatrix residual = LMatrix(4, 4, Laurent());
};

CompletenessReport completeness_check(const SigmaSet& set, const LMatrix& lower);

std::array<NCPoly, 4> bispinor_to_vector(const NCMatrix& x, const SigmaSet& set);
NCMatrix vector_to_bispinor(const std::array<NCPoly, 4>& x, const SigmaSet& set, const LMatrix& lower);

/// T over an algebra carrying the conjugate copy; T^dagger = (T-bar)^t.
NCMatrix vector_rep(const NCMatrix& t, const SigmaSet& set, const LMatrix& lower);

struct DetWitness {
  /// reduce(det_q(T X T^dagger)) - det_q(X) for generic central X.
  NCPoly residual;
  NCPoly residual_at_one;
};

/// Uses the algebra "bispinor" (or a variant built from opts) with the
/// formula determinant M00 M11 - q M01 M10.
DetWitness detq_nonconservation_witness(const AlgebraPtr& bispinor_algebra);

}  // namespace qlorentz
