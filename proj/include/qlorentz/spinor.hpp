#pragma once

// Two-component spinor calculus with the deformed Levi-Civita metric.
//
// Index convention: for T = [[a, b], [c, d]], T^A_B is the entry in row A,
// column B, and T_A^B is the entry of the transpose. The default spinor
// transformation is the right action xi'^C = xi^A T_A^C (row vector times
// T); the left action xi'^C = T^C_A xi^A is available as an option.

#include <array>
#include <stdexcept>

#include "qlorentz/matrix.hpp"

namespace qlorentz {

/// eps_AB = [[0, q^{-1/2}], [-q^{1/2}, 0]]
LMatrix eps_covariant();
/// eps^AB = [[0, q^{1/2}], [-q^{-1/2}, 0]]
LMatrix eps_contravariant();

/// Metric pair used by the spinor operations; overridable for mutation runs.
struct Metric {
  LMatrix lower = eps_covariant();
  LMatrix upper = eps_contravariant();
  /// Metric of the conjugate copy: the q -> q^{-1} image of `lower`.
  LMatrix conjugate_lower() const;
  LMatrix conjugate_upper() const;
};

class DeterminantMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Delta extracted from M^t eps M = eps Delta, cross-checked against
/// M eps M^t = eps Delta. Throws DeterminantMismatch when the extractions
/// disagree. Numeric matrices skip the cross-check and use M^t eps M.
NCPoly q_det(const NCMatrix& m, const LMatrix& eps = eps_covariant());
/// M00 M11 - q M01 M10 in the given entry order.
NCPoly q_det_formula(const NCMatrix& m);

/// [[d, -q^{-1} b], [-q c, a]]
NCMatrix antipode(const NCMatrix& t);
/// -eps T eps, the inverse of T^t over SL_q(2).
NCMatrix transpose_inverse(const NCMatrix& t, const LMatrix& eps = eps_covariant());
/// Entrywise conjugate generator, no transpose.
NCMatrix bar(const NCMatrix& t);

enum class Variance { Upper, Lower };
enum class TransformMode { Contravariant, Covariant, Conjugate };
enum class Action { Right, Left };

struct SpinorExpr {
  std::array<NCPoly, 2> components;
  Variance variance = Variance::Upper;
  bool dotted = false;

  /// Spinor whose components are the named generators.
  static SpinorExpr named(const AlgebraPtr& alg, std::string_view first, std::string_view second,
                          Variance variance = Variance::Upper, bool dotted = false);
  friend bool operator==(const SpinorExpr& x, const SpinorExpr& y) {
    return x.components == y.components && x.variance == y.variance && x.dotted == y.dotted;
  }
};

/// xi_B = xi^A eps_AB, or the tilde form chi~_A = eps_AB chi^B.
SpinorExpr lower_index(const SpinorExpr& x, bool tilde = false, const Metric& metric = {});
/// xi^B = eps^BA xi_A, or the tilde inverse chi^C = chi~_A eps^AC.
SpinorExpr raise_index(const SpinorExpr& x, bool tilde = false, const Metric& metric = {});

/// xi^A eps_AB chi^B, normal-ordered.
NCPoly invariant_form(const SpinorExpr& xi, const SpinorExpr& chi, const LMatrix& eps = eps_covariant());

/// Factor k in xi^1 chi^2 = k xi^2 chi^1 obtained by setting the invariant
/// form to zero; q for the undeformed metric.
Laurent form_commutation_factor(const LMatrix& eps = eps_covariant());

/// Applies T. Contravariant mode needs an undotted upper spinor, covariant
/// mode an undotted lower one (transformed by (T^t)^{-1} = -eps T eps), and
/// conjugate mode a dotted spinor (same rules with T-bar and the conjugate
/// metric). Throws std::invalid_argument on a mismatch.
SpinorExpr transform(const SpinorExpr& x, const NCMatrix& t, TransformMode mode, Action action = Action::Right,
                     const Metric& metric = {});

}  // namespace qlorentz
