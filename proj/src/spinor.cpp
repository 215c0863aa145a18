#include "qlorentz/spinor.hpp"

namespace qlorentz {

LMatrix eps_covariant() {
  return LMatrix(2, 2, {Laurent(), Laurent::monomial(-1), -Laurent::monomial(1), Laurent()});
}

LMatrix eps_contravariant() {
  return LMatrix(2, 2, {Laurent(), Laurent::monomial(1), -Laurent::monomial(-1), Laurent()});
}

LMatrix Metric::conjugate_lower() const {
  return lower.map([](const Laurent& x) { return x.invert_q(); });
}

LMatrix Metric::conjugate_upper() const {
  return upper.map([](const Laurent& x) { return x.invert_q(); });
}

namespace {

void require_2x2(const NCMatrix& m, const char* what) {
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument(std::string(what) + ": expected a 2x2 matrix");
}

// Delta candidates read off eps * Delta = P: off-diagonal quotients, and the
// diagonal that must vanish.
struct Extraction {
  NCPoly from_upper;
  NCPoly from_lower;
  bool diagonal_zero;
};

Extraction extract(const NCMatrix& p, const LMatrix& eps) {
  return {p(0, 1) * eps(0, 1).inverse_monomial(), p(1, 0) * eps(1, 0).inverse_monomial(),
          p(0, 0).is_zero() && p(1, 1).is_zero()};
}

}  // namespace

NCPoly q_det(const NCMatrix& m, const LMatrix& eps) {
  require_2x2(m, "q_det");
  const auto left = extract(m.transpose() * eps * m, eps);
  if (is_numeric(m)) return left.from_upper;
  const auto right = extract(m * eps * m.transpose(), eps);
  if (!left.diagonal_zero || !right.diagonal_zero || !(left.from_upper == left.from_lower) ||
      !(left.from_upper == right.from_upper) || !(right.from_upper == right.from_lower))
    throw DeterminantMismatch("q_det: M^t eps M and M eps M^t are not both proportional to eps with the same factor (" +
                              left.from_upper.to_string() + " vs " + right.from_upper.to_string() + ")");
  return left.from_upper;
}

NCPoly q_det_formula(const NCMatrix& m) {
  require_2x2(m, "q_det_formula");
  return m(0, 0) * m(1, 1) - Laurent::q() * (m(0, 1) * m(1, 0));
}

NCMatrix antipode(const NCMatrix& t) {
  require_2x2(t, "antipode");
  return NCMatrix(2, 2, {t(1, 1), -(Laurent::q_pow(-1) * t(0, 1)), -(Laurent::q() * t(1, 0)), t(0, 0)});
}

NCMatrix transpose_inverse(const NCMatrix& t, const LMatrix& eps) {
  require_2x2(t, "transpose_inverse");
  return -(eps * t * eps);
}

NCMatrix bar(const NCMatrix& t) {
  return t.map([](const NCPoly& p) { return star(p); });
}

SpinorExpr SpinorExpr::named(const AlgebraPtr& alg, std::string_view first, std::string_view second,
                             Variance variance, bool dotted) {
  return {{NCPoly::generator(alg, first), NCPoly::generator(alg, second)}, variance, dotted};
}

namespace {

// Row vector x times matrix m: y_B = sum_A x_A m(A, B).
std::array<NCPoly, 2> row_times(const std::array<NCPoly, 2>& x, const LMatrix& m) {
  return {m(0, 0) * x[0] + m(1, 0) * x[1], m(0, 1) * x[0] + m(1, 1) * x[1]};
}

// Matrix m times column x: y_A = sum_B m(A, B) x_B.
std::array<NCPoly, 2> times_column(const LMatrix& m, const std::array<NCPoly, 2>& x) {
  return {m(0, 0) * x[0] + m(0, 1) * x[1], m(1, 0) * x[0] + m(1, 1) * x[1]};
}

std::array<NCPoly, 2> row_times(const std::array<NCPoly, 2>& x, const NCMatrix& m) {
  return {x[0] * m(0, 0) + x[1] * m(1, 0), x[0] * m(0, 1) + x[1] * m(1, 1)};
}

std::array<NCPoly, 2> times_column(const NCMatrix& m, const std::array<NCPoly, 2>& x) {
  return {m(0, 0) * x[0] + m(0, 1) * x[1], m(1, 0) * x[0] + m(1, 1) * x[1]};
}

}  // namespace

SpinorExpr lower_index(const SpinorExpr& x, bool tilde, const Metric& metric) {
  if (x.variance != Variance::Upper) throw std::invalid_argument("lower_index: spinor already has a lower index");
  const LMatrix& eps = x.dotted ? metric.conjugate_lower() : metric.lower;
  return {tilde ? times_column(eps, x.components) : row_times(x.components, eps), Variance::Lower, x.dotted};
}

SpinorExpr raise_index(const SpinorExpr& x, bool tilde, const Metric& metric) {
  if (x.variance != Variance::Lower) throw std::invalid_argument("raise_index: spinor already has an upper index");
  const LMatrix& eps = x.dotted ? metric.conjugate_upper() : metric.upper;
  return {tilde ? row_times(x.components, eps) : times_column(eps, x.components), Variance::Upper, x.dotted};
}

NCPoly invariant_form(const SpinorExpr& xi, const SpinorExpr& chi, const LMatrix& eps) {
  if (xi.variance != Variance::Upper || chi.variance != Variance::Upper)
    throw std::invalid_argument("invariant_form: both spinors must carry upper indices");
  const auto lowered = row_times(xi.components, eps);
  return lowered[0] * chi.components[0] + lowered[1] * chi.components[1];
}

Laurent form_commutation_factor(const LMatrix& eps) {
  // eps_12 xi^1 chi^2 + eps_21 xi^2 chi^1 = 0
  return -(eps(1, 0) * eps(0, 1).inverse_monomial());
}

SpinorExpr transform(const SpinorExpr& x, const NCMatrix& t, TransformMode mode, Action action,
                     const Metric& metric) {
  require_2x2(t, "transform");
  const bool dotted = mode == TransformMode::Conjugate;
  if (x.dotted != dotted) throw std::invalid_argument("transform: conjugate mode is for dotted spinors only");
  if (mode == TransformMode::Contravariant && x.variance != Variance::Upper)
    throw std::invalid_argument("transform: contravariant mode needs an upper-index spinor");
  if (mode == TransformMode::Covariant && x.variance != Variance::Lower)
    throw std::invalid_argument("transform: covariant mode needs a lower-index spinor");

  const NCMatrix m = dotted ? bar(t) : t;
  const LMatrix& eps = dotted ? metric.conjugate_lower() : metric.lower;
  SpinorExpr out = x;
  if (x.variance == Variance::Upper) {
    out.components = action == Action::Right ? row_times(x.components, m) : times_column(m, x.components);
  } else {
    // Lowered row vector xi eps picks up eps^{-1} M eps (right) or
    // eps^{-1} M^t eps (left), with eps^{-1} = -eps.
    const NCMatrix acting = action == Action::Right ? transpose_inverse(m, eps) : transpose_inverse(m.transpose(), eps);
    out.components = row_times(x.components, acting);
  }
  return out;
}

}  // namespace qlorentz
