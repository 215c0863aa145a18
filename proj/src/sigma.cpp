#include "qlorentz/sigma.hpp"

namespace qlorentz {

namespace {

const Laurent kHalf = Laurent(mpq_class(1, 2));

LMatrix m2(Laurent a, Laurent b, Laurent c, Laurent d) {
  return LMatrix(2, 2, {std::move(a), std::move(b), std::move(c), std::move(d)});
}

}  // namespace

SigmaArray pauli_sigma() {
  const Laurent i = Laurent::i();
  return {m2(1, 0, 0, 1), m2(0, 1, 1, 0), m2(0, -i, i, 0), m2(1, 0, 0, -1)};
}

SigmaArray reference_bar_sigma() {
  const Laurent q = Laurent::q(), qi = Laurent::q_pow(-1), i = Laurent::i();
  return {m2(q, 0, 0, qi), m2(0, -1, -1, 0), m2(0, i, -i, 0), m2(-q, 0, 0, qi)};
}

LMatrix reference_eta_upper() {
  const Laurent q = Laurent::q(), qi = Laurent::q_pow(-1);
  const Laurent plus = kHalf * (q + qi), minus = kHalf * (q - qi);
  LMatrix eta(4, 4, Laurent());
  eta(0, 0) = plus;
  eta(0, 3) = minus;
  eta(3, 0) = minus;
  eta(3, 3) = -plus;
  eta(1, 1) = -1;
  eta(2, 2) = -1;
  return eta;
}

SigmaSet build_bar_sigma(const Metric& metric, bool check_reference) {
  SigmaSet set{pauli_sigma(), {}};
  for (int m = 0; m < 4; ++m)
    set.bar_sigma[m] = metric.upper * set.sigma[m].transpose() * metric.upper.transpose();
  if (check_reference) {
    const auto reference = reference_bar_sigma();
    for (int m = 0; m < 4; ++m)
      if (!(set.bar_sigma[m] == reference[m]))
        throw SigmaMismatch("bar sigma " + std::to_string(m) + " = " + to_string(set.bar_sigma[m]) +
                            " differs from the expected " + to_string(reference[m]));
  }
  return set;
}

LMatrix eta_upper(const SigmaSet& set) {
  LMatrix eta(4, 4, Laurent());
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) eta(m, n) = kHalf * trace(set.bar_sigma[m] * set.sigma[n]);
  return eta;
}

LMatrix eta_lower(const LMatrix& upper) { return inverse(upper); }

SigmaArray lowered_bar_sigma(const SigmaSet& set, const LMatrix& lower) {
  SigmaArray out;
  for (int n = 0; n < 4; ++n) {
    LMatrix acc(2, 2, Laurent());
    for (int m = 0; m < 4; ++m) acc = acc + set.bar_sigma[m].map([&](const Laurent& x) { return lower(n, m) * x; });
    out[n] = acc;
  }
  return out;
}

SigmaArray lowered_sigma(const SigmaSet& set, const LMatrix& lower) {
  SigmaArray out;
  for (int b = 0; b < 4; ++b) {
    LMatrix acc(2, 2, Laurent());
    for (int c = 0; c < 4; ++c) acc = acc + set.sigma[c].map([&](const Laurent& x) { return lower(c, b) * x; });
    out[b] = acc;
  }
  return out;
}

CompletenessReport completeness_check(const SigmaSet& set, const LMatrix& lower) {
  const auto bar_low = lowered_bar_sigma(set, lower);
  CompletenessReport report;
  report.pass = true;
  for (int a = 0; a < 2; ++a)
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        for (int b = 0; b < 2; ++b) {
          Laurent sum;
          for (int n = 0; n < 4; ++n) sum += set.sigma[n](a, x) * bar_low[n](y, b);
          if (x == y && a == b) sum -= Laurent(2);
          if (!sum.is_zero()) report.pass = false;
          report.residual(2 * a + x, 2 * y + b) = sum;
        }
  return report;
}

std::array<NCPoly, 4> bispinor_to_vector(const NCMatrix& x, const SigmaSet& set) {
  std::array<NCPoly, 4> out{NCPoly(x(0, 0).algebra()), NCPoly(x(0, 0).algebra()), NCPoly(x(0, 0).algebra()),
                            NCPoly(x(0, 0).algebra())};
  for (int a = 0; a < 4; ++a) out[a] = kHalf * trace(set.bar_sigma[a] * x);
  return out;
}

NCMatrix vector_to_bispinor(const std::array<NCPoly, 4>& x, const SigmaSet& set, const LMatrix& lower) {
  const auto low = lowered_sigma(set, lower);
  const auto& alg = x[0].algebra();
  NCMatrix out = lift(LMatrix(2, 2, Laurent()), alg);
  for (int b = 0; b < 4; ++b) out = out + lift(low[b], alg).map([&](const NCPoly& p) { return p * x[b]; });
  return out;
}

NCMatrix vector_rep(const NCMatrix& t, const SigmaSet& set, const LMatrix& lower) {
  const auto low = lowered_sigma(set, lower);
  const NCMatrix td = dagger(t);
  std::vector<NCPoly> entries;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) entries.push_back(kHalf * trace(set.bar_sigma[a] * t * low[b] * td));
  return NCMatrix(4, 4, std::move(entries));
}

DetWitness detq_nonconservation_witness(const AlgebraPtr& alg) {
  const NCMatrix t = generator_matrix(alg, {"a", "b", "c", "d"}, 2, 2);
  const NCMatrix x = generator_matrix(alg, {"X11", "X12", "X21", "X22"}, 2, 2);
  const NCMatrix xp = t * x * dagger(t);
  NCPoly residual = reduce_unimodular(q_det_formula(xp)) - q_det_formula(x);
  return {residual, specialize_at_one(residual)};
}

}  // namespace qlorentz
