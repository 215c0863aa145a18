#include <gtest/gtest.h>

#include "qlorentz/algebras.hpp"
#include "qlorentz/qcombinatorics.hpp"
#include "qlorentz/repr.hpp"

using namespace qlorentz;

namespace {

const Laurent q = Laurent::q();

NCPoly g(const AlgebraPtr& alg, std::string_view n) { return NCPoly::generator(alg, n); }

// Commutative polynomials in a, b, c, d, x, y with integer coefficients.
using Exps = std::array<int, 6>;
using CPoly = std::map<Exps, long>;

CPoly cmul(const CPoly& u, const CPoly& v) {
  CPoly out;
  for (const auto& [e1, c1] : u)
    for (const auto& [e2, c2] : v) {
      Exps e;
      for (int k = 0; k < 6; ++k) e[k] = e1[k] + e2[k];
      out[e] += c1 * c2;
    }
  return out;
}

CPoly cpow(const CPoly& u, int n) {
  CPoly out{{Exps{}, 1}};
  for (int k = 0; k < n; ++k) out = cmul(out, u);
  return out;
}

// Classical spin-j entry: coefficient of x^{j+m'} y^{j-m'} in
// (a x + b y)^{j+m} (c x + d y)^{j-m}, as a polynomial in a, b, c, d.
CPoly classical_entry(int two_j, int two_m, int two_mp) {
  const CPoly first{{Exps{1, 0, 0, 0, 1, 0}, 1}, {Exps{0, 1, 0, 0, 0, 1}, 1}};
  const CPoly second{{Exps{0, 0, 1, 0, 1, 0}, 1}, {Exps{0, 0, 0, 1, 0, 1}, 1}};
  CPoly full = cmul(cpow(first, (two_j + two_m) / 2), cpow(second, (two_j - two_m) / 2));
  CPoly out;
  for (const auto& [e, c] : full)
    if (e[4] == (two_j + two_mp) / 2 && e[5] == (two_j - two_mp) / 2 && c != 0) out[{e[0], e[1], e[2], e[3], 0, 0}] += c;
  return out;
}

CPoly to_commutative(const NCPoly& p) {
  const auto& gens = p.algebra()->generators();
  CPoly out;
  const NCPoly classical = specialize_at_one(p);
  for (const auto& [w, c] : classical.terms()) {
    Exps e{};
    for (GenIndex idx : w) e[std::string("abcd").find(gens[idx].name[0])] += 1;
    auto v = c.coeff(0);
    EXPECT_TRUE(v.is_real() && v.re.get_den() == 1);
    out[e] += v.re.get_num().get_si();
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Laurent symmetric_binomial(int n, int k) {
  return *exact_divide(symmetric_factorial(n), symmetric_factorial(k) * symmetric_factorial(n - k));
}

}  // namespace

TEST(SpinVector, Components) {
  auto alg = named_algebra("repr");
  EXPECT_EQ(vector_component(alg, 1, 1, false, kChi, PrefactorKind::EpsPower), g(alg, "c2"));
  EXPECT_EQ(vector_component(alg, 1, -1, false, kChi, PrefactorKind::EpsPower), g(alg, "c1"));
  EXPECT_EQ(vector_component(alg, 2, 0, false, kChi, PrefactorKind::EpsPower), g(alg, "c2") * g(alg, "c1"));
  EXPECT_EQ(vector_norm_sq(2, 0, FactorialKind::BasicQ), Laurent(1));
  EXPECT_EQ(vector_norm_sq(1, 1, FactorialKind::Classical), Laurent(1));
  EXPECT_EQ(vector_norm_sq(4, 0, FactorialKind::Classical), Laurent(4));
  EXPECT_EQ(vector_norm_sq(4, 0, FactorialKind::BasicQ), (Laurent(1) + q).pow(2));
  // Eps-power prefactor for j + m = 3 is q^{-3}.
  EXPECT_EQ(vector_component(alg, 3, 3, false, kChi, PrefactorKind::EpsPower),
            Laurent::q_pow(-3) * g(alg, "c2").pow(3));
  EXPECT_THROW(check_spin(2, 1), std::invalid_argument);
  EXPECT_THROW(check_spin(1, 3), std::invalid_argument);
  auto v = vector_V(alg, 2, true, kXi);
  ASSERT_EQ(v.components.size(), 3u);
  EXPECT_EQ(v.components[0], g(alg, "x1").pow(2));
}

TEST(CMatrix, Diagonal) {
  EXPECT_EQ(c_matrix(2, false), l_diag({q, 1, Laurent::q_pow(-1)}));
  EXPECT_EQ(c_matrix(1, true), l_diag({Laurent::i() * Laurent::sqrt_q(), -Laurent::i() * Laurent::monomial(-1)}));
  auto at_one = c_matrix(4, false).map([](const Laurent& x) { return Laurent(x.specialize_exact(1)); });
  EXPECT_EQ(at_one, l_identity(5));
}

TEST(DMatrix, SpinHalfIsGeneratorMatrix) {
  auto alg = named_algebra("repr");
  EXPECT_EQ(derive_dmatrix(1).entries, generator_matrix(alg, {"a", "b", "c", "d"}, 2, 2));
  EXPECT_EQ(derive_dmatrix(0).entries, nc_identity(alg, 1));
}

TEST(DMatrix, ExtractionUpToSpinThree) {
  for (int two_j = 0; two_j <= 6; ++two_j) {
    auto d = derive_dmatrix(two_j);
    EXPECT_EQ(d.entries.rows(), static_cast<std::size_t>(two_j + 1));
    for (const auto& e : d.entries.data())
      for (const auto& [w, c] : e.terms()) EXPECT_EQ(w.size(), static_cast<std::size_t>(two_j));
  }
}

TEST(DMatrix, ResidualIsReported) {
  auto alg = named_algebra("repr");
  NCMatrix bad(2, 2, {g(alg, "c1"), NCPoly(alg), NCPoly(alg), NCPoly(alg, 1)});
  EXPECT_THROW(derive_dmatrix(1, bad), ExtractionResidual);
}

TEST(DMatrix, ClassicalSymmetricPowerOracle) {
  for (int two_j = 0; two_j <= 4; ++two_j) {
    auto d = derive_dmatrix(two_j);
    for (int i = 0; i <= two_j; ++i)
      for (int k = 0; k <= two_j; ++k)
        EXPECT_EQ(to_commutative(d.entries(i, k)), classical_entry(two_j, two_j - 2 * i, two_j - 2 * k))
            << two_j << " " << i << " " << k;
  }
}

TEST(DMatrix, CoproductHomomorphism) {
  auto two = named_algebra("repr2");
  auto tl = generator_matrix(two, {"aL", "bL", "cL", "dL"}, 2, 2);
  auto tr = generator_matrix(two, {"aR", "bR", "cR", "dR"}, 2, 2);
  for (int two_j = 1; two_j <= 3; ++two_j) {
    auto lhs = derive_dmatrix(two_j, tl * tr).entries;
    auto rhs = derive_dmatrix(two_j, tl).entries * derive_dmatrix(two_j, tr).entries;
    EXPECT_EQ(lhs, rhs) << two_j;
  }
}

TEST(DMatrix, ClosedFormMatchesDerived) {
  for (int two_j = 0; two_j <= 4; ++two_j)
    EXPECT_TRUE(is_zero(dmatrix_residual(formula_dmatrix(two_j), derive_dmatrix(two_j)))) << two_j;
}

TEST(DMatrix, FrozenExponentIsTheFit) {
  auto fitted = fit_formula_convention(2);
  EXPECT_EQ(fitted.exponent, frozen_formula_convention().exponent);
  // q^{-j^2} sits in the J^2 coefficient.
  EXPECT_EQ(fitted.exponent[5], mpq_class(-1, 2));
}

TEST(DMatrix, ClosedFormClassicalLimit) {
  for (int two_j = 0; two_j <= 3; ++two_j) {
    auto d = formula_dmatrix(two_j);
    for (int i = 0; i <= two_j; ++i)
      for (int k = 0; k <= two_j; ++k)
        EXPECT_EQ(to_commutative(d.entries(i, k)), classical_entry(two_j, two_j - 2 * i, two_j - 2 * k));
  }
}

TEST(DMatrix, WrongExponentIsDetected) {
  auto conv = frozen_formula_convention();
  conv.exponent[14] = 0;
  EXPECT_FALSE(is_zero(dmatrix_residual(formula_dmatrix(2, conv), derive_dmatrix(2))));
}

TEST(InvariantQ, SpinHalfIsTheBilinear) {
  auto alg = named_algebra("repr");
  EXPECT_EQ(invariant_Q(1), Laurent::i() * lower_invariant(alg));
  auto classical = specialize_at_one(invariant_Q(1));
  EXPECT_EQ(classical, Laurent::i() * (g(alg, "x1") * g(alg, "c2") - g(alg, "x2") * g(alg, "c1")));
}

TEST(InvariantQ, TransformInvariance) {
  for (int two_j = 0; two_j <= 3; ++two_j) EXPECT_TRUE(invariant_Q_residual(two_j).is_zero()) << two_j;
}

TEST(InvariantQ, ClassicalWeightsAreNotInvariant) {
  EXPECT_FALSE(invariant_Q_residual(2, resolved_vector_convention()).is_zero());
}

TEST(InvariantQ, SolvedWeightsAreSymmetricBinomials) {
  // Residual of each single term; the invariant weights w_m are the kernel
  // of the combined residual. Adjacent terms share words, which fixes the
  // ratios w_{m-1} / w_m one at a time.
  auto alg = named_algebra("repr");
  auto t = generator_matrix(alg, {"a", "b", "c", "d"}, 2, 2);
  for (int two_j = 2; two_j <= 3; ++two_j) {
    std::vector<NCPoly> res;
    for (int two_m = two_j; two_m >= -two_j; two_m -= 2) {
      NCPoly term = vector_component(alg, two_j, two_m, true, kXi, PrefactorKind::Unit) *
                    Laurent::neg_q_pow_half(two_m) *
                    vector_component(alg, two_j, two_m, false, kChi, PrefactorKind::Unit);
      res.push_back(reduce_unimodular(transform_plane(transform_plane(term, t, kXi), t, kChi)) - term);
    }
    std::vector<Laurent> w{Laurent(1)};
    for (std::size_t k = 1; k < res.size(); ++k) {
      std::optional<Laurent> ratio;
      for (const auto& [word, c] : res[k].terms()) {
        bool isolated = !res[k - 1].coeff(word).is_zero();
        for (std::size_t other = 0; other < res.size(); ++other)
          if (other != k && other != k - 1 && !res[other].coeff(word).is_zero()) isolated = false;
        if (!isolated) continue;
        ratio = exact_divide(-(res[k - 1].coeff(word) * w[k - 1]), c);
        if (ratio) break;
      }
      ASSERT_TRUE(ratio) << two_j;
      w.push_back(*ratio);
    }
    NCPoly total(alg);
    for (std::size_t k = 0; k < res.size(); ++k) total += w[k] * res[k];
    EXPECT_TRUE(total.is_zero());
    for (int k = 0; k <= two_j; ++k) EXPECT_EQ(w[k], symmetric_binomial(two_j, k)) << two_j << " " << k;
  }
}

TEST(Expansion, ResolvedConvention) {
  auto report = check_expansion(4);
  ASSERT_EQ(report.rows.size(), 5u);
  EXPECT_EQ(report.rows[0].closing.size(), all_vector_conventions().size());
  EXPECT_EQ(report.rows[1].closing.size(), all_vector_conventions().size());
  ASSERT_EQ(report.resolved.size(), 1u);
  EXPECT_EQ(report.resolved[0], resolved_vector_convention());
  EXPECT_TRUE(report.single_plane_lemma);
  EXPECT_TRUE(report.two_spinor_lemma);
}

TEST(Expansion, ClassicalBinomialOracle) {
  // u = xi_1 chi_2 and v = xi_2 chi_1 commute, so B^n expands with
  // classical binomials.
  auto alg = named_algebra("repr");
  auto u = g(alg, "x1") * g(alg, "c2"), v = g(alg, "x2") * g(alg, "c1");
  for (int n = 0; n <= 4; ++n) {
    NCPoly expect(alg);
    for (int k = 0; k <= n; ++k)
      expect += Laurent(mpq_class(factorial(n) / (factorial(k) * factorial(n - k)))) *
                (Laurent::sqrt_q() * u).pow(k) * (-Laurent::monomial(-1) * v).pow(n - k);
    EXPECT_EQ(lower_invariant(alg).pow(n), expect);
  }
}

TEST(Expansion, EpsPowerPrefactorsFail) {
  EXPECT_FALSE(expansion_closes(2, {FactorialKind::Classical, PrefactorKind::EpsPower}));
  EXPECT_FALSE(expansion_closes(2, {FactorialKind::BasicQ, PrefactorKind::Unit}));
  EXPECT_TRUE(expansion_closes(1, {FactorialKind::BasicQ2, PrefactorKind::EpsPower}));
}
