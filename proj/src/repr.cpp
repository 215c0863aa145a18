#include "qlorentz/repr.hpp"

#include <algorithm>

#include "qlorentz/algebras.hpp"
#include "qlorentz/qcombinatorics.hpp"

namespace qlorentz {

VectorConvention resolved_vector_convention() { return {FactorialKind::Classical, PrefactorKind::Unit}; }

VectorConvention resolved_invariant_convention() { return {FactorialKind::Symmetric, PrefactorKind::Unit}; }

std::vector<VectorConvention> all_vector_conventions() {
  std::vector<VectorConvention> all;
  for (auto f : {FactorialKind::Classical, FactorialKind::BasicQ, FactorialKind::BasicQ2, FactorialKind::Symmetric})
    for (auto p : {PrefactorKind::EpsPower, PrefactorKind::Unit}) all.push_back({f, p});
  return all;
}

std::string to_string(FactorialKind k) {
  switch (k) {
    case FactorialKind::Classical: return "classical";
    case FactorialKind::BasicQ: return "basic-q";
    case FactorialKind::BasicQ2: return "basic-q2";
    case FactorialKind::Symmetric: return "symmetric";
  }
  return "?";
}

std::string to_string(PrefactorKind k) { return k == PrefactorKind::EpsPower ? "eps-prefactor" : "unit-prefactor"; }

std::string to_string(const VectorConvention& c) { return to_string(c.factorial) + "/" + to_string(c.prefactor); }

Laurent factorial_value(int n, FactorialKind kind) {
  switch (kind) {
    case FactorialKind::Classical: return Laurent(mpq_class(factorial(n)));
    case FactorialKind::BasicQ: return basic_factorial(n);
    case FactorialKind::BasicQ2: return basic_factorial(n, Laurent::q_pow(2));
    case FactorialKind::Symmetric: return symmetric_factorial(n);
  }
  throw std::invalid_argument("factorial_value: unknown kind");
}

void check_spin(int two_j, int two_m) {
  if (two_j < 0 || std::abs(two_m) > two_j || (two_j - two_m) % 2 != 0)
    throw std::invalid_argument("invalid spin labels 2j=" + std::to_string(two_j) + " 2m=" + std::to_string(two_m));
}

namespace {

Word repeat(GenIndex g, int n) { return Word(static_cast<std::size_t>(n), g); }

Word concat(Word x, const Word& y) {
  x.insert(x.end(), y.begin(), y.end());
  return x;
}

AlgebraPtr or_default(const AlgebraPtr& alg) { return alg ? alg : named_algebra("repr"); }

// Single-term normal form: (coefficient, word).
std::pair<Laurent, Word> single_term(const NCPoly& p) {
  if (p.terms().size() != 1) throw std::logic_error("expected a single PBW term, got " + p.to_string());
  const auto& [w, c] = *p.terms().begin();
  return {c, w};
}

}  // namespace

NCPoly vector_component(const AlgebraPtr& alg, int two_j, int two_m, bool tilde, const SpinorNames& names,
                        PrefactorKind prefactor) {
  check_spin(two_j, two_m);
  const int p = (two_j + two_m) / 2, r = (two_j - two_m) / 2;
  const GenIndex one = alg->index(names.one), two = alg->index(names.two);
  Laurent pref(1);
  if (prefactor == PrefactorKind::EpsPower) pref = tilde ? eps_power(r) : eps_power(p, true);
  const Word w = tilde ? concat(repeat(one, p), repeat(two, r)) : concat(repeat(two, p), repeat(one, r));
  return NCPoly::from_formal(alg, {{pref, w}});
}

Laurent vector_norm_sq(int two_j, int two_m, FactorialKind kind) {
  check_spin(two_j, two_m);
  return factorial_value((two_j + two_m) / 2, kind) * factorial_value((two_j - two_m) / 2, kind);
}

SpinVector vector_V(const AlgebraPtr& alg, int two_j, bool tilde, const SpinorNames& names,
                    const VectorConvention& conv) {
  SpinVector v{two_j, tilde, {}, {}};
  for (int two_m = two_j; two_m >= -two_j; two_m -= 2) {
    v.components.push_back(vector_component(alg, two_j, two_m, tilde, names, conv.prefactor));
    v.norm_sq.push_back(vector_norm_sq(two_j, two_m, conv.factorial));
  }
  return v;
}

LMatrix c_matrix(int two_j, bool negative_q) {
  std::vector<Laurent> diag;
  for (int two_m = two_j; two_m >= -two_j; two_m -= 2)
    diag.push_back(negative_q ? Laurent::neg_q_pow_half(two_m) : Laurent::monomial(two_m));
  return l_diag(diag);
}

NCPoly transform_plane(const NCPoly& p, const NCMatrix& t, const SpinorNames& names) {
  const auto& alg = p.algebra();
  const NCPoly one = NCPoly::generator(alg, names.one), two = NCPoly::generator(alg, names.two);
  return substitute(p, alg, {{names.two, t(0, 0) * two + t(0, 1) * one}, {names.one, t(1, 0) * two + t(1, 1) * one}});
}

DMatrix derive_dmatrix(int two_j, const NCMatrix& t, const SpinorNames& names, PrefactorKind prefactor) {
  if (two_j < 0) throw std::invalid_argument("derive_dmatrix: negative spin");
  const AlgebraPtr alg = t(0, 0).algebra();
  const GenIndex one = alg->index(names.one), two = alg->index(names.two);
  const int n = two_j + 1;

  std::map<Word, std::pair<int, Laurent>> basis;  // spinor word -> (column, coefficient)
  std::vector<NCPoly> basis_vectors;
  for (int k = 0; k < n; ++k) {
    basis_vectors.push_back(vector_component(alg, two_j, two_j - 2 * k, false, names, prefactor));
    auto [c, w] = single_term(basis_vectors.back());
    basis.emplace(w, std::pair{k, c.inverse_monomial()});
  }

  DMatrix d{two_j, NCMatrix(n, n, NCPoly(alg)), {}, "derived"};
  for (int i = 0; i < n; ++i) {
    const int two_m = two_j - 2 * i;
    const NCPoly image = transform_plane(basis_vectors[i], t, names);
    for (const auto& [w, c] : image.terms()) {
      auto split = std::find_if(w.begin(), w.end(), [&](GenIndex g) { return g == one || g == two; });
      Word prefix(w.begin(), split), suffix(split, w.end());
      auto it = basis.find(suffix);
      if (it == basis.end())
        throw ExtractionResidual("derive_dmatrix: word " + alg->word_to_string(w) + " of V'(2m=" +
                                 std::to_string(two_m) + ") is outside the spin-j basis");
      d.entries(i, it->second.first) += NCPoly::from_word(alg, prefix, c * it->second.second);
    }
    NCPoly rebuilt(alg);
    for (int k = 0; k < n; ++k) rebuilt += d.entries(i, k) * basis_vectors[k];
    if (!(rebuilt == image))
      throw ExtractionResidual("derive_dmatrix: nonzero extraction residual at 2m=" + std::to_string(two_m) + ": " +
                               (image - rebuilt).to_string());
  }
  for (int two_m = two_j; two_m >= -two_j; two_m -= 2)
    d.norm_sq.push_back(vector_norm_sq(two_j, two_m, resolved_vector_convention().factorial));
  return d;
}

DMatrix derive_dmatrix(int two_j) {
  auto alg = named_algebra("repr");
  return derive_dmatrix(two_j, generator_matrix(alg, {"a", "b", "c", "d"}, 2, 2));
}

// ------------------------------------------------------------ closed form

namespace {

std::array<mpq_class, 15> exponent_features(int two_j, int two_m, int two_mp, int t) {
  const mpq_class J = two_j, M = two_m, P = two_mp, T = t;
  return {1, J, M, P, T, J * J, J * M, J * P, J * T, M * M, M * P, M * T, P * P, P * T, T * T};
}

struct FormulaTerm {
  int t;
  Laurent binomials;
  NCPoly word;  // normal form of b^x a^y d^t c^z
};

// Terms of the (m, m') entry, one per admissible t.
std::vector<FormulaTerm> formula_terms(const AlgebraPtr& alg, int two_j, int two_m, int two_mp) {
  std::vector<FormulaTerm> out;
  const Laurent q2 = Laurent::q_pow(2);
  const int jm = (two_j + two_m) / 2, j_m = (two_j - two_m) / 2, j_mp = (two_j - two_mp) / 2;
  const int m_plus_mp = (two_m + two_mp) / 2;
  const GenIndex a = alg->index("a"), b = alg->index("b"), c = alg->index("c"), d = alg->index("d");
  for (int t = 0; t <= j_m; ++t) {
    const int x = j_mp - t, y = m_plus_mp + t, z = j_m - t;
    if (x < 0 || y < 0 || z < 0) continue;
    Word w = concat(concat(repeat(b, x), repeat(a, y)), concat(repeat(d, t), repeat(c, z)));
    out.push_back({t, q_binomial(jm, x, q2) * q_binomial(j_m, t, q2), NCPoly::from_formal(alg, {{Laurent(1), w}})});
  }
  return out;
}

// Exact solve of an overdetermined consistent system; free unknowns are 0.
std::optional<std::vector<mpq_class>> solve_exact(std::vector<std::vector<mpq_class>> rows,
                                                  std::vector<mpq_class> rhs, std::size_t unknowns) {
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < unknowns && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && sgn(rows[piv][col]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    std::swap(rhs[piv], rhs[r]);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || sgn(rows[k][col]) == 0) continue;
      mpq_class f = rows[k][col] / rows[r][col];
      for (std::size_t c = col; c < unknowns; ++c) rows[k][c] -= f * rows[r][c];
      rhs[k] -= f * rhs[r];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++r;
  }
  for (std::size_t k = r; k < rows.size(); ++k)
    if (sgn(rhs[k]) != 0) return std::nullopt;
  std::vector<mpq_class> x(unknowns, 0);
  for (std::size_t k = 0; k < r; ++k) x[pivot_col[k]] = rhs[k] / rows[k][pivot_col[k]];
  return x;
}

}  // namespace

int formula_exponent(const FormulaConvention& conv, int two_j, int two_m, int two_mp, int t) {
  const auto f = exponent_features(two_j, two_m, two_mp, t);
  mpq_class e = 0;
  for (std::size_t k = 0; k < f.size(); ++k) e += conv.exponent[k] * f[k];
  if (e.get_den() != 1) throw std::domain_error("formula exponent is not an integer power of q^(1/2)");
  return static_cast<int>(e.get_num().get_si());
}

FormulaConvention fit_formula_convention(int max_two_j) {
  auto alg = named_algebra("repr");
  std::vector<std::vector<mpq_class>> rows;
  std::vector<mpq_class> rhs;
  for (int two_j = 0; two_j <= max_two_j; ++two_j) {
    const DMatrix d = derive_dmatrix(two_j);
    for (int i = 0; i <= two_j; ++i)
      for (int k = 0; k <= two_j; ++k) {
        const int two_m = two_j - 2 * i, two_mp = two_j - 2 * k;
        NCPoly rest = d.entries(i, k);
        for (const auto& term : formula_terms(alg, two_j, two_m, two_mp)) {
          auto [kappa, w] = single_term(term.word);
          const Laurent coeff = rest.coeff(w);
          auto ratio = exact_divide(coeff, term.binomials * kappa);
          if (!ratio || !ratio->is_monomial() || !(ratio->coeff(ratio->min_exp()) == GaussRational(1)))
            throw std::runtime_error("D-matrix entry (2m=" + std::to_string(two_m) + ", 2m'=" + std::to_string(two_mp) +
                                     ", t=" + std::to_string(term.t) + ") is not a pure power of q times the binomials");
          const int e = ratio->min_exp();
          auto f = exponent_features(two_j, two_m, two_mp, term.t);
          rows.emplace_back(f.begin(), f.end());
          rhs.emplace_back(e);
          rest -= NCPoly::from_word(alg, w, coeff);
        }
        if (!rest.is_zero())
          throw std::runtime_error("D-matrix entry (2m=" + std::to_string(two_m) + ", 2m'=" + std::to_string(two_mp) +
                                   ") has terms outside the closed-form sum: " + rest.to_string());
      }
  }
  auto x = solve_exact(rows, rhs, 15);
  if (!x) throw std::runtime_error("no quadratic exponent reproduces the derived D-matrices");
  FormulaConvention conv;
  std::copy(x->begin(), x->end(), conv.exponent.begin());
  return conv;
}

FormulaConvention frozen_formula_convention() {
  // 2 sigma = -J^2/2 + M t + P^2/2 + P t + 2 t^2, fitted on 2j <= 2.
  FormulaConvention conv;
  conv.exponent[5] = mpq_class(-1, 2);
  conv.exponent[11] = 1;
  conv.exponent[12] = mpq_class(1, 2);
  conv.exponent[13] = 1;
  conv.exponent[14] = 2;
  return conv;
}

DMatrix formula_dmatrix(int two_j, const FormulaConvention& conv, const AlgebraPtr& alg_in) {
  if (two_j < 0) throw std::invalid_argument("formula_dmatrix: negative spin");
  const AlgebraPtr alg = or_default(alg_in);
  const int n = two_j + 1;
  DMatrix d{two_j, NCMatrix(n, n, NCPoly(alg)), {}, "formula"};
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int two_m = two_j - 2 * i, two_mp = two_j - 2 * k;
      for (const auto& term : formula_terms(alg, two_j, two_m, two_mp))
        d.entries(i, k) += Laurent::monomial(formula_exponent(conv, two_j, two_m, two_mp, term.t)) * term.binomials *
                           term.word;
    }
  for (int two_m = two_j; two_m >= -two_j; two_m -= 2)
    d.norm_sq.push_back(vector_norm_sq(two_j, two_m, resolved_vector_convention().factorial));
  return d;
}

NCMatrix dmatrix_residual(const DMatrix& x, const DMatrix& y) {
  if (x.two_j != y.two_j) throw std::invalid_argument("dmatrix_residual: spins differ");
  return x.entries - y.entries;
}

// ------------------------------------------------------------ invariants

NCPoly invariant_Q(int two_j, const VectorConvention& conv, const AlgebraPtr& alg_in) {
  const AlgebraPtr alg = or_default(alg_in);
  std::vector<Laurent> norms;
  for (int two_m = two_j; two_m >= -two_j; two_m -= 2) norms.push_back(vector_norm_sq(two_j, two_m, conv.factorial));
  // Weight each term by the product of the other norms, then divide by the
  // total when that is a unit (classical factorials).
  NCPoly q_sum(alg);
  Laurent total(1);
  for (const auto& n : norms) total *= n;
  for (int idx = 0, two_m = two_j; two_m >= -two_j; two_m -= 2, ++idx) {
    Laurent weight(1);
    for (int k = 0; k < static_cast<int>(norms.size()); ++k)
      if (k != idx) weight *= norms[k];
    q_sum += vector_component(alg, two_j, two_m, true, kXi, conv.prefactor) *
             (Laurent::neg_q_pow_half(two_m) * weight) *
             vector_component(alg, two_j, two_m, false, kChi, conv.prefactor);
  }
  if (total.is_monomial()) q_sum *= total.inverse_monomial();
  return q_sum;
}

NCPoly invariant_Q_residual(int two_j, const VectorConvention& conv, const AlgebraPtr& alg_in) {
  const AlgebraPtr alg = or_default(alg_in);
  const NCMatrix t = generator_matrix(alg, {"a", "b", "c", "d"}, 2, 2);
  const NCPoly q_j = invariant_Q(two_j, conv, alg);
  return reduce_unimodular(transform_plane(transform_plane(q_j, t, kXi), t, kChi)) - q_j;
}

NCPoly lower_invariant(const AlgebraPtr& alg_in) {
  const AlgebraPtr alg = or_default(alg_in);
  auto g = [&](const std::string& n) { return NCPoly::generator(alg, n); };
  return Laurent::sqrt_q() * g(kXi.one) * g(kChi.two) - Laurent::monomial(-1) * g(kXi.two) * g(kChi.one);
}

bool expansion_closes(int two_j, const VectorConvention& conv, const AlgebraPtr& alg_in) {
  const AlgebraPtr alg = or_default(alg_in);
  const NCPoly lhs = (Laurent::i() * lower_invariant(alg)).pow(static_cast<unsigned>(two_j));
  const Laurent f_total = factorial_value(two_j, conv.factorial);
  std::size_t matched = 0;
  for (int two_m = two_j; two_m >= -two_j; two_m -= 2) {
    const NCPoly rhs = vector_component(alg, two_j, two_m, true, kXi, conv.prefactor) *
                       Laurent::neg_q_pow_half(two_m) *
                       vector_component(alg, two_j, two_m, false, kChi, conv.prefactor);
    auto [rho, w] = single_term(rhs);
    const Laurent lambda = lhs.coeff(w);
    if (!lambda.is_zero()) ++matched;
    if (!(lambda * vector_norm_sq(two_j, two_m, conv.factorial) == f_total * rho)) return false;
  }
  return matched == lhs.terms().size();
}

ExpansionReport check_expansion(int max_two_j, const AlgebraPtr& alg_in) {
  const AlgebraPtr alg = or_default(alg_in);
  ExpansionReport report;
  const auto all = all_vector_conventions();
  std::vector<bool> every(all.size(), true);
  for (int two_j = 0; two_j <= max_two_j; ++two_j) {
    ExpansionRow row{two_j, {}};
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (expansion_closes(two_j, all[k], alg)) row.closing.push_back(all[k]);
      else every[k] = false;
    }
    report.rows.push_back(row);
  }
  for (std::size_t k = 0; k < all.size(); ++k)
    if (every[k]) report.resolved.push_back(all[k]);

  auto g = [&](const std::string& n) { return NCPoly::generator(alg, n); };
  const NCPoly c12 = g("c1") * g("c2"), c21 = g("c2") * g("c1");
  report.single_plane_lemma = c12 * c21 == c21 * c12;
  const NCPoly u = g(kXi.one) * g(kChi.two), v = g(kXi.two) * g(kChi.one);
  report.two_spinor_lemma = u * v == v * u;
  return report;
}

}  // namespace qlorentz
