#pragma once

// Spin-j tower on the quantum plane.
//
// Spins are passed doubled (two_j = 2j, two_m = 2m). Components are listed
// m = j, j-1, ..., -j. Spinors are lower-index planes with
// (.)_2 (.)_1 = q (.)_1 (.)_2; T acts on the column ((.)_2, (.)_1):
//   (.)_2 -> a (.)_2 + b (.)_1,   (.)_1 -> c (.)_2 + d (.)_1.
// Everything is kept in the unnormalized monomial basis; normalizations
// are carried as exact squares in norm_sq.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlorentz/matrix.hpp"

namespace qlorentz {

enum class FactorialKind { Classical, BasicQ, BasicQ2, Symmetric };
enum class PrefactorKind { EpsPower, Unit };

struct VectorConvention {
  FactorialKind factorial = FactorialKind::Classical;
  PrefactorKind prefactor = PrefactorKind::Unit;
};

/// Convention under which the binomial expansion of the invariant closes.
VectorConvention resolved_vector_convention();
/// Weights under which Q(j) is fixed by the D-matrix transformation.
VectorConvention resolved_invariant_convention();
std::vector<VectorConvention> all_vector_conventions();

std::string to_string(FactorialKind k);
std::string to_string(PrefactorKind k);
std::string to_string(const VectorConvention& c);

/// n!, <n>_q!, <n>_{q^2}! or [n]!
Laurent factorial_value(int n, FactorialKind kind);

struct SpinorNames {
  std::string one;  // (.)_1
  std::string two;  // (.)_2
};

inline const SpinorNames kChi{"c1", "c2"};
inline const SpinorNames kXi{"x1", "x2"};

struct SpinVector {
  int two_j = 0;
  bool tilde = false;
  std::vector<NCPoly> components;
  std::vector<Laurent> norm_sq;
};

/// Throws std::invalid_argument unless |m| <= j and j - m is an integer.
void check_spin(int two_j, int two_m);

/// Plain: prefactor * (.)_2^{j+m} (.)_1^{j-m}, eps-power prefactor q^{-(j+m)(j+m-1)/2}.
/// Tilde: prefactor * (.)_1^{j+m} (.)_2^{j-m}, eps-power prefactor q^{(j-m)(j-m-1)/2}.
NCPoly vector_component(const AlgebraPtr& alg, int two_j, int two_m, bool tilde, const SpinorNames& names,
                        PrefactorKind prefactor);
/// norm_sq(m) = F(j+m) F(j-m).
Laurent vector_norm_sq(int two_j, int two_m, FactorialKind kind);
SpinVector vector_V(const AlgebraPtr& alg, int two_j, bool tilde, const SpinorNames& names,
                    const VectorConvention& conv = resolved_vector_convention());

/// diag((+-q)^j, ..., (+-q)^{-j}), with (-q)^{1/2} = i q^{1/2}.
LMatrix c_matrix(int two_j, bool negative_q);

/// Image of the plane (names) under the column action of t.
NCPoly transform_plane(const NCPoly& p, const NCMatrix& t, const SpinorNames& names);

class ExtractionResidual : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DMatrix {
  int two_j = 0;
  NCMatrix entries;
  std::vector<Laurent> norm_sq;
  std::string provenance;
};

/// V'(m) = sum_{m'} D(m, m') V(m') read off by PBW coefficient extraction
/// over t's algebra (which must contain names). Throws ExtractionResidual
/// if the transformed vector is not in the span.
DMatrix derive_dmatrix(int two_j, const NCMatrix& t, const SpinorNames& names = kChi,
                       PrefactorKind prefactor = PrefactorKind::Unit);
/// Over the "repr" algebra with T = [[a, b], [c, d]].
DMatrix derive_dmatrix(int two_j);

/// Exponent of q^{1/2} in the closed-form D-matrix sum, as a quadratic
/// polynomial in (2j, 2m, 2m', t). Coefficient order:
/// 1, J, M, P, t, JJ, JM, JP, Jt, MM, MP, Mt, PP, Pt, tt.
struct FormulaConvention {
  std::array<mpq_class, 15> exponent{};
};

int formula_exponent(const FormulaConvention& conv, int two_j, int two_m, int two_mp, int t);
FormulaConvention frozen_formula_convention();
/// Fits the exponent against derive_dmatrix for 2j <= max_two_j by exact
/// elimination. Throws std::runtime_error if a term does not have the form
/// q^{e/2} <j+m, j-m'-t>_{q^2} <j-m, t>_{q^2} b^. a^. d^t c^. or if no
/// quadratic fits.
FormulaConvention fit_formula_convention(int max_two_j = 2);

/// sum_t q^{e/2} <j+m, j-m'-t>_{q^2} <j-m, t>_{q^2} b^{j-m'-t} a^{m+m'+t} d^t c^{j-m-t}
DMatrix formula_dmatrix(int two_j, const FormulaConvention& conv = frozen_formula_convention(),
                        const AlgebraPtr& alg = nullptr);

/// Entrywise x - y.
NCMatrix dmatrix_residual(const DMatrix& x, const DMatrix& y);

/// sum_m V~(m)[xi] (-q)^m V(m)[chi] / (F(j+m) F(j-m)).
NCPoly invariant_Q(int two_j, const VectorConvention& conv = resolved_invariant_convention(),
                   const AlgebraPtr& alg = nullptr);
/// reduce(Q(T xi, T chi)) - Q(xi, chi): V~ and V transformed separately
/// and reassembled in the order V~ C V.
NCPoly invariant_Q_residual(int two_j, const VectorConvention& conv = resolved_invariant_convention(),
                            const AlgebraPtr& alg = nullptr);

/// B = xi_A eps^AB chi_B = q^{1/2} xi_1 chi_2 - q^{-1/2} xi_2 chi_1 in the "repr" algebra.
NCPoly lower_invariant(const AlgebraPtr& alg = nullptr);

struct ExpansionRow {
  int two_j = 0;
  std::vector<VectorConvention> closing;
};

inline bool operator==(const VectorConvention& x, const VectorConvention& y) {
  return x.factorial == y.factorial && x.prefactor == y.prefactor;
}

struct ExpansionReport {
  std::vector<ExpansionRow> rows;
  /// Conventions closing every row.
  std::vector<VectorConvention> resolved;
  /// (c1 c2)(c2 c1) = (c2 c1)(c1 c2) on one plane.
  bool single_plane_lemma = false;
  /// (xi_1 chi_2)(xi_2 chi_1) = (xi_2 chi_1)(xi_1 chi_2).
  bool two_spinor_lemma = false;
};

/// (iB)^{2j} / F(2j) against sum_m V~(m) (-q)^m V(m) / (F(j+m) F(j-m)),
/// monomial by monomial, for every factorial and prefactor convention.
ExpansionReport check_expansion(int max_two_j, const AlgebraPtr& alg = nullptr);
bool expansion_closes(int two_j, const VectorConvention& conv, const AlgebraPtr& alg = nullptr);

}  // namespace qlorentz
