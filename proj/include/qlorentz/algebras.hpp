#pragma once

// Ready-made presentations: SL_q(2), its conjugate copy, two commuting
// copies, and the spinor-component extensions used by the spinor calculus
// and the spin-j tower.
//
// Generator order is a < b < c < d throughout, so the PBW basis is
// a^i b^j c^k d^l. Spinor components are ordered after all matrix elements
// and commute with them.

#include <string>
#include <string_view>
#include <vector>

#include "qlorentz/ncalg.hpp"

namespace qlorentz {

/// Coefficient x in the reordering rule d a -> a d + x b c; the value that
/// makes a d - q b c central is -(q - q^{-1}).
Laurent default_da_coefficient();

struct SlqOptions {
  Laurent da_coefficient = default_da_coefficient();
  bool require_confluence = true;
};

/// Adds generators a, b, c, d (with the given names) and the relations
/// ab = p ba, ac = p ca, bd = p db, cd = p dc, bc = cb, d a -> a d + x b c,
/// plus the unit-determinant rule a d = 1 + p b c. `p` is q for the plain
/// copy and q^{-1} for the conjugate copy, whose x is the q -> q^{-1} image.
void add_slq2_copy(Algebra::Builder& b, const std::vector<std::string>& names, Sort sort, const Laurent& p,
                   const Laurent& da_coefficient);

/// a b c d
AlgebraPtr make_slq2(const SlqOptions& opts = {});
/// a b c d abar bbar cbar dbar; barred relations from the order-reversing
/// star with real q, barred and unbarred commuting.
AlgebraPtr make_slq2_conjugate(const SlqOptions& opts = {});

/// Spinor calculus with upper-index components x2 < x1 (xi^1, xi^2) and
/// c2 < c1 (chi^1, chi^2). With quantum_plane set each spinor obeys
/// x1 x2 = q x2 x1; different spinors commute.
AlgebraPtr make_spinor_algebra(bool quantum_plane, const SlqOptions& opts = {});

/// Conjugate spinors: a..d, abar..dbar, upper dotted components y1 y2 and
/// z1 z2, commuting.
AlgebraPtr make_dotted_spinor_algebra(const SlqOptions& opts = {});

/// Spin-j tower algebra: `copies` commuting SL_q(2) copies (names a b c d
/// for one copy, aL .. dL and aR .. dR for two) followed by lower-index
/// quantum planes x1 < x2 and c1 < c2 with x2 x1 = q x1 x2, c2 c1 = q c1 c2.
AlgebraPtr make_repr_algebra(int copies = 1, const SlqOptions& opts = {});

/// a..d, abar..dbar and four central symbols X11 X12 X21 X22 for a generic
/// bispinor.
AlgebraPtr make_bispinor_algebra(const SlqOptions& opts = {});

/// Cached instances for the CLI and bindings: slq2, slq2bar, plane,
/// spinor, repr, repr2, bispinor. Throws std::invalid_argument otherwise.
AlgebraPtr named_algebra(std::string_view name);
std::vector<std::string> algebra_names();

}  // namespace qlorentz
