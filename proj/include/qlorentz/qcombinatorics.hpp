#pragma once

// q-analogues used by the spin-j representation tower: basic integers,
// basic factorials, Gaussian binomials and the power q^{n(n-1)/2}.

#include "qlorentz/laurent.hpp"

namespace qlorentz {

/// <n> = 1 + base + ... + base^{n-1}; zero for n = 0. Throws on n < 0.
Laurent basic_integer(int n, const Laurent& base = Laurent::q());

/// <n>! = <1><2>...<n>.
Laurent basic_factorial(int n, const Laurent& base = Laurent::q());

/// Gaussian binomial <n>!/(<k>!<n-k>!) computed by exact division. Throws
/// std::out_of_range unless 0 <= k <= n, and std::logic_error if the
/// division leaves a remainder.
Laurent q_binomial(int n, int k, const Laurent& base = Laurent::q());

/// [n] = (q^n - q^{-n}) / (q - q^{-1}) = q^{n-1} + q^{n-3} + ... + q^{1-n}.
Laurent symmetric_integer(int n);
/// [1][2]...[n]
Laurent symmetric_factorial(int n);

/// q^{n(n-1)/2}, or q^{-n(n-1)/2} when inverse_q is set.
Laurent eps_power(int n, bool inverse_q = false);

/// Classical n!.
mpz_class factorial(int n);

}  // namespace qlorentz
