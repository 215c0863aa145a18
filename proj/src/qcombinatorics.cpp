#include "qlorentz/qcombinatorics.hpp"

#include <stdexcept>
#include <string>

namespace qlorentz {

Laurent basic_integer(int n, const Laurent& base) {
  if (n < 0) throw std::out_of_range("basic_integer: negative argument " + std::to_string(n));
  Laurent sum;
  Laurent power(1);
  for (int k = 0; k < n; ++k) {
    sum += power;
    power *= base;
  }
  return sum;
}

Laurent basic_factorial(int n, const Laurent& base) {
  if (n < 0) throw std::out_of_range("basic_factorial: negative argument " + std::to_string(n));
  Laurent acc(1);
  for (int k = 2; k <= n; ++k) acc *= basic_integer(k, base);
  return acc;
}

Laurent q_binomial(int n, int k, const Laurent& base) {
  if (n < 0 || k < 0 || k > n)
    throw std::out_of_range("q_binomial: need 0 <= k <= n, got n=" + std::to_string(n) +
                            " k=" + std::to_string(k));
  Laurent num = basic_factorial(n, base);
  Laurent den = basic_factorial(k, base) * basic_factorial(n - k, base);
  auto quot = exact_divide(num, den);
  if (!quot) throw std::logic_error("q_binomial: inexact division");
  return *quot;
}

Laurent symmetric_integer(int n) {
  if (n < 0) throw std::out_of_range("symmetric_integer: negative argument " + std::to_string(n));
  Laurent sum;
  for (int k = 0; k < n; ++k) sum += Laurent::q_pow(n - 1 - 2 * k);
  return sum;
}

Laurent symmetric_factorial(int n) {
  if (n < 0) throw std::out_of_range("symmetric_factorial: negative argument " + std::to_string(n));
  Laurent f(1);
  for (int k = 2; k <= n; ++k) f *= symmetric_integer(k);
  return f;
}

Laurent eps_power(int n, bool inverse_q) {
  // n(n-1)/2 is an integer for every integer n.
  long e = static_cast<long>(n) * (n - 1) / 2;
  return Laurent::q_pow(static_cast<int>(inverse_q ? -e : e));
}

mpz_class factorial(int n) {
  if (n < 0) throw std::out_of_range("factorial: negative argument");
  mpz_class f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace qlorentz
