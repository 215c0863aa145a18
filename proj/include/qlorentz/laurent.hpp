#pragma once

/**
 * @file laurent.hpp
 * @brief Exact coefficient ring: Laurent polynomials in s = q^{1/2} over the
 * Gaussian rationals.
 *
 * Every scalar that appears in the q-deformed spinor calculus (q, q^{1/2},
 * q^{-1/2}, the imaginary unit, binomial and factorial ratios) lives in this
 * ring. No floating point is involved until a value is explicitly
 * specialized at a numeric q.
 */

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace qlorentz {

/// Exact complex rational re + im*i.
struct GaussRational {
  mpq_class re{0};
  mpq_class im{0};

  GaussRational() = default;
  GaussRational(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }
  GaussRational(long v) : re(v), im(0) {}

  static GaussRational imag_unit() { return {0, 1}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussRational conj() const { return {re, -im}; }
  GaussRational inverse() const;  // throws std::domain_error on zero

  GaussRational operator-() const { return {-re, -im}; }
  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    return a * b.inverse();
  }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
  std::string to_string() const;
};

/**
 * Laurent polynomial sum_k c_k s^k with s = q^{1/2} and c_k Gaussian
 * rational. Stored sparse and canonical: no zero coefficient is ever kept,
 * so structural equality is ring equality.
 */
class Laurent {
 public:
  using Terms = std::map<int, GaussRational>;

  Laurent() = default;
  Laurent(long v) { add_term(0, GaussRational(v)); }
  Laurent(const mpq_class& v) { add_term(0, GaussRational(v)); }
  Laurent(const GaussRational& v) { add_term(0, v); }

  /// c * s^k
  static Laurent monomial(int s_exp, const GaussRational& c = GaussRational(1));
  /// q^k = s^{2k}
  static Laurent q_pow(int k) { return monomial(2 * k); }
  static Laurent q() { return q_pow(1); }
  static Laurent sqrt_q() { return monomial(1); }
  static Laurent i() { return Laurent(GaussRational::imag_unit()); }
  /// (-q)^{m} for m = two_m / 2, with the branch (-q)^{1/2} = i q^{1/2}.
  static Laurent neg_q_pow_half(int two_m);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// Single term c s^k.
  bool is_monomial() const { return terms_.size() == 1; }
  /// Lowest and highest s-exponent. Undefined on zero.
  int min_exp() const { return terms_.begin()->first; }
  int max_exp() const { return terms_.rbegin()->first; }
  GaussRational coeff(int s_exp) const;

  void add_term(int s_exp, const GaussRational& c);

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

  Laurent pow(unsigned n) const;
  /// Multiplicative inverse of a monomial; throws std::domain_error otherwise.
  Laurent inverse_monomial() const;
  /// Complex conjugation of coefficients (q is treated as real).
  Laurent conj() const;
  /// The substitution q -> q^{-1}, i.e. s -> s^{-1}.
  Laurent invert_q() const;
  /// True when every s-exponent is even (an honest Laurent polynomial in q).
  bool integral_in_q() const;

  /// Numeric value at real q > 0, with s = sqrt(q).
  std::complex<double> specialize(double q_value) const;
  /// Exact value at rational q != 0. Requires integral_in_q().
  GaussRational specialize_exact(const mpq_class& q_value) const;

  /// Canonical text: terms by decreasing s-exponent, e.g. "q - q^-1",
  /// "q^(1/2)", "(1/2 + i)*q^2".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Exact division num / den over the Laurent ring; std::nullopt when the
/// remainder is nonzero.
std::optional<Laurent> exact_divide(const Laurent& num, const Laurent& den);

inline std::ostream& operator<<(std::ostream& os, const Laurent& x) { return os << x.to_string(); }

}  // namespace qlorentz
