#include "qlorentz/laurent.hpp"

#include <cmath>
#include <stdexcept>

namespace qlorentz {

GaussRational GaussRational::inverse() const {
  mpq_class norm = re * re + im * im;
  if (sgn(norm) == 0) throw std::domain_error("division by zero Gaussian rational");
  return {re / norm, -im / norm};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  mpq_class r = re * o.re - im * o.im;
  mpq_class i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string GaussRational::to_string() const {
  if (is_real()) return re.get_str();
  std::string imag;
  if (im == 1) {
    imag = "i";
  } else if (im == -1) {
    imag = "-i";
  } else {
    imag = im.get_str() + "*i";
  }
  if (sgn(re) == 0) return imag;
  if (sgn(im) < 0) {
    std::string mag = (im == -1) ? "i" : mpq_class(-im).get_str() + "*i";
    return "(" + re.get_str() + " - " + mag + ")";
  }
  return "(" + re.get_str() + " + " + imag + ")";
}

Laurent Laurent::monomial(int s_exp, const GaussRational& c) {
  Laurent r;
  r.add_term(s_exp, c);
  return r;
}

Laurent Laurent::neg_q_pow_half(int two_m) {
  // (-q)^m = i^{2m} s^{2m}
  static const GaussRational kIPow[4] = {GaussRational(1), GaussRational(0, 1), GaussRational(-1),
                                         GaussRational(0, -1)};
  int k = ((two_m % 4) + 4) % 4;
  return monomial(two_m, kIPow[k]);
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == GaussRational(1);
}

GaussRational Laurent::coeff(int s_exp) const {
  auto it = terms_.find(s_exp);
  return it == terms_.end() ? GaussRational() : it->second;
}

void Laurent::add_term(int s_exp, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(s_exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  *this = *this * o;
  return *this;
}

Laurent Laurent::pow(unsigned n) const {
  Laurent result(1);
  Laurent base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Laurent Laurent::inverse_monomial() const {
  if (!is_monomial()) throw std::domain_error("inverse of non-monomial Laurent polynomial: " + to_string());
  const auto& [e, c] = *terms_.begin();
  return monomial(-e, c.inverse());
}

Laurent Laurent::conj() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conj());
  return r;
}

Laurent Laurent::invert_q() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

bool Laurent::integral_in_q() const {
  for (const auto& [e, c] : terms_)
    if (e % 2 != 0) return false;
  return true;
}

std::complex<double> Laurent::specialize(double q_value) const {
  if (!(q_value > 0.0)) throw std::domain_error("numeric specialization requires real q > 0");
  const double s = std::sqrt(q_value);
  std::complex<double> acc = 0.0;
  for (const auto& [e, c] : terms_) acc += c.to_complex() * std::pow(s, e);
  return acc;
}

GaussRational Laurent::specialize_exact(const mpq_class& q_value) const {
  if (sgn(q_value) == 0) throw std::domain_error("specialization at q = 0");
  GaussRational acc;
  for (const auto& [e, c] : terms_) {
    if (e % 2 != 0) throw std::domain_error("exact specialization with a half-integer power of q");
    int k = e / 2;
    mpq_class p = 1;
    mpq_class base = k >= 0 ? q_value : mpq_class(1 / q_value);
    for (int n = 0; n < std::abs(k); ++n) p *= base;
    acc += c * GaussRational(p);
  }
  return acc;
}

namespace {

std::string q_power_text(int s_exp) {
  if (s_exp == 0) return "";
  if (s_exp % 2 != 0) return "q^(" + std::to_string(s_exp) + "/2)";
  int k = s_exp / 2;
  if (k == 1) return "q";
  return "q^" + std::to_string(k);
}

}  // namespace

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string qp = q_power_text(e);
    std::string term;
    if (qp.empty()) {
      term = c.to_string();
    } else if (c == GaussRational(1)) {
      term = qp;
    } else if (c == GaussRational(-1)) {
      term = "-" + qp;
    } else {
      term = c.to_string() + "*" + qp;
    }
    if (first) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
    first = false;
  }
  return out;
}

std::optional<Laurent> exact_divide(const Laurent& num, const Laurent& den) {
  if (den.is_zero()) throw std::domain_error("exact_divide by zero");
  if (num.is_zero()) return Laurent();
  // Long division on the polynomial parts, highest exponent first.
  Laurent rem = num;
  Laurent quot;
  const int dmax = den.max_exp();
  const int dmin = den.min_exp();
  const GaussRational lead_inv = den.coeff(dmax).inverse();
  while (!rem.is_zero()) {
    // Once the remainder's span is narrower than the divisor, no exact
    // quotient exists.
    if (rem.max_exp() - rem.min_exp() < dmax - dmin) return std::nullopt;
    int shift = rem.max_exp() - dmax;
    Laurent step = Laurent::monomial(shift, rem.coeff(rem.max_exp()) * lead_inv);
    quot += step;
    rem -= step * den;
  }
  return quot;
}

}  // namespace qlorentz
