#include "qlorentz/export.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "qlorentz/algebras.hpp"
#include "qlorentz/sigma.hpp"

namespace qlorentz {

namespace {

double round15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  double r = std::strtod(buf, nullptr);
  return r == 0 ? 0.0 : r;
}

std::string fmt15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", round15(v));
  return buf;
}

json numeric(std::complex<double> z) { return json::array({round15(z.real()), round15(z.imag())}); }

mpz_class parse_mpz(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

// Big integers go out as strings; everything that fits a long stays a number.
json int_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

template <class M>
json matrix_json(const M& m, NumericQ q) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c), q));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

template <class M>
std::string matrix_text(const M& m, NumericQ q) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r ? ",\n [" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ", ";
      out += to_text(m(r, c), q);
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace

json to_json(const Laurent& x, NumericQ q) {
  if (q) return numeric(x.specialize(*q));
  json out = json::array();
  for (const auto& [e, c] : x.terms())
    out.push_back({e, int_json(c.re.get_num()), int_json(c.re.get_den()), int_json(c.im.get_num()),
                   int_json(c.im.get_den())});
  return out;
}

json to_json(const NCPoly& p, NumericQ q) {
  const auto& gens = p.algebra()->generators();
  json out = json::array();
  for (const auto& [w, c] : p.terms()) {
    json word = json::array();
    for (GenIndex g : w) word.push_back(gens[g].name);
    out.push_back({{"word", std::move(word)}, {"coeff", to_json(c, q)}});
  }
  return out;
}

json to_json(const LMatrix& m, NumericQ q) { return matrix_json(m, q); }
json to_json(const NCMatrix& m, NumericQ q) { return matrix_json(m, q); }

json to_json(const DMatrix& d, NumericQ q) {
  json norms = json::array();
  for (const auto& n : d.norm_sq) norms.push_back(to_json(n, q));
  json m = to_json(d.entries, q);
  return {{"j", spin_label(d.two_j)},
          {"basis", "unnormalized"},
          {"entries", std::move(m["entries"])},
          {"norm_sq", std::move(norms)},
          {"provenance", d.provenance}};
}

Laurent laurent_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("Laurent JSON must be an array");
  Laurent out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 5 || !t[0].is_number_integer())
      throw std::invalid_argument("Laurent term must be [s_exponent, re_num, re_den, im_num, im_den]");
    mpz_class rd = parse_mpz(t[2]), id = parse_mpz(t[4]);
    if (rd == 0 || id == 0) throw std::invalid_argument("zero denominator in Laurent JSON");
    out += Laurent::monomial(t[0].get<int>(),
                             GaussRational(mpq_class(parse_mpz(t[1]), rd), mpq_class(parse_mpz(t[3]), id)));
  }
  return out;
}

NCPoly poly_from_json(const json& j, const AlgebraPtr& alg) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<RuleTerm> formal;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("word") || !t.contains("coeff"))
      throw std::invalid_argument("polynomial term must be {word, coeff}");
    Word w;
    for (const auto& n : t["word"]) w.push_back(alg->index(n.get<std::string>()));
    formal.push_back({laurent_from_json(t["coeff"]), std::move(w)});
  }
  return NCPoly::from_formal(alg, formal);
}

std::string format_complex(std::complex<double> z) {
  double re = round15(z.real()), im = round15(z.imag());
  if (im == 0) return fmt15(re);
  std::string imag = (std::abs(im) == 1 ? "" : fmt15(std::abs(im))) + "i";
  if (re == 0) return (im < 0 ? "-" : "") + imag;
  return "(" + fmt15(re) + (im < 0 ? " - " : " + ") + imag + ")";
}

std::string to_text(const Laurent& x, NumericQ q) { return q ? format_complex(x.specialize(*q)) : x.to_string(); }

std::string to_text(const NCPoly& p, NumericQ q) {
  if (!q) return p.to_string();
  std::string out;
  for (const auto& [w, c] : p.terms()) {
    std::complex<double> z = c.specialize(*q);
    if (round15(z.real()) == 0 && round15(z.imag()) == 0) continue;
    std::string coeff = format_complex(z);
    std::string term = coeff;
    if (!w.empty()) {
      const std::string word = p.algebra()->format_word(w);
      term = coeff == "1" ? word : coeff == "-1" ? "-" + word : coeff + "*" + word;
    }
    if (out.empty()) out = term;
    else if (term.front() == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

std::string to_text(const LMatrix& m, NumericQ q) { return matrix_text(m, q); }
std::string to_text(const NCMatrix& m, NumericQ q) { return matrix_text(m, q); }

std::string spin_label(int two_j) { return two_j % 2 ? std::to_string(two_j) + "/2" : std::to_string(two_j / 2); }

int parse_two_j(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("invalid spin '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || s.empty()) throw bad();
    return v;
  };
  int two_j;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    if (parse_int(text.substr(slash + 1)) != 2) throw bad();
    two_j = parse_int(text.substr(0, slash));
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    int whole = parse_int(text.substr(0, dot));
    if (frac == "5") two_j = 2 * whole + 1;
    else if (!frac.empty() && frac.find_first_not_of('0') == std::string_view::npos) two_j = 2 * whole;
    else throw bad();
  } else {
    two_j = 2 * parse_int(text);
  }
  if (two_j < 0) throw bad();
  return two_j;
}

double parse_q_value(std::string_view text) {
  std::string s(text);
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v) || v <= 0)
    throw std::invalid_argument("invalid q '" + s + "': expected a positive number");
  return v;
}

std::string emit_artifact(const EmitRequest& r) {
  const bool as_json = r.format == ArtifactFormat::Json;
  if (r.q && !(std::isfinite(*r.q) && *r.q > 0)) throw std::invalid_argument("q must be a positive number");
  if (r.kind == "dmatrix") {
    if (r.two_j < 0 || r.two_j > kMaxEmitTwoJ)
      throw std::invalid_argument("j must be a half-integer in [0, " + spin_label(kMaxEmitTwoJ) + "]");
    DMatrix d = derive_dmatrix(r.two_j);
    if (as_json) return to_json(d, r.q).dump() + "\n";
    std::string out = "j = " + spin_label(d.two_j) + "\n" + to_text(d.entries, r.q) + "\nnorm_sq = [";
    for (std::size_t k = 0; k < d.norm_sq.size(); ++k) out += (k ? ", " : "") + to_text(d.norm_sq[k], r.q);
    return out + "]\n";
  }
  if (r.kind == "eta") {
    LMatrix eta = eta_upper(build_bar_sigma());
    return as_json ? to_json(eta, r.q).dump() + "\n" : to_text(eta, r.q) + "\n";
  }
  if (r.kind == "sigma" || r.kind == "barsigma") {
    SigmaSet set = build_bar_sigma();
    const SigmaArray& arr = r.kind == "sigma" ? set.sigma : set.bar_sigma;
    if (as_json) {
      json out = json::array();
      for (const auto& m : arr) out.push_back(to_json(m, r.q));
      return out.dump() + "\n";
    }
    std::string out;
    for (std::size_t k = 0; k < arr.size(); ++k)
      out += (r.kind == "sigma" ? "sigma^" : "barsigma^") + std::to_string(k) + " =\n" + to_text(arr[k], r.q) + "\n";
    return out;
  }
  throw std::invalid_argument("unknown artifact kind '" + r.kind + "' (expected dmatrix, eta, sigma, barsigma)");
}

}  // namespace qlorentz
