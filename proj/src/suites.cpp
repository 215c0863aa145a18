#include "qlorentz/suites.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "qlorentz/export.hpp"
#include "qlorentz/qcombinatorics.hpp"
#include "qlorentz/repr.hpp"
#include "qlorentz/sigma.hpp"

namespace qlorentz {

bool SuiteReport::all_pass() const {
  for (const auto& it : items)
    if (!it.pass) return false;
  return true;
}

std::vector<std::string> SuiteReport::failed_ids() const {
  std::vector<std::string> out;
  for (const auto& it : items)
    if (!it.pass) out.push_back(it.id);
  return out;
}

Mutation parse_mutation(std::string_view text) {
  Mutation m;
  if (text == "da-sign") {
    m.flip_da_sign = true;
  } else if (text.size() == 5 && text.substr(0, 3) == "eps" && (text[3] == '0' || text[3] == '1') &&
             (text[4] == '0' || text[4] == '1')) {
    m.flip_eps_entry = std::pair{text[3] - '0', text[4] - '0'};
  } else {
    throw std::invalid_argument("unknown mutation '" + std::string(text) + "' (expected da-sign or epsRC)");
  }
  return m;
}

std::vector<std::string> suite_names() { return {"epsilon", "sldet", "spinor", "sigma", "vectorrep", "repr", "all"}; }

namespace {

constexpr double kNumericTolerance = 1e-10;
constexpr std::size_t kMaxResidualChars = 400;

struct Context {
  SuiteOptions options;
  SlqOptions slq;
  Metric metric;

  explicit Context(const SuiteOptions& o) : options(o) {
    if (o.mutation.flip_da_sign) slq.da_coefficient = -slq.da_coefficient;
    if (auto e = o.mutation.flip_eps_entry) metric.lower(e->first, e->second) = -metric.lower(e->first, e->second);
  }
};

struct Outcome {
  bool pass;
  std::string residual;
};

Outcome ok() { return {true, "0"}; }

Outcome compare(const Laurent& lhs, const Laurent& rhs) {
  if (lhs == rhs) return ok();
  return {false, (lhs - rhs).to_string()};
}

template <class T>
Outcome compare(const T& lhs, const T& rhs) {
  if (lhs == rhs) return ok();
  return {false, to_string(lhs - rhs)};
}

Outcome compare(const NCPoly& lhs, const NCPoly& rhs) {
  if (lhs == rhs) return ok();
  return {false, (lhs - rhs).to_string()};
}

Outcome combine(const std::vector<std::pair<std::string, Outcome>>& parts) {
  Outcome out = ok();
  std::string residual;
  for (const auto& [label, o] : parts) {
    if (o.pass) continue;
    out.pass = false;
    residual += (residual.empty() ? "" : "; ") + label + ": " + o.residual;
  }
  if (!out.pass) out.residual = residual;
  return out;
}

Outcome numeric_bound(double err, double tol) {
  std::ostringstream os;
  os.precision(3);
  os << "max error " << err;
  return {err < tol, err < tol ? "0" : os.str()};
}

class Runner {
 public:
  Runner(std::string suite, SuiteReport& report) : suite_(std::move(suite)), report_(report) {}

  void check(const std::string& id, const std::string& description, const std::function<Outcome()>& body) {
    SuiteItem item{suite_, suite_ + "." + id, description, false, ""};
    try {
      Outcome o = body();
      item.pass = o.pass;
      item.residual = o.residual;
    } catch (const std::exception& e) {
      item.residual = std::string("exception: ") + e.what();
    }
    for (std::size_t pos; (pos = item.residual.find('\n')) != std::string::npos;) item.residual.erase(pos, 1);
    if (item.residual.size() > kMaxResidualChars) item.residual = item.residual.substr(0, kMaxResidualChars) + " ...";
    report_.items.push_back(std::move(item));
  }

 private:
  std::string suite_;
  SuiteReport& report_;
};

Laurent at_one(const Laurent& x) {
  GaussRational sum;
  for (const auto& [e, c] : x.terms()) sum += c;
  return Laurent(sum);
}

LMatrix at_one(const LMatrix& m) {
  return m.map([](const Laurent& x) { return at_one(x); });
}

LMatrix scaled(const LMatrix& m, const Laurent& c) {
  return m.map([&](const Laurent& x) { return c * x; });
}

NCMatrix scaled(const LMatrix& m, const NCPoly& p) {
  NCMatrix out(m.rows(), m.cols(), NCPoly(p.algebra()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c) * p;
  return out;
}

NCMatrix t_of(const AlgebraPtr& alg) { return generator_matrix(alg, {"a", "b", "c", "d"}, 2, 2); }

NCPoly contract(const SpinorExpr& lower, const SpinorExpr& upper) {
  return lower.components[0] * upper.components[0] + lower.components[1] * upper.components[1];
}

void epsilon_suite(const Context& ctx, SuiteReport& rep) {
  Runner run("epsilon", rep);
  const LMatrix& e = ctx.metric.lower;
  const LMatrix& up = ctx.metric.upper;
  run.check("square", "eps_q squared is minus the identity", [&] { return compare(e * e, scaled(l_identity(2), -1)); });
  run.check("gram", "eps_q eps_q^t = diag(q^-1, q)", [&] {
    return compare(e * e.transpose(), l_diag({Laurent::q_pow(-1), Laurent::q()}));
  });
  run.check("raise-lower", "eps^{AC} eps_{BC} = delta^A_B", [&] { return compare(up * e.transpose(), l_identity(2)); });
  run.check("contravariant", "contravariant eps^(q) = -eps_q^t", [&] { return compare(up, scaled(e.transpose(), -1)); });
  run.check("conjugate", "dotted metric squares to minus the identity", [&] {
    const LMatrix c = ctx.metric.conjugate_lower();
    return compare(c * c, scaled(l_identity(2), -1));
  });
}

void sldet_suite(const Context& ctx, SuiteReport& rep) {
  Runner run("sldet", rep);
  const AlgebraPtr alg = make_slq2({ctx.slq.da_coefficient, false});
  const NCMatrix t = t_of(alg);
  const LMatrix& e = ctx.metric.lower;
  const NCPoly det = q_det_formula(t);
  run.check("confluence", "every overlap of the rewrite rules resolves", [&] {
    auto fails = alg->confluence_failures();
    return fails.empty() ? ok() : Outcome{false, std::to_string(fails.size()) + " unresolved overlaps"};
  });
  run.check("tt-eps-t", "T^t eps_q T = eps_q (ad - q bc)", [&] { return compare(t.transpose() * e * t, scaled(e, det)); });
  run.check("t-eps-tt", "T eps_q T^t = eps_q (ad - q bc)", [&] { return compare(t * e * t.transpose(), scaled(e, det)); });
  for (const char* g : {"a", "b", "c", "d"})
    run.check(std::string("center-") + g, std::string("ad - q bc commutes with ") + g,
              [&] { return compare(commutator(det, NCPoly::generator(alg, g)), NCPoly(alg)); });
  run.check("center-conjugate", "the conjugate determinant is central in the conjugate copy", [&] {
    const AlgebraPtr two = make_slq2_conjugate({ctx.slq.da_coefficient, false});
    auto g = [&](const char* n) { return NCPoly::generator(two, n); };
    const NCPoly dbar = g("abar") * g("dbar") - Laurent::q_pow(-1) * g("bbar") * g("cbar");
    std::vector<std::pair<std::string, Outcome>> parts;
    for (const char* n : {"abar", "bbar", "cbar", "dbar"})
      parts.push_back({n, compare(commutator(dbar, g(n)), NCPoly(two))});
    return combine(parts);
  });
  run.check("antipode", "T S(T) = S(T) T = 1 modulo the unit determinant", [&] {
    const NCMatrix s = antipode(t);
    return combine({{"T S(T)", compare(reduce_unimodular(t * s), nc_identity(alg, 2))},
                    {"S(T) T", compare(reduce_unimodular(s * t), nc_identity(alg, 2))}});
  });
  run.check("transpose-inverse", "T^t (-eps_q T eps_q) = 1 modulo the unit determinant", [&] {
    return compare(reduce_unimodular(t.transpose() * transpose_inverse(t, e)), nc_identity(alg, 2));
  });
}

void spinor_suite(const Context& ctx, SuiteReport& rep) {
  Runner run("spinor", rep);
  const Metric& m = ctx.metric;
  const AlgebraPtr commuting = make_spinor_algebra(false, {ctx.slq.da_coefficient, false});
  const AlgebraPtr plane = make_spinor_algebra(true, {ctx.slq.da_coefficient, false});
  for (const auto& [label, alg] : {std::pair{"commuting", commuting}, std::pair{"plane", plane}}) {
    const AlgebraPtr a = alg;
    run.check(std::string("form-invariance-") + label,
              std::string("xi^A chi_A is invariant under T (right and left action, ") + label + " spinors)", [&] {
                const NCMatrix t = t_of(a);
                auto xi = SpinorExpr::named(a, "x1", "x2");
                auto chi = SpinorExpr::named(a, "c1", "c2");
                const NCPoly before = reduce_unimodular(invariant_form(xi, chi, m.lower));
                std::vector<std::pair<std::string, Outcome>> parts;
                for (auto [name, action] : {std::pair{"right", Action::Right}, std::pair{"left", Action::Left}}) {
                  auto after = invariant_form(transform(xi, t, TransformMode::Contravariant, action, m),
                                              transform(chi, t, TransformMode::Contravariant, action, m), m.lower);
                  parts.push_back({name, compare(reduce_unimodular(after), before)});
                }
                return combine(parts);
              });
  }
  run.check("eps-invariance", "eps_q is an invariant tensor: T eps_q T^t = T^t eps_q T = eps_q", [&] {
    const AlgebraPtr alg = make_slq2({ctx.slq.da_coefficient, false});
    const NCMatrix t = t_of(alg);
    const NCMatrix e = lift(m.lower, alg);
    return combine({{"T eps T^t", compare(reduce_unimodular(t * e * t.transpose()), e)},
                    {"T^t eps T", compare(reduce_unimodular(t.transpose() * e * t), e)}});
  });
  run.check("covariant-contraction", "xi_A chi^A is invariant with xi_A transformed covariantly", [&] {
    const NCMatrix t = t_of(commuting);
    auto xi_low = SpinorExpr::named(commuting, "x1", "x2", Variance::Lower);
    auto chi = SpinorExpr::named(commuting, "c1", "c2");
    std::vector<std::pair<std::string, Outcome>> parts;
    for (auto [name, action] : {std::pair{"right", Action::Right}, std::pair{"left", Action::Left}}) {
      auto lhs = contract(transform(xi_low, t, TransformMode::Covariant, action, m),
                          transform(chi, t, TransformMode::Contravariant, action, m));
      parts.push_back({name, compare(reduce_unimodular(lhs), contract(xi_low, chi))});
    }
    return combine(parts);
  });
  run.check("lowering-covariance", "lowering an index commutes with the transformation", [&] {
    const NCMatrix t = t_of(commuting);
    auto xi = SpinorExpr::named(commuting, "x1", "x2");
    auto x = lower_index(transform(xi, t, TransformMode::Contravariant, Action::Right, m), false, m);
    auto y = transform(lower_index(xi, false, m), t, TransformMode::Covariant, Action::Right, m);
    return combine({{"0", compare(reduce_unimodular(x.components[0]), reduce_unimodular(y.components[0]))},
                    {"1", compare(reduce_unimodular(x.components[1]), reduce_unimodular(y.components[1]))}});
  });
  run.check("plane-relation", "a vanishing form xi^A xi_A forces xi^1 xi^2 = q xi^2 xi^1", [&] {
    const Laurent factor = form_commutation_factor(m.lower);
    auto xi = SpinorExpr::named(plane, "x1", "x2");
    return combine({{"extracted factor", compare(factor, Laurent::q())},
                    {"form on the plane", compare(invariant_form(xi, xi, m.lower), NCPoly(plane))}});
  });
  run.check("dotted-invariance", "the dotted form is invariant under the conjugate matrix", [&] {
    const AlgebraPtr alg = make_dotted_spinor_algebra({ctx.slq.da_coefficient, false});
    const NCMatrix t = t_of(alg);
    auto y = SpinorExpr::named(alg, "y1", "y2", Variance::Upper, true);
    auto z = SpinorExpr::named(alg, "z1", "z2", Variance::Upper, true);
    auto lhs = invariant_form(transform(y, t, TransformMode::Conjugate, Action::Right, m),
                              transform(z, t, TransformMode::Conjugate, Action::Right, m), m.conjugate_lower());
    return compare(reduce_unimodular(lhs), reduce_unimodular(invariant_form(y, z, m.conjugate_lower())));
  });
}

void sigma_suite(const Context& ctx, SuiteReport& rep) {
  Runner run("sigma", rep);
  const SigmaSet set = build_bar_sigma(ctx.metric, false);
  const LMatrix eta = eta_upper(set);
  const LMatrix reference = reference_eta_upper();
  run.check("barsigma-list", "eps^ eps^ sigma reproduces the explicit bar-sigma list entrywise", [&] {
    const SigmaArray list = reference_bar_sigma();
    std::vector<std::pair<std::string, Outcome>> parts;
    for (int k = 0; k < 4; ++k) parts.push_back({"m=" + std::to_string(k), compare(set.bar_sigma[k], list[k])});
    return combine(parts);
  });
  run.check("eta-reference", "1/2 Tr(bar_sigma^m sigma^n) equals the explicit metric entrywise",
            [&] { return compare(eta, reference); });
  run.check("eta-symmetric", "the contracted metric is symmetric", [&] { return compare(eta, eta.transpose()); });
  run.check("completeness-reference", "completeness with eta_mn = inverse of the explicit metric", [&] {
    auto report = completeness_check(set, inverse(reference));
    return report.pass ? ok() : Outcome{false, to_string(report.residual)};
  });
  run.check("completeness", "completeness with eta_mn = inverse of the contracted metric", [&] {
    auto report = completeness_check(set, eta_lower(eta));
    return report.pass ? ok() : Outcome{false, to_string(report.residual)};
  });

  const SigmaArray& sigma = set.sigma;
  SigmaArray bar;
  for (int k = 0; k < 4; ++k) bar[k] = at_one(set.bar_sigma[k]);
  const LMatrix minkowski = l_diag({1, -1, -1, -1});
  auto two_eta = [&](int n, int m) { return scaled(l_identity(2), Laurent(2) * minkowski(n, m)); };
  run.check("classical-bar", "at q = 1 bar_sigma = (1, -sigma)", [&] {
    std::vector<std::pair<std::string, Outcome>> parts{{"m=0", compare(bar[0], l_identity(2))}};
    for (int k = 1; k < 4; ++k) parts.push_back({"m=" + std::to_string(k), compare(bar[k], scaled(sigma[k], -1))});
    return combine(parts);
  });
  run.check("classical-anticommutator-swapped", "at q = 1 bar_sigma^m sigma^n + sigma^n bar_sigma^m = 2 eta^nm",
            [&] {
              std::vector<std::pair<std::string, Outcome>> parts;
              for (int m = 0; m < 4; ++m)
                for (int n = 0; n < 4; ++n)
                  parts.push_back({"(" + std::to_string(m) + "," + std::to_string(n) + ")",
                                   compare(bar[m] * sigma[n] + sigma[n] * bar[m], two_eta(n, m))});
              return combine(parts);
            });
  run.check("classical-anticommutator", "at q = 1 bar_sigma^m sigma^n + bar_sigma^n sigma^m = 2 eta^mn", [&] {
    std::vector<std::pair<std::string, Outcome>> parts;
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n)
        parts.push_back({"(" + std::to_string(m) + "," + std::to_string(n) + ")",
                         compare(bar[m] * sigma[n] + bar[n] * sigma[m], two_eta(m, n))});
    return combine(parts);
  });
  run.check("classical-trace", "at q = 1 Tr bar_sigma^m sigma^n = 2 eta^nm", [&] {
    std::vector<std::pair<std::string, Outcome>> parts;
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n)
        parts.push_back({"(" + std::to_string(m) + "," + std::to_string(n) + ")",
                         compare(trace(bar[m] * sigma[n]), Laurent(2) * minkowski(n, m))});
    return combine(parts);
  });
  run.check("classical-lowered-trace", "at q = 1 bar_sigma^m sigma_n contracts to 2 delta^m_n", [&] {
    std::vector<std::pair<std::string, Outcome>> parts;
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n)
        parts.push_back({"(" + std::to_string(m) + "," + std::to_string(n) + ")",
                         compare(trace(bar[m] * scaled(sigma[n], minkowski(n, n))), Laurent(m == n ? 2 : 0))});
    return combine(parts);
  });
  run.check("classical-completeness", "at q = 1 sigma_n bar_sigma^n gives 2 delta delta", [&] {
    auto report = completeness_check(SigmaSet{sigma, bar}, minkowski);
    return report.pass ? ok() : Outcome{false, to_string(report.residual)};
  });
}

using CMat = std::array<std::array<std::complex<double>, 4>, 4>;
using Point = std::map<std::string, std::complex<double>>;

CMat numeric(const NCMatrix& m, const Point& values) {
  CMat out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[r][c] = substitute_numeric(m(r, c), values, 1.0);
  return out;
}

Point unimodular_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::complex<double> a{u(rng) + 2.0, u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
  std::complex<double> d = (1.0 + b * c) / a;
  return {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"abar", std::conj(a)}, {"bbar", std::conj(b)},
          {"cbar", std::conj(c)}, {"dbar", std::conj(d)}};
}

Point product_point(const Point& x, const Point& y) {
  auto at = [](const Point& p, int r, int c) { return p.at(std::string(1, "abcd"[2 * r + c])); };
  Point out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      std::string name(1, "abcd"[2 * r + c]);
      out[name] = at(x, r, 0) * at(y, 0, c) + at(x, r, 1) * at(y, 1, c);
      out[name + "bar"] = std::conj(out[name]);
    }
  return out;
}

void vectorrep_suite(const Context& ctx, SuiteReport& rep) {
  Runner run("vectorrep", rep);
  const AlgebraPtr alg = make_slq2_conjugate({ctx.slq.da_coefficient, false});
  const SigmaSet set = build_bar_sigma(ctx.metric, false);
  const LMatrix lower = eta_lower(eta_upper(set));
  run.check("identity", "vector_rep(1) = 1",
            [&] { return compare(vector_rep(nc_identity(alg, 2), set, lower), nc_identity(alg, 4)); });
  const NCMatrix symbolic = vector_rep(t_of(alg), set, lower);
  const double eta[4] = {1, -1, -1, -1};
  const int points = ctx.options.random_points;
  run.check("lorentz-at-one",
            "at q = 1 random unimodular T give real M with |M^t eta M - eta| < 1e-10 (" + std::to_string(points) +
                " points)",
            [&] {
              std::mt19937_64 rng(ctx.options.seed);
              double err = 0;
              for (int trial = 0; trial < points; ++trial) {
                CMat mm = numeric(symbolic, unimodular_point(rng));
                for (int r = 0; r < 4; ++r)
                  for (int c = 0; c < 4; ++c) {
                    err = std::max(err, std::abs(mm[r][c].imag()));
                    std::complex<double> g = 0;
                    for (int k = 0; k < 4; ++k) g += mm[k][r] * eta[k] * mm[k][c];
                    err = std::max(err, std::abs(g - (r == c ? eta[r] : 0.0)));
                  }
              }
              return numeric_bound(err, kNumericTolerance);
            });
  run.check("homomorphism-at-one",
            "at q = 1 |vector_rep(T1 T2) - vector_rep(T1) vector_rep(T2)| < 1e-10 (" + std::to_string(points) +
                " pairs)",
            [&] {
              std::mt19937_64 rng(ctx.options.seed + 1);
              double err = 0;
              for (int trial = 0; trial < points; ++trial) {
                Point p1 = unimodular_point(rng), p2 = unimodular_point(rng);
                CMat lhs = numeric(symbolic, product_point(p1, p2));
                CMat x = numeric(symbolic, p1), y = numeric(symbolic, p2);
                for (int r = 0; r < 4; ++r)
                  for (int c = 0; c < 4; ++c) {
                    std::complex<double> v = 0;
                    for (int k = 0; k < 4; ++k) v += x[r][k] * y[k][c];
                    err = std::max(err, std::abs(lhs[r][c] - v));
                  }
              }
              return numeric_bound(err, kNumericTolerance);
            });
  const DetWitness w = detq_nonconservation_witness(make_bispinor_algebra({ctx.slq.da_coefficient, false}));
  run.check("detq-witness", "det_q(T X T^dagger) - det_q(X) is nonzero", [&] {
    return w.residual.is_zero() ? Outcome{false, "residual vanishes"} : ok();
  });
  run.check("detq-witness-classical", "the same residual vanishes at q = 1",
            [&] { return compare(w.residual_at_one, NCPoly(w.residual_at_one.algebra())); });
}

// Commutative polynomials in a, b, c, d (exponent vector) with integer coefficients.
using Monomial = std::array<int, 4>;
using CPoly = std::map<Monomial, mpz_class>;

// Classical spin-j entry: coefficient of x^{j+m'} y^{j-m'} in
// (a x + b y)^{j+m} (c x + d y)^{j-m}.
CPoly symmetric_power_entry(int two_j, int two_m, int two_mp) {
  const int p = (two_j + two_m) / 2, r = (two_j - two_m) / 2, k_total = (two_j + two_mp) / 2;
  CPoly out;
  for (int k = 0; k <= p; ++k) {  // k factors of a x from the first power
    const int l = k_total - k;     // l factors of c x from the second
    if (l < 0 || l > r) continue;
    mpz_class coeff = factorial(p) / (factorial(k) * factorial(p - k)) * factorial(r) / (factorial(l) * factorial(r - l));
    out[{k, p - k, l, r - l}] += coeff;
  }
  return out;
}

CPoly commutative_image(const NCPoly& p) {
  const auto& gens = p.algebra()->generators();
  CPoly out;
  for (const auto& [w, c] : p.terms()) {
    Monomial e{};
    for (GenIndex g : w) {
      auto pos = std::string("abcd").find(gens[g].name);
      if (pos == std::string::npos) throw std::runtime_error("unexpected generator " + gens[g].name);
      e[pos] += 1;
    }
    GaussRational v = at_one(c).coeff(0);
    if (!v.is_real() || v.re.get_den() != 1) throw std::runtime_error("non-integral coefficient at q = 1");
    out[e] += v.re.get_num();
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

void repr_suite(const Context& ctx, SuiteReport& rep) {
  Runner run("repr", rep);
  const SlqOptions opts{ctx.slq.da_coefficient, false};
  const AlgebraPtr alg = make_repr_algebra(1, opts);
  const NCMatrix t = t_of(alg);
  run.check("spin-half", "D^{1/2} is the generator matrix", [&] { return compare(derive_dmatrix(1, t).entries, t); });
  run.check("coproduct", "D^j(T' T'') = D^j(T') D^j(T'') for j = 1/2, 1, 3/2", [&] {
    const AlgebraPtr two = make_repr_algebra(2, opts);
    const NCMatrix tl = generator_matrix(two, {"aL", "bL", "cL", "dL"}, 2, 2);
    const NCMatrix tr = generator_matrix(two, {"aR", "bR", "cR", "dR"}, 2, 2);
    std::vector<std::pair<std::string, Outcome>> parts;
    for (int two_j = 1; two_j <= 3; ++two_j)
      parts.push_back({"j=" + spin_label(two_j), compare(derive_dmatrix(two_j, tl * tr).entries,
                                                             derive_dmatrix(two_j, tl).entries *
                                                                 derive_dmatrix(two_j, tr).entries)});
    return combine(parts);
  });
  run.check("classical-oracle", "at q = 1 D^j matches the symmetric power of the defining representation, j <= 2",
            [&] {
              std::vector<std::pair<std::string, Outcome>> parts;
              for (int two_j = 0; two_j <= 4; ++two_j) {
                const DMatrix d = derive_dmatrix(two_j, t);
                int bad = 0;
                for (int i = 0; i <= two_j; ++i)
                  for (int k = 0; k <= two_j; ++k)
                    if (commutative_image(d.entries(i, k)) != symmetric_power_entry(two_j, two_j - 2 * i, two_j - 2 * k))
                      ++bad;
                parts.push_back({"j=" + spin_label(two_j),
                                 bad ? Outcome{false, std::to_string(bad) + " entries differ"} : ok()});
              }
              return combine(parts);
            });
  run.check("closed-form", "the closed-form D^j (frozen exponent) equals the derived D^j for j <= 2", [&] {
    std::vector<std::pair<std::string, Outcome>> parts;
    for (int two_j = 0; two_j <= 4; ++two_j) {
      const NCMatrix r = dmatrix_residual(formula_dmatrix(two_j, frozen_formula_convention(), alg),
                                          derive_dmatrix(two_j, t));
      parts.push_back({"j=" + spin_label(two_j), is_zero(r) ? ok() : Outcome{false, to_string(r)}});
    }
    return combine(parts);
  });
  run.check("invariant-Q", "Q(j) is invariant under T for j <= 3/2", [&] {
    std::vector<std::pair<std::string, Outcome>> parts;
    for (int two_j = 0; two_j <= 3; ++two_j)
      parts.push_back({"j=" + spin_label(two_j),
                       compare(invariant_Q_residual(two_j, resolved_invariant_convention(), alg), NCPoly(alg))});
    return combine(parts);
  });
  const ExpansionReport expansion = check_expansion(4, alg);
  run.check("expansion", "(i B)^{2j} expands into V~(jm) (-q)^m V(jm) for 2j <= 4 (" +
                             to_string(resolved_vector_convention()) + ")",
            [&] {
              std::vector<std::pair<std::string, Outcome>> parts;
              for (const auto& row : expansion.rows) {
                bool found = false;
                for (const auto& c : row.closing) found = found || c == resolved_vector_convention();
                parts.push_back({"2j=" + std::to_string(row.two_j), found ? ok() : Outcome{false, "does not close"}});
              }
              return combine(parts);
            });
  run.check("expansion-lemma-plane", "chi_1 chi_2 commutes with chi_2 chi_1", [&] {
    return expansion.single_plane_lemma ? ok() : Outcome{false, "lemma fails"};
  });
  run.check("expansion-lemma-spinors", "xi_1 chi_2 commutes with xi_2 chi_1", [&] {
    return expansion.two_spinor_lemma ? ok() : Outcome{false, "lemma fails"};
  });
}

}  // namespace

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  static const std::map<std::string, void (*)(const Context&, SuiteReport&), std::less<>> suites{
      {"epsilon", epsilon_suite}, {"sldet", sldet_suite},         {"spinor", spinor_suite},
      {"sigma", sigma_suite},     {"vectorrep", vectorrep_suite}, {"repr", repr_suite}};
  const Context ctx(options);
  SuiteReport report{std::string(name), {}};
  if (name == "all") {
    for (const auto& n : suite_names())
      if (n != "all") suites.at(n)(ctx, report);
    return report;
  }
  auto it = suites.find(name);
  if (it == suites.end()) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  it->second(ctx, report);
  return report;
}

std::string format_report(const SuiteReport& report) {
  std::string out;
  std::size_t failed = 0;
  for (const auto& it : report.items) {
    out += (it.pass ? "PASS  " : "FAIL  ") + it.id + "  " + it.description + "\n";
    if (!it.pass) {
      ++failed;
      out += "      residual: " + it.residual + "\n";
    }
  }
  out += report.suite + ": " + std::to_string(report.items.size() - failed) + "/" + std::to_string(report.items.size()) +
         " passed\n";
  return out;
}

}  // namespace qlorentz
