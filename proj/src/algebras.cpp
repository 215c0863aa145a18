#include "qlorentz/algebras.hpp"

#include <map>
#include <mutex>

namespace qlorentz {

Laurent default_da_coefficient() { return -(Laurent::q() - Laurent::q_pow(-1)); }

void add_slq2_copy(Algebra::Builder& b, const std::vector<std::string>& n, Sort sort, const Laurent& p,
                   const Laurent& da_coefficient) {
  const auto& [a, bb, c, d] = std::tie(n.at(0), n.at(1), n.at(2), n.at(3));
  for (const auto& g : n) b.generator(g, sort);
  const Laurent p_inv = p.inverse_monomial();
  b.q_commute(bb, a, p_inv);  // ab = p ba
  b.q_commute(c, a, p_inv);   // ac = p ca
  b.q_commute(d, bb, p_inv);  // bd = p db
  b.q_commute(d, c, p_inv);   // cd = p dc
  b.q_commute(c, bb, Laurent(1));
  b.rule(d, a, {{Laurent(1), {a, d}}, {da_coefficient, {bb, c}}});
  b.unimodular(a, d, {{Laurent(1), {}}, {p, {bb, c}}});
}

AlgebraPtr make_slq2(const SlqOptions& opts) {
  Algebra::Builder b("slq2");
  add_slq2_copy(b, {"a", "b", "c", "d"}, Sort::MatrixElement, Laurent::q(), opts.da_coefficient);
  return b.build(opts.require_confluence);
}

namespace {

void add_conjugate_copy(Algebra::Builder& b, const SlqOptions& opts) {
  add_slq2_copy(b, {"abar", "bbar", "cbar", "dbar"}, Sort::ConjugateMatrixElement, Laurent::q_pow(-1),
                opts.da_coefficient.invert_q());
  for (const char* g : {"a", "b", "c", "d"}) b.conjugate_pair(g, std::string(g) + "bar");
}

}  // namespace

AlgebraPtr make_slq2_conjugate(const SlqOptions& opts) {
  Algebra::Builder b("slq2bar");
  add_slq2_copy(b, {"a", "b", "c", "d"}, Sort::MatrixElement, Laurent::q(), opts.da_coefficient);
  add_conjugate_copy(b, opts);
  return b.build(opts.require_confluence);
}

AlgebraPtr make_spinor_algebra(bool quantum_plane, const SlqOptions& opts) {
  Algebra::Builder b(quantum_plane ? "plane" : "spinor");
  add_slq2_copy(b, {"a", "b", "c", "d"}, Sort::MatrixElement, Laurent::q(), opts.da_coefficient);
  for (const char* g : {"x2", "x1", "c2", "c1"}) b.generator(g, Sort::SpinorComponent);
  if (quantum_plane) {
    b.q_commute("x1", "x2", Laurent::q());
    b.q_commute("c1", "c2", Laurent::q());
  }
  return b.build(opts.require_confluence);
}

AlgebraPtr make_dotted_spinor_algebra(const SlqOptions& opts) {
  Algebra::Builder b("dotted");
  add_slq2_copy(b, {"a", "b", "c", "d"}, Sort::MatrixElement, Laurent::q(), opts.da_coefficient);
  add_conjugate_copy(b, opts);
  for (const char* g : {"y1", "y2", "z1", "z2"}) b.generator(g, Sort::SpinorComponent);
  return b.build(opts.require_confluence);
}

AlgebraPtr make_repr_algebra(int copies, const SlqOptions& opts) {
  if (copies < 1 || copies > 2) throw std::invalid_argument("make_repr_algebra: copies must be 1 or 2");
  Algebra::Builder b(copies == 1 ? "repr" : "repr2");
  if (copies == 1) {
    add_slq2_copy(b, {"a", "b", "c", "d"}, Sort::MatrixElement, Laurent::q(), opts.da_coefficient);
  } else {
    add_slq2_copy(b, {"aL", "bL", "cL", "dL"}, Sort::MatrixElement, Laurent::q(), opts.da_coefficient);
    add_slq2_copy(b, {"aR", "bR", "cR", "dR"}, Sort::MatrixElement, Laurent::q(), opts.da_coefficient);
  }
  for (const char* g : {"x1", "x2", "c1", "c2"}) b.generator(g, Sort::SpinorComponent);
  b.q_commute("x2", "x1", Laurent::q());
  b.q_commute("c2", "c1", Laurent::q());
  return b.build(opts.require_confluence);
}

AlgebraPtr make_bispinor_algebra(const SlqOptions& opts) {
  Algebra::Builder b("bispinor");
  add_slq2_copy(b, {"a", "b", "c", "d"}, Sort::MatrixElement, Laurent::q(), opts.da_coefficient);
  add_conjugate_copy(b, opts);
  for (const char* g : {"X11", "X12", "X21", "X22"}) b.generator(g, Sort::Symbol);
  return b.build(opts.require_confluence);
}

std::vector<std::string> algebra_names() {
  return {"slq2", "slq2bar", "plane", "spinor", "dotted", "repr", "repr2", "bispinor"};
}

AlgebraPtr named_algebra(std::string_view name) {
  static std::mutex mutex;
  static std::map<std::string, AlgebraPtr, std::less<>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  AlgebraPtr alg;
  if (name == "slq2") alg = make_slq2();
  else if (name == "slq2bar") alg = make_slq2_conjugate();
  else if (name == "plane") alg = make_spinor_algebra(true);
  else if (name == "spinor") alg = make_spinor_algebra(false);
  else if (name == "dotted") alg = make_dotted_spinor_algebra();
  else if (name == "repr") alg = make_repr_algebra(1);
  else if (name == "repr2") alg = make_repr_algebra(2);
  else if (name == "bispinor") alg = make_bispinor_algebra();
  else throw std::invalid_argument("unknown algebra '" + std::string(name) + "'");
  cache.emplace(std::string(name), alg);
  return alg;
}

}  // namespace qlorentz
