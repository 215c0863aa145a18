#include "qlorentz/ncalg.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace qlorentz {

namespace {

void add_to(Terms& terms, const Word& w, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

Word concat(const Word& x, const Word& y) {
  Word r;
  r.reserve(x.size() + y.size());
  r.insert(r.end(), x.begin(), x.end());
  r.insert(r.end(), y.begin(), y.end());
  return r;
}

}  // namespace

// ---------------------------------------------------------------- Builder

Algebra::Builder& Algebra::Builder::generator(std::string name, Sort sort) {
  for (const auto& g : gens_)
    if (g.name == name) throw std::invalid_argument("duplicate generator '" + name + "'");
  if (name == "q" || name == "i") throw std::invalid_argument("reserved generator name '" + name + "'");
  Generator g;
  g.name = std::move(name);
  g.sort = sort;
  g.order_index = static_cast<GenIndex>(gens_.size());
  gens_.push_back(std::move(g));
  return *this;
}

GenIndex Algebra::Builder::index_of(std::string_view name) const {
  for (const auto& g : gens_)
    if (g.name == name) return g.order_index;
  throw UnknownGenerator("unknown generator '" + std::string(name) + "'");
}

Word Algebra::Builder::word_of(const std::vector<std::string>& names) const {
  Word w;
  for (const auto& n : names) w.push_back(index_of(n));
  return w;
}

Algebra::Builder& Algebra::Builder::rule(std::string_view hi, std::string_view lo,
                                         std::vector<std::pair<Laurent, std::vector<std::string>>> rhs) {
  RewriteRule r;
  r.hi = index_of(hi);
  r.lo = index_of(lo);
  if (r.hi <= r.lo)
    throw std::invalid_argument("rule " + std::string(hi) + " " + std::string(lo) + " is not out of order");
  for (const auto& existing : rules_)
    if (existing.hi == r.hi && existing.lo == r.lo)
      throw std::invalid_argument("second rule for pair " + std::string(hi) + " " + std::string(lo));
  const Word lhs{r.hi, r.lo};
  for (auto& [c, names] : rhs) {
    Word w = word_of(names);
    if (!WordLess{}(w, lhs))
      throw std::invalid_argument("rule " + std::string(hi) + " " + std::string(lo) +
                                  " has a right-hand side word not below its left-hand side");
    r.rhs.push_back({c, std::move(w)});
  }
  rules_.push_back(std::move(r));
  return *this;
}

Algebra::Builder& Algebra::Builder::q_commute(std::string_view hi, std::string_view lo, const Laurent& factor) {
  return rule(hi, lo, {{factor, {std::string(lo), std::string(hi)}}});
}

Algebra::Builder& Algebra::Builder::unimodular(std::string_view a, std::string_view d,
                                               std::vector<std::pair<Laurent, std::vector<std::string>>> rhs) {
  UnimodularRule u;
  u.a = index_of(a);
  u.d = index_of(d);
  if (u.a >= u.d) throw std::invalid_argument("unimodular rule needs order(a) < order(d)");
  for (auto& [c, names] : rhs) u.rhs.push_back({c, word_of(names)});
  unimodular_.push_back(std::move(u));
  return *this;
}

Algebra::Builder& Algebra::Builder::conjugate_pair(std::string_view x, std::string_view xbar) {
  GenIndex i = index_of(x);
  GenIndex j = index_of(xbar);
  gens_[i].conjugate = j;
  gens_[j].conjugate = i;
  return *this;
}

Algebra::Builder& Algebra::Builder::step_budget(long steps) {
  budget_ = steps;
  return *this;
}

AlgebraPtr Algebra::Builder::build(bool require_confluence) const {
  std::shared_ptr<Algebra> alg(new Algebra());
  alg->name_ = name_;
  alg->gens_ = gens_;
  alg->rules_ = rules_;
  alg->unimodular_ = unimodular_;
  alg->budget_ = budget_;
  const std::size_t n = gens_.size();
  alg->rule_table_.assign(n * n, std::nullopt);
  for (std::size_t k = 0; k < rules_.size(); ++k) alg->rule_table_[rules_[k].hi * n + rules_[k].lo] = k;
  if (require_confluence) {
    auto failures = alg->confluence_failures();
    if (!failures.empty())
      throw std::invalid_argument("algebra '" + name_ + "' is not locally confluent at overlap " +
                                  alg->word_to_string(failures.front().overlap));
  }
  return alg;
}

// ---------------------------------------------------------------- Algebra

std::optional<GenIndex> Algebra::find(std::string_view name) const {
  for (const auto& g : gens_)
    if (g.name == name) return g.order_index;
  return std::nullopt;
}

GenIndex Algebra::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownGenerator("unknown generator '" + std::string(name) + "' in algebra '" + name_ + "'");
}

std::vector<RuleTerm> Algebra::rule_for(GenIndex hi, GenIndex lo) const {
  const auto& slot = rule_table_[hi * gens_.size() + lo];
  if (slot) return rules_[*slot].rhs;
  return {{Laurent(1), Word{lo, hi}}};
}

std::string Algebra::word_to_string(const Word& w) const {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += "*";
    s += gens_.at(w[k]).name;
  }
  return s;
}

std::string Algebra::format_word(const Word& w) const {
  std::string word;
  for (std::size_t k = 0; k < w.size();) {
    std::size_t run = 1;
    while (k + run < w.size() && w[k + run] == w[k]) ++run;
    if (!word.empty()) word += "*";
    word += gens_.at(w[k]).name;
    if (run > 1) word += "^" + std::to_string(run);
    k += run;
  }
  return word;
}

Terms Algebra::normal_form(const Word& w) const {
  long steps = 0;
  return normal_form_impl(w, steps, 0);
}

Terms Algebra::normal_form_impl(const Word& w, long& steps, int depth) const {
  std::size_t pos = 0;
  while (pos + 1 < w.size() && w[pos] <= w[pos + 1]) ++pos;
  if (pos + 1 >= w.size()) return Terms{{w, Laurent(1)}};
  {
    std::shared_lock lock(cache_mutex_);
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
  }
  if (++steps > budget_ || depth > 100000)
    throw RewriteBudgetExceeded("rewrite budget exceeded in algebra '" + name_ + "' at word " + word_to_string(w));
  Terms result;
  const Word prefix(w.begin(), w.begin() + static_cast<long>(pos));
  const Word suffix(w.begin() + static_cast<long>(pos) + 2, w.end());
  for (const auto& rt : rule_for(w[pos], w[pos + 1])) {
    Word next = concat(concat(prefix, rt.word), suffix);
    for (const auto& [nw, nc] : normal_form_impl(next, steps, depth + 1)) add_to(result, nw, nc * rt.coeff);
  }
  {
    std::unique_lock lock(cache_mutex_);
    cache_.emplace(w, result);
  }
  return result;
}

Terms Algebra::apply_rule_at(const Word& w, std::size_t pos) const {
  Terms result;
  const Word prefix(w.begin(), w.begin() + static_cast<long>(pos));
  const Word suffix(w.begin() + static_cast<long>(pos) + 2, w.end());
  for (const auto& rt : rule_for(w[pos], w[pos + 1])) {
    Word next = concat(concat(prefix, rt.word), suffix);
    for (const auto& [nw, nc] : normal_form(next)) add_to(result, nw, nc * rt.coeff);
  }
  return result;
}

std::vector<ConfluenceFailure> Algebra::confluence_failures() const {
  std::vector<ConfluenceFailure> out;
  const auto n = static_cast<GenIndex>(gens_.size());
  for (GenIndex k = 0; k < n; ++k)
    for (GenIndex j = 0; j < k; ++j)
      for (GenIndex i = 0; i < j; ++i) {
        Word w{k, j, i};
        Terms left = apply_rule_at(w, 0);
        Terms right = apply_rule_at(w, 1);
        if (left != right) out.push_back({w, std::move(left), std::move(right)});
      }
  return out;
}

// ---------------------------------------------------------------- NCPoly

NCPoly::NCPoly(AlgebraPtr alg, const Laurent& scalar) : alg_(std::move(alg)) { add(Word{}, scalar); }

NCPoly NCPoly::generator(const AlgebraPtr& alg, std::string_view name) {
  return from_word(alg, Word{alg->index(name)});
}

NCPoly NCPoly::from_word(const AlgebraPtr& alg, const Word& w, const Laurent& coeff) {
  NCPoly p(alg);
  if (coeff.is_zero()) return p;
  for (GenIndex g : w)
    if (g >= alg->size()) throw UnknownGenerator("generator index out of range");
  for (const auto& [nw, nc] : alg->normal_form(w)) p.add(nw, nc * coeff);
  return p;
}

NCPoly NCPoly::from_formal(const AlgebraPtr& alg, const std::vector<RuleTerm>& formal) {
  NCPoly p(alg);
  for (const auto& t : formal) p += from_word(alg, t.word, t.coeff);
  return p;
}

void NCPoly::add(const Word& w, const Laurent& c) { add_to(terms_, w, c); }

bool NCPoly::is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Laurent NCPoly::scalar_part() const { return coeff(Word{}); }

Laurent NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Laurent() : it->second;
}

std::size_t NCPoly::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

NCPoly NCPoly::operator-() const {
  NCPoly r(alg_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  if (alg_ != o.alg_) throw SpecMismatch("adding polynomials from different algebras");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  if (alg_ != o.alg_) throw SpecMismatch("subtracting polynomials from different algebras");
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Laurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

NCPoly operator*(const NCPoly& x, const NCPoly& y) { return multiply(x, y); }

bool operator==(const NCPoly& x, const NCPoly& y) { return x.alg_ == y.alg_ && x.terms_ == y.terms_; }

NCPoly NCPoly::pow(unsigned n) const {
  NCPoly r(alg_, Laurent(1));
  for (unsigned k = 0; k < n; ++k) r = r * *this;
  return r;
}

NCPoly NCPoly::map_coefficients(const std::function<Laurent(const Laurent&)>& f) const {
  NCPoly r(alg_);
  for (const auto& [w, c] : terms_) r.add(w, f(c));
  return r;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::string> parts;
  for (const auto& [w, c] : terms_) {
    if (w.empty()) {
      // A constant is itself a sum of scalar terms; emit them in place.
      std::string cs = c.to_string();
      parts.push_back(cs);
      continue;
    }
    const std::string word = alg_->format_word(w);
    std::string term;
    if (c.is_one()) {
      term = word;
    } else if ((-c).is_one()) {
      term = "-" + word;
    } else if (c.is_monomial()) {
      term = c.to_string() + "*" + word;
    } else {
      const GaussRational& lead = c.coeff(c.max_exp());
      if (lead.is_real() && sgn(lead.re) < 0)
        term = "-(" + (-c).to_string() + ")*" + word;
      else
        term = "(" + c.to_string() + ")*" + word;
    }
    parts.push_back(term);
  }
  std::string out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) {
    const std::string& t = parts[k];
    if (t.front() == '-')
      out += " - " + t.substr(1);
    else
      out += " + " + t;
  }
  return out;
}

NCPoly multiply(const NCPoly& x, const NCPoly& y) {
  if (x.algebra() != y.algebra()) throw SpecMismatch("multiplying polynomials from different algebras");
  const AlgebraPtr& alg = x.algebra();
  NCPoly r(alg);
  Terms acc;
  for (const auto& [wx, cx] : x.terms())
    for (const auto& [wy, cy] : y.terms()) {
      Laurent c = cx * cy;
      for (const auto& [w, k] : alg->normal_form(concat(wx, wy))) add_to(acc, w, k * c);
    }
  for (const auto& [w, c] : acc) r += NCPoly::from_word(alg, w, c);
  return r;
}

NCPoly commutator(const NCPoly& x, const NCPoly& y) { return x * y - y * x; }

NCPoly reduce_unimodular(const NCPoly& p) {
  const AlgebraPtr& alg = p.algebra();
  std::vector<std::pair<Word, Laurent>> work(p.terms().begin(), p.terms().end());
  NCPoly done(alg);
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    bool rewritten = false;
    for (const auto& rule : alg->unimodular_rules()) {
      auto d_pos = std::find(w.begin(), w.end(), rule.d);
      if (d_pos == w.end()) continue;
      auto a_rpos = std::find(std::make_reverse_iterator(d_pos), w.rend(), rule.a);
      if (a_rpos == w.rend()) continue;
      auto a_pos = std::prev(a_rpos.base());
      const Word prefix(w.begin(), a_pos);
      const Word middle(std::next(a_pos), d_pos);
      const Word suffix(std::next(d_pos), w.end());
      // a*middle = kappa^{-1} * middle*a, where middle*a normal-orders to kappa*a*middle.
      Word ma = middle;
      ma.push_back(rule.a);
      Terms nf = alg->normal_form(ma);
      if (nf.size() != 1)
        throw std::logic_error("reduce_unimodular: generator does not q-commute past " + alg->word_to_string(middle));
      Laurent kappa_inv = nf.begin()->second.inverse_monomial();
      for (const auto& rt : rule.rhs) {
        Word next = concat(concat(concat(prefix, middle), rt.word), suffix);
        for (const auto& [nw, nc] : alg->normal_form(next)) work.emplace_back(nw, nc * rt.coeff * kappa_inv * c);
      }
      rewritten = true;
      break;
    }
    if (!rewritten) done += NCPoly::from_word(alg, w, c);
  }
  return done;
}

NCPoly star(const NCPoly& p) {
  const AlgebraPtr& alg = p.algebra();
  NCPoly r(alg);
  for (const auto& [w, c] : p.terms()) {
    Word rev;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const auto& g = alg->generators()[*it];
      if (!g.conjugate) throw std::invalid_argument("generator '" + g.name + "' has no conjugate");
      rev.push_back(*g.conjugate);
    }
    r += NCPoly::from_word(alg, rev, c.conj());
  }
  return r;
}

NCPoly substitute(const NCPoly& p, const AlgebraPtr& target, const std::map<std::string, NCPoly>& images) {
  NCPoly r(target);
  const auto& gens = p.algebra()->generators();
  for (const auto& [w, c] : p.terms()) {
    NCPoly term(target, c);
    for (GenIndex g : w) {
      auto it = images.find(gens[g].name);
      term = term * (it != images.end() ? it->second : NCPoly::generator(target, gens[g].name));
    }
    r += term;
  }
  return r;
}

std::complex<double> substitute_numeric(const NCPoly& p, const std::map<std::string, std::complex<double>>& values,
                                        double q_value) {
  std::complex<double> acc = 0.0;
  const auto& gens = p.algebra()->generators();
  for (const auto& [w, c] : p.terms()) {
    std::complex<double> term = c.specialize(q_value);
    for (GenIndex g : w) {
      auto it = values.find(gens[g].name);
      if (it == values.end()) throw std::invalid_argument("no value assigned to generator '" + gens[g].name + "'");
      term *= it->second;
    }
    acc += term;
  }
  return acc;
}

NCPoly specialize_at_one(const NCPoly& p) {
  // s = q^{1/2} = 1 as well, so every coefficient collapses to the sum of its terms.
  return p.map_coefficients([](const Laurent& c) {
    GaussRational sum;
    for (const auto& [e, v] : c.terms()) sum += v;
    return Laurent(sum);
  });
}

}  // namespace qlorentz
