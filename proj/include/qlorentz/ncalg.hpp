#pragma once

/**
 * @file ncalg.hpp
 * @brief Noncommutative polynomial rings presented by quadratic rewrite rules.
 *
 * An Algebra is a totally ordered generator list plus one rewrite rule per
 * out-of-order pair (hi, lo). Words with non-decreasing generator order form
 * the PBW basis; NCPoly values are always kept in that basis. Pairs without
 * an explicit rule commute.
 */

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qlorentz/laurent.hpp"

namespace qlorentz {

using GenIndex = std::uint16_t;
using Word = std::vector<GenIndex>;

/// Graded lexicographic order on words: shorter first, then lexicographic in
/// generator order.
struct WordLess {
  bool operator()(const Word& x, const Word& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  }
};

using Terms = std::map<Word, Laurent, WordLess>;

enum class Sort { MatrixElement, ConjugateMatrixElement, SpinorComponent, Symbol };

struct Generator {
  std::string name;
  Sort sort = Sort::Symbol;
  GenIndex order_index = 0;
  std::optional<GenIndex> conjugate;
};

struct RuleTerm {
  Laurent coeff;
  Word word;
};

/// hi lo -> sum of rhs terms, with order(hi) > order(lo).
struct RewriteRule {
  GenIndex hi = 0;
  GenIndex lo = 0;
  std::vector<RuleTerm> rhs;
};

/// Unit q-determinant relation a d = rhs, applied to PBW words that contain
/// both a and d.
struct UnimodularRule {
  GenIndex a = 0;
  GenIndex d = 0;
  std::vector<RuleTerm> rhs;
};

class RewriteBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownGenerator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SpecMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

struct ConfluenceFailure {
  Word overlap;
  Terms left_first;
  Terms right_first;
};

class Algebra {
 public:
  static constexpr long kDefaultStepBudget = 1'000'000;

  class Builder {
   public:
    explicit Builder(std::string name) : name_(std::move(name)) {}

    Builder& generator(std::string name, Sort sort);
    /// hi lo -> sum_k coeff_k * word_k, words given by generator names.
    Builder& rule(std::string_view hi, std::string_view lo,
                  std::vector<std::pair<Laurent, std::vector<std::string>>> rhs);
    /// hi lo -> factor * lo hi
    Builder& q_commute(std::string_view hi, std::string_view lo, const Laurent& factor);
    Builder& unimodular(std::string_view a, std::string_view d,
                        std::vector<std::pair<Laurent, std::vector<std::string>>> rhs);
    Builder& conjugate_pair(std::string_view x, std::string_view xbar);
    Builder& step_budget(long steps);

    /// Throws std::invalid_argument on malformed rules, and on a failed
    /// overlap check when require_confluence is set.
    AlgebraPtr build(bool require_confluence = true) const;

   private:
    GenIndex index_of(std::string_view name) const;
    Word word_of(const std::vector<std::string>& names) const;

    std::string name_;
    std::vector<Generator> gens_;
    std::vector<RewriteRule> rules_;
    std::vector<UnimodularRule> unimodular_;
    long budget_ = kDefaultStepBudget;
  };

  const std::string& name() const { return name_; }
  const std::vector<Generator>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  std::optional<GenIndex> find(std::string_view name) const;
  /// Throws UnknownGenerator.
  GenIndex index(std::string_view name) const;
  const std::vector<UnimodularRule>& unimodular_rules() const { return unimodular_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  /// Right-hand side for the out-of-order pair (hi, lo).
  std::vector<RuleTerm> rule_for(GenIndex hi, GenIndex lo) const;

  /// PBW normal form of a single word. Memoized; thread-safe.
  Terms normal_form(const Word& w) const;

  /// Every overlap g_k g_j g_i (k > j > i) normalized along both rewrite
  /// paths; returns the triples where the results differ.
  std::vector<ConfluenceFailure> confluence_failures() const;

  std::string word_to_string(const Word& w) const;
  /// Like word_to_string with repeated letters folded: "a^2*b".
  std::string format_word(const Word& w) const;

 private:
  Algebra() = default;
  Terms normal_form_impl(const Word& w, long& steps, int depth) const;
  Terms apply_rule_at(const Word& w, std::size_t pos) const;

  std::string name_;
  std::vector<Generator> gens_;
  std::vector<RewriteRule> rules_;
  std::vector<std::optional<std::size_t>> rule_table_;  // hi * n + lo -> rules_ index
  std::vector<UnimodularRule> unimodular_;
  long budget_ = kDefaultStepBudget;

  struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
      std::size_t h = w.size();
      for (GenIndex g : w) h = h * 1315423911u + g + 0x9e3779b9u;
      return h;
    }
  };
  mutable std::shared_mutex cache_mutex_;
  mutable std::unordered_map<Word, Terms, WordHash> cache_;
};

/// Normal-ordered noncommutative polynomial with Laurent coefficients.
class NCPoly {
 public:
  explicit NCPoly(AlgebraPtr alg) : alg_(std::move(alg)) {}
  NCPoly(AlgebraPtr alg, const Laurent& scalar);

  static NCPoly generator(const AlgebraPtr& alg, std::string_view name);
  /// Normal-orders an arbitrary formal sum of words.
  static NCPoly from_formal(const AlgebraPtr& alg, const std::vector<RuleTerm>& formal);
  static NCPoly from_word(const AlgebraPtr& alg, const Word& w, const Laurent& coeff = Laurent(1));

  const AlgebraPtr& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Zero or a pure scalar (only the empty word).
  bool is_scalar() const;
  Laurent scalar_part() const;
  Laurent coeff(const Word& w) const;
  std::size_t degree() const;

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Laurent& c);
  friend NCPoly operator+(NCPoly x, const NCPoly& y) { return x += y; }
  friend NCPoly operator-(NCPoly x, const NCPoly& y) { return x -= y; }
  friend NCPoly operator*(const NCPoly& x, const NCPoly& y);
  friend NCPoly operator*(NCPoly x, const Laurent& c) { return x *= c; }
  friend NCPoly operator*(const Laurent& c, NCPoly x) { return x *= c; }
  friend bool operator==(const NCPoly& x, const NCPoly& y);

  NCPoly pow(unsigned n) const;
  /// Applies f to every coefficient and drops zeros.
  NCPoly map_coefficients(const std::function<Laurent(const Laurent&)>& f) const;

  /// Canonical rendering: graded-lex ascending terms, e.g. "a*d - q*b*c".
  std::string to_string() const;

 private:
  void add(const Word& w, const Laurent& c);

  AlgebraPtr alg_;
  Terms terms_;
};

NCPoly multiply(const NCPoly& x, const NCPoly& y);
NCPoly commutator(const NCPoly& x, const NCPoly& y);

/// Rewrites a*d via the algebra's unit-determinant rules until no PBW word
/// contains both partners. Result is congruent to p modulo (det - 1).
NCPoly reduce_unimodular(const NCPoly& p);

/// Anti-linear anti-automorphism: reverses words, swaps each generator with
/// its declared conjugate and conjugates coefficients (q real).
NCPoly star(const NCPoly& p);

/// Algebra map defined on generators; generators missing from `images` map
/// to the same-named generator of the target algebra.
NCPoly substitute(const NCPoly& p, const AlgebraPtr& target,
                  const std::map<std::string, NCPoly>& images = {});

/// Numeric evaluation with commuting values. Intended for q = 1, where the
/// relations degenerate to commutativity. Throws std::invalid_argument on a
/// missing assignment.
std::complex<double> substitute_numeric(const NCPoly& p,
                                        const std::map<std::string, std::complex<double>>& values,
                                        double q_value);

/// Coefficients specialized at q = 1 exactly; PBW words kept.
NCPoly specialize_at_one(const NCPoly& p);

inline std::ostream& operator<<(std::ostream& os, const NCPoly& p) { return os << p.to_string(); }

}  // namespace qlorentz
