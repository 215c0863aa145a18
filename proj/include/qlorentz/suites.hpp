#pragma once

// Identity suites: each item evaluates one exact identity (or a numeric
// check with a pinned tolerance) and records its residual.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qlorentz/algebras.hpp"
#include "qlorentz/spinor.hpp"

namespace qlorentz {

struct SuiteItem {
  std::string suite;
  std::string id;
  std::string description;
  bool pass = false;
  std::string residual;  // "0" on success, otherwise a rendering of what is left over
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteItem> items;

  bool all_pass() const;
  /// 0 iff every item passes, else 1.
  int exit_status() const { return all_pass() ? 0 : 1; }
  std::vector<std::string> failed_ids() const;
};

/// Deliberate breakage used to show the suites are not vacuous.
struct Mutation {
  bool flip_da_sign = false;
  /// Negates one entry of the covariant metric.
  std::optional<std::pair<int, int>> flip_eps_entry;
};

/// "da-sign", "eps01", "eps10", "eps00", "eps11"; throws std::invalid_argument.
Mutation parse_mutation(std::string_view text);

struct SuiteOptions {
  Mutation mutation;
  unsigned seed = 2024;
  int random_points = 100;
};

/// epsilon, sldet, spinor, sigma, vectorrep, repr, all
std::vector<std::string> suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options = {});

/// One line per item: "PASS  id  description" with the residual appended on failure,
/// then a summary line.
std::string format_report(const SuiteReport& report);

}  // namespace qlorentz
