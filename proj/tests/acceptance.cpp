// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "qlorentz/algebras.hpp"
#include "qlorentz/expr.hpp"
#include "qlorentz/suites.hpp"
#include "random_poly.hpp"

using namespace qlorentz;

namespace {

struct Result {
  bool pass;
  std::string detail;
};

struct CommandOutput {
  int status;
  std::string out;
};

CommandOutput run_command(const std::string& args) {
  std::string cmd = std::string(QLORENTZ_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
  int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

Result suite_result(const std::string& name) {
  SuiteReport r = run_suite(name);
  std::size_t failed = r.failed_ids().size();
  std::string detail = std::to_string(r.items.size() - failed) + "/" + std::to_string(r.items.size()) + " identities";
  if (failed) detail += "; failing: " + join(r.failed_ids());
  return {r.all_pass(), detail};
}

Result mutation_result() {
  std::set<std::string> baseline_pass;
  for (const auto& it : run_suite("all").items)
    if (it.pass) baseline_pass.insert(it.id);
  std::string detail;
  bool pass = true;
  for (const char* m : {"da-sign", "eps01", "eps10"}) {
    SuiteOptions o;
    o.mutation = parse_mutation(m);
    std::size_t caught = 0;
    for (const auto& it : run_suite("all", o).items)
      if (!it.pass && baseline_pass.count(it.id)) ++caught;
    pass = pass && caught > 0;
    detail += (detail.empty() ? "" : ", ") + std::string(m) + ": " + std::to_string(caught) + " newly failing";
  }
  return {pass, detail + " (the two diagonal entries are zero, so a sign flip there is the identity)"};
}

Result parser_result() {
  constexpr int kCases = 1000;
  std::mt19937_64 rng(8128);
  auto alg = named_algebra("slq2");
  int round_trips = 0;
  for (int k = 0; k < kCases; ++k) {
    NCPoly p = randgen::random_poly(alg, {"a", "b", "c"}, 3, rng);
    if (parse_poly(print_canonical(p), alg) == p) ++round_trips;
  }

  const std::vector<std::string> commands{"normalize 'd*a'",
                                          "normalize '(a*d - q*b*c)' --format json",
                                          "normalize 'x1*x2' --spec plane",
                                          "emit eta --format text",
                                          "emit sigma --q 1",
                                          "emit dmatrix --j 3/2",
                                          "emit barsigma --q 2.5 --format text",
                                          "verify repr"};
  int deterministic = 0;
  for (const auto& c : commands) {
    CommandOutput a = run_command(c), b = run_command(c);
    if (a.status == b.status && a.out == b.out && !a.out.empty()) ++deterministic;
  }

  // Exit 0 iff the report has no failing identity; usage errors exit 2.
  int contract = 0, contract_total = 0;
  for (const auto& name : suite_names()) {
    CommandOutput o = run_command("verify " + name);
    bool any_fail = o.out.find("\nFAIL") != std::string::npos || o.out.rfind("FAIL", 0) == 0;
    ++contract_total;
    if (o.status == (any_fail ? 1 : 0)) ++contract;
  }
  for (const auto& [args, expected] : std::vector<std::pair<std::string, int>>{{"verify sldet --mutate da-sign", 1},
                                                                               {"verify nosuch", 2},
                                                                               {"normalize 'a b'", 2},
                                                                               {"normalize 'a*x1'", 2},
                                                                               {"emit dmatrix --j 1/3", 2},
                                                                               {"emit sigma --q -1", 2},
                                                                               {"", 2}}) {
    ++contract_total;
    if (run_command(args).status == expected) ++contract;
  }

  std::ostringstream os;
  os << round_trips << "/" << kCases << " round trips, " << deterministic << "/" << commands.size()
     << " commands byte-identical on rerun, " << contract << "/" << contract_total << " exit codes as specified";
  return {round_trips == kCases && deterministic == static_cast<int>(commands.size()) && contract == contract_total,
          os.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string name;
    double budget_s;
    std::function<Result()> body;
  };
  const std::vector<Criterion> criteria{
      {1, "epsilon identities", 1, [] { return suite_result("epsilon"); }},
      {2, "SL_q(2) determinant, centrality, antipode", 5, [] { return suite_result("sldet"); }},
      {3, "spinor invariance", 5, [] { return suite_result("spinor"); }},
      {4, "sigma / eta", 1, [] { return suite_result("sigma"); }},
      {5, "vector representation", 10, [] { return suite_result("vectorrep"); }},
      {6, "spin-j representations", 60, [] { return suite_result("repr"); }},
      {7, "mutation sensitivity", 30, mutation_result},
      {8, "parser round trip, CLI determinism and exit codes", 10, parser_result},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.body();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < c.budget_s;
    bool pass = r.pass && in_time;
    failures += !pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", secs, c.budget_s);
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.number << "  " << c.name << "  [" << timing
              << (in_time ? "" : ", over budget") << "]  " << r.detail << "\n";
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures ? 1 : 0;
}
