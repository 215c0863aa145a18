#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qlorentz/algebras.hpp"
#include "qlorentz/export.hpp"
#include "qlorentz/expr.hpp"
#include "qlorentz/suites.hpp"

using namespace qlorentz;

namespace {

constexpr int kExitUsage = 2;

void print_expr_error(const std::string& text, const ExprError& e) {
  std::cerr << "error: " << e.what() << "\n";
  std::size_t line_start = 0;
  for (int l = 1; l < e.span().line; ++l) line_start = text.find('\n', line_start) + 1;
  std::size_t line_end = text.find('\n', line_start);
  std::cerr << "  " << text.substr(line_start, line_end - line_start) << "\n  "
            << std::string(static_cast<std::size_t>(e.span().column - 1), ' ') << "^\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-deformed spinor calculus: normalize expressions, run identity suites, export artifacts"};
  app.require_subcommand(1);

  std::string expr_text, spec = "slq2", format = "text";
  bool reduce = false;
  auto* normalize = app.add_subcommand("normalize", "Normal-order an expression and print its canonical form");
  normalize->add_option("expr", expr_text, "Expression, e.g. \"d*a\" or \"q^(1/2)*a*b - b*a\"")->required();
  normalize->add_option("--spec", spec, "Relation set")->check(CLI::IsMember(algebra_names()));
  normalize->add_flag("--reduce", reduce, "Also apply the unit-determinant relation");
  normalize->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string suite, mutate;
  auto* verify = app.add_subcommand("verify", "Run an identity suite; exit 0 iff every identity holds");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--mutate", mutate, "Deliberately break a relation (da-sign, eps01, eps10)")->group("");

  std::string kind, j_text = "1/2", q_text, emit_format = "json";
  auto* emit = app.add_subcommand("emit", "Export sigma, bar-sigma, eta or a spin-j D-matrix");
  emit->add_option("kind", kind, "Artifact kind")->required()->check(
      CLI::IsMember({"dmatrix", "eta", "sigma", "barsigma"}));
  emit->add_option("--j", j_text, "Spin for dmatrix (0, 1/2, 1, ...)");
  emit->add_option("--q", q_text, "Specialize q to a positive number (15 significant digits)");
  emit->add_option("--format", emit_format, "Output format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*normalize) {
      NCPoly p(named_algebra(spec));
      try {
        p = parse_poly(expr_text, named_algebra(spec));
      } catch (const ExprError& e) {
        print_expr_error(expr_text, e);
        return kExitUsage;
      }
      if (reduce) p = reduce_unimodular(p);
      std::cout << (format == "json" ? to_json(p).dump() : print_canonical(p)) << "\n";
      return 0;
    }
    if (*verify) {
      SuiteOptions options;
      if (!mutate.empty()) options.mutation = parse_mutation(mutate);
      SuiteReport report = run_suite(suite, options);
      std::cout << format_report(report);
      return report.exit_status();
    }
    if (*emit) {
      EmitRequest request;
      request.kind = kind;
      request.two_j = parse_two_j(j_text);
      if (!q_text.empty()) request.q = parse_q_value(q_text);
      request.format = emit_format == "json" ? ArtifactFormat::Json : ArtifactFormat::Text;
      std::cout << emit_artifact(request);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
