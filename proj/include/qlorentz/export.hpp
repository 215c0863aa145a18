#pragma once

// JSON and text export of scalars, polynomials, matrices and D-matrices.
//
// Exact JSON schemas:
//   Laurent  [[s_exponent, re_num, re_den, im_num, im_den], ...]
//   NCPoly   [{"word": [names...], "coeff": Laurent}, ...]
//   matrix   {"rows": r, "cols": c, "entries": [[entry, ...], ...]}
//   DMatrix  {"j", "basis": "unnormalized", "entries", "norm_sq", "provenance"}
// With a numeric q every Laurent becomes [re, im], rounded to 15
// significant digits.

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qlorentz/matrix.hpp"
#include "qlorentz/repr.hpp"

namespace qlorentz {

using nlohmann::json;
using NumericQ = std::optional<double>;

json to_json(const Laurent& x, NumericQ q = {});
json to_json(const NCPoly& p, NumericQ q = {});
json to_json(const LMatrix& m, NumericQ q = {});
json to_json(const NCMatrix& m, NumericQ q = {});
json to_json(const DMatrix& d, NumericQ q = {});

/// Inverse of the exact schemas. Throw std::invalid_argument on malformed input.
Laurent laurent_from_json(const json& j);
NCPoly poly_from_json(const json& j, const AlgebraPtr& alg);

/// 15 significant digits: "0.5", "-2", "1.5i", "(0.5 - 2i)".
std::string format_complex(std::complex<double> z);

std::string to_text(const Laurent& x, NumericQ q = {});
std::string to_text(const NCPoly& p, NumericQ q = {});
std::string to_text(const LMatrix& m, NumericQ q = {});
std::string to_text(const NCMatrix& m, NumericQ q = {});

/// "1/2", "1", "3/2" ...
std::string spin_label(int two_j);
/// Accepts "k/2", an integer, or a decimal ending in .5; throws
/// std::invalid_argument otherwise or when 2j is negative.
int parse_two_j(std::string_view text);
/// Positive finite number; throws std::invalid_argument otherwise.
double parse_q_value(std::string_view text);

enum class ArtifactFormat { Json, Text };

struct EmitRequest {
  std::string kind;  // dmatrix | eta | sigma | barsigma
  int two_j = 1;
  NumericQ q;
  ArtifactFormat format = ArtifactFormat::Json;
};

inline constexpr int kMaxEmitTwoJ = 8;

/// Deterministic artifact text (newline terminated). Throws
/// std::invalid_argument for an unknown kind or out-of-range parameters.
std::string emit_artifact(const EmitRequest& request);

}  // namespace qlorentz
