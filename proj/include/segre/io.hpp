#pragma once

// JSON and CSV encodings of tensors, data vectors, patterns and reports.
// Objects are emitted with sorted keys and rationals as "p/q" strings, so
// equal values always serialize to identical bytes.

#include "json.hpp"

#include <string>
#include <vector>

#include "segre/adet.hpp"
#include "segre/euler.hpp"
#include "segre/exactmath.hpp"
#include "segre/oracle.hpp"
#include "segre/strata.hpp"
#include "segre/tensor.hpp"

namespace segre::io {

using json = nlohmann::json;

/// Accepts a string "p" / "p/q" or a JSON integer; anything else is a ParseError.
Rational rational_from_json(const json& j);

/// {"n": N, "w": w[i][j][k]}
ScalingTensor tensor_from_json(const json& j);
json tensor_to_json(const ScalingTensor& w);

/// {"w": [[...], ...]}
RatMatrix matrix_from_json(const json& j);
json matrix_to_json(const RatMatrix& m);

/// {"u": u[i][j][k]} for tensors or {"u": u[i][j]} for matrices.
DataVector data_from_json(const json& j);
json data_to_json(const DataVector& u);

json pattern_to_json(const VanishingPattern& p);
VanishingPattern pattern_from_json(int n, const json& j);

/// Full analysis: factor values and decisions, pattern, pair types,
/// chi(V_I) table, the inclusion-exclusion terms, mldeg and chi(Y).
json analysis_to_json(const ScalingTensor& w);

json count_to_json(const CountResult& r);

json atlas_to_json(const std::vector<Stratum>& strata, const std::vector<ScalingTensor>& witnesses);
std::string atlas_to_csv(const std::vector<Stratum>& strata);

json signs_to_json(const SignSample& s, int bound, std::uint64_t seed);

/// Parse a document, raising ParseError on malformed JSON.
json parse(const std::string& text);
json read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// Canonical text: two-space indent, sorted keys, trailing newline.
std::string dump(const json& j);

}  // namespace segre::io
