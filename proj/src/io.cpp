#include "segre/io.hpp"

#include <fstream>
#include <sstream>

namespace segre::io {

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(mpz_class(std::to_string(j.get<unsigned long long>())));
    return Rational(j.get<long long>());
  }
  throw ParseError("expected a rational as a string \"p\" or \"p/q\" or an integer, got " + j.dump());
}

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const json& array_of_size(const json& j, std::size_t size, const std::string& what) {
  if (!j.is_array() || j.size() != size) {
    throw DimensionMismatch(what + " must be an array of length " + std::to_string(size));
  }
  return j;
}

std::vector<std::vector<long>> counts_2d(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("\"u\" must be a nonempty array");
  std::vector<std::vector<long>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("\"u\" rows must be arrays");
    std::vector<long> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ParseError("data entries must be integers");
      r.push_back(v.get<long>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

ScalingTensor tensor_from_json(const json& j) {
  const json& nj = field(j, "n");
  if (!nj.is_number_integer()) throw ParseError("\"n\" must be an integer");
  const int n = nj.get<int>();
  if (n < 1) throw DimensionMismatch("n must be at least 1");
  const json& w = array_of_size(field(j, "w"), 2, "w");
  std::vector<std::vector<std::vector<Rational>>> nested(2, std::vector<std::vector<Rational>>(2));
  for (std::size_t i = 0; i < 2; ++i) {
    const json& plane = array_of_size(w[i], 2, "w[i]");
    for (std::size_t jj = 0; jj < 2; ++jj) {
      const json& fiber = array_of_size(plane[jj], static_cast<std::size_t>(n + 1), "w[i][j]");
      for (const auto& e : fiber) nested[i][jj].push_back(rational_from_json(e));
    }
  }
  return ScalingTensor::make(n, nested);
}

json tensor_to_json(const ScalingTensor& w) {
  json out;
  out["n"] = w.n();
  json planes = json::array();
  for (int i = 0; i < 2; ++i) {
    json plane = json::array();
    for (int j = 0; j < 2; ++j) {
      json fiber = json::array();
      for (int k = 0; k <= w.n(); ++k) fiber.push_back(w(i, j, k).str());
      plane.push_back(fiber);
    }
    planes.push_back(plane);
  }
  out["w"] = planes;
  return out;
}

RatMatrix matrix_from_json(const json& j) {
  const json& w = field(j, "w");
  if (!w.is_array() || w.empty() || !w.front().is_array() || w.front().empty()) {
    throw ParseError("\"w\" must be a nonempty array of nonempty arrays");
  }
  RatMatrix m(w.size(), w.front().size());
  for (std::size_t r = 0; r < w.size(); ++r) {
    array_of_size(w[r], m.cols(), "matrix row");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rational_from_json(w[r][c]);
  }
  return m;
}

json matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return json{{"w", rows}};
}

DataVector data_from_json(const json& j) {
  const json& u = field(j, "u");
  if (u.is_array() && !u.empty() && u.front().is_array() && !u.front().empty() && u.front().front().is_array()) {
    array_of_size(u, 2, "u");
    std::vector<std::vector<std::vector<long>>> nested;
    for (const auto& plane : u) nested.push_back(counts_2d(array_of_size(plane, 2, "u[i]")));
    const std::size_t len = nested[0][0].size();
    if (len < 2) throw DimensionMismatch("u[i][j] must have length n+1 >= 2");
    return DataVector::for_tensor(static_cast<int>(len) - 1, nested);
  }
  return DataVector::for_matrix(counts_2d(u));
}

json data_to_json(const DataVector& u) {
  const auto& shape = u.shape();
  json out = json::array();
  for (std::size_t a = 0; a < shape[0]; ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < shape[1]; ++b) {
      if (shape.size() == 2) {
        row.push_back(u.at(a, b));
      } else {
        json fiber = json::array();
        for (std::size_t c = 0; c < shape[2]; ++c) fiber.push_back(u.at(a, b, c));
        row.push_back(fiber);
      }
    }
    out.push_back(row);
  }
  return json{{"u", out}};
}

json pattern_to_json(const VanishingPattern& p) { return p.names(); }

VanishingPattern pattern_from_json(int n, const json& j) {
  if (!j.is_array()) throw ParseError("a pattern is an array of factor names");
  std::vector<std::string> names;
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError("factor names must be strings");
    names.push_back(e.get<std::string>());
  }
  return parse_pattern(n, names);
}

json analysis_to_json(const ScalingTensor& w) {
  const MLDegreeReport report = mldeg(w);
  json out;
  out["tensor"] = tensor_to_json(w);

  json factors = json::array();
  for (const auto& f : all_factors(w.n())) {
    json entry;
    entry["name"] = f.name();
    if (f.is_minor()) {
      entry["value"] = eval_minor(w, f).str();
    } else if (f.kind == FactorKind::Hyp222) {
      entry["value"] = eval_hyp222(w, f.ks[0], f.ks[1]).str();
    } else {
      entry["value"] = nullptr;  // decided by a common-root test, not evaluated
    }
    entry["vanishes"] = report.factor_pattern.contains(f);
    factors.push_back(entry);
  }
  out["factors"] = factors;
  out["pattern"] = pattern_to_json(report.factor_pattern);

  json pairs = json::object();
  for (int a = 0; a <= w.n(); ++a) {
    for (int b = a + 1; b <= w.n(); ++b) {
      pairs[std::to_string(a) + "," + std::to_string(b)] = std::string(to_string(classify_type(w, a, b)));
    }
  }
  out["pair_types"] = pairs;

  json chi_v = json::object();
  json terms = json::object();
  for (const auto& t : report.terms) {
    terms[t.key()] = t.chi;
    if (t.zeros.size() == 0) {
      std::string key = "[";
      for (std::size_t a = 0; a < t.slices.size(); ++a) key += (a ? "," : "") + std::to_string(t.slices[a]);
      chi_v[key + "]"] = t.chi;
    }
  }
  out["chi_V"] = chi_v;
  out["terms"] = terms;
  out["mldeg"] = report.mldeg;
  out["chi_Y"] = report.chi_Y;
  const auto point = mldeg_point_formula(w);
  out["point_formula"] = point ? json(*point) : json(nullptr);
  return out;
}

json count_to_json(const CountResult& r) {
  json trials = json::array();
  for (const auto& [seed, count] : r.trials) trials.push_back(json{{"seed", seed}, {"count", count}});
  return json{{"count", r.count}, {"stable", r.stable}, {"trials", trials}};
}

json atlas_to_json(const std::vector<Stratum>& strata, const std::vector<ScalingTensor>& witnesses) {
  if (strata.size() != witnesses.size()) throw DimensionMismatch("one witness per stratum");
  json out = json::array();
  for (std::size_t s = 0; s < strata.size(); ++s) {
    out.push_back(json{{"pattern", pattern_to_json(strata[s].pattern)},
                       {"chi", strata[s].chi},
                       {"symmetry_class", std::string(to_string(strata[s].symmetry_class))},
                       {"witness_recipe", strata[s].witness_recipe},
                       {"witness", tensor_to_json(witnesses[s])}});
  }
  return out;
}

std::string atlas_to_csv(const std::vector<Stratum>& strata) {
  std::string out = "pattern,chi\n";
  for (const auto& s : strata) {
    std::string names;
    for (const auto& n : s.pattern.names()) names += (names.empty() ? "" : " ") + n;
    out += "\"" + names + "\"," + std::to_string(s.chi) + "\n";
  }
  return out;
}

json signs_to_json(const SignSample& s, int bound, std::uint64_t seed) {
  long positive = 0;
  json negative = json::array();
  for (const auto& [p, c] : s.discovered) {
    if (p.back() == '+') {
      ++positive;
    } else {
      negative.push_back(p);
    }
  }
  return json{{"samples", s.samples},
              {"bound", bound},
              {"seed", seed},
              {"skipped", s.skipped},
              {"patterns", s.discovered},
              {"distinct", s.discovered.size()},
              {"positive_h_distinct", positive},
              {"negative_h", negative}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace segre::io
