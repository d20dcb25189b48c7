#include "doctest.h"

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "segre/cli.hpp"
#include "segre/euler.hpp"
#include "segre/io.hpp"

using namespace segre;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "segre");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("mldeg prints the integer") {
  write("cli_w.json", io::dump(io::tensor_to_json(testing::example_w())));
  const auto r = run({"mldeg", "cli_w.json"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "8\n");
}

TEST_CASE("invalid input exits with 2") {
  write("cli_zero.json", R"({"n": 1, "w": [[["1","0"],["1","1"]],[["1","1"],["1","1"]]]})");
  auto r = run({"mldeg", "cli_zero.json"});
  CHECK(r.code == cli::kInvalidInput);
  CHECK(r.err.find("ZeroEntry") != std::string::npos);

  write("cli_bad.json", "{\"n\": 1, \"w\": [");
  r = run({"mldeg", "cli_bad.json"});
  CHECK(r.code == cli::kInvalidInput);
  CHECK(r.err.find("ParseError") != std::string::npos);

  write("cli_shape.json", R"({"n": 2, "w": [[["1","1"],["1","1"]],[["1","1"],["1","1"]]]})");
  CHECK(run({"mldeg", "cli_shape.json"}).code == cli::kInvalidInput);
  CHECK(run({"mldeg", "does_not_exist.json"}).code == cli::kInvalidInput);
  CHECK(run({"realize", "--n", "2", "--r", "13", "-o", "cli_r.json"}).code == cli::kInvalidInput);
  CHECK(run({"frobnicate"}).code == cli::kInvalidInput);
  CHECK(run({}).code == cli::kInvalidInput);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("analyze --json round-trips byte for byte") {
  write("cli_w.json", io::dump(io::tensor_to_json(testing::example_w())));
  const auto first = run({"analyze", "cli_w.json", "--json"});
  REQUIRE(first.code == cli::kOk);
  const auto doc = io::parse(first.out);
  CHECK(doc["mldeg"] == 8);
  CHECK(doc["chi_Y"] == -8);
  CHECK(doc["chi_V"]["[0,1,2]"] == 2);
  CHECK(doc["point_formula"].is_null());
  CHECK(doc["terms"].contains("I=[0,1];J=[y1]"));
  write("cli_w2.json", io::dump(doc["tensor"]));
  const auto second = run({"analyze", "cli_w2.json", "--json"});
  CHECK(second.out == first.out);

  const auto text = run({"analyze", "cli_w.json"});
  CHECK(text.code == cli::kOk);
  CHECK(text.out.find("mldeg 8") != std::string::npos);
  CHECK(text.out.find("F[*0(0,1)]") != std::string::npos);
}

TEST_CASE("matrix-mldeg") {
  write("cli_m.json", R"({"w": [["1","2","3"],["5","7","11"]]})");
  const auto r = run({"matrix-mldeg", "cli_m.json"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "3\n");
}

TEST_CASE("oracle with explicit data, trials and an exhausted budget") {
  write("cli_ones.json", io::dump(io::tensor_to_json(ScalingTensor::ones(1))));
  write("cli_u.json", R"({"u": [[[3,5],[7,2]],[[4,9],[6,8]]]})");
  auto r = run({"oracle", "cli_ones.json", "--data", "cli_u.json"});
  CHECK(r.code == cli::kOk);
  CHECK(io::parse(r.out)["count"] == 1);

  r = run({"oracle", "cli_ones.json", "--trials", "2", "--seed", "4"});
  CHECK(r.code == cli::kOk);
  const auto doc = io::parse(r.out);
  CHECK(doc["stable"] == true);
  CHECK(doc["trials"].size() == 2);

  write("cli_m.json", R"({"w": [["1","2"],["3","5"]]})");
  r = run({"oracle", "cli_m.json"});
  CHECK(r.code == cli::kOk);
  CHECK(io::parse(r.out)["count"] == 2);

  r = run({"oracle", "cli_w.json", "--max-basis", "3"});
  CHECK(r.code == cli::kOracleTrouble);
  CHECK(r.err.find("ResourceBudgetExceeded") != std::string::npos);
}

TEST_CASE("realize writes a verified tensor") {
  const auto r = run({"realize", "--n", "2", "--r", "5", "--seed", "3", "-o", "cli_r.json"});
  REQUIRE(r.code == cli::kOk);
  const auto doc = io::read_file("cli_r.json");
  CHECK(doc["verification"]["mldeg"] == 5);
  CHECK(mldeg_value(io::tensor_from_json(doc)) == 5);
}

TEST_CASE("atlas and signs exports") {
  auto r = run({"atlas", "-o", "cli_atlas.json", "--csv", "cli_atlas.csv"});
  REQUIRE(r.code == cli::kOk);
  const auto atlas = io::read_file("cli_atlas.json");
  CHECK(atlas.size() == 41);
  for (const auto& rec : atlas) {
    const auto w = io::tensor_from_json(rec["witness"]);
    CHECK(mldeg_value(w) == rec["chi"].get<long>());
    CHECK(io::pattern_to_json(vanishing_pattern(w)) == rec["pattern"]);
  }
  const std::string csv = read("cli_atlas.csv");
  CHECK(csv.rfind("pattern,chi\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 42);

  r = run({"signs", "--samples", "2000", "--bound", "10", "--seed", "2", "-o", "cli_signs.json"});
  REQUIRE(r.code == cli::kOk);
  const auto signs = io::read_file("cli_signs.json");
  CHECK(signs["samples"] == 2000);
  CHECK(signs["distinct"] == signs["patterns"].size());
  CHECK(run({"signs", "--samples", "10", "--bound", "1", "-o", "cli_signs.json"}).code == cli::kInvalidInput);
}
