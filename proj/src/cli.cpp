#include "segre/cli.hpp"

#include <CLI11.hpp>

#include <ostream>

#include "segre/euler.hpp"
#include "segre/io.hpp"
#include "segre/oracle.hpp"
#include "segre/realize.hpp"
#include "segre/strata.hpp"

namespace segre::cli {

namespace {

using io::json;

void print_analysis(const json& a, std::ostream& out) {
  out << "tensor n=" << a["tensor"]["n"].get<int>() << "\n";
  out << "factors:\n";
  for (const auto& f : a["factors"]) {
    out << "  " << f["name"].get<std::string>() << "  ";
    if (f["value"].is_null()) {
      out << (f["vanishes"].get<bool>() ? "vanishes" : "nonzero");
    } else {
      out << f["value"].get<std::string>();
    }
    out << "\n";
  }
  out << "vanishing pattern: {";
  bool first = true;
  for (const auto& n : a["pattern"]) {
    out << (first ? "" : ", ") << n.get<std::string>();
    first = false;
  }
  out << "}\n";
  out << "pair types:\n";
  for (const auto& [pair, type] : a["pair_types"].items()) out << "  (" << pair << ") " << type.get<std::string>() << "\n";
  out << "chi(V_I):\n";
  for (const auto& [set, chi] : a["chi_V"].items()) out << "  " << set << " " << chi.get<int>() << "\n";
  out << "mldeg " << a["mldeg"].get<long>() << "\n";
  out << "chi(Y) " << a["chi_Y"].get<long>() << "\n";
}

struct Options {
  std::string input;
  std::string output;
  std::string csv;
  std::string data;
  bool as_json = false;
  int n = 0;
  int r = 0;
  int trials = 3;
  long samples = 100000;
  int bound = 50;
  std::uint64_t seed = 1;
  std::size_t max_coeff_bits = GroebnerBudget{}.max_coeff_bits;
  std::size_t max_basis = GroebnerBudget{}.max_basis;
};

int dispatch(const std::string& cmd, const Options& o, std::ostream& out) {
  if (cmd == "analyze") {
    const json a = io::analysis_to_json(io::tensor_from_json(io::read_file(o.input)));
    if (o.as_json) {
      out << io::dump(a);
    } else {
      print_analysis(a, out);
    }
    return kOk;
  }
  if (cmd == "mldeg") {
    out << mldeg_value(io::tensor_from_json(io::read_file(o.input))) << "\n";
    return kOk;
  }
  if (cmd == "matrix-mldeg") {
    out << mldeg_matrix(io::matrix_from_json(io::read_file(o.input))) << "\n";
    return kOk;
  }
  if (cmd == "oracle") {
    const json doc = io::read_file(o.input);
    const GroebnerBudget budget{o.max_basis, o.max_coeff_bits};
    const bool is_matrix = !doc.contains("n");
    CountResult result;
    if (!o.data.empty()) {
      const DataVector u = io::data_from_json(io::read_file(o.data));
      const long c = is_matrix ? count_critical_points_matrix(io::matrix_from_json(doc), u, budget)
                               : count_critical_points(io::tensor_from_json(doc), u, budget);
      result = CountResult{c, true, {{0, c}}};
    } else if (is_matrix) {
      result = oracle_mldeg_matrix(io::matrix_from_json(doc), o.trials, o.seed, budget);
    } else {
      result = oracle_mldeg(io::tensor_from_json(doc), o.trials, o.seed, budget);
    }
    out << io::dump(io::count_to_json(result));
    return result.stable ? kOk : kOracleTrouble;
  }
  if (cmd == "realize") {
    const ScalingTensor w = realize(o.n, o.r, o.seed);
    json doc = io::tensor_to_json(w);
    doc["verification"] = json{{"mldeg", mldeg_value(w)}, {"pattern", io::pattern_to_json(vanishing_pattern(w))}};
    io::write_file(o.output, io::dump(doc));
    out << "wrote " << o.output << " (mldeg " << doc["verification"]["mldeg"].get<long>() << ")\n";
    return kOk;
  }
  if (cmd == "atlas") {
    const auto strata = enumerate_strata_n1();
    std::vector<ScalingTensor> witnesses;
    for (const auto& s : strata) witnesses.push_back(witness_for_stratum(s, o.seed));
    io::write_file(o.output, io::dump(io::atlas_to_json(strata, witnesses)));
    if (!o.csv.empty()) io::write_file(o.csv, io::atlas_to_csv(strata));
    out << "wrote " << strata.size() << " strata to " << o.output << "\n";
    return kOk;
  }
  if (cmd == "signs") {
    const SignSample s = sample_sign_patterns(o.samples, o.bound, o.seed);
    const json doc = io::signs_to_json(s, o.bound, o.seed);
    io::write_file(o.output, io::dump(doc));
    out << doc["distinct"].get<long>() << " distinct patterns (" << doc["positive_h_distinct"].get<long>()
        << " with H > 0); wrote " << o.output << "\n";
    return kOk;
  }
  throw InvalidArgument("unknown subcommand " + cmd);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ML degrees and Euler characteristics of scaled P1 x P1 x Pn Segre products"};
  app.require_subcommand(1);
  Options o;

  auto* analyze = app.add_subcommand("analyze", "full report for a tensor");
  analyze->add_option("tensor", o.input, "tensor JSON file")->required();
  analyze->add_flag("--json", o.as_json, "emit canonical JSON");

  auto* mld = app.add_subcommand("mldeg", "print the ML degree");
  mld->add_option("tensor", o.input, "tensor JSON file")->required();

  auto* mat = app.add_subcommand("matrix-mldeg", "ML degree of a scaled two-factor Segre product");
  mat->add_option("matrix", o.input, "matrix JSON file")->required();

  auto* orc = app.add_subcommand("oracle", "count critical points by Groebner basis");
  orc->add_option("tensor", o.input, "tensor or matrix JSON file")->required();
  auto* data = orc->add_option("--data", o.data, "data vector JSON file");
  orc->add_option("--trials", o.trials, "number of random data vectors")->excludes(data)->check(CLI::Range(2, 1000));
  orc->add_option("--seed", o.seed, "seed for the data vectors");
  orc->add_option("--max-coeff-bits", o.max_coeff_bits, "coefficient size budget in bits");
  orc->add_option("--max-basis", o.max_basis, "basis size budget");

  auto* rea = app.add_subcommand("realize", "tensor with a prescribed ML degree");
  rea->add_option("--n", o.n, "last simplex dimension")->required();
  rea->add_option("--r", o.r, "target ML degree")->required();
  rea->add_option("--seed", o.seed, "seed");
  rea->add_option("-o,--output", o.output, "output tensor JSON")->required();

  auto* atl = app.add_subcommand("atlas", "the 41 strata of P1 x P1 x P1 with witnesses");
  atl->add_option("-o,--output", o.output, "atlas JSON")->required();
  atl->add_option("--csv", o.csv, "CSV summary");
  atl->add_option("--seed", o.seed, "seed");

  auto* sig = app.add_subcommand("signs", "sample sign patterns of the seven factors");
  sig->add_option("--samples", o.samples, "number of draws")->check(CLI::PositiveNumber);
  sig->add_option("--bound", o.bound, "entries drawn from [-bound, bound] without 0")->check(CLI::Range(2, 10000));
  sig->add_option("--seed", o.seed, "seed");
  sig->add_option("-o,--output", o.output, "signs JSON")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), o, out);
  } catch (const ResourceBudgetExceeded& e) {
    err << "ResourceBudgetExceeded: " << e.what() << "\n";
    return kOracleTrouble;
  } catch (const NotZeroDimensional& e) {
    err << "NotZeroDimensional: " << e.what() << "\n";
    return kOracleTrouble;
  } catch (const ZeroEntry& e) {
    err << "ZeroEntry: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const ParseError& e) {
    err << "ParseError: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InvalidArgument& e) {
    err << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace segre::cli
