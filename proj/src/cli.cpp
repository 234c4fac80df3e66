#include "e8/cli.hpp"

#include "e8/acampo.hpp"
#include "e8/catalog.hpp"
#include "e8/reconstruct.hpp"
#include "e8/roundtrip.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace e8 {

namespace {

struct Failure {
  int code;
  std::string kind;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{exit_malformed_input, "malformed_input", "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DualGraph load_graph(const std::string& path) {
  try {
    DualGraph g = graph_from_json(read_file(path));
    g.validate();
    return g;
  } catch (const GraphError& e) {
    throw Failure{exit_malformed_input, "malformed_input", e.what()};
  }
}

BinomialProduct load_series(const std::string& path) {
  try {
    return parse_product(read_file(path));
  } catch (const SeriesError& e) {
    throw Failure{exit_malformed_input, "malformed_input", e.what()};
  }
}

int cmd_series(const std::string& path, const std::string& mode, const std::string& form,
               long trunc, std::ostream& out) {
  const DualGraph g = load_graph(path);
  BinomialProduct p;
  try {
    p = mode == "curve" ? poincare_curve(g) : poincare_divisorial(g);
  } catch (const std::runtime_error& e) {
    throw Failure{exit_malformed_input, "malformed_input", e.what()};
  }
  if (form == "product")
    out << to_string(p) << '\n';
  else
    out << to_string(expand(p, trunc)) << '\n';
  return exit_ok;
}

int cmd_reconstruct(const std::string& path, const std::string& mode, std::ostream& out) {
  const BinomialProduct p = load_series(path);
  const bool single = mode == "curve" || mode == "divisor";
  if (single && p.variables() != 1)
    throw Failure{exit_malformed_input, "malformed_input",
                  "mode " + mode + " expects a one-variable series"};
  const bool div = mode == "divisor" || mode == "divisors";
  try {
    DualGraph g;
    if (p.variables() == 1)
      g = div ? reconstruct_divisor(p) : reconstruct_curve(p);
    else
      g = div ? reconstruct_divisor_collection(p) : reconstruct_curve_collection(p);
    out << to_json(g) << '\n';
  } catch (const ReconstructionError& e) {
    throw Failure{exit_reconstruction_failed, "reconstruction_failed", e.what()};
  }
  return exit_ok;
}

int cmd_roundtrip(const RoundTripOptions& opt, bool serial, std::ostream& out) {
  const auto results = serial ? run_roundtrips_serial(opt) : run_roundtrips(opt);
  std::size_t passed = 0;
  for (const auto& c : results) {
    out << "case " << c.index << (c.pass ? " PASS " : " FAIL ") << c.series;
    if (!c.error.empty()) out << "  [" << c.error << "]";
    out << '\n';
    passed += c.pass;
  }
  out << "passed " << passed << "/" << results.size() << '\n';
  if (passed != results.size())
    throw Failure{exit_roundtrip_mismatch, "roundtrip_mismatch",
                  std::to_string(results.size() - passed) + " case(s) failed"};
  return exit_ok;
}

bool report(std::ostream& out, const std::string& label, bool ok) {
  out << "  " << label << ": " << (ok ? "PASS" : "FAIL") << '\n';
  return ok;
}

int cmd_examples(std::ostream& out) {
  bool all = true;

  out << "curve series collision (curvette at D6, A4 branch at a smooth point of D8)\n";
  const DualGraph c1 = curvette_graph(6), c2 = a4_over_d8_graph();
  const auto p1 = poincare_curve(c1), p2 = poincare_curve(c2);
  out << "  " << to_string(p1) << '\n' << "  " << to_string(p2) << '\n';
  const auto expected1 = parse_product("(1-t^4)^-1 (1-t^6)^-1 (1-t^9)^-1 (1-t^12) (1-t^18)");
  out << "  series " << (p1 == p2 ? "EQUAL" : "DIFFERENT") << '\n';
  out << "  graphs " << (canonically_isomorphic(c1, c2) ? "ISOMORPHIC" : "NON-ISOMORPHIC") << '\n';
  all &= report(out, "expected series",
                p1 == expected1 && p2 == expected1 && !canonically_isomorphic(c1, c2));

  out << "divisor series collision (7 free blow-ups from D6, blow-up of the A4 graph)\n";
  const DualGraph d1 = free_chain_divisor(6, 7), d2 = a4_over_d8_divisor();
  const auto q1 = poincare_divisorial(d1), q2 = poincare_divisorial(d2);
  out << "  " << to_string(q1) << '\n' << "  " << to_string(q2) << '\n';
  const auto expected2 =
      parse_product("(1-t^4)^-1 (1-t^6)^-1 (1-t^9)^-1 (1-t^12) (1-t^18) (1-t^19)^-1");
  out << "  series " << (q1 == q2 ? "EQUAL" : "DIFFERENT") << '\n';
  all &= report(out, "expected series", q1 == expected2 && q2 == expected2);

  out << "curvettes at D1 and D4\n";
  const DualGraph f = curvettes_1_and_4();
  const auto pf = poincare_curve(f);
  out << "  " << to_string(pf) << '\n';
  const auto expected3 = parse_product("(1-t^(2,3))^-1 (1-t^(10,15))");
  bool inverted = false;
  try {
    inverted = canonically_isomorphic(reconstruct_curve_collection(pf), f);
  } catch (const ReconstructionError&) {
  }
  all &= report(out, "expected series", pf == expected3);
  all &= report(out, "reconstruction", inverted);

  if (!all) throw Failure{exit_roundtrip_mismatch, "roundtrip_mismatch", "an example failed"};
  return exit_ok;
}

void print_failure(std::ostream& err, const Failure& f) {
  err << nlohmann::json{{"error", f.kind}, {"code", f.code}, {"message", f.message}}.dump()
      << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poincare series of curves and divisorial valuations on the E8 singularity"};
  app.require_subcommand(1);

  std::string graph_path, series_path, mode = "curve", form = "product";
  long trunc = 30;
  RoundTripOptions rt;
  std::string rt_mode = "curve";
  bool serial = false;

  const std::vector<std::string> single_modes{"curve", "divisor"};
  const std::vector<std::string> all_modes{"curve", "divisor", "curves", "divisors"};

  auto* series = app.add_subcommand("series", "Poincare series of a graph");
  series->add_option("--graph", graph_path, "graph JSON file")->required();
  series->add_option("--mode", mode)->check(CLI::IsMember(single_modes));
  series->add_option("--out", form)->check(CLI::IsMember({"product", "poly"}));
  series->add_option("--trunc", trunc, "total degree kept in poly output")
      ->check(CLI::PositiveNumber);

  auto* recon = app.add_subcommand("reconstruct", "minimal resolution from a series");
  recon->add_option("--series", series_path, "file with a product-form series")->required();
  recon->add_option("--mode", mode)->check(CLI::IsMember(all_modes));

  auto* roundtrip = app.add_subcommand("roundtrip", "random generate/reconstruct checks");
  roundtrip->add_option("--seed", rt.seed);
  roundtrip->add_option("--count", rt.count)->check(CLI::PositiveNumber);
  roundtrip->add_option("--max-blowups", rt.max_blowups)->check(CLI::NonNegativeNumber);
  roundtrip->add_option("--branches", rt.branches)->check(CLI::Range(1, 4));
  roundtrip->add_option("--mode", rt_mode)->check(CLI::IsMember(all_modes));
  roundtrip->add_flag("--serial", serial, "run cases on one thread");

  app.add_subcommand("examples", "series collisions and the D1/D4 curvette pair");

  auto* dot = app.add_subcommand("dot", "Graphviz rendering of a graph");
  dot->add_option("--graph", graph_path, "graph JSON file")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return exit_ok;
    print_failure(err, {exit_malformed_input, "malformed_input", e.what()});
    return exit_malformed_input;
  }

  try {
    if (*series) return cmd_series(graph_path, mode, form, trunc, out);
    if (*recon) return cmd_reconstruct(series_path, mode, out);
    if (*roundtrip) {
      rt.mode = parse_mode(rt_mode);
      return cmd_roundtrip(rt, serial, out);
    }
    if (*dot) {
      out << to_dot(load_graph(graph_path));
      return exit_ok;
    }
    return cmd_examples(out);
  } catch (const Failure& f) {
    print_failure(err, f);
    return f.code;
  } catch (const std::exception& e) {
    print_failure(err, {exit_malformed_input, "malformed_input", e.what()});
    return exit_malformed_input;
  }
}

}  // namespace e8
