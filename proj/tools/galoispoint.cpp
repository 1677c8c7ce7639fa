// galoispoint: build curves from Kummer data, find the Galois structure of a
// projection and extend it to a de Jonquieres map.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "galoispoint/expr.hpp"
#include "galoispoint/pipeline.hpp"

namespace {

struct Args {
  std::string text;
  std::string input;
  std::string entry;
  std::optional<int> field;
  bool json = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gp::Error(gp::Errc::invalid_argument, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string source_text(const Args& a) {
  if (!a.input.empty()) return read_file(a.input);
  if (!a.text.empty()) return a.text;
  return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

int run_pipeline(gp::Command cmd, const Args& args) {
  gp::RunOptions opts;
  opts.field_order = args.field;
  const auto blocks = gp::parse_blocks(source_text(args));
  std::vector<gp::Analysis> results;
  for (const auto& b : blocks)
    if (args.entry.empty() || b.id == args.entry) results.push_back(gp::run(cmd, b, opts));
  int rc = 0;
  for (const auto& r : results)
    if (r.status == "error") rc = 1;
  if (args.json) {
    if (results.size() == 1) {
      std::cout << gp::report_json(results.front()) << "\n";
    } else {
      std::cout << "[";
      for (std::size_t i = 0; i < results.size(); ++i) std::cout << (i ? ",\n" : "\n") << gp::report_json(results[i]);
      std::cout << "\n]\n";
    }
    return rc;
  }
  for (std::size_t i = 0; i < results.size(); ++i) std::cout << (i ? "\n" : "") << gp::report_text(results[i]);
  return rc;
}

int run_corpus(const Args& args) {
  gp::RunOptions opts;
  opts.field_order = args.field;
  const std::string text = args.input.empty() ? std::string(gp::bundled_corpus()) : read_file(args.input);
  std::optional<std::string> entry;
  if (!args.entry.empty()) entry = args.entry;
  const auto results = gp::run_corpus(text, entry, opts);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.pass;
  if (args.json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : results) arr.push_back({{"id", r.id}, {"pass", r.pass}, {"failures", r.failures}});
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.id << "\n";
      for (const auto& f : r.failures) std::cout << "      " << f << "\n";
    }
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.pass ? 1 : 0;
    std::cout << passed << "/" << results.size() << " entries passed\n";
  }
  return ok ? 0 : 1;
}

int parse_check(const Args& args) {
  const std::string text = source_text(args);
  try {
    const gp::Fraction f = gp::parse_fraction(text);
    const std::string canon = gp::to_string(f);
    if (args.json) {
      nlohmann::ordered_json j{{"input", text}, {"canonical", canon}, {"polynomial", f.is_polynomial()}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << canon << "\n";
    }
    return 0;
  } catch (const gp::ParseError& e) {
    if (args.json) {
      nlohmann::ordered_json j{{"input", text}, {"error", e.what()}, {"line", e.line()}, {"column", e.column()}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois points of plane curves and their de Jonquieres extensions"};
  app.require_subcommand(1);
  Args args;

  auto add_common = [&](CLI::App* sub, bool takes_text) {
    sub->add_flag("--json", args.json, "machine-readable output");
    sub->add_option("--field", args.field, "cyclotomic field order n, so z is a primitive n-th root of unity")
        ->check(CLI::PositiveNumber);
    sub->add_option("--input", args.input, "input file of key = value blocks");
    sub->add_option("--entry", args.entry, "only process the block with this id");
    if (takes_text) sub->add_option("text", args.text, "inline input, e.g. \"kummer = 3; q = t; c = 0, 1, 1\"");
  };

  auto* build = app.add_subcommand("build", "curve, degree and multiplicity from Kummer or fiber data");
  auto* analyze = app.add_subcommand("analyze", "Galois test, sigma, Moebius form and Kummer generator");
  auto* extend = app.add_subcommand("extend", "analyze, then lift sigma to a de Jonquieres map and verify it");
  auto* corpus = app.add_subcommand("corpus", "run the bundled example corpus (or --input) and diff expectations");
  auto* check = app.add_subcommand("parse-check", "print the canonical form of a polynomial expression");
  for (auto* s : {build, analyze, extend}) add_common(s, true);
  add_common(corpus, false);
  check->add_flag("--json", args.json, "machine-readable output");
  check->add_option("--input", args.input, "read the expression from a file");
  check->add_option("text", args.text, "expression");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return run_pipeline(gp::Command::build, args);
    if (analyze->parsed()) return run_pipeline(gp::Command::analyze, args);
    if (extend->parsed()) return run_pipeline(gp::Command::extend, args);
    if (corpus->parsed()) return run_corpus(args);
    if (check->parsed()) return parse_check(args);
  } catch (const gp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
