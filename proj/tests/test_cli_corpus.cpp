#include "doctest.h"

#include "json.hpp"

#include "fixtures.hpp"
#include "galoispoint/pipeline.hpp"

using namespace gp;

namespace {

std::string canon(std::string_view s) { return to_string(parse_fraction(s)); }

std::string replace(std::string text, const std::string& from, const std::string& to) {
  const auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("expression parser") {
  CHECK(parse_fraction("(x + 1)^2") == parse_fraction("x^2 + 2*x + 1"));
  CHECK(parse_fraction("-(x - y)") == parse_fraction("y - x"));
  CHECK(parse_fraction("2*x/4") == parse_fraction("x/2"));
  CHECK(to_ratfunc(parse_fraction("(t^2 - 1)/(t - 1)"), nullptr) == to_ratfunc(parse_fraction("t + 1"), nullptr));
  CHECK(parse_fraction("x^0") == parse_fraction("1"));
  CHECK(canon("y^2 + x^3") == canon("x^3+y^2"));
  CHECK_FALSE(parse_fraction("1/t").is_polynomial());
  CHECK(parse_fraction("X*Y*Z").uses('Y'));
}

TEST_CASE("parse errors carry a position") {
  struct Case {
    const char* text;
    int column;
  };
  for (const Case& c : {Case{"x^-1", 3}, Case{"x + w", 5}, Case{"(x + 1", 7}, Case{"x ** 2", 4}, Case{"", 1}}) {
    CAPTURE(c.text);
    try {
      parse_fraction(c.text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
      CHECK(e.column() == c.column);
      CHECK(e.code() == Errc::parse_error);
    }
  }
  CHECK_THROWS_AS(parse_fraction("x/0"), Error);
}

TEST_CASE("lowering rejects variables outside the context") {
  CHECK_THROWS_AS(to_ratfunc(parse_fraction("x + t"), nullptr), Error);
  CHECK_THROWS_AS(to_affine(parse_fraction("X + y"), nullptr), Error);
  CHECK_THROWS_AS(to_constant(parse_fraction("z"), nullptr), Error);
  CHECK(to_constant(parse_fraction("z^3"), make_cyclotomic(3)) == NfElem(1));
  CHECK(to_kpoly(parse_fraction("x^2 - t/(t + 1)"), nullptr).degree() == 2);
}

TEST_CASE("printing is a fixed point of parsing") {
  for (const char* s : {"(x + y)^3 - 7*x*y/3", "X^4 - X^3*Y + Y^3*Z", "-(t - 1)^2/(t^3 + 2)", "z*t - z + 1", "0",
                        "-x"}) {
    CAPTURE(s);
    const std::string once = canon(s);
    CHECK(canon(once) == once);
    CHECK(parse_fraction(once) == parse_fraction(s));
  }
}

TEST_CASE("input blocks") {
  const auto blocks = parse_blocks(
      "# leading comment\n"
      "id = a\n"
      "curve = x^4\n"
      "  - y   # continued\n"
      "# comment inside the block\n"
      "point = (0 : 0 : 1)\n"
      "\n"
      "\n"
      "id = b; kummer = 3; q = t; c = 0, 1, 0\n");
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].id == "a");
  REQUIRE(blocks[0].get("curve"));
  CHECK(parse_fraction(*blocks[0].get("curve")) == parse_fraction("x^4 - y"));
  CHECK(blocks[0].get("point"));
  CHECK(blocks[1].id == "b");
  CHECK(*blocks[1].get("q") == "t");
  CHECK(blocks[1].get("curve") == nullptr);
  CHECK_THROWS_AS(parse_blocks("colour = red\n"), ParseError);
  CHECK_THROWS_AS(parse_blocks("curve\n"), ParseError);
}

TEST_CASE("commands") {
  CHECK(parse_command("build") == Command::build);
  CHECK(parse_command("extend") == Command::extend);
  CHECK_FALSE(parse_command("solve").has_value());
  CHECK(std::string(command_name(Command::analyze)) == "analyze");
}

TEST_CASE("bad input becomes an error status") {
  const auto blocks = parse_blocks("id = bad\ncurve = X^2 + Y^2\npoint = (0 : 0 : 1)\n");
  const Analysis a = run(Command::analyze, blocks.at(0));
  CHECK(a.status == "error");
  CHECK_FALSE(a.diagnostics.empty());
}

TEST_CASE("bundled corpus passes") {
  const auto results = run_corpus(bundled_corpus(), std::nullopt);
  CHECK(results.size() >= 10);
  for (const auto& r : results) {
    CAPTURE(r.id);
    CHECK(r.pass);
    for (const auto& f : r.failures) MESSAGE(f);
  }
}

TEST_CASE("a wrong expectation fails with a diff") {
  const std::string text = replace(std::string(bundled_corpus()), "expect.order = 4", "expect.order = 5");
  const auto results = run_corpus(text, std::string("quartic_kummer_t4"));
  REQUIRE(results.size() == 1);
  CHECK_FALSE(results[0].pass);
  REQUIRE(results[0].failures.size() == 1);
  CHECK(results[0].failures[0] == "order: expected 5, got 4");
  CHECK(run_corpus(bundled_corpus(), std::string("no_such_entry")).empty());
}

TEST_CASE("JSON reports") {
  const auto blocks = parse_blocks(bundled_corpus());
  const InputBlock* cube = nullptr;
  for (const auto& b : blocks)
    if (b.id == "kummer_cube_root") cube = &b;
  REQUIRE(cube);
  const std::string first = report_json(run(Command::extend, *cube));
  const std::string second = report_json(run(Command::extend, *cube));
  CHECK(first == second);
  const auto j = nlohmann::ordered_json::parse(first);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  const std::vector<std::string> head{"id", "status", "degree", "multiplicity", "projection_degree", "is_galois",
                                      "group_order", "sigma_rep", "moebius", "dejonquieres", "diagnostics"};
  REQUIRE(keys.size() >= head.size());
  CHECK(std::vector<std::string>(keys.begin(), keys.begin() + static_cast<long>(head.size())) == head);
  CHECK(j["status"] == "ok");
  CHECK(j["group_order"] == 3);
  CHECK(j["dejonquieres"]["order"] == 3);
  CHECK(j["dejonquieres"]["birational"] == true);
}

TEST_CASE("Moebius matrix text") {
  const FieldPtr f = make_cyclotomic(3);
  const Moebius m = parse_moebius("[[z*t, z - 1], [0, t]]", f);
  CHECK(m == Moebius::make(RatFunc(root_of_unity(f, 3)) * RatFunc::t(), RatFunc(root_of_unity(f, 3)) - RatFunc(1),
                           RatFunc(0), RatFunc::t()));
  CHECK_THROWS_AS(parse_moebius("[[1, 2], [3]]", f), Error);
}
