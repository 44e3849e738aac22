#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "isect/cli.hpp"
#include "support.hpp"

namespace isect::test {
namespace {

using nlohmann::ordered_json;

template <class Ring>
void expect_parse_error(const Ring& R, const std::string& text, errc code, std::size_t pos) {
  try {
    parse_poly(text, R);
    ADD_FAILURE() << "accepted " << text;
  } catch (const parse_error& e) {
    EXPECT_EQ(e.code(), code) << text << ": " << e.what();
    EXPECT_EQ(e.position(), pos) << text << ": " << e.what();
  }
}

TEST(Parser, ExpandsTheIntegerFamily) {
  const ZPoly f = parse_poly("(x^2-13)*(x^2-17)*(x^2-221)", Z());
  EXPECT_EQ(f.degree(), 6);
  EXPECT_EQ(f.to_string(), "x^6 - 251*x^4 + 6851*x^2 - 48841");
  EXPECT_EQ(f, parse_poly("x^6 - 251*x^4 + 6851*x^2 - 48841", Z()));
}

TEST(Parser, ExpandsTheFunctionFieldFamily) {
  const FqTRing R = Fq(3);
  const FPoly f = parse_poly("(x^2-T)*(x^2-(T+1))*(x^2-T*(T+1))", R);
  EXPECT_EQ(f.degree(), 6);
  EXPECT_EQ(f.to_string(), "x^6 + (2*T^2 + 2)*x^4 + (2*T^3 + T^2 + 2*T)*x^2 + (2*T^4 + T^3 + 2*T^2)");
  EXPECT_EQ(f, parse_poly(f.to_string(), R));
}

TEST(Parser, AcceptsWhitespaceSignsAndPowers) {
  EXPECT_EQ(parse_poly("  -x^2 +  3 ", Z()), zpoly("3 - x^2"));
  EXPECT_EQ(parse_poly("(x+1)^3", Z()), zpoly("x^3 + 3*x^2 + 3*x + 1"));
  EXPECT_EQ(parse_poly("2^10", Z()), zpoly("1024"));
  EXPECT_EQ(parse_poly("-(x - 1)", Z()), zpoly("1 - x"));
  const FqTRing R = Fq(5);
  EXPECT_EQ(parse_poly("7*x", R), parse_poly("2*x", R));
  EXPECT_EQ(parse_poly("T^5 - T", R).coeff(0), tpoly(R, "T^5 + 4*T"));
  const FqTRing R9 = Fq(9);
  EXPECT_EQ(parse_poly("x^2 - u*T", R9).coeff(0), R9.constant(R9.field()->scale(R9.field()->generator(), 2)) * R9.T());
}

TEST(Parser, Errors) {
  expect_parse_error(Z(), "x^2 - y", errc::unknown_symbol, 6);
  expect_parse_error(Z(), "x - T", errc::unknown_symbol, 4);
  expect_parse_error(Fq(3), "x + u", errc::unknown_symbol, 4);
  expect_parse_error(Z(), "2x", errc::syntax_error, 1);
  expect_parse_error(Z(), "(x + 1", errc::syntax_error, 6);
  expect_parse_error(Z(), "x +", errc::syntax_error, 3);
  expect_parse_error(Z(), "x^", errc::syntax_error, 2);
  expect_parse_error(Z(), "", errc::empty_input, 0);
  expect_parse_error(Z(), "   ", errc::empty_input, 0);
}

TEST(Parser, PrintThenParseRoundTrips) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const ZPoly f = random_zpoly(rng, static_cast<unsigned>(rng() % 7), 1000);
    EXPECT_EQ(parse_poly(f.to_string(), Z()), f) << f.to_string();
  }
  for (unsigned q : {3u, 9u}) {
    const FqTRing R = Fq(q);
    for (int i = 0; i < 200; ++i) {
      const FPoly f = random_fpoly(R, rng, static_cast<unsigned>(rng() % 5), 3);
      EXPECT_EQ(parse_poly(f.to_string(), R), f) << f.to_string();
    }
  }
}

TEST(RunCli, ExitCodes) {
  EXPECT_EQ(run_cli({"--ring", "z", "--poly", "x*(x-1)"}).exit_code, exit_code::intersective);
  EXPECT_EQ(run_cli({"--ring", "z", "--poly", "x^2-2"}).exit_code, exit_code::not_intersective);
  EXPECT_EQ(run_cli({"--ring", "z", "--poly", "(x^2-13)*(x^2-17)*(x^2-221)*(x^2+1)", "--max-prime", "300"}).exit_code,
            exit_code::inconclusive);
  EXPECT_EQ(run_cli({"--ring", "fq", "--q", "3", "--poly", "x^3 - T"}).exit_code, exit_code::unsupported);
  EXPECT_EQ(run_cli({"--ring", "z", "--poly", "x^2 - y"}).exit_code, exit_code::usage);
  EXPECT_EQ(run_cli({"--ring", "fq", "--poly", "x"}).exit_code, exit_code::usage);
  EXPECT_EQ(run_cli({"--ring", "fq", "--q", "6", "--poly", "x"}).exit_code, exit_code::usage);
  EXPECT_EQ(run_cli({"--ring", "z"}).exit_code, exit_code::usage);
  EXPECT_EQ(run_cli({"--bogus"}).exit_code, exit_code::usage);
  EXPECT_EQ(run_cli({"--help"}).exit_code, 0);
}

TEST(RunCli, HumanOutput) {
  auto r = run_cli({"--ring", "z", "--poly", "x^2 - y"});
  EXPECT_NE(r.err.find("offset 6"), std::string::npos) << r.err;

  auto n = run_cli({"--ring", "z", "--poly", "(x^2-3)*(x^2-13)*(x^2-39)", "--oracle", "40"});
  EXPECT_EQ(n.exit_code, exit_code::not_intersective);
  EXPECT_NE(n.out.find("verdict: NotIntersective"), std::string::npos) << n.out;
  EXPECT_NE(n.out.find("2^5"), std::string::npos) << n.out;
}

TEST(RunCli, FactorsFlagMustMatchThePolynomial) {
  auto ok = run_cli({"--ring", "z", "--factors", "x^2-13; x^2-17; x^2-221", "--json"});
  ASSERT_EQ(ok.exit_code, exit_code::intersective) << ok.err;
  auto doc = ordered_json::parse(ok.out);
  EXPECT_EQ(doc["certificate"]["kind"], "FamilyCriterion");

  auto bad = run_cli({"--ring", "z", "--poly", "x^2-4", "--factors", "x-2", "--json"});
  EXPECT_EQ(bad.exit_code, exit_code::usage);
  EXPECT_EQ(ordered_json::parse(bad.out)["error"]["code"], "ProductMismatch");

  auto red = run_cli({"--ring", "z", "--factors", "x^2-4", "--json"});
  EXPECT_EQ(ordered_json::parse(red.out)["error"]["code"], "ReducibleClaimedFactor");
}

TEST(RunCli, JsonValues) {
  auto r = run_cli({"--ring", "z", "--poly", "(x^2-3)*(x^2-13)*(x^2-39)", "--oracle", "40", "--json"});
  auto doc = ordered_json::parse(r.out);
  EXPECT_EQ(doc["verdict"], "NotIntersective");
  EXPECT_EQ(doc["witness"]["kind"], "ModulusWithoutRoot");
  EXPECT_EQ(doc["witness"]["modulus"]["value"], "32");
  EXPECT_EQ(doc["oracle"]["first_rootless"], "32");
  EXPECT_EQ(doc["oracle"]["witness_root_free"], true);

  auto e = run_cli({"--ring", "fq", "--q", "5", "--poly", "(x^2-T)*(x^2-(T+4))*(x^2-T*(T+4))", "--json"});
  auto d = ordered_json::parse(e.out);
  EXPECT_EQ(d["certificate"]["primes_checked"], 829);
  EXPECT_EQ(d["certificate"]["bound"], 5);
  EXPECT_EQ(d["profile"]["delta_prime"], 4);
  EXPECT_EQ(d["profile"]["D_prime"], 8);
}

// Every key path with the JSON type at that path; arrays contribute their element shapes.
void collect_shape(const ordered_json& j, const std::string& path, std::set<std::string>& out) {
  out.insert(path + ": " + std::string(j.type_name()));
  if (j.is_object())
    for (const auto& [k, v] : j.items()) collect_shape(v, path + "." + k, out);
  else if (j.is_array())
    for (const auto& v : j) collect_shape(v, path + "[]", out);
}

std::string shape_of(const std::string& text) {
  std::set<std::string> lines;
  collect_shape(ordered_json::parse(text), "$", lines);
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

void check_golden(const std::string& name, const std::vector<std::string>& args) {
  const std::string path = std::string(ISECT_GOLDEN_DIR) + "/" + name + ".shape";
  const std::string got = shape_of(run_cli(args).out);
  if (std::getenv("ISECT_UPDATE_GOLDEN")) {
    std::ofstream(path) << got;
    return;
  }
  std::ifstream in(path);
  ASSERT_TRUE(in) << "missing " << path;
  std::stringstream want;
  want << in.rdbuf();
  EXPECT_EQ(got, want.str()) << name;
}

TEST(RunCli, JsonShapesMatchGoldenFiles) {
  check_golden("trivial_root", {"--ring", "z", "--poly", "x*(x-1)", "--json"});
  check_golden("exhaustive",
               {"--ring", "fq", "--q", "5", "--poly", "(x^2-T)*(x^2-(T+4))*(x^2-T*(T+4))", "--json"});
  check_golden("family", {"--ring", "z", "--poly", "(x^2-13)*(x^2-17)*(x^2-221)", "--json"});
  check_golden("galois_obstruction", {"--ring", "z", "--poly", "x^2-2", "--json"});
  check_golden("modulus_without_root",
               {"--ring", "z", "--poly", "(x^2-3)*(x^2-13)*(x^2-39)", "--oracle", "40", "--json"});
  check_golden("inconclusive",
               {"--ring", "z", "--poly", "(x^2-13)*(x^2-17)*(x^2-221)*(x^2+1)", "--max-prime", "300", "--json"});
  check_golden("diagnostics", {"--ring", "z", "--poly", "x^2-2", "--diagnostics", "10", "--json"});
  check_golden("error", {"--ring", "fq", "--q", "3", "--poly", "x^3 - T", "--json"});
}

}  // namespace
}  // namespace isect::test
