#include <gtest/gtest.h>

#include <sstream>

#include "commands.hpp"
#include "json_io.hpp"
#include "ksix/catalog.hpp"
#include "reproduce.hpp"

using namespace ksix;
using ksix::cli::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& file) { return std::string(KSIX_TEST_DATA_DIR) + "/" + file; }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, HelpAndUsageErrors) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"group", "hom", "Z"}).code, 2);
}

TEST(Cli, MalformedInputIsAParseError) {
  Result r = run({"group", "canon", "{bad"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({"group", "canon", "Z_"}).code, 2);
  EXPECT_EQ(run({"ck", "analyze", data("missing.txt")}).code, 2);
}

TEST(Cli, MathematicalFailuresExitOne) {
  EXPECT_EQ(run({"catalog", "get", "e9", "--n", "3"}).code, 1);
  EXPECT_EQ(run({"catalog", "get", "e0", "--n", "1"}).code, 1);
  EXPECT_EQ(run({"group", "extensions", "Z_2+Z_2+Z_2", "Z_2+Z_2+Z_2", "--bound", "16"}).code, 1);
  EXPECT_EQ(run({"grid", "solve", data("inconsistent.json")}).code, 1);
  EXPECT_EQ(run({"ck", "analyze", data("A.txt"), "--ideal", "4,5"}).code, 1);
}

TEST(Cli, GroupVerbs) {
  Result canon = run({"group", "canon", "Z_4 + Z_2 + Z"});
  ASSERT_EQ(canon.code, 0);
  EXPECT_EQ(json::parse(canon.out)["canonical"], "Z ⊕ Z_2 ⊕ Z_4");
  EXPECT_EQ(json::parse(run({"group", "hom", "Z_4", "Z_6"}).out)["group"]["canonical"], "Z_2");
  EXPECT_EQ(json::parse(run({"group", "ext", "Z_3", "Z_9"}).out)["canonical"], "Z_3");
  EXPECT_EQ(json::parse(run({"group", "epi", "Z+Z_3", "Z+Z_3+Z_3"}).out)["exists"], false);
  EXPECT_EQ(json::parse(run({"group", "mono", "Z_2", "Z+Z_4"}).out)["exists"], true);
}

TEST(Cli, GroupJsonRoundTrip) {
  for (const std::string g : {"0", "Z^3", "Z_6 + Z_4", "Z + Z_12 + Z_2"}) {
    json first = json::parse(run({"group", "canon", g}).out);
    AbelianGroup parsed = cli::group_from_json(first);
    EXPECT_EQ(to_string(parsed.canonical()), first["canonical"]);
    json second = json::parse(run({"group", "canon", first.dump()}).out);
    EXPECT_EQ(second["canonical"], first["canonical"]);
  }
}

TEST(Cli, ComplexAndTotalRoundTrip) {
  Result s = run({"sixterm", "suspend", "catalog:e1:3"});
  ASSERT_EQ(s.code, 0) << s.err;
  SixTermComplex back = cli::complex_from_json(json::parse(s.out));
  EXPECT_TRUE(same_complex(back, catalog_get("Se1", 3).invariant.integral));

  Result t = run({"catalog", "get", "e0", "--n", "3"});
  ASSERT_EQ(t.code, 0);
  TotalSixInvariant inv = cli::total_from_json(json::parse(t.out));
  EXPECT_TRUE(validate(inv).clean());
  TotalSixInvariant stored = catalog_get("e0", 3).invariant;
  EXPECT_TRUE(same_complex(inv.integral, stored.integral));
  EXPECT_TRUE(same_complex(inv.coefficients.at(3).complex, stored.coefficients.at(3).complex));
  json emitted = json::parse(t.out);
  emitted.erase("name");
  emitted.erase("n");
  EXPECT_EQ(cli::total_to_json(inv), emitted);
}

TEST(Cli, SixTermAndTotalVerbs) {
  EXPECT_EQ(run({"sixterm", "check", "catalog:e0:5"}).code, 0);
  EXPECT_EQ(json::parse(run({"sixterm", "hom", "catalog:e0:3", "catalog:Se1:3"}).out)["group"]["canonical"], "Z_3");
  EXPECT_EQ(json::parse(run({"sixterm", "ext", "catalog:e0:3", "catalog:e1:3"}).out)["canonical"], "Z_3");
  EXPECT_EQ(run({"total", "validate", "catalog:Se1+e1+e0:2"}).code, 0);
  Result h = run({"total", "hom-lambda", "catalog:e1:3", "catalog:e0:3", "--coeff", "3"});
  ASSERT_EQ(h.code, 0) << h.err;
  EXPECT_EQ(json::parse(h.out)["group"]["canonical"], "Z ⊕ Z_3 ⊕ Z_3");
  EXPECT_EQ(run({"total", "hom-lambda", "catalog:e1:3", "catalog:e0:3", "--coeff", "5"}).code, 1);
}

TEST(Cli, SplitTestVerdicts) {
  Result r = run({"uct", "split-test", "--ext", "Z_2", "--hom", "Z_2", "--middle", "Z_2 + Z_2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "SplitPossible\n");
  Result n = run({"uct", "split-test", "--ext", "Z_3", "--hom", "Z_3", "--middle", "Z_9"});
  EXPECT_EQ(n.code, 0);
  EXPECT_EQ(n.out, "Nonsplit\n");
}

TEST(Cli, GridSolve) {
  Result r = run({"grid", "solve", data("nonsplit3.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("unique  Z_9"), std::string::npos);
  Result g = run({"grid", "solve", data("grid4_3.json")});
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_NE(g.out.find("unique  Z ⊕ Z_3"), std::string::npos);
  json j = json::parse(run({"grid", "solve", data("grid4_3.json"), "--json"}).out);
  ASSERT_EQ(j["classes"].size(), 1U);
  EXPECT_EQ(j["classes"][0]["group"]["canonical"], "Z ⊕ Z_3");
}

TEST(Cli, CuntzKriegerAnalysis) {
  Result r = run({"ck", "analyze", data("A.txt"), "--ideal", "1,2,3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("condition  true"), std::string::npos);
  EXPECT_NE(r.out.find("ideals     1"), std::string::npos);
  EXPECT_NE(r.out.find("Z -> Z -> Z_2\n0 <- Z <- Z"), std::string::npos);
  Result b = run({"ck", "analyze", data("B.txt"), "--ideal", "1,2,3"});
  ASSERT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("Z_2 -> Z -> Z\nZ   <- Z <- 0"), std::string::npos);
  for (const char* f : {"C.txt", "D.txt"}) {
    Result c = run({"ck", "analyze", data(f)});
    EXPECT_EQ(c.code, 0);
    EXPECT_NE(c.out.find("condition  true"), std::string::npos);
  }
}

TEST(Cli, ReproduceEveryPipeline) {
  for (const auto& [which, n] : std::vector<std::pair<std::string, std::string>>{
           {"nonsplit", "2"}, {"nonsplit", "5"}, {"homlambda", "3"}, {"ck", "2"}, {"prop43", "2"}, {"prop43", "3"}}) {
    Result r = run({"paper", "reproduce", which, "--n", n});
    EXPECT_EQ(r.code, 0) << which << " " << r.out;
    auto ls = lines(r.out);
    ASSERT_FALSE(ls.empty());
    for (const auto& l : ls) EXPECT_EQ(l.rfind("PASS  ", 0), 0U) << l;
  }
  Result r = run({"paper", "reproduce", "nonsplit", "--n", "3"});
  EXPECT_NE(r.out.find("KK-middle candidate: Z_9"), std::string::npos);
  EXPECT_NE(r.out.find("verdict: Nonsplit"), std::string::npos);
  EXPECT_EQ(run({"paper", "reproduce", "nonsplit", "--n", "3"}).out, r.out);
  EXPECT_EQ(run({"paper", "reproduce", "elsewhere"}).code, 2);
}

TEST(Cli, ReproduceClaimsAllPass) {
  for (unsigned long n : {2UL, 3UL, 5UL})
    for (const auto& claims : {cli::reproduce_nonsplit(n), cli::reproduce_homlambda(n), cli::reproduce_prop43(n)})
      for (const auto& c : claims) EXPECT_TRUE(c.pass) << c.name << ": " << c.computed << " vs " << c.expected;
  for (const auto& c : cli::reproduce_ck()) EXPECT_TRUE(c.pass) << c.name;
}

TEST(GridDiagrams, WorkedDiagramsSolveUniquely) {
  for (long n : {2, 3, 5}) {
    GridSolution a = solve(cli::diagram_from_json(cli::nonsplitting_diagram(n)));
    ASSERT_TRUE(a.unique());
    EXPECT_EQ(to_string(a.classes[0].form), "Z_" + std::to_string(n * n));
    GridSolution b = solve(cli::diagram_from_json(cli::four_by_four_diagram(n)));
    ASSERT_TRUE(b.unique());
    EXPECT_EQ(to_string(b.classes[0].form), "Z ⊕ Z_" + std::to_string(n));
  }
}

TEST(GridDiagrams, FourByFourColumnNormalizesThroughKernel) {
  auto cs = normalize(cli::diagram_from_json(cli::four_by_four_diagram(3)));
  bool found = false;
  for (const auto& c : cs)
    if (c.kind == NormalizedConstraint::Kind::ShortExact && c.sub.canonical() == AbelianGroup::cyclic(3).canonical() &&
        c.quotient.canonical() == AbelianGroup::free(1).canonical())
      found = true;
  EXPECT_TRUE(found);
}
