#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "generators.hpp"
#include "parse.hpp"

namespace superinv::cli {
namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Parser, ReadsMinorsAndFakeIndices) {
  const Expr e = parse_expression("X[1|1]*Xs[1|1]-1");
  EXPECT_TRUE(mentions_minors(e));
  EXPECT_FALSE(mentions_coordinates(e));
  const auto f = to_invariant(e, 2, 2);
  EXPECT_EQ(f.to_string(), "X[1|1]*Xs[1|1] - 1");

  const Expr fake = parse_expression("X[^2|1]");
  ASSERT_EQ(fake.kind, Expr::Kind::Minor);
  EXPECT_EQ(fake.minor.kind(), MinorKind::FakeI);
  EXPECT_TRUE(fake.odd);
}

TEST(Parser, IsWhitespaceInsensitive) {
  EXPECT_EQ(to_invariant(parse_expression(" 2 * X [ 1 | 2 ]\n - 3/4 "), 2, 2),
            to_invariant(parse_expression("2*X[1|2]-3/4"), 2, 2));
}

TEST(Parser, ErrorsCarryPositions) {
  try {
    parse_expression("al[1,1]^2");
    FAIL() << "odd square accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.pos().line, 1u);
    EXPECT_NE(std::string(e.what()).find("odd"), std::string::npos);
  }
  try {
    parse_expression("x[1,1] +\n  * y[1,1]");
    FAIL() << "syntax error accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.pos().line, 2u);
    EXPECT_EQ(e.pos().column, 3u);
  }
  EXPECT_THROW(parse_expression("z[1,1]"), ParseError);
  EXPECT_THROW(parse_expression("X[^1,^2|1]"), ParseError);
  EXPECT_THROW(to_invariant(parse_expression("X[3|1]"), 2, 2), ParseError);
  EXPECT_THROW(parse_expression("(x[1,1]"), ParseError);
}

TEST(Parser, CoordinateExpressionsEvaluate) {
  const Expr e = parse_expression("x[1,1]*y[1,1] + al[1,1]*be[1,1]");
  const ContextPtr ctx = context_for({&e});
  EXPECT_EQ(ctx->even_count(), 2u);
  EXPECT_EQ(ctx->odd_count(), 2u);
  const Scalar s = to_scalar(e, ctx);
  EXPECT_EQ(s.term_count(), 2u);
}

TEST(ParserProperty, PrintedPolynomialsRoundTrip) {
  Rng rng(91);
  for (int k = 0; k < superinv::testgen::kPropertyCases; ++k) {
    const std::size_t p = 1 + rng.below(3), q = 1 + rng.below(3);
    const InvariantPolynomial f = superinv::testgen::invariant(p, q, 3, rng);
    EXPECT_EQ(to_invariant(parse_expression(f.to_string()), p, q), f) << f.to_string();
  }
  for (const auto& [rel, poly] : sl11_relation_polynomials(2, 3)) {
    EXPECT_EQ(to_invariant(parse_expression(poly.to_string()), 2, 3), poly) << rel.to_string();
  }
}

TEST(Cli, PluckerSl11SymbolicJson) {
  const Result r = invoke({"plucker", "--group", "sl11", "--p", "2", "--q", "2", "--mode", "symbolic", "--emit", "json"});
  EXPECT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  ASSERT_EQ(j["relations"].size(), 52u);
  for (const auto& rel : j["relations"]) EXPECT_TRUE(rel["certificate"]["verified"].get<bool>());
}

TEST(Cli, JacobiSuper) {
  const Result r = invoke({"jacobi", "--mode", "super", "--p", "2", "--q", "2", "--r", "1", "--s", "1"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("verified: true"), std::string::npos);
  const Result bad = invoke({"jacobi", "--mode", "super", "--p", "2", "--q", "2", "--r", "1", "--s", "1", "--mutate",
                             "flip-sign"});
  EXPECT_EQ(bad.code, kFalsified) << bad.out << bad.err;
}

TEST(Cli, NormalFormOfFirstRelation) {
  const Result r = invoke({"sft11", "normal-form", "--expr", "X[1|1]*Xs[1|1]-1", "--p", "2", "--q", "2"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("in ideal: true"), std::string::npos);
  const Result g = invoke({"sft11", "normal-form", "--expr", "X[1|1]", "--p", "2", "--q", "2", "--emit", "json"});
  EXPECT_EQ(g.code, kOk);
  const auto j = nlohmann::json::parse(g.out);
  EXPECT_FALSE(j["in_ideal"].get<bool>());
  ASSERT_EQ(j["normal_form"].size(), 1u);
  EXPECT_EQ(j["normal_form"][0]["standard_product"], "X[1|1]");
}

TEST(Cli, EmptyRelationListIsAnEmptyJsonArray) {
  const Result r = invoke({"plucker", "--group", "classical", "--r", "2", "--p", "3", "--emit", "json"});
  EXPECT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["relations"].is_array());
  EXPECT_TRUE(j["relations"].empty());
}

TEST(Cli, OutputIsByteStable) {
  const std::string path = ::testing::TempDir() + "classical24.json";
  std::string first;
  for (int k = 0; k < 2; ++k) {
    const Result r = invoke({"plucker", "--group", "classical", "--r", "2", "--p", "4", "--emit", "json", "--out", path});
    ASSERT_EQ(r.code, kOk);
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    if (k == 0) {
      first = ss.str();
      EXPECT_EQ(nlohmann::json::parse(first)["relations"].size(), 1u);
    } else {
      EXPECT_EQ(ss.str(), first);
    }
  }
  std::remove(path.c_str());
  const auto args = std::vector<std::string>{"plucker", "--group", "slrs", "--r", "2", "--s", "1", "--p", "3", "--q", "2",
                                             "--family", "gsp3", "--mode", "numeric", "--seed", "5", "--emit", "json"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(Cli, LatexUsesHats) {
  const Result r = invoke({"plucker", "--group", "sl11", "--p", "1", "--q", "1", "--family", "sp1", "--emit", "latex"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find(R"(X_{i|\hat\mu}X^*_{i|\hat\mu}=1)"), std::string::npos) << r.out;
}

TEST(Cli, PrintedGsp4IsFalsifiedWithExitOne) {
  const Result r = invoke({"plucker", "--group", "slrs", "--r", "2", "--s", "1", "--p", "3", "--q", "2", "--family",
                           "gsp4", "--gsp4", "printed", "--mode", "numeric", "--cap", "10"});
  EXPECT_EQ(r.code, kFalsified) << r.out;
  EXPECT_NE(r.out.find("witness"), std::string::npos);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(invoke({"sft11", "normal-form", "--expr", "al[1,1]^2", "--p", "2", "--q", "2"}).code, kInputError);
  EXPECT_EQ(invoke({"plucker", "--group", "nonsense"}).code, kInputError);
  EXPECT_EQ(invoke({"plucker", "--group", "slrs", "--r", "3", "--s", "1", "--p", "2", "--q", "2"}).code, kInputError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kInputError);
  EXPECT_EQ(invoke({"ber", "--matrix", "x[1,1], al[1,1]"}).code, kInputError);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST(Cli, ResourceCapExitsThree) {
  const Result r = invoke({"ber", "--generic", "--p", "3", "--q", "3", "--op-cap", "100"});
  EXPECT_EQ(r.code, kResourceCap) << r.out << r.err;
}

TEST(Cli, BerAndCramer) {
  const Result b = invoke({"ber", "--matrix", "x[1,1], al[1,1]; be[1,1], y[1,1]", "--even", "1", "--emit", "json"});
  EXPECT_EQ(b.code, kOk) << b.err;
  const auto j = nlohmann::json::parse(b.out);
  EXPECT_EQ(j["kind"], "even");
  EXPECT_EQ(j["ber"], "(x[1,1])/(y[1,1]) + (-1)/(y[1,1]^2)*al[1,1]*be[1,1]");
  const Result c = invoke({"cramer", "--example"});
  EXPECT_EQ(c.code, kOk);
  EXPECT_NE(c.out.find("check M v = b: ok"), std::string::npos);
}

TEST(Cli, FftReportsEveryEntry) {
  const Result r = invoke({"fft", "--r", "1", "--s", "1", "--p", "2", "--q", "2", "--emit", "json"});
  EXPECT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["verified"].get<bool>());
  EXPECT_EQ(j["entries"].size(), 8u);
}

TEST(Cli, StandardProductsReportCollision) {
  EXPECT_EQ(invoke({"sft11", "standard", "--p", "2", "--q", "2"}).code, kOk);
  const Result r = invoke({"sft11", "standard", "--p", "1", "--q", "3"});
  EXPECT_EQ(r.code, kFalsified);
  EXPECT_NE(r.out.find("collision:"), std::string::npos);
}

TEST(Cli, SelftestSubset) {
  const Result r = invoke({"selftest", "--only", "1", "2"});
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_NE(r.out.find("PASS   1"), std::string::npos);
  EXPECT_NE(r.out.find("PASS   2"), std::string::npos);
}

}  // namespace
}  // namespace superinv::cli
