#include "spacecross/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Outcome {
  int status;
  std::string out, err;
  json report() const { return json::parse(status == 0 ? out : err); }
};

Outcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "spacecross");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = spacecross::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, OrderTypes) {
  const auto r = cli({"order-types"});
  ASSERT_EQ(r.status, 0);
  const auto j = r.report();
  EXPECT_EQ(j["total"], 105);
  int sum = 0;
  for (const auto& [k, v] : j["by_components"].items()) sum += v.get<int>();
  EXPECT_EQ(sum, 105);
}

TEST(Cli, CountCrossingsOnSample) {
  const auto r = cli({"count-crossings", "--k", "4", "--input", std::string(SPACECROSS_DATA_DIR) + "/k4_convex.json"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.report()["count"], 0);
  EXPECT_EQ(r.report()["mode"], "exact");
  const auto f = cli({"count-crossings", "--mode", "float", "--input", std::string(SPACECROSS_DATA_DIR) + "/k4_convex.json"});
  ASSERT_EQ(f.status, 0);
  EXPECT_EQ(f.report()["mode"], "float");
  const auto p = cli({"count-planar", "--input", std::string(SPACECROSS_DATA_DIR) + "/k4_convex.json"});
  EXPECT_EQ(p.report()["count"], 1);
}

TEST(Cli, GenStairMeetsBounds) {
  const auto r = cli({"gen-stair", "--n", "16", "--m", "32", "--check-bounds"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = r.report();
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_GE(j["stair_drawing"]["edges"].size(), 32u);
  EXPECT_EQ(j["stair_drawing"]["diagonal_index"].size(), 16u);
}

TEST(Cli, GeneratorsAreDeterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"generate", "--kind", "drawing", "--n", "7", "--m", "9", "--seed", "42"},
        std::vector<std::string>{"generate", "--kind", "multiset", "--n", "20", "--dim", "2", "--seed", "5"},
        std::vector<std::string>{"generate", "--kind", "erdos-renyi", "--n", "12", "--p", "0.3", "--seed", "9"},
        std::vector<std::string>{"same-type", "--n", "20", "--seed", "4"}}) {
    const auto a = cli(args), b = cli(args);
    ASSERT_EQ(a.status, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, LinkingOfGeneratedHopfPair) {
  const auto gen = cli({"generate", "--kind", "hopf"});
  ASSERT_EQ(gen.status, 0);
  const auto path = temp_file("hopf.json", gen.out);
  const auto r = cli({"linking", "--input", path});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(std::abs(r.report()["lk"].get<int>()), 1);
}

TEST(Cli, SameTypeFromDocument) {
  const std::string doc = R"({
    "multisets": [{"dim": 1, "points": [["1"], ["2"], ["3"]]}, {"dim": 1, "points": [["5"], ["6"]]}],
    "polynomials": [{"blocks": [1, 1], "monomials": [{"coeff": "1", "exponents": {"x1.1": 1}},
                                                     {"coeff": "-1", "exponents": {"x2.1": 1}}]}]
  })";
  const auto r = cli({"same-type", "--input", temp_file("st.json", doc)});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.report()["signs"], json::array({-1}));
  EXPECT_EQ(r.report()["sizes"], json::array({3, 2}));
}

TEST(Cli, ErrorsCarryCodesAndStatus) {
  const auto unknown = cli({"frobnicate"});
  EXPECT_EQ(unknown.status, 1);
  const auto missing = cli({"count-crossings", "--input", "/definitely/not/here.json"});
  EXPECT_EQ(missing.status, 1);
  EXPECT_EQ(missing.report()["error"]["code"], "ValidationError");
  const auto bad_json = cli({"count-planar", "--input", temp_file("bad.json", "{not json")});
  EXPECT_EQ(bad_json.status, 1);
  const auto bad_tol = cli({"count-crossings", "--mode", "float", "--tol", "0", "--input", "x"});
  EXPECT_EQ(bad_tol.status, 1);
  const auto bad_k = cli({"count-crossings", "--k", "5", "--input", "x"});
  EXPECT_EQ(bad_k.status, 1);
  const auto bad_kind = cli({"generate", "--kind", "unicorn"});
  EXPECT_EQ(bad_kind.report()["error"]["code"], "ValidationError");
  const auto too_big = cli({"same-type", "--input",
                            temp_file("big.json", R"({"multisets":[{"dim":1,"points":[["-1"],["1"]]},{"dim":1,"points":[["-1"],["1"]]}],
      "polynomials":[{"blocks":[1,1],"monomials":[{"coeff":"1","exponents":{"x1.1":1,"x2.1":1}},
                                                  {"coeff":"1","exponents":{"x2.1":2}},{"coeff":"1","exponents":{"x2.1":3}}]}]})")});
  EXPECT_EQ(too_big.status, 1);
  EXPECT_EQ(too_big.report()["error"]["code"], "PreconditionViolated");
}

TEST(Cli, OutputFile) {
  const std::string path = ::testing::TempDir() + "order.json";
  std::remove(path.c_str());
  const auto r = cli({"order-types", "--output", path});
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(json::parse(in)["total"], 105);
}

TEST(Cli, SubcommandListIsComplete) {
  const auto& names = spacecross::subcommands();
  for (const char* want : {"count-crossings", "count-planar", "lift-sphere", "gen-stair", "gen-hexgrid", "linking",
                           "conway-gordon", "transversal-4cycles", "witness-pipeline", "order-types", "yao-yao",
                           "same-type"})
    EXPECT_NE(std::find(names.begin(), names.end(), want), names.end()) << want;
}
