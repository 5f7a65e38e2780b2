#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "lieq/cli.hpp"

using namespace lieq;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "lieq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(TypeSpec, Examples) {
  EXPECT_EQ(parse_type_spec("G2"), (std::vector<SimpleType>{{'G', 2}}));
  EXPECT_EQ(parse_type_spec("C2xA1"), (std::vector<SimpleType>{{'C', 2}, {'A', 1}}));
  EXPECT_EQ(parse_type_spec("b3Xa1"), (std::vector<SimpleType>{{'B', 3}, {'A', 1}}));
  EXPECT_EQ(parse_type_spec(" A1 x A1 "), (std::vector<SimpleType>{{'A', 1}, {'A', 1}}));
  EXPECT_EQ(parse_type_spec("e8"), (std::vector<SimpleType>{{'E', 8}}));
}

TEST(TypeSpec, InvalidRank) {
  for (const char* s : {"D3", "E9", "F2", "G3", "B1", "A0", "C2xD2"}) EXPECT_THROW(parse_type_spec(s), InvalidRank) << s;
}

TEST(TypeSpec, ParseErrorPositions) {
  auto pos = [](const std::string& s) -> long {
    try {
      parse_type_spec(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position);
    }
    return -1;
  };
  EXPECT_EQ(pos(""), 0);
  EXPECT_EQ(pos("B"), 1);
  EXPECT_EQ(pos("B3xQ1"), 3);
  EXPECT_EQ(pos("A2x"), 3);
  EXPECT_EQ(pos("A2+A1"), 2);
  EXPECT_EQ(pos("2A"), 0);
}

TEST(IVecParse, Forms) {
  EXPECT_EQ(parse_ivec("1,0,-2"), (IVec{1, 0, -2}));
  EXPECT_EQ(parse_ivec("(0, 1)"), (IVec{0, 1}));
  EXPECT_THROW(parse_ivec("1,a"), ParseError);
  EXPECT_THROW(parse_ivec("1.5"), ParseError);
  EXPECT_THROW(parse_ivec(""), ParseError);
}

TEST(Cli, RootsysG2Json) {
  const Result r = call({"rootsys", "--type", "G2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["schema"], "lieq.rootsys/1");
  EXPECT_EQ(j["positive_roots"], 6);
  EXPECT_EQ(j["factors"][0]["beta_max"]["root"], json::array({3, 2}));
  EXPECT_EQ(j["factors"][0]["beta_min"]["root"], json::array({2, 1}));
}

TEST(Cli, ClassifyE8Bound2) {
  const Result r = call({"classify", "--type", "E8", "--bound", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["families"], json::array({"(k+1)w8"}));
  EXPECT_TRUE(j["oracle_equal"].get<bool>());
  EXPECT_EQ(j["entries"].size(), 3u);  // 0, w8, 2 w8
}

TEST(Cli, ClassifyCsvAndFamilyGap) {
  const Result r = call({"classify", "--type", "G2", "--bound", "3", "--format", "csv"});
  EXPECT_EQ(r.code, 1);  // (2,1) and (3,1) are inadmissible but in no listed family
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "mu,p,alpha,beta,parities,family,k,matched");
  EXPECT_NE(r.out.find("2 1,"), std::string::npos);
}

TEST(Cli, VerifyBracketB3NaturalPasses) {
  const Result r = call({"verify", "--suite", "bracket", "--type", "B3", "--rep", "natural"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Cli, VerifyChevalleyAndZform) {
  for (const char* suite : {"chevalley", "zform", "weyl", "geodesic"}) {
    const Result r = call({"verify", "--suite", suite, "--type", "C2", "--rep", "natural", "--format", "json"});
    EXPECT_EQ(r.code, 0) << suite << r.out;
    EXPECT_EQ(json::parse(r.out)["failed"], 0);
  }
}

TEST(Cli, VerifyAllReportsKnownCounterexamples) {
  const Result r = call({"verify", "--type", "A2", "--rep", "adjoint", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  const json j = json::parse(r.out);
  EXPECT_GT(j["failed"].get<long>(), 0);
  for (const auto& s : j["suites"]) {
    const std::string name = s["suite"];
    if (name == "chevalley" || name == "zform" || name == "weyl" || name == "geodesic") EXPECT_EQ(s["failed"], 0) << name;
  }
}

TEST(Cli, GeodesicB3Natural) {
  const Result r = call({"geodesic", "--type", "B3", "--rep", "natural", "--weight", "1,0,0", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j["subalgebras"].size(), 2u);
  EXPECT_EQ(j["subalgebras"][0]["kind"], "weight");
  EXPECT_EQ(j["subalgebras"][0]["center"].size(), 1u);
  EXPECT_EQ(j["subalgebras"][1]["dim"], 3);
  const Result q = call({"geodesic", "--type", "B3", "--rep", "natural", "--weight", "1,0,0", "--root", "0,1,0",
                         "--format", "json"});
  ASSERT_EQ(q.code, 0) << q.err;
  const json k = json::parse(q.out)["subalgebras"][0];
  EXPECT_EQ(k["kind"], "quaternion");
  EXPECT_EQ(k["center"].size(), 4u);
  EXPECT_EQ(k["c"], "0");
  EXPECT_TRUE(k["totally_geodesic"].get<bool>());
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"verify", "--type", "B3", "--rep", "natural", "--format", "json"};
  EXPECT_EQ(call(args).out, call(args).out);
}

TEST(Cli, NoFloatingPointInOutput) {
  const Result r = call({"geodesic", "--type", "A2", "--rep", "adjoint", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  long floats = 0;
  std::function<void(const json&)> walk = [&](const json& j) {
    if (j.is_number_float()) ++floats;
    if (j.is_structured())
      for (const auto& x : j) walk(x);
  };
  walk(json::parse(r.out));
  EXPECT_EQ(floats, 0);
}

TEST(Cli, OutFile) {
  const std::string path = ::testing::TempDir() + "lieq_cli_out.csv";
  const Result r = call({"rootsys", "--type", "A2", "--format", "csv", "--out", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::string first;
  std::getline(f, first);
  EXPECT_EQ(first, "index,root,weight,height,half_square_length");
  std::remove(path.c_str());
}

TEST(Cli, ErrorCodes) {
  Result r = call({"rootsys", "--type", "D3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("error[invalid-rank]", 0), 0u) << r.err;
  r = call({"rootsys", "--type", "B3yA1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("error[parse]", 0), 0u) << r.err;
  r = call({"module", "--type", "A2", "--rep", "spin"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("error[domain]", 0), 0u) << r.err;
  r = call({"module", "--type", "G2", "--rep", "natural"});
  EXPECT_EQ(r.code, 2);
  r = call({"verify", "--type", "A2", "--suite", "nope"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("error[usage]", 0), 0u) << r.err;
  r = call({"frobnicate", "--type", "A2"});
  EXPECT_EQ(r.code, 2);
  r = call({"classify", "--type", "C2xA1"});
  EXPECT_EQ(r.code, 2);
  r = call({"geodesic", "--type", "B3", "--rep", "natural", "--weight", "1,0"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, ChevalleyAndModuleAndNilalg) {
  Result r = call({"chevalley", "--type", "G2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["dim"], 14);
  EXPECT_EQ(j["jacobi_failures"], 0);
  EXPECT_TRUE(j["compact_integral"].get<bool>());
  r = call({"module", "--type", "B3", "--rep", "natural", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = json::parse(r.out);
  EXPECT_EQ(j["complex_dim"], 7);
  EXPECT_EQ(j["real_dim"], 14);
  EXPECT_TRUE(j["zform_ok"].get<bool>());
  r = call({"nilalg", "--type", "A2", "--rep", "natural", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = json::parse(r.out);
  EXPECT_EQ(j["dim_U"], 6);
  EXPECT_EQ(j["dim_G0"], 8);
  EXPECT_EQ(j["center_dim"], 8);
}
