#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "lieshull/cli.hpp"
#include "lieshull/io.hpp"
#include "support.hpp"

using namespace lieshull;
using namespace lieshull::testing;

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "lieshull");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lieshull_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& leaf) const { return (dir_ / leaf).string(); }

  // Writes catalog files and returns {realization, subgroup} paths.
  std::pair<std::string, std::string> make(const std::string& name, std::vector<std::string> extra = {}) {
    std::vector<std::string> args{"catalog", name, "--out-dir", dir_.string()};
    args.insert(args.end(), extra.begin(), extra.end());
    const Result r = call(args);
    EXPECT_EQ(r.code, 0) << r.err;
    const Json files = r.json()["result"]["files"];
    return {files[0].get<std::string>(), files[1].get<std::string>()};
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(call({"frobnicate"}).code, kExitInput);
  EXPECT_EQ(call({}).code, kExitInput);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
  EXPECT_EQ(call({"hull", "a.json", "b.json", "--method", "bogus"}).code, kExitInput);
  EXPECT_EQ(call({"--output", "xml", "classify", "a.json"}).code, kExitInput);
  EXPECT_EQ(call({"validate", path("missing.json")}).code, kExitInput);
}

TEST_F(Cli, ValidateAlgebraFiles) {
  write_json_file(path("h3.json"), to_json(h3()));
  const Result ok = call({"validate", path("h3.json")});
  ASSERT_EQ(ok.code, kExitOk) << ok.err;
  EXPECT_EQ(ok.json()["result"]["kind"], "algebra");
  EXPECT_EQ(ok.json()["exit_code"], 0);

  const LieAlgebra bad("bad", {"X", "Y", "Z"}, {{0, 1, {{2, Rational(1)}}}, {1, 2, {{1, Rational(1)}}}});
  write_json_file(path("bad.json"), to_json(bad));
  const Result r = call({"validate", path("bad.json")});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_EQ(r.json()["result"]["structure"]["valid"], false);

  std::ofstream(path("junk.json")) << "{ not json";
  EXPECT_EQ(call({"validate", path("junk.json")}).code, kExitInput);
}

TEST_F(Cli, CatalogThenValidate) {
  const auto [rpath, gpath] = make("heisenberg");
  const Result r = call({"validate", rpath, gpath});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json()["result"]["mode"], "unipotent-exact");
  EXPECT_EQ(r.json()["result"]["subgroup_generators"], 2);
  EXPECT_EQ(r.json()["inputs_digest"].get<std::string>().size(), 16u);
}

TEST_F(Cli, ClassifyReportsVerdicts) {
  const auto [rpath, gpath] = make("heisenberg");
  const Result r = call({"classify", rpath});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json()["result"]["nilpotent"], "true");
  EXPECT_EQ(r.json()["exactness"], "exact");

  const auto [ppath, unused] = make("paper_example");
  const Json p = call({"classify", ppath}).json()["result"];
  EXPECT_EQ(p["completely_solvable"], "false");
  EXPECT_EQ(p["exponential"], "false");
  EXPECT_FALSE(p["notes"].empty());
}

TEST_F(Cli, HullMethodsAndVerify) {
  const auto [rpath, gpath] = make("heisenberg");
  for (const std::string m : {"log-span", "recursive"}) {
    const Result r = call({"hull", rpath, gpath, "--method", m, "--verify"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.json()["result"]["report"]["hull"]["basis"].size(), 3u) << m;
    EXPECT_EQ(r.json()["result"]["verification"]["passed"], true) << m;
  }
  EXPECT_EQ(call({"hull", rpath, gpath, "--method", "abelian"}).code, kExitPrecondition);

  const auto [ppath, pgpath] = make("paper_example");
  EXPECT_EQ(call({"hull", ppath, pgpath, "--method", "recursive"}).code, kExitPrecondition);
  const Result warned = call({"hull", ppath, pgpath});
  EXPECT_EQ(warned.json()["exactness"], "numeric");
  EXPECT_FALSE(warned.json()["warnings"].empty());
}

TEST_F(Cli, Density) {
  const auto [rpath, gpath] = make("heisenberg");
  const Result dense = call({"density", rpath, gpath});
  ASSERT_EQ(dense.code, kExitOk) << dense.err;
  EXPECT_EQ(dense.json()["result"]["dense"], true);

  Json single = read_json_file(gpath);
  single["generators"].erase(1);
  write_json_file(path("single.json"), single);
  const Result r = call({"density", rpath, path("single.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json()["result"]["dense"], false);

  write_json_file(path("center.json"), Json::parse(R"({"basis": [["0", "0", "1"]]})"));
  const Result q = call({"density", rpath, path("single.json"), "--quotient", path("center.json")});
  ASSERT_EQ(q.code, kExitOk) << q.err;
  EXPECT_EQ(q.json()["result"]["quotient"]["dense"], true);

  write_json_file(path("line.json"), Json::parse(R"({"basis": [["1", "0", "0"]]})"));
  EXPECT_EQ(call({"density", rpath, gpath, "--quotient", path("line.json")}).code, kExitInput);

  const auto [apath, agpath] = make("aff1");
  EXPECT_EQ(call({"density", apath, agpath}).code, kExitPrecondition);
}

TEST_F(Cli, Rigidity) {
  const CatalogEntry a = catalog("abelian", CatalogParams{2, std::nullopt});
  auto element = [&](std::initializer_list<int> x) {
    return Json{{"matrix", to_json(group_exp(a.realization, vec(x)).exact_matrix())}};
  };
  Json in;
  in["source"] = to_json(*a.realization);
  in["target"] = to_json(*a.realization);
  in["generators"] = to_json(a.subgroup)["generators"];
  in["images"] = {element({2, 1}), element({1, 1})};
  write_json_file(path("plane.json"), in);
  const Result ok = call({"rigidity", path("plane.json"), "--trials", "5"});
  ASSERT_EQ(ok.code, kExitOk) << ok.err;
  EXPECT_EQ(ok.json()["result"]["phi"], to_json(mat2(2, 1, 1, 1)));
  EXPECT_EQ(ok.json()["result"]["uniqueness"]["unique"], true);

  in["images"] = {element({1, 1}), element({2, 2})};
  write_json_file(path("flat.json"), in);
  const Result bad = call({"rigidity", path("flat.json")});
  EXPECT_EQ(bad.code, kExitComputation);
  EXPECT_EQ(bad.json()["result"]["invertible"], false);
}

TEST_F(Cli, CatalogParameters) {
  const Result p = call({"catalog", "paper_example", "--out-dir", dir_.string()});
  ASSERT_EQ(p.code, kExitOk);
  EXPECT_EQ(p.json()["result"]["generators"], 3);
  EXPECT_EQ(p.json()["exactness"], "numeric");

  EXPECT_EQ(call({"catalog", "semidirect_integer", "--matrix", "2,1;1,1", "--out-dir", dir_.string()}).code, kExitOk);
  const Result neg = call({"catalog", "semidirect_integer", "--matrix", "-1,0;0,-1", "--out-dir", dir_.string()});
  EXPECT_EQ(neg.code, kExitInput);
  EXPECT_NE(neg.err.find("no principal real logarithm"), std::string::npos);
  EXPECT_EQ(call({"catalog", "heisenberg", "--n", "5", "--out-dir", dir_.string()}).code, kExitOk);
  EXPECT_EQ(call({"catalog", "heisenberg", "--n", "4", "--out-dir", dir_.string()}).code, kExitInput);
  EXPECT_EQ(call({"catalog", "nonesuch", "--out-dir", dir_.string()}).code, kExitInput);
}

TEST_F(Cli, TextOutputMatchesJson) {
  const auto [rpath, gpath] = make("heisenberg");
  const Result j = call({"hull", rpath, gpath, "--method", "recursive"});
  const Result t = call({"--output", "text", "hull", rpath, gpath, "--method", "recursive"});
  ASSERT_EQ(j.code, t.code);
  auto without_timing = [](const std::string& s) {
    std::istringstream in(s);
    std::string line, out;
    while (std::getline(in, line))
      if (line.rfind("timing_ms", 0) != 0) out += line + "\n";
    return out;
  };
  EXPECT_EQ(without_timing(flatten_text(j.json())), without_timing(t.out));
  EXPECT_NE(t.out.find("result.report.hull.basis[2][2]: 1"), std::string::npos);
}

TEST_F(Cli, ToleranceFromEnvironment) {
  const auto [rpath, gpath] = make("aff1");
  ::setenv("LIESHULL_TOLERANCE", "1e-6", 1);
  const Result env = call({"classify", rpath});
  const Result flag = call({"--tolerance", "1e-8", "classify", rpath});
  ::unsetenv("LIESHULL_TOLERANCE");
  const Result none = call({"classify", rpath});
  ASSERT_EQ(env.code, kExitOk) << env.err;
  EXPECT_DOUBLE_EQ(env.json()["tolerance"].get<double>(), 1e-6);
  EXPECT_DOUBLE_EQ(flag.json()["tolerance"].get<double>(), 1e-8);
  EXPECT_DOUBLE_EQ(none.json()["tolerance"].get<double>(), kDefaultTolerance);
  EXPECT_EQ(call({"--tolerance", "-1", "classify", rpath}).code, kExitInput);
}

TEST_F(Cli, SeedIsReported) {
  const auto [rpath, gpath] = make("heisenberg");
  EXPECT_EQ(call({"--seed", "77", "classify", rpath}).json()["seed"], 77);
}
