#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "kleinjet/cli.hpp"
#include "kleinjet/io.hpp"

using kleinjet::io::Json;
namespace cli = kleinjet::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  [[nodiscard]] Json json() const { return Json::parse(out); }
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("kleinjet_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  [[nodiscard]] std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  std::string catalog_rep(int k) const {
    const std::string p = path("rep" + std::to_string(k) + ".json");
    EXPECT_EQ(run({"catalog", "sl2-sympower", "--k", std::to_string(k), "--out", p}).code, cli::kOk);
    return p;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, CatalogOutputValidates) {
  const std::string rep = catalog_rep(3);
  const Result r = run({"validate", rep});
  EXPECT_EQ(r.code, cli::kOk) << r.out;
  EXPECT_TRUE(r.json()["passed"].get<bool>());
}

TEST_F(CliTest, JetOrderOnCubic) {
  const Result r = run({"jet-order", catalog_rep(3), "--strategy", "basis"});
  ASSERT_EQ(r.code, cli::kOk) << r.out;
  const Json j = r.json();
  EXPECT_EQ(j["best_length"], 3);
  EXPECT_TRUE(j["certified_maximal"].get<bool>());
  EXPECT_FALSE(j["lower_bound_only"].get<bool>());
  EXPECT_EQ(j["witness"], Json::parse(R"(["1","0","0","0"])"));
}

TEST_F(CliTest, JetOrderRandomIsSeeded) {
  const std::string rep = catalog_rep(4);
  const Result a = run({"jet-order", "--rep", rep, "--strategy", "random", "--seed", "5", "--random-count", "6"});
  const Result b = run({"jet-order", "--rep", rep, "--strategy", "random", "--seed", "5", "--random-count", "6"});
  ASSERT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.json()["per_candidate"].size(), 11u);
}

TEST_F(CliTest, WeissfeilerOnSquare) {
  const Result r = run({"weissfeiler", "--rep", catalog_rep(2), "--h0", "abelian"});
  ASSERT_EQ(r.code, cli::kOk) << r.out;
  const Json j = r.json();
  EXPECT_EQ(j["ord"], 2);
  EXPECT_TRUE(j["effective"].get<bool>());
  EXPECT_EQ(j["weissfeiler_dims"], Json::parse("[2,1]"));
  EXPECT_EQ(j["provenance"]["ord_stated"], 3);
}

TEST_F(CliTest, KleinPairStabilizerOption) {
  const Result r = run({"klein-pair", catalog_rep(2), "--h0", "stabilizer:borel_lower"});
  ASSERT_EQ(r.code, cli::kOk) << r.out;
  const Json j = r.json();
  EXPECT_EQ(j["h0_dim"], 4);
  EXPECT_FALSE(j["h0_abelian"].get<bool>());
  EXPECT_TRUE(j["h0_solvable"].get<bool>());
  EXPECT_TRUE(j["effective"].get<bool>());
}

TEST_F(CliTest, KleinPairRejectsMovingStabilizer) {
  const Result r = run({"klein-pair", catalog_rep(2), "--h0", "stabilizer:borel_upper"});
  EXPECT_EQ(r.code, cli::kBadInput);
  EXPECT_EQ(r.json()["error"]["kind"], "precondition");
}

TEST_F(CliTest, JetFiltrationFromVectorFile) {
  const std::string rep = catalog_rep(2);
  const std::string v = write("v.json", R"({"vector": ["1", "0", "1"]})");
  const Result r = run({"jet-filtration", rep, "--vector", v});
  ASSERT_EQ(r.code, cli::kOk) << r.out;
  EXPECT_EQ(r.json()["dims"], Json::parse("[1]"));
  const std::string zero = write("zero.json", R"(["0","0","0"])");
  EXPECT_EQ(run({"jet-filtration", rep, "--vector", zero}).code, cli::kBadInput);
}

TEST_F(CliTest, StiffeningBorels) {
  ASSERT_EQ(run({"catalog", "sl2", "--out", path("sl2.json")}).code, cli::kOk);
  ASSERT_EQ(run({"catalog", "sl2-subalgebra", "--name", "borel_upper", "--out", path("bu.json")}).code, cli::kOk);
  ASSERT_EQ(run({"catalog", "sl2-subalgebra", "--name", "borel_lower", "--out", path("bl.json")}).code, cli::kOk);
  ASSERT_EQ(run({"catalog", "sl2-subalgebra", "--name", "cartan", "--out", path("c.json")}).code, cli::kOk);
  const Result yes = run({"stiffening", "--ambient", path("sl2.json"), "--g", path("bl.json"), "--h-prime",
                          path("bu.json"), "--h", path("c.json")});
  ASSERT_EQ(yes.code, cli::kOk) << yes.out;
  EXPECT_TRUE(yes.json()["stiffening"].get<bool>());
  const Result no = run({"stiffening", "--ambient", path("sl2.json"), "--g", path("bu.json"), "--h-prime",
                         path("c.json"), "--h", path("c.json")});
  ASSERT_EQ(no.code, cli::kOk) << no.out;
  EXPECT_FALSE(no.json()["stiffening"].get<bool>());
}

TEST_F(CliTest, ValidateReportsBrokenAlgebra) {
  const std::string bad = write("bad.json", R"({"dim": 3, "basis_names": ["e","f","h"], "brackets": [
      {"i": 0, "j": 1, "coeffs": {"2": "1"}},
      {"i": 0, "j": 2, "coeffs": {"0": "-3"}},
      {"i": 1, "j": 2, "coeffs": {"1": "2"}}]})");
  const Result r = run({"validate", bad});
  EXPECT_EQ(r.code, cli::kCheckFailed);
  const Json v = r.json()["reports"][0]["violations"][0];
  EXPECT_EQ(v["identity"], "jacobi");
  EXPECT_EQ(v["indices"], Json::parse("[0,1,2]"));
  // Loading it as an ambient algebra is malformed input, not a failed check.
  const Result s = run({"stiffening", "--ambient", bad, "--g", bad, "--h-prime", bad, "--h", bad});
  EXPECT_EQ(s.code, cli::kBadInput);
  EXPECT_EQ(s.json()["error"]["kind"], "invalid_object");
}

TEST_F(CliTest, MalformedInputsExitTwo) {
  EXPECT_EQ(run({"validate", path("missing.json")}).code, cli::kBadInput);
  const std::string junk = write("junk.json", "[1, 2");
  EXPECT_EQ(run({"validate", junk}).code, cli::kBadInput);
  EXPECT_EQ(run({"catalog", "sl2-sympower", "--k", "0"}).code, cli::kBadInput);
  EXPECT_EQ(run({"catalog", "nonsense"}).code, cli::kBadInput);
  EXPECT_EQ(run({"jet-order", catalog_rep(2), "--strategy", "sideways"}).code, cli::kBadInput);
  EXPECT_EQ(run({"verify", "--family", "other", "--k-max", "3"}).code, cli::kBadInput);
  EXPECT_EQ(run({}).code, cli::kBadInput);
  const Json rep = Json::parse(run({"catalog", "sl2-sympower", "--k", "2"}).out);
  Json broken = rep;
  broken["matrices"][0][1][0] = "2/0";
  const Result r = run({"validate", write("broken.json", broken.dump())});
  EXPECT_EQ(r.code, cli::kBadInput);
  EXPECT_NE(r.json()["error"]["message"].get<std::string>().find("/matrices/0/1/0"), std::string::npos);
}

TEST_F(CliTest, VerifyIsDeterministic) {
  const Result a = run({"verify", "--family", "sl2-sympower", "--k-max", "5"});
  const Result b = run({"verify", "--family", "sl2-sympower", "--k-max", "5"});
  ASSERT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
  const Json j = a.json();
  EXPECT_EQ(j["rows"].size(), 5u);
  EXPECT_FALSE(j["order_discrepancy_note"].get<std::string>().empty());
}

TEST_F(CliTest, PrettyOutput) {
  const Result r = run({"verify", "--family", "sl2-sympower", "--k-max", "2", "--pretty"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("jet_length"), std::string::npos);
  EXPECT_THROW(Json::parse(r.out), Json::parse_error);
  EXPECT_EQ(run({"verify", "--family", "sl2-sympower", "--k-max", "2", "--pretty", "--json"}).code, cli::kBadInput);
}

TEST_F(CliTest, WeissfeilerFromAlgebraFile) {
  ASSERT_EQ(run({"catalog", "sl2", "--out", path("sl2.json")}).code, cli::kOk);
  const std::string h0 = write("h0.json", R"([["0","1","0"],["0","0","1"]])");
  const Result r = run({"weissfeiler", "--algebra", path("sl2.json"), "--h0-basis", h0});
  ASSERT_EQ(r.code, cli::kOk) << r.out;
  EXPECT_EQ(r.json()["weissfeiler_dims"], Json::parse("[2,1]"));
  EXPECT_EQ(r.json()["ord"], 2);
}
