#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "smallcover/cli.hpp"

using namespace smallcover;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("smallcover_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  fs::path dir_;
};

const std::string kHexagonPair = std::string(SMALLCOVER_DATA_DIR) + "/hexagon_pair.json";

}  // namespace

TEST_F(CliTest, ValidateHexagonPair) {
  const auto r = run_cli({"validate", kHexagonPair});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.json()["valid"].get<bool>());
}

TEST_F(CliTest, ValidateReportsSingularVertex) {
  const auto path = write("dup.json", R"({"factors": [4], "rows": ["1100", "0011"]})");
  const auto r = run_cli({"validate", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.json()["vertex"], nlohmann::json::array({1}));
}

TEST_F(CliTest, MalformedInputs) {
  EXPECT_EQ(run_cli({"validate", write("a.json", R"({"factors": [4], "rows": ["101", "0101"]})")}).code, 1);
  EXPECT_EQ(run_cli({"validate", write("b.json", R"({"factors": [4], "rows": ["1010"]})")}).code, 1);
  EXPECT_EQ(run_cli({"validate", write("c.json", "not json")}).code, 1);
  EXPECT_EQ(run_cli({"validate", write("d.json", R"({"rows": []})")}).code, 1);
  EXPECT_EQ(run_cli({"validate", (dir_ / "missing.json").string()}).code, 1);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
  EXPECT_EQ(run_cli({"census", "4,x"}).code, 1);
}

TEST_F(CliTest, AnalyzeHexagonPair) {
  const auto r = run_cli({"analyze", kHexagonPair});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_TRUE(j["orientable"].get<bool>());
  EXPECT_TRUE(j["factor_compatible"].get<bool>());
  EXPECT_EQ(j["betti_Q"], nlohmann::json::array({1, 4, 10, 4, 1}));
  EXPECT_EQ(j["betti_F2"], nlohmann::json::array({1, 8, 18, 8, 1}));
  EXPECT_EQ(j["sq1_check"], "agree");
}

TEST_F(CliTest, AnalyzeReportsObstructions) {
  const auto tri = write("t.json", R"({"factors": [3, 6], "rows": ["101000000", "011000000", "000101010", "000111111"]})");
  auto r = run_cli({"analyze", tri});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["obstructions"][0]["message"], "triangle factor: not c-symplectic");

  const auto odd = write("o.json", R"({"factors": [3, 3], "rows": ["101000", "011000", "000101", "000011"]})");
  r = run_cli({"analyze", odd});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto odd_json = r.json();
  bool found = false;
  for (const auto& o : odd_json["obstructions"]) {
    found = found || o["message"] == "all factors odd: non-orientable";
  }
  EXPECT_TRUE(found);
  EXPECT_FALSE(r.json()["orientable"].get<bool>());

  EXPECT_EQ(run_cli({"analyze", write("bad.json", R"({"factors": [4], "rows": ["1100", "0011"]})")}).code, 2);
}

TEST_F(CliTest, HodgeHexagonPair) {
  const auto r = run_cli({"hodge", kHexagonPair});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["T"], nlohmann::json::array({1, 2, 2}));
  EXPECT_EQ(j["hodge"], nlohmann::json::parse("[[1,2,2],[2,6,2],[2,2,1]]"));
  EXPECT_TRUE(j["round_trip"]["ok"].get<bool>());
  EXPECT_EQ(j["diamond"], nlohmann::json::parse(R"(["  1", " 2 2", "2 6 2", " 2 2", "  1"])"));
}

TEST_F(CliTest, HodgeTorusAndRefusal) {
  auto r = run_cli({"hodge", write("torus.json", R"({"factors": [4], "rows": ["1010", "0101"]})")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["diamond"], nlohmann::json::parse(R"([" 1", "1 1", " 1"])"));
  r = run_cli({"hodge", write("klein.json", R"({"factors": [4], "rows": ["1011", "0101"]})")});
  EXPECT_EQ(r.code, 3);
}

TEST_F(CliTest, BlockizeHexagonPairRoundTrips) {
  const auto out_path = (dir_ / "prime.json").string();
  const auto r = run_cli({"blockize", kHexagonPair, "--out", out_path});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["factor_order"], nlohmann::json::array({2, 1}));
  EXPECT_TRUE(j["verified"].get<bool>());
  EXPECT_EQ(j["tower"][0]["genus"], 2);
  EXPECT_EQ(j["tower"][1]["genus"], 2);
  EXPECT_EQ(j["lambda_prime"]["rows"],
            nlohmann::json::parse(R"(["111111000000","101010000000","000000111111","101000101010"])"));

  EXPECT_EQ(run_cli({"validate", out_path}).code, 0);
  const auto a = run_cli({"analyze", out_path}).json();
  const auto b = run_cli({"analyze", kHexagonPair}).json();
  EXPECT_EQ(a["betti_Q"], b["betti_Q"]);
  EXPECT_EQ(a["betti_F2"], b["betti_F2"]);
  EXPECT_EQ(a["factor_compatible"], b["factor_compatible"]);
  EXPECT_EQ(run_cli({"hodge", out_path}).json()["hodge"], run_cli({"hodge", kHexagonPair}).json()["hodge"]);
}

TEST_F(CliTest, BlockizeTriangularInputKeepsColumns) {
  const auto path = write("tri.json", R"({"factors": [4, 4], "rows": ["11110000", "10100000", "00001111", "10101010"]})");
  const auto r = run_cli({"blockize", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["colperm"], nlohmann::json::parse("[1,2,3,4,5,6,7,8]"));
  EXPECT_EQ(run_cli({"blockize", write("k.json", R"({"factors": [4], "rows": ["1011", "0101"]})")}).code, 3);
}

TEST_F(CliTest, CensusCounts) {
  auto r = run_cli({"census", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["classes"], 3);
  EXPECT_EQ(r.json()["orientable"], 1);
  r = run_cli({"census", "3,3"});
  EXPECT_EQ(r.json()["orientable"], 0);
  r = run_cli({"census", "4,4", "--compatible-only"});
  const auto compatible = r.json();
  for (const auto& row : compatible["rows"]) EXPECT_TRUE(row["factor_compatible"].get<bool>());
  EXPECT_EQ(compatible["rows"].size(), compatible["factor_compatible"].get<std::size_t>());
  EXPECT_EQ(run_cli({"census", "4,4,4,4"}).code, 1);
}

TEST_F(CliTest, CensusTableFormat) {
  const auto r = run_cli({"census", "4", "--format", "table"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("3 classes, 1 orientable"), std::string::npos);
}

TEST_F(CliTest, CensusMatchesGoldenSnapshots) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"census", "4"}, {"census", "3"}, {"census", "3,3"}, {"census", "4,4", "--compatible-only"}}) {
    auto with_dir = args;
    with_dir.push_back("--snapshot-dir");
    with_dir.push_back(SMALLCOVER_GOLDEN_DIR);
    const auto r = run_cli(with_dir);
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.err.find("matches snapshot"), std::string::npos) << r.err;
  }
}

TEST_F(CliTest, SnapshotMismatchFails) {
  const auto snap = dir_ / "snap";
  ASSERT_EQ(run_cli({"census", "4", "--snapshot-dir", snap.string()}).code, 0);
  nlohmann::json golden = nlohmann::json::parse(std::ifstream(snap / "census_4.json"));
  golden["census"]["classes"] = 4;
  std::ofstream(snap / "census_4.json") << golden.dump();
  EXPECT_EQ(run_cli({"census", "4", "--snapshot-dir", snap.string()}).code, 1);
}
