#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "coherence/cli.hpp"

namespace coherence::cli {
namespace {

const std::string kData = COHERENCE_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <typename Config, typename Fn>
Run run(Fn fn, const Config& cfg) {
  std::ostringstream out, err;
  const int code = fn(cfg, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliSimulate, LiarReferenceJson) {
  SimulateConfig cfg;
  const auto r = run(cmd_simulate, cfg);
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["probabilities"].size(), 2u);
  EXPECT_NEAR(j["probabilities"]["1001"].get<double>(), 0.5, 1e-12);
  EXPECT_NEAR(j["probabilities"]["1010"].get<double>(), 0.5, 1e-12);
  EXPECT_EQ(j["seed"], kDefaultSeed);
  EXPECT_TRUE(j.contains("config"));
  EXPECT_FALSE(j.contains("counts"));
}

TEST(CliSimulate, LiarLiteralJson) {
  SimulateConfig cfg;
  cfg.circuit = "liar-literal";
  const auto j = nlohmann::json::parse(run(cmd_simulate, cfg).out);
  EXPECT_NEAR(j["probabilities"]["0000"].get<double>(), 0.5, 1e-12);
  EXPECT_NEAR(j["probabilities"]["0111"].get<double>(), 0.5, 1e-12);
}

TEST(CliSimulate, ShotsAreSeeded) {
  SimulateConfig cfg;
  cfg.shots = 1000;
  const auto a = run(cmd_simulate, cfg);
  const auto b = run(cmd_simulate, cfg);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["counts"]["1001"].get<int>() + j["counts"]["1010"].get<int>(), 1000);
}

TEST(CliSimulate, InvalidSelectorsFail) {
  SimulateConfig cfg;
  cfg.circuit = "general";
  cfg.pairs = 0;
  EXPECT_EQ(run(cmd_simulate, cfg).code, kUsage);
  cfg.circuit = "nonsense";
  EXPECT_EQ(run(cmd_simulate, cfg).code, kUsage);
  cfg.circuit = "file";
  EXPECT_EQ(run(cmd_simulate, cfg).code, kUsage);
  cfg.circuit_file = "/nonexistent/c.json";
  EXPECT_EQ(run(cmd_simulate, cfg).code, kIoError);
}

TEST(CliSimulate, CircuitFileRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "coherence_cli_test";
  std::filesystem::create_directories(dir);
  SimulateConfig gen;
  gen.circuit = "general";
  gen.pairs = 2;
  gen.mode = CascadeMode::or_accumulate;
  gen.circuit_out = dir / "c.json";
  gen.out = dir / "a.json";
  ASSERT_EQ(run(cmd_simulate, gen).code, kOk);
  SimulateConfig load;
  load.circuit = "file";
  load.circuit_file = dir / "c.json";
  const auto r = run(cmd_simulate, load);
  ASSERT_EQ(r.code, kOk) << r.err;
  std::ifstream first(dir / "a.json");
  const auto a = nlohmann::json::parse(first);
  const auto b = nlohmann::json::parse(r.out);
  EXPECT_EQ(a["probabilities"], b["probabilities"]);
  EXPECT_EQ(b["inputs"].size(), 1u);
  std::filesystem::remove_all(dir);
}

TEST(CliVerify, OnePairPasses) {
  VerifyConfig cfg;
  const auto r = run(cmd_verify, cfg);
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["all_passed"].get<bool>());
  EXPECT_LT(j["max_deviation"].get<double>(), 1e-9);
  EXPECT_TRUE(j["parity_vs_or_divergences"].empty());
}

TEST(CliVerify, TwoPairsListDivergences) {
  VerifyConfig cfg;
  cfg.pairs = 2;
  const auto j = nlohmann::json::parse(run(cmd_verify, cfg).out);
  ASSERT_FALSE(j["parity_vs_or_divergences"].empty());
  bool witness = false;
  for (const auto& d : j["parity_vs_or_divergences"]) {
    EXPECT_EQ(d["violations"], 2);
    witness = witness || (d["c"] == "11" && d["r"] == "00");
  }
  EXPECT_TRUE(witness);
}

TEST(CliVerify, PairCapEnforced) {
  VerifyConfig cfg;
  cfg.pairs = 9;
  EXPECT_EQ(run(cmd_verify, cfg).code, kUsage);
}

TEST(CliMetrics, BundledRunsRegression) {
  MetricsCommandConfig cfg;
  cfg.experimental = kData + "/liar_hardware_probability.csv";
  cfg.ideal = kData + "/liar_simulation_probability.csv";
  const auto r = run(cmd_metrics, cfg);
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["f_c_experimental"].get<double>(), 0.8614, 1e-12);
  EXPECT_NEAR(j["f_c_reference"].get<double>(), 0.8713, 1e-12);
  EXPECT_NEAR(j["d_tv"].get<double>(), 0.03385, 1e-12);
  EXPECT_TRUE(j["chi2"].is_null());
  EXPECT_EQ(j["inputs"].size(), 2u);
}

TEST(CliMetrics, FileAgainstItself) {
  MetricsCommandConfig cfg;
  cfg.experimental = kData + "/liar_hardware_counts.csv";
  cfg.ideal = cfg.experimental;
  const auto j = nlohmann::json::parse(run(cmd_metrics, cfg).out);
  EXPECT_DOUBLE_EQ(j["d_tv"].get<double>(), 0.0);
  EXPECT_DOUBLE_EQ(j["chi2"]["p_value"].get<double>(), 1.0);
}

TEST(CliMetrics, MissingFileIsAnIoError) {
  MetricsCommandConfig cfg;
  cfg.experimental = "/nonexistent/file.csv";
  cfg.ideal = kData + "/liar_simulation_counts.csv";
  const auto r = run(cmd_metrics, cfg);
  EXPECT_EQ(r.code, kIoError);
  EXPECT_FALSE(r.err.empty());
}

TEST(CliEstimate, EightQubitsOnALine) {
  EstimateConfig cfg;
  cfg.noise = "0,1e-3,0";
  const auto r = run(cmd_estimate, cfg);
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["g_2q_toffoli"], 24);
  EXPECT_NEAR(j["fidelity_logical"].get<double>(), std::exp(-0.024), 1e-12);
}

TEST(CliEstimate, OddNRejectedAndZeroNoiseIsPerfect) {
  EstimateConfig cfg;
  cfg.n = 3;
  EXPECT_EQ(run(cmd_estimate, cfg).code, kUsage);
  cfg.n = 8;
  cfg.noise = "0,0,0";
  const auto j = nlohmann::json::parse(run(cmd_estimate, cfg).out);
  EXPECT_DOUBLE_EQ(j["fidelity_estimate"].get<double>(), 1.0);
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

TEST(CliTruthTable, OnePairRows) {
  TruthTableConfig cfg;
  const auto rows = csv_rows(run(cmd_truthtable, cfg).out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0][0], "c");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][0] == "1" && rows[i][1] == "0") {
      EXPECT_EQ(rows[i][3], "0");
      EXPECT_EQ(rows[i][4], "inconsistency detected");
    }
    if (rows[i][0] == "0" && rows[i][1] == "1") {
      EXPECT_EQ(rows[i][3], "1");
    }
  }
}

TEST(CliTruthTable, TwoPairDivergenceMarked) {
  TruthTableConfig cfg;
  cfg.pairs = 2;
  const auto rows = csv_rows(run(cmd_truthtable, cfg).out);
  ASSERT_EQ(rows.size(), 17u);
  int marked = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][6] == "1") ++marked;
    if (rows[i][0] == "11" && rows[i][1] == "00") {
      EXPECT_EQ(rows[i][3], "0");
      EXPECT_EQ(rows[i][5], "1");
      EXPECT_EQ(rows[i][6], "1");
      EXPECT_EQ(rows[i][4], "fully inconsistent");
    }
  }
  EXPECT_EQ(marked, 1);
  cfg.pairs = 7;
  EXPECT_EQ(run(cmd_truthtable, cfg).code, kUsage);
}

TEST(CliParsing, NoiseAndLists) {
  const auto p = parse_noise("1e-4, 1e-3 ,0.015", 9);
  EXPECT_DOUBLE_EQ(p.p_1q, 1e-4);
  EXPECT_DOUBLE_EQ(p.p_2q, 1e-3);
  EXPECT_DOUBLE_EQ(p.p_readout, 0.015);
  EXPECT_EQ(p.seed, 9u);
  EXPECT_ANY_THROW(parse_noise("0.1,0.2", 0));
  EXPECT_ANY_THROW(parse_noise("a,b,c", 0));
  EXPECT_ANY_THROW(parse_noise("0.1,0.2,1.5", 0));
  EXPECT_EQ(parse_int_list("3,1, 2"), (std::vector<int>{3, 1, 2}));
  EXPECT_ANY_THROW(parse_int_list("1,x"));
  EXPECT_EQ(parse_label_list("1001, 1010,"), (std::vector<std::string>{"1001", "1010"}));
}

}  // namespace
}  // namespace coherence::cli
