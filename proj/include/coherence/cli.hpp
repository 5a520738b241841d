#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coherence/circuit.hpp"
#include "coherence/noise.hpp"

namespace coherence::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerificationFailed = 2, kIoError = 3 };

inline constexpr std::uint64_t kDefaultSeed = 20251121;

/// Parses "p1q,p2q,pread".
NoiseProfile parse_noise(const std::string& text, std::uint64_t seed);

/// Parses a comma-separated list of integers.
std::vector<int> parse_int_list(const std::string& text);

/// Parses a comma-separated list of bitstrings, trimming blanks.
std::vector<std::string> parse_label_list(const std::string& text);

struct SimulateConfig {
  std::string circuit = "liar-reference";  // liar-reference | liar-literal | general | file
  int pairs = 0;
  CascadeMode mode = CascadeMode::parity;
  bool with_phase = false;
  std::optional<std::filesystem::path> circuit_file;
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::string> noise;
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> counts_out;
  std::optional<std::filesystem::path> circuit_out;
  bool pretty = false;
};

struct VerifyConfig {
  int pairs = 1;
  std::optional<std::filesystem::path> out;
  bool pretty = false;
};

struct MetricsCommandConfig {
  std::filesystem::path experimental;
  std::filesystem::path ideal;
  std::string consistent_set = "1001,1010";
  std::optional<std::string> paradox_set;
  int flag_index = 3;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::filesystem::path> out;
  bool pretty = false;
};

struct EstimateConfig {
  int n = 8;
  CascadeMode mode = CascadeMode::parity;
  bool with_phase = false;
  std::string noise = "1e-4,1e-3,0";
  std::string graph = "linear";  // linear | ring | path to an edge list
  std::optional<std::string> layout;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::filesystem::path> out;
  bool pretty = false;
};

struct TruthTableConfig {
  int pairs = 1;
  int flag_in = 1;
  std::optional<std::filesystem::path> out;
  bool pretty = false;
};

// Each command writes its primary output to `out` (or the configured file),
// diagnostics to `err`, and returns an ExitCode.
int cmd_simulate(const SimulateConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyConfig& config, std::ostream& out, std::ostream& err);
int cmd_metrics(const MetricsCommandConfig& config, std::ostream& out, std::ostream& err);
int cmd_estimate(const EstimateConfig& config, std::ostream& out, std::ostream& err);
int cmd_truthtable(const TruthTableConfig& config, std::ostream& out, std::ostream& err);

}  // namespace coherence::cli
