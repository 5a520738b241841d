#include "coherence/counts_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <locale>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "coherence/errors.hpp"

namespace coherence {

namespace {

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return s.substr(i);
}

}  // namespace

Distribution read_distribution_csv(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  bool counts_kind = false;
  bool have_header = false;
  int width = 0;
  std::map<std::uint64_t, std::uint64_t> counts;
  std::map<std::uint64_t, double> probs;

  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (!have_header) {
      if (line == "state,counts") {
        counts_kind = true;
      } else if (line != "state,probability") {
        throw ParseError(source, line_no,
                         "expected header 'state,counts' or 'state,probability', got '" + line + "'");
      }
      have_header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw ParseError(source, line_no, "expected two comma-separated fields");
    }
    const std::string state = trim(line.substr(0, comma));
    const std::string value = trim(line.substr(comma + 1));

    BitString b;
    try {
      b = BitString::parse(state);
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, line_no, e.what());
    }
    if (width == 0) width = b.width;
    if (b.width != width) {
      throw ParseError(source, line_no,
                       "state '" + state + "' has width " + std::to_string(b.width) +
                           ", earlier rows have " + std::to_string(width));
    }
    if (counts.contains(b.value) || probs.contains(b.value)) {
      throw ParseError(source, line_no, "duplicate state '" + state + "'");
    }

    if (counts_kind) {
      std::uint64_t c = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), c);
      if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw ParseError(source, line_no, "invalid count '" + value + "'");
      }
      counts[b.value] = c;
    } else {
      double p = 0.0;
      std::istringstream vs(value);
      vs.imbue(std::locale::classic());
      if (!(vs >> p) || !vs.eof() || !std::isfinite(p) || p < 0.0) {
        throw ParseError(source, line_no, "invalid probability '" + value + "'");
      }
      probs[b.value] = p;
    }
  }
  if (!have_header) throw ParseError(source, 0, "empty file");
  if (width == 0) throw ParseError(source, 0, "no data rows");

  try {
    if (counts_kind) return Distribution::from_counts(width, counts);
    double sum = 0.0;
    for (const auto& [_, p] : probs) sum += p;
    if (std::abs(sum - 1.0) <= Distribution::kNormTolerance) {
      return Distribution::from_probabilities(width, std::move(probs));
    }
    return Distribution::from_partial_probabilities(width, std::move(probs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, 0, e.what());
  }
}

Distribution read_distribution_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_distribution_csv(in, path.string());
}

void write_counts_csv(std::ostream& out, const Distribution& counts) {
  if (!counts.is_counts()) throw std::invalid_argument("write_counts_csv needs a counts distribution");
  out << "state,counts\n";
  for (const auto& [x, c] : counts.entries()) {
    if (c > 0) out << to_bitstring(x, counts.width()) << ',' << static_cast<std::uint64_t>(c) << '\n';
  }
}

void write_probabilities_csv(std::ostream& out, const Distribution& dist) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << "state,probability\n" << std::setprecision(17);
  for (const auto& [x, _] : dist.entries()) {
    os << to_bitstring(x, dist.width()) << ',' << dist.probability(x) << '\n';
  }
  out << os.str();
}

}  // namespace coherence
