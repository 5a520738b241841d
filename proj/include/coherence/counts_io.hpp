#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "coherence/distribution.hpp"

namespace coherence {

// Outcome tables are CSV with a fixed header:
//
//   state,counts          state,probability
//   1001,3460             1001,0.4068
//
// `state` is the canonical bitstring (highest qubit index leftmost). Counts
// are nonnegative integers. Probability tables summing to less than one load
// as partial distributions; the shortfall is kept as unassigned mass.

Distribution read_distribution_csv(std::istream& in, const std::string& source_name);
Distribution read_distribution_csv(const std::filesystem::path& path);

/// Writes `state,counts`, one row per outcome with a nonzero count.
void write_counts_csv(std::ostream& out, const Distribution& counts);

/// Writes `state,probability` with 17 significant digits.
void write_probabilities_csv(std::ostream& out, const Distribution& dist);

}  // namespace coherence
