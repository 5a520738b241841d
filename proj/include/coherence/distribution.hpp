#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "coherence/bitstring.hpp"

namespace coherence {

/// Outcome distribution over fixed-width basis labels.
///
/// Either normalized probabilities or raw shot counts. A third flavor,
/// `partial`, holds probabilities whose listed mass falls short of one; the
/// missing mass is kept in `unassigned_mass()` and is never redistributed.
class Distribution {
 public:
  enum class Kind { probability, counts };

  /// Tolerance on Σp for probability distributions.
  static constexpr double kNormTolerance = 1e-6;

  Distribution() = default;

  static Distribution from_probabilities(int width, std::map<std::uint64_t, double> probs);
  static Distribution from_partial_probabilities(int width, std::map<std::uint64_t, double> probs);
  static Distribution from_counts(int width, const std::map<std::uint64_t, std::uint64_t>& counts);

  int width() const { return width_; }
  Kind kind() const { return kind_; }
  bool is_counts() const { return kind_ == Kind::counts; }
  std::uint64_t total_shots() const { return total_shots_; }
  double unassigned_mass() const { return unassigned_mass_; }

  /// Probability of `outcome`; counts are divided by total shots.
  double probability(std::uint64_t outcome) const;
  double probability(const BitString& outcome) const;

  /// Raw stored value (count or probability).
  double raw(std::uint64_t outcome) const;

  /// Stored entries in ascending outcome order. Zero entries may be present.
  const std::map<std::uint64_t, double>& entries() const { return entries_; }

  /// Probability view of every stored outcome.
  std::map<std::uint64_t, double> probability_map() const;

  /// Counts become probabilities; probability kinds are returned as-is.
  Distribution normalized() const;

  /// Union of outcomes with nonzero stored value in either distribution.
  static std::set<std::uint64_t> joint_support(const Distribution& a, const Distribution& b);

 private:
  int width_ = 0;
  Kind kind_ = Kind::probability;
  std::uint64_t total_shots_ = 0;
  double unassigned_mass_ = 0.0;
  std::map<std::uint64_t, double> entries_;
};

/// Parses a list of canonical bitstrings; all must have `width` characters.
std::set<std::uint64_t> parse_outcome_set(const std::vector<std::string>& labels, int width);

/// Every outcome of the given width not in `set`.
std::set<std::uint64_t> complement_set(const std::set<std::uint64_t>& set, int width);

}  // namespace coherence
