#include "coherence/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace coherence {

namespace {

void check_entries(int width, const std::map<std::uint64_t, double>& probs) {
  if (width < 1 || width > kMaxBitWidth) {
    throw std::invalid_argument("distribution width out of range: " + std::to_string(width));
  }
  for (const auto& [outcome, p] : probs) {
    if (outcome >> width) {
      throw std::invalid_argument("outcome " + std::to_string(outcome) + " exceeds width " +
                                  std::to_string(width));
    }
    if (!std::isfinite(p) || p < 0.0) {
      throw std::invalid_argument("negative or non-finite probability for outcome " +
                                  to_bitstring(outcome, width));
    }
  }
}

double total_of(const std::map<std::uint64_t, double>& probs) {
  double sum = 0.0;
  for (const auto& [_, p] : probs) sum += p;
  return sum;
}

}  // namespace

Distribution Distribution::from_probabilities(int width, std::map<std::uint64_t, double> probs) {
  check_entries(width, probs);
  const double sum = total_of(probs);
  if (std::abs(sum - 1.0) > kNormTolerance) {
    throw std::invalid_argument("probabilities sum to " + std::to_string(sum) + ", expected 1");
  }
  Distribution d;
  d.width_ = width;
  d.kind_ = Kind::probability;
  d.entries_ = std::move(probs);
  return d;
}

Distribution Distribution::from_partial_probabilities(int width,
                                                      std::map<std::uint64_t, double> probs) {
  check_entries(width, probs);
  const double sum = total_of(probs);
  if (sum > 1.0 + kNormTolerance) {
    throw std::invalid_argument("partial probabilities sum to " + std::to_string(sum) +
                                ", exceeding 1");
  }
  Distribution d;
  d.width_ = width;
  d.kind_ = Kind::probability;
  d.unassigned_mass_ = std::max(0.0, 1.0 - sum);
  d.entries_ = std::move(probs);
  return d;
}

Distribution Distribution::from_counts(int width,
                                       const std::map<std::uint64_t, std::uint64_t>& counts) {
  Distribution d;
  d.width_ = width;
  d.kind_ = Kind::counts;
  for (const auto& [outcome, c] : counts) {
    d.entries_[outcome] = static_cast<double>(c);
    d.total_shots_ += c;
  }
  check_entries(width, d.entries_);
  return d;
}

double Distribution::raw(std::uint64_t outcome) const {
  auto it = entries_.find(outcome);
  return it == entries_.end() ? 0.0 : it->second;
}

double Distribution::probability(std::uint64_t outcome) const {
  const double v = raw(outcome);
  if (kind_ == Kind::counts) {
    return total_shots_ == 0 ? 0.0 : v / static_cast<double>(total_shots_);
  }
  return v;
}

double Distribution::probability(const BitString& outcome) const {
  if (outcome.width != width_) {
    throw std::invalid_argument("bitstring width " + std::to_string(outcome.width) +
                                " does not match distribution width " + std::to_string(width_));
  }
  return probability(outcome.value);
}

std::map<std::uint64_t, double> Distribution::probability_map() const {
  std::map<std::uint64_t, double> out;
  for (const auto& [outcome, _] : entries_) out[outcome] = probability(outcome);
  return out;
}

Distribution Distribution::normalized() const {
  if (kind_ != Kind::counts) return *this;
  if (total_shots_ == 0) throw std::invalid_argument("cannot normalize zero total shots");
  Distribution d;
  d.width_ = width_;
  d.kind_ = Kind::probability;
  d.entries_ = probability_map();
  return d;
}

std::set<std::uint64_t> Distribution::joint_support(const Distribution& a, const Distribution& b) {
  std::set<std::uint64_t> out;
  for (const auto& [x, v] : a.entries_)
    if (v > 0.0) out.insert(x);
  for (const auto& [x, v] : b.entries_)
    if (v > 0.0) out.insert(x);
  return out;
}

std::set<std::uint64_t> parse_outcome_set(const std::vector<std::string>& labels, int width) {
  std::set<std::uint64_t> out;
  for (const auto& label : labels) {
    const BitString b = BitString::parse(label);
    if (b.width != width) {
      throw std::invalid_argument("outcome '" + label + "' has width " + std::to_string(b.width) +
                                  ", expected " + std::to_string(width));
    }
    out.insert(b.value);
  }
  return out;
}

std::set<std::uint64_t> complement_set(const std::set<std::uint64_t>& set, int width) {
  if (width > 24) throw std::invalid_argument("complement of a set wider than 24 bits");
  std::set<std::uint64_t> out;
  const std::uint64_t dim = std::uint64_t{1} << width;
  for (std::uint64_t x = 0; x < dim; ++x)
    if (!set.contains(x)) out.insert(x);
  return out;
}

}  // namespace coherence
