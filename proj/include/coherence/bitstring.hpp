#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace coherence {

/// Maximum register width addressable by a BitString.
inline constexpr int kMaxBitWidth = 63;

/// A computational basis label of fixed width.
///
/// Bit k of `value` is the value of qubit k. The canonical text rendering
/// puts the highest qubit index leftmost, so the 4-qubit label with
/// q0=1, q3=1 prints as "1001". Every file, report and test in this
/// project uses that convention.
struct BitString {
  int width = 0;
  std::uint64_t value = 0;

  BitString() = default;
  BitString(int width, std::uint64_t value);

  /// Parses a canonical rendering ("1010" -> q3=1, q1=1). Throws
  /// std::invalid_argument on characters other than 0/1 or an empty string.
  static BitString parse(std::string_view text);

  bool bit(int qubit) const;
  std::string str() const;

  auto operator<=>(const BitString&) const = default;
};

/// Renders `index` as a `width`-character canonical bitstring.
std::string to_bitstring(std::uint64_t index, int width);

}  // namespace coherence
