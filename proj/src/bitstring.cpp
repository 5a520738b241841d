#include "coherence/bitstring.hpp"

#include <stdexcept>

namespace coherence {

BitString::BitString(int width_, std::uint64_t value_) : width(width_), value(value_) {
  if (width < 1 || width > kMaxBitWidth) {
    throw std::invalid_argument("bitstring width out of range: " + std::to_string(width));
  }
  if (value >> width) {
    throw std::invalid_argument("bitstring value does not fit in width " + std::to_string(width));
  }
}

BitString BitString::parse(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxBitWidth)) {
    throw std::invalid_argument("invalid bitstring length: '" + std::string(text) + "'");
  }
  std::uint64_t v = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("invalid bitstring: '" + std::string(text) + "'");
    }
    v = (v << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return BitString(static_cast<int>(text.size()), v);
}

bool BitString::bit(int qubit) const {
  if (qubit < 0 || qubit >= width) {
    throw std::out_of_range("qubit index " + std::to_string(qubit) + " outside width " +
                            std::to_string(width));
  }
  return (value >> qubit) & 1U;
}

std::string BitString::str() const { return to_bitstring(value, width); }

std::string to_bitstring(std::uint64_t index, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int q = 0; q < width; ++q) {
    if ((index >> q) & 1U) s[static_cast<std::size_t>(width - 1 - q)] = '1';
  }
  return s;
}

}  // namespace coherence
