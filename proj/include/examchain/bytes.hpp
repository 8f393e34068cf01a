#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace examchain {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

inline Bytes to_bytes(std::string_view s) {
  return Bytes(s.begin(), s.end());
}

std::string to_hex(ByteView data);
Bytes from_hex(std::string_view hex);  // throws std::invalid_argument on bad input

// Fixed-width byte string with byte-wise equality and ordering.
template <size_t N>
struct FixedBytes {
  std::array<uint8_t, N> bytes{};

  static constexpr size_t size() { return N; }

  static FixedBytes from(ByteView data) {
    if (data.size() != N) throw std::invalid_argument("FixedBytes: bad length");
    FixedBytes out;
    std::copy(data.begin(), data.end(), out.bytes.begin());
    return out;
  }
  static FixedBytes from_hex_string(std::string_view hex) {
    return from(from_hex(hex));
  }

  ByteView view() const { return ByteView(bytes.data(), N); }
  std::string hex() const { return to_hex(view()); }
  bool is_zero() const {
    for (auto b : bytes)
      if (b != 0) return false;
    return true;
  }

  auto operator<=>(const FixedBytes&) const = default;
};

}  // namespace examchain
