#pragma once

#include <cstdint>

namespace smd {

enum class Sign : std::int8_t { negative = -1, positive = 1 };

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::positive : Sign::negative;
}

constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::positive ? Sign::negative : Sign::positive;
}

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

constexpr char to_char(Sign s) noexcept { return s == Sign::positive ? '+' : '-'; }

// (-1)^k
constexpr Sign parity_sign(std::uint64_t k) noexcept {
  return (k % 2 == 0) ? Sign::positive : Sign::negative;
}

}  // namespace smd
