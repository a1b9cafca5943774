#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace weblog {

// Exact non-negative fraction. Kept unreduced so hits/incomplete style
// numerators stay visible; comparisons are by value.
class Ratio {
 public:
  constexpr Ratio() = default;
  Ratio(std::uint64_t numerator, std::uint64_t denominator);

  std::uint64_t numerator() const { return num_; }
  std::uint64_t denominator() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Decimal rendering rounded half-to-even at `digits` significant digits,
  // trailing zeros dropped: 13/20 -> "0.65", 1/1 -> "1", 27/31 -> "0.87096774".
  std::string to_string(int digits = 8) const;

  friend bool operator==(const Ratio& a, const Ratio& b);
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

}  // namespace weblog
