#pragma once

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace atsim {

/// Exact half-integer angular momentum value, stored as twice its value.
/// Represents both integer (F=4) and half-integer (I=7/2) spins without
/// rounding. Construction from int is implicit; half-odd values go through
/// from_twice or from_value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int n) : twice_(2 * n) {}  // NOLINT: implicit by design

  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  /// Converts a floating value that must be an exact multiple of 1/2.
  static HalfInt from_value(double v) {
    const double tw = 2.0 * v;
    const long long r = static_cast<long long>(tw >= 0 ? tw + 0.5 : tw - 0.5);
    if (tw != static_cast<double>(r)) {
      throw std::invalid_argument("HalfInt: " + std::to_string(v) +
                                  " is not a multiple of 1/2");
    }
    return from_twice(static_cast<int>(r));
  }

  [[nodiscard]] constexpr int twice() const { return twice_; }
  [[nodiscard]] constexpr double value() const { return 0.5 * twice_; }
  [[nodiscard]] constexpr bool integral() const { return twice_ % 2 == 0; }

  constexpr auto operator<=>(const HalfInt&) const = default;

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ + b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ - b.twice_);
  }

  /// "7/2" or "4" depending on parity.
  [[nodiscard]] std::string str() const {
    if (integral()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

 private:
  int twice_ = 0;
};

/// A (magnitude, projection) pair is well formed when 2j and 2m share parity
/// and |m| <= j.
constexpr bool projection_in_range(HalfInt j, HalfInt m) {
  return std::abs(m.twice()) <= j.twice();
}

constexpr bool same_parity(HalfInt a, HalfInt b) {
  return ((a.twice() - b.twice()) % 2) == 0;
}

/// Triangle rule |a-b| <= c <= a+b together with an integer perimeter.
constexpr bool triangle(HalfInt a, HalfInt b, HalfInt c) {
  const int ta = a.twice(), tb = b.twice(), tc = c.twice();
  if ((ta + tb + tc) % 2 != 0) return false;
  return tc >= std::abs(ta - tb) && tc <= ta + tb;
}

}  // namespace atsim
