#pragma once

// Minimal arbitrary-precision integers and rationals, just enough for the
// cancellation-free Wigner symbol sums. Magnitudes are little-endian
// base-2^32 limb vectors. Rationals are left unreduced: the handful of terms
// in a Racah sum keeps sizes modest even at j = 10, and conversion to double
// goes through a frexp pair so magnitude never overflows.

#include <cstdint>
#include <vector>

namespace atsim::detail {

class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT: implicit is convenient here

  [[nodiscard]] bool is_zero() const { return limbs_.empty(); }
  [[nodiscard]] int sign() const { return is_zero() ? 0 : sign_; }
  void negate() {
    if (!is_zero()) sign_ = -sign_;
  }

  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(const BigInt& a, const BigInt& b);

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign() == b.sign() && a.limbs_ == b.limbs_;
  }

  /// Exact magnitude as signed mantissa in +-[0.5, 1) times 2^exponent.
  void frexp(double* mantissa, long* exponent) const;

  [[nodiscard]] double to_double() const;

  static BigInt factorial(int n);

 private:
  static int cmp_mag(const BigInt& a, const BigInt& b);
  static void add_mag(std::vector<std::uint32_t>& acc,
                      const std::vector<std::uint32_t>& rhs);
  // requires |acc| >= |rhs|
  static void sub_mag(std::vector<std::uint32_t>& acc,
                      const std::vector<std::uint32_t>& rhs);
  void trim();

  std::vector<std::uint32_t> limbs_;  // empty == zero
  int sign_ = 1;
};

/// Exact rational with positive denominator; not kept in lowest terms.
class BigRational {
 public:
  BigRational() : num_(0), den_(1) {}
  BigRational(BigInt num, BigInt den);
  BigRational(long long num, long long den = 1)
      : BigRational(BigInt(num), BigInt(den)) {}

  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] int sign() const { return num_.sign(); }
  [[nodiscard]] const BigInt& num() const { return num_; }
  [[nodiscard]] const BigInt& den() const { return den_; }

  BigRational& operator+=(const BigRational& rhs);
  friend BigRational operator*(const BigRational& a, const BigRational& b);

  [[nodiscard]] double to_double() const;
  /// sqrt(|value|), converted to floating point only at the last step.
  [[nodiscard]] double sqrt_abs() const;

 private:
  BigInt num_;
  BigInt den_;
};

}  // namespace atsim::detail
