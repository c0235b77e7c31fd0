#include "big_rational.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace atsim::detail {

BigInt::BigInt(long long v) {
  if (v < 0) {
    sign_ = -1;
    v = -v;
  }
  while (v > 0) {
    limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
    v >>= 32;
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 1;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

void BigInt::add_mag(std::vector<std::uint32_t>& acc,
                     const std::vector<std::uint32_t>& rhs) {
  std::uint64_t carry = 0;
  const std::size_t n = std::max(acc.size(), rhs.size());
  acc.resize(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t s = carry + acc[i] + (i < rhs.size() ? rhs[i] : 0);
    acc[i] = static_cast<std::uint32_t>(s);
    carry = s >> 32;
  }
  if (carry) acc.push_back(static_cast<std::uint32_t>(carry));
}

void BigInt::sub_mag(std::vector<std::uint32_t>& acc,
                     const std::vector<std::uint32_t>& rhs) {
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(acc[i]) - borrow -
                     (i < rhs.size() ? static_cast<std::int64_t>(rhs[i]) : 0);
    borrow = d < 0 ? 1 : 0;
    if (d < 0) d += (std::int64_t{1} << 32);
    acc[i] = static_cast<std::uint32_t>(d);
  }
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (sign_ == rhs.sign_) {
    add_mag(limbs_, rhs.limbs_);
  } else {
    const int c = cmp_mag(*this, rhs);
    if (c == 0) {
      limbs_.clear();
      sign_ = 1;
      return *this;
    }
    if (c > 0) {
      sub_mag(limbs_, rhs.limbs_);
    } else {
      auto tmp = rhs.limbs_;
      sub_mag(tmp, limbs_);
      limbs_ = std::move(tmp);
      sign_ = rhs.sign_;
    }
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
  BigInt neg = rhs;
  neg.negate();
  return *this += neg;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt out;
  if (a.is_zero() || b.is_zero()) return out;
  out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      const std::uint64_t cur =
          out.limbs_[i + j] + carry +
          static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j];
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    out.limbs_[i + b.limbs_.size()] += static_cast<std::uint32_t>(carry);
  }
  out.sign_ = a.sign_ * b.sign_;
  out.trim();
  return out;
}

void BigInt::frexp(double* mantissa, long* exponent) const {
  if (is_zero()) {
    *mantissa = 0.0;
    *exponent = 0;
    return;
  }
  // top 96 bits are plenty for a double mantissa
  double m = 0.0;
  const std::size_t top = limbs_.size();
  std::size_t used = 0;
  for (std::size_t i = top; i-- > 0 && used < 3; ++used) {
    m = m * 4294967296.0 + limbs_[i];
  }
  const std::size_t skipped = top - used;
  int e = 0;
  m = std::frexp(m, &e);
  *mantissa = sign_ < 0 ? -m : m;
  *exponent = e + 32L * static_cast<long>(skipped);
}

double BigInt::to_double() const {
  double m;
  long e;
  frexp(&m, &e);
  return std::ldexp(m, static_cast<int>(e));
}

BigInt BigInt::factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  BigInt out(1);
  for (int k = 2; k <= n; ++k) out = out * BigInt(k);
  return out;
}

BigRational::BigRational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw std::invalid_argument("BigRational: zero denominator");
  if (den_.sign() < 0) {
    den_.negate();
    num_.negate();
  }
  if (num_.is_zero()) den_ = BigInt(1);
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ = den_ * rhs.den_;
  if (num_.is_zero()) den_ = BigInt(1);
  return *this;
}

BigRational operator*(const BigRational& a, const BigRational& b) {
  return {a.num() * b.num(), a.den() * b.den()};
}

double BigRational::to_double() const {
  double mn, md;
  long en, ed;
  num_.frexp(&mn, &en);
  den_.frexp(&md, &ed);
  if (mn == 0.0) return 0.0;
  return std::ldexp(mn / md, static_cast<int>(en - ed));
}

double BigRational::sqrt_abs() const {
  double mn, md;
  long en, ed;
  num_.frexp(&mn, &en);
  den_.frexp(&md, &ed);
  if (mn == 0.0) return 0.0;
  double m = std::fabs(mn) / md;
  long e = en - ed;
  if (e % 2 != 0) {
    m *= 2.0;
    e -= 1;
  }
  return std::ldexp(std::sqrt(m), static_cast<int>(e / 2));
}

}  // namespace atsim::detail
