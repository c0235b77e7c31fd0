#include "atsim/angular.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "big_rational.hpp"

namespace atsim {

namespace {

using detail::BigInt;
using detail::BigRational;

void require_magnitude(HalfInt j, const char* name) {
  if (j.twice() < 0)
    throw std::invalid_argument(std::string(name) + ": negative magnitude " +
                                j.str());
}

void require_pair(HalfInt j, HalfInt m, const char* name) {
  require_magnitude(j, name);
  if (!same_parity(j, m))
    throw std::invalid_argument(std::string(name) + ": parity mismatch (j=" +
                                j.str() + ", m=" + m.str() + ")");
}

int parity_sign(int twice_exponent) {
  // exponent given as twice its value; must be an even number of halves
  return (twice_exponent / 2) % 2 == 0 ? 1 : -1;
}

// factorial of a half-integer count known to be a whole number
BigInt fact2(int twice_n) { return BigInt::factorial(twice_n / 2); }

// triangle coefficient Delta(a,b,c) as an exact rational
BigRational triangle_rational(HalfInt a, HalfInt b, HalfInt c) {
  const BigInt num = fact2(a.twice() + b.twice() - c.twice()) *
                     fact2(a.twice() - b.twice() + c.twice()) *
                     fact2(-a.twice() + b.twice() + c.twice());
  const BigInt den = fact2(a.twice() + b.twice() + c.twice() + 2);
  return {num, den};
}

}  // namespace

double wigner3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2,
                HalfInt m3) {
  require_pair(j1, m1, "wigner3j j1");
  require_pair(j2, m2, "wigner3j j2");
  require_pair(j3, m3, "wigner3j j3");

  if (!projection_in_range(j1, m1) || !projection_in_range(j2, m2) ||
      !projection_in_range(j3, m3))
    return 0.0;
  if (m1.twice() + m2.twice() + m3.twice() != 0) return 0.0;
  if (!triangle(j1, j2, j3)) return 0.0;

  // Racah sum bounds, everything in whole (not twice) units from here on
  const int kmin = std::max({0, (j2.twice() - j3.twice() - m1.twice()) / 2,
                             (j1.twice() - j3.twice() + m2.twice()) / 2});
  const int kmax = std::min({(j1.twice() + j2.twice() - j3.twice()) / 2,
                             (j1.twice() - m1.twice()) / 2,
                             (j2.twice() + m2.twice()) / 2});
  if (kmin > kmax) return 0.0;

  BigRational sum;
  for (int k = kmin; k <= kmax; ++k) {
    BigInt den = BigInt::factorial(k);
    den = den * fact2(j1.twice() + j2.twice() - j3.twice() - 2 * k);
    den = den * fact2(j1.twice() - m1.twice() - 2 * k);
    den = den * fact2(j2.twice() + m2.twice() - 2 * k);
    den = den * fact2(j3.twice() - j2.twice() + m1.twice() + 2 * k);
    den = den * fact2(j3.twice() - j1.twice() - m2.twice() + 2 * k);
    sum += BigRational(BigInt(k % 2 == 0 ? 1 : -1), den);
  }
  if (sum.is_zero()) return 0.0;

  BigRational pre = triangle_rational(j1, j2, j3);
  pre = pre * BigRational(fact2(j1.twice() + m1.twice()) *
                              fact2(j1.twice() - m1.twice()) *
                              fact2(j2.twice() + m2.twice()) *
                              fact2(j2.twice() - m2.twice()) *
                              fact2(j3.twice() + m3.twice()) *
                              fact2(j3.twice() - m3.twice()),
                          BigInt(1));

  const int phase = parity_sign(j1.twice() - j2.twice() - m3.twice());
  return phase * sum.sign() * pre.sqrt_abs() *
         std::fabs(sum.to_double());
}

double wigner6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5,
                HalfInt j6) {
  require_magnitude(j1, "wigner6j j1");
  require_magnitude(j2, "wigner6j j2");
  require_magnitude(j3, "wigner6j j3");
  require_magnitude(j4, "wigner6j j4");
  require_magnitude(j5, "wigner6j j5");
  require_magnitude(j6, "wigner6j j6");

  const HalfInt triads[4][3] = {
      {j1, j2, j3}, {j1, j5, j6}, {j4, j2, j6}, {j4, j5, j3}};
  for (const auto& t : triads) {
    if ((t[0].twice() + t[1].twice() + t[2].twice()) % 2 != 0)
      throw std::invalid_argument(
          "wigner6j: parity-inconsistent triad (" + t[0].str() + ", " +
          t[1].str() + ", " + t[2].str() + ")");
  }
  for (const auto& t : triads) {
    if (!triangle(t[0], t[1], t[2])) return 0.0;
  }

  const int a1 = (j1.twice() + j2.twice() + j3.twice()) / 2;
  const int a2 = (j1.twice() + j5.twice() + j6.twice()) / 2;
  const int a3 = (j4.twice() + j2.twice() + j6.twice()) / 2;
  const int a4 = (j4.twice() + j5.twice() + j3.twice()) / 2;
  const int b1 = (j1.twice() + j2.twice() + j4.twice() + j5.twice()) / 2;
  const int b2 = (j2.twice() + j3.twice() + j5.twice() + j6.twice()) / 2;
  const int b3 = (j3.twice() + j1.twice() + j6.twice() + j4.twice()) / 2;

  const int kmin = std::max({a1, a2, a3, a4});
  const int kmax = std::min({b1, b2, b3});
  if (kmin > kmax) return 0.0;

  BigRational sum;
  for (int k = kmin; k <= kmax; ++k) {
    BigInt den = BigInt::factorial(k - a1) * BigInt::factorial(k - a2);
    den = den * BigInt::factorial(k - a3);
    den = den * BigInt::factorial(k - a4);
    den = den * BigInt::factorial(b1 - k);
    den = den * BigInt::factorial(b2 - k);
    den = den * BigInt::factorial(b3 - k);
    BigInt num = BigInt::factorial(k + 1);
    if (k % 2 != 0) num.negate();
    sum += BigRational(num, den);
  }
  if (sum.is_zero()) return 0.0;

  BigRational pre = triangle_rational(j1, j2, j3);
  pre = pre * triangle_rational(j1, j5, j6);
  pre = pre * triangle_rational(j4, j2, j6);
  pre = pre * triangle_rational(j4, j5, j3);

  return sum.sign() * pre.sqrt_abs() * std::fabs(sum.to_double());
}

double reduced_dipole_f(HalfInt f_ground, HalfInt f_excited,
                        HalfInt nuclear_spin, HalfInt j_ground,
                        HalfInt j_excited) {
  require_magnitude(f_ground, "reduced_dipole_f Fg");
  require_magnitude(f_excited, "reduced_dipole_f Fe");
  if (!triangle(j_ground, nuclear_spin, f_ground))
    throw std::invalid_argument("reduced_dipole_f: Fg=" + f_ground.str() +
                                " not in the (Jg, I) manifold");
  if (!triangle(j_excited, nuclear_spin, f_excited))
    throw std::invalid_argument("reduced_dipole_f: Fe=" + f_excited.str() +
                                " not in the (Je, I) manifold");
  if (!triangle(f_ground, 1, f_excited)) return 0.0;

  const double six = wigner6j(j_excited, f_excited, nuclear_spin, f_ground,
                              j_ground, 1);
  const int phase = parity_sign(j_excited.twice() + nuclear_spin.twice() +
                                f_ground.twice() + 2);
  return phase *
         std::sqrt((f_excited.twice() + 1.0) * (f_ground.twice() + 1.0) *
                   (j_excited.twice() + 1.0)) *
         six;
}

DipoleAmplitude dipole_amplitude(HalfInt f_ground, HalfInt m_ground,
                                 HalfInt f_excited, HalfInt m_excited, int q,
                                 HalfInt nuclear_spin, HalfInt j_ground,
                                 HalfInt j_excited) {
  if (q < -1 || q > 1)
    throw std::invalid_argument("dipole_amplitude: q must be -1, 0 or +1");
  require_pair(f_ground, m_ground, "dipole_amplitude Fg");
  require_pair(f_excited, m_excited, "dipole_amplitude Fe");
  if (!projection_in_range(f_ground, m_ground) ||
      !projection_in_range(f_excited, m_excited))
    throw std::invalid_argument("dipole_amplitude: projection out of range");

  if (m_excited.twice() != m_ground.twice() + 2 * q) return {0.0};
  if (!triangle(f_ground, 1, f_excited)) return {0.0};

  const double red = reduced_dipole_f(f_ground, f_excited, nuclear_spin,
                                      j_ground, j_excited);
  const double three = wigner3j(f_excited, 1, f_ground, -m_excited,
                                HalfInt(q), m_ground);
  const int phase = parity_sign(f_excited.twice() - m_excited.twice());
  return {phase * three * red};
}

double relative_line_strength(HalfInt f_ground, HalfInt f_excited,
                              HalfInt nuclear_spin, HalfInt j_ground,
                              HalfInt j_excited) {
  if (!triangle(f_ground, 1, f_excited)) {
    // still validate the manifold itself
    require_magnitude(f_ground, "relative_line_strength Fg");
    require_magnitude(f_excited, "relative_line_strength Fe");
    return 0.0;
  }
  const HalfInt me = f_excited;  // any Me gives the same sum
  double total = 0.0;
  for (int q = -1; q <= 1; ++q) {
    const HalfInt mg = me - HalfInt(q);
    if (!projection_in_range(f_ground, mg)) continue;
    const double a = dipole_amplitude(f_ground, mg, f_excited, me, q,
                                      nuclear_spin, j_ground, j_excited)
                         .value;
    total += a * a;
  }
  return total;
}

}  // namespace atsim
