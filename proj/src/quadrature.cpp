#include "atsim/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace atsim {

namespace {

constexpr long double kPi = 3.14159265358979323846264338328L;
constexpr long double kPiRoot4 = 1.33133536380038971279753491795L;  // pi^(1/4)

// value and derivative of the orthonormal Hermite polynomial at x
// (physicists' scaling, weight e^{-x^2})
void hermite_eval(int n, long double x, long double* value,
                  long double* derivative) {
  long double p0 = 1.0L / kPiRoot4;
  long double p1 = 0.0L;
  for (int j = 1; j <= n; ++j) {
    const long double p2 = p1;
    p1 = p0;
    p0 = x * std::sqrt(2.0L / j) * p1 - std::sqrt((j - 1.0L) / j) * p2;
  }
  *value = p0;
  *derivative = std::sqrt(2.0L * n) * p1;
}

// safeguarded Newton inside a sign-change bracket [a, b]
long double refine_root(int n, long double a, long double b, long double fa) {
  long double x = 0.5L * (a + b);
  for (int it = 0; it < 200; ++it) {
    long double p, dp;
    hermite_eval(n, x, &p, &dp);
    long double step = p / dp;
    long double next = x - step;
    if (!(next > a && next < b)) {
      // Newton left the bracket: bisect instead
      if ((p > 0) == (fa > 0))
        a = x;
      else
        b = x;
      next = 0.5L * (a + b);
      step = next - x;
    } else if ((p > 0) == (fa > 0)) {
      a = x;
    } else {
      b = x;
    }
    x = next;
    if (std::fabs(step) < 1e-19L * (1.0L + std::fabs(x))) break;
  }
  return x;
}

}  // namespace

GaussHermite gauss_hermite(int order) {
  if (order < 1)
    throw std::invalid_argument("gauss_hermite: order must be >= 1");

  const int n = order;
  GaussHermite rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);

  const auto store = [&](int i, long double root) {
    long double p, dp;
    hermite_eval(n, root, &p, &dp);
    // physicists' weight 2/dp^2, rescaled so the weights sum to one and the
    // nodes carry unit variance
    const long double w = 2.0L / (dp * dp) / std::sqrt(kPi);
    const double node = static_cast<double>(root * std::sqrt(2.0L));
    const int pos = n / 2 + (n % 2) + i;
    const int neg = n / 2 - 1 - i;
    rule.nodes[pos] = node;
    rule.nodes[neg] = -node;
    rule.weights[pos] = static_cast<double>(w);
    rule.weights[neg] = rule.weights[pos];
  };

  if (n % 2 == 1) {
    long double p, dp;
    hermite_eval(n, 0.0L, &p, &dp);
    rule.nodes[n / 2] = 0.0;
    rule.weights[n / 2] =
        static_cast<double>(2.0L / (dp * dp) / std::sqrt(kPi));
  }

  // positive roots by sign-change scan; the minimal spacing sits at the
  // center (~pi/sqrt(2n+1)), so a quarter of that resolves every bracket.
  // The smallest positive root is at least two steps out for either parity.
  const long double turning = std::sqrt(2.0L * n + 1.0L);
  const long double step = 0.25L * kPi / turning;
  long double x_prev = 0.5L * step;
  long double f_prev, dummy;
  hermite_eval(n, x_prev, &f_prev, &dummy);
  int found = 0;
  for (long double x = x_prev + step; found < n / 2; x += step) {
    long double f;
    hermite_eval(n, x, &f, &dummy);
    if ((f > 0) != (f_prev > 0)) {
      store(found, refine_root(n, x_prev, x, f_prev));
      ++found;
    }
    x_prev = x;
    f_prev = f;
    if (x > turning + 1.0L && found < n / 2)
      throw std::logic_error("gauss_hermite: root scan failed");
  }
  return rule;
}

}  // namespace atsim
