#pragma once

#include <vector>

namespace atsim {

/// Gauss-Hermite rule rescaled for averages over a standard normal
/// distribution: integral of f(x) N(0,1) dx ~= sum w_i f(x_i), with the
/// weights summing to one.
struct GaussHermite {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes and weights for the given order (>= 1; accurate well past 200).
GaussHermite gauss_hermite(int order);

}  // namespace atsim
