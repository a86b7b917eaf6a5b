#pragma once

#include <string>
#include <vector>

#include "cvqkd/channel.hpp"
#include "cvqkd/constellation.hpp"

namespace cvqkd {

struct GridResolution {
  int radial = 96;
  int angular = 128;
};

/// Deterministic 2D quadrature rule over the complex plane: radial
/// Gauss-Legendre nodes on [0, R] crossed with uniformly weighted angles,
/// truncated at R = max_i |sqrt(tau) alpha_i| + 6 (six standard deviations of
/// the heterodyne Gaussian). Node k carries the polar Jacobian in weights[k].
struct QuadratureGrid {
  std::vector<Complex> nodes;
  std::vector<double> weights;
  GridResolution resolution;
  double truncation_radius = 0.0;
  /// Residual of the construction-time self-test: the largest deviation of
  /// integral p(b|alpha_i) d^2b from 1 over the received states.
  double normalization_residual = 0.0;
  std::string scheme = "polar-gauss-legendre";
};

/// Builds the grid for the given constellation/channel pair and runs the
/// normalization self-test; throws std::runtime_error suggesting a higher
/// resolution if any single-state likelihood misses unit mass by more than
/// 1e-6.
QuadratureGrid build_grid(const Constellation& c, const ChannelParams& ch,
                          GridResolution res = {});

/// n-point Gauss-Legendre rule on [-1, 1], nodes in ascending order.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace cvqkd
