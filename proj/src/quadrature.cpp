#include "cvqkd/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cvqkd {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) {
    throw std::invalid_argument("gauss_legendre: need at least one node");
  }
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n(x).
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * x * p2 - j * p3) / (j + 1.0);
      }
      dp = n * (x * p1 - p2) / (x * x - 1.0);
      const double dx = -p1 / dp;
      x += dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

QuadratureGrid build_grid(const Constellation& c, const ChannelParams& ch, GridResolution res) {
  if (res.radial < 1 || res.angular < 1) {
    throw std::invalid_argument("build_grid: resolution must be at least 1x1");
  }
  const double root_tau = std::sqrt(ch.transmittance);
  double max_radius = 0.0;
  for (const Complex& a : c.amplitudes()) {
    max_radius = std::max(max_radius, std::abs(root_tau * a));
  }

  QuadratureGrid grid;
  grid.resolution = res;
  grid.truncation_radius = max_radius + 6.0;

  std::vector<double> gl_nodes;
  std::vector<double> gl_weights;
  gauss_legendre(res.radial, gl_nodes, gl_weights);

  const double half_radius = 0.5 * grid.truncation_radius;
  const double dtheta = 2.0 * std::numbers::pi / res.angular;
  grid.nodes.reserve(static_cast<std::size_t>(res.radial) * res.angular);
  grid.weights.reserve(grid.nodes.capacity());
  for (int j = 0; j < res.radial; ++j) {
    const double r = half_radius * (gl_nodes[j] + 1.0);
    const double wr = gl_weights[j] * half_radius * r * dtheta;  // polar Jacobian r
    for (int l = 0; l < res.angular; ++l) {
      const double theta = dtheta * l;
      grid.nodes.push_back(r * Complex(std::cos(theta), std::sin(theta)));
      grid.weights.push_back(wr);
    }
  }

  // Self-test: every received single-state likelihood must integrate to 1.
  double worst = 0.0;
  for (const Complex& a : c.amplitudes()) {
    const Complex mean = root_tau * a;
    double mass = 0.0;
    for (std::size_t k = 0; k < grid.nodes.size(); ++k) {
      mass += grid.weights[k] * std::exp(-std::norm(grid.nodes[k] - mean));
    }
    mass *= std::numbers::inv_pi;
    worst = std::max(worst, std::abs(mass - 1.0));
  }
  grid.normalization_residual = worst;
  if (worst > 1e-6) {
    std::ostringstream msg;
    msg << "build_grid: normalization self-test failed (residual " << worst << " at "
        << res.radial << "x" << res.angular << " nodes); increase the resolution";
    throw std::runtime_error(msg.str());
  }
  return grid;
}

}  // namespace cvqkd
