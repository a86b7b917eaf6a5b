#include "cvqkd/builders.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cvqkd {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string format_params(const FourStateUDParams& p) {
  return "(alpha1=" + std::to_string(p.alpha1) + ", p1=" + std::to_string(p.p1) + ")";
}

void check_ud_params(const FourStateUDParams& p) {
  if (!(p.alpha1 > 0.0)) {
    throw std::invalid_argument("four-state UD: alpha1 must be positive, got " +
                                std::to_string(p.alpha1));
  }
  if (!(p.p1 > 0.25) || !(p.p1 < 0.5)) {
    throw std::invalid_argument("four-state UD: p1 must lie in (1/4, 1/2), got " +
                                std::to_string(p.p1));
  }
  const double numerator = 1.0 - 2.0 * p.p1 * p.alpha1 * p.alpha1;
  if (numerator <= 0.0) {
    throw std::invalid_argument("four-state UD: alpha2 is not real for " + format_params(p) +
                                "; requires alpha1^2 < 1/(2 p1)");
  }
  if (p.alpha2() <= p.alpha1) {
    throw std::invalid_argument("four-state UD: derived alpha2 <= alpha1 for " + format_params(p));
  }
}

}  // namespace

double FourStateUDParams::alpha2() const {
  const double numerator = 1.0 - 2.0 * p1 * alpha1 * alpha1;
  return std::sqrt(numerator / (2.0 * p2()));
}

bool FourStateUDParams::feasible() const {
  if (!(alpha1 > 0.0) || !(p1 > 0.25) || !(p1 < 0.5)) return false;
  const double numerator = 1.0 - 2.0 * p1 * alpha1 * alpha1;
  return numerator > 0.0 && alpha2() > alpha1;
}

double default_outer_offset(int n2) { return std::numbers::pi / n2; }

Constellation build_four_state_ud(const FourStateUDParams& p) {
  check_ud_params(p);
  const double a1 = p.alpha1;
  const double a2 = p.alpha2();
  return Constellation({Complex(a1, 0.0), Complex(-a1, 0.0), Complex(a2, 0.0), Complex(-a2, 0.0)},
                       {p.p1, p.p1, p.p2(), p.p2()}, "ud4");
}

Constellation build_oapk(const OAPKParams& p) {
  if (p.n1 < 1 || p.n2 < 1) {
    throw std::invalid_argument("oapk: ring populations must be >= 1");
  }
  check_ud_params(p.ud);
  const double r1 = p.ud.alpha1;
  const double r2 = p.ud.alpha2();
  if (std::abs(r1 - r2) < 1e-9) {
    throw std::invalid_argument("oapk: inner and outer ring radii coincide");
  }

  std::vector<Complex> amps;
  std::vector<double> probs;
  amps.reserve(p.n1 + p.n2);
  probs.reserve(p.n1 + p.n2);
  const double q1 = 2.0 * p.ud.p1 / p.n1;
  const double q2 = 2.0 * p.ud.p2() / p.n2;
  for (int k = 0; k < p.n1; ++k) {
    const double phi = kTwoPi * k / p.n1 + p.phase_offset_inner;
    amps.push_back(r1 * Complex(std::cos(phi), std::sin(phi)));
    probs.push_back(q1);
  }
  for (int k = 0; k < p.n2; ++k) {
    const double phi = kTwoPi * k / p.n2 + p.phase_offset_outer;
    amps.push_back(r2 * Complex(std::cos(phi), std::sin(phi)));
    probs.push_back(q2);
  }
  const std::string label = "oapk" + std::to_string(p.n1) + "/" + std::to_string(p.n2);
  return Constellation(std::move(amps), std::move(probs), label);
}

Constellation build_psk(int n) {
  if (n < 2) {
    throw std::invalid_argument("psk: need at least 2 states, got " + std::to_string(n));
  }
  std::vector<Complex> amps;
  std::vector<double> probs(n, 1.0 / n);
  amps.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double phi = kTwoPi * k / n;
    amps.push_back(Complex(std::cos(phi), std::sin(phi)));
  }
  return Constellation(std::move(amps), std::move(probs), "psk" + std::to_string(n));
}

Constellation build_apk(int n1, int n2, double ring_ratio) {
  if (n1 < 1 || n2 < 1) {
    throw std::invalid_argument("apk: ring populations must be >= 1");
  }
  if (!(ring_ratio > 1.0)) {
    throw std::invalid_argument("apk: ring ratio must exceed 1, got " +
                                std::to_string(ring_ratio));
  }
  // (n1 r^2 + n2 (ratio r)^2) / (n1 + n2) = 1
  const double r = std::sqrt((n1 + n2) / (n1 + n2 * ring_ratio * ring_ratio));
  std::vector<Complex> amps;
  std::vector<double> probs(n1 + n2, 1.0 / (n1 + n2));
  amps.reserve(n1 + n2);
  for (int k = 0; k < n1; ++k) {
    const double phi = kTwoPi * k / n1;
    amps.push_back(r * Complex(std::cos(phi), std::sin(phi)));
  }
  const double outer = ring_ratio * r;
  for (int k = 0; k < n2; ++k) {
    const double phi = kTwoPi * k / n2 + std::numbers::pi / n2;
    amps.push_back(outer * Complex(std::cos(phi), std::sin(phi)));
  }
  const std::string label = "apk" + std::to_string(n1) + "/" + std::to_string(n2);
  return Constellation(std::move(amps), std::move(probs), label);
}

}  // namespace cvqkd
