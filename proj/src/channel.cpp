#include "cvqkd/channel.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace cvqkd {

ChannelParams::ChannelParams(double tau) : transmittance(tau) {
  if (!(tau > 0.0) || !(tau <= 1.0)) {
    throw std::invalid_argument("channel: transmittance must lie in (0, 1], got " +
                                std::to_string(tau));
  }
}

namespace {

Constellation scaled(const Constellation& c, double factor, const std::string& suffix) {
  std::vector<Complex> amps(c.amplitudes());
  for (Complex& a : amps) a *= factor;
  return Constellation(std::move(amps), c.probabilities(), c.label() + suffix);
}

}  // namespace

Constellation bob_constellation(const Constellation& c, const ChannelParams& ch) {
  return scaled(c, std::sqrt(ch.transmittance), "|bob");
}

std::optional<Constellation> eve_constellation(const Constellation& c, const ChannelParams& ch) {
  if (ch.transmittance == 1.0) {
    return std::nullopt;  // vacuum ensemble, chi = 0 exactly
  }
  return scaled(c, std::sqrt(1.0 - ch.transmittance), "|eve");
}

double heterodyne_likelihood(Complex b, Complex alpha, const ChannelParams& ch) {
  const Complex mean = std::sqrt(ch.transmittance) * alpha;
  return std::exp(-std::norm(b - mean)) * std::numbers::inv_pi;
}

namespace detail {

double posterior_into(Complex b, std::span<const Complex> received,
                      std::span<const double> log_prior, std::span<double> out) {
  const std::size_t n = received.size();
  double max_log = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = log_prior[i] - std::norm(b - received[i]);
    if (out[i] > max_log) max_log = out[i];
  }
  // Finite b and at least one positive prior guarantee a finite maximum.
  assert(std::isfinite(max_log));
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::exp(out[i] - max_log);
    sum += out[i];
  }
  const double inv_sum = 1.0 / sum;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] *= inv_sum;
  }
  return max_log + std::log(sum);
}

}  // namespace detail

std::vector<double> posterior(Complex b, const Constellation& c, const ChannelParams& ch) {
  const std::size_t n = c.size();
  const double root_tau = std::sqrt(ch.transmittance);
  std::vector<Complex> received(n);
  std::vector<double> log_prior(n);
  for (std::size_t i = 0; i < n; ++i) {
    received[i] = root_tau * c.amplitudes()[i];
    log_prior[i] = c.probabilities()[i] > 0.0 ? std::log(c.probabilities()[i])
                                              : -std::numeric_limits<double>::infinity();
  }
  std::vector<double> post(n);
  detail::posterior_into(b, received, log_prior, post);
  return post;
}

}  // namespace cvqkd
