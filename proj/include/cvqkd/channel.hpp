#pragma once

#include <optional>
#include <span>

#include "cvqkd/constellation.hpp"

namespace cvqkd {

/// Pure-loss beam-splitter channel of transmittance tau in (0, 1].
struct ChannelParams {
  double transmittance;

  explicit ChannelParams(double tau);
};

/// Bob's received ensemble: amplitudes scaled by sqrt(tau), probabilities
/// unchanged.
Constellation bob_constellation(const Constellation& c, const ChannelParams& ch);

/// Eve's ensemble: amplitudes scaled by sqrt(1 - tau). At tau = 1 every state
/// collapses to vacuum and the ensemble is degenerate; nullopt is returned and
/// the Holevo bound is 0 exactly.
std::optional<Constellation> eve_constellation(const Constellation& c, const ChannelParams& ch);

/// Heterodyne outcome density p(b|alpha) = exp(-|b - sqrt(tau) alpha|^2) / pi.
double heterodyne_likelihood(Complex b, Complex alpha, const ChannelParams& ch);

/// Posterior p(alpha_i|b) over the constellation letters given outcome b.
/// Evaluated in log-space with max subtraction; components are nonnegative
/// and sum to 1.
std::vector<double> posterior(Complex b, const Constellation& c, const ChannelParams& ch);

namespace detail {

/// Posterior over precomputed received amplitudes (sqrt(tau) alpha_i already
/// applied). log_prior holds log(p_i), -inf for zero-probability letters.
/// Returns log p(b) + log(pi), i.e. logsumexp_i(log p_i - |b - mu_i|^2).
double posterior_into(Complex b, std::span<const Complex> received, std::span<const double> log_prior,
                      std::span<double> out);

}  // namespace detail

}  // namespace cvqkd
