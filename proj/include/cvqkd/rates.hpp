#pragma once

#include "cvqkd/channel.hpp"
#include "cvqkd/constellation.hpp"
#include "cvqkd/quadrature.hpp"

namespace cvqkd {

/// One secret-key-rate evaluation. skr_bits = mutual_information_bits -
/// holevo_bits by construction; no clamping, negative rates are reported
/// as-is so zero crossings stay visible.
struct RateReport {
  double tau = 0.0;
  double mutual_information_bits = 0.0;
  double holevo_bits = 0.0;
  double skr_bits = 0.0;
  bool eve_rank_deficient = false;
  int eve_effective_rank = 0;
  /// Normalization self-test residual of the quadrature grid used.
  double quadrature_error = 0.0;
};

/// Shannon mutual information I(A;B) in bits between Alice's letters and
/// Bob's heterodyne outcome, evaluated on the grid:
///   I = H(P) - sum_k w_k p(b_k) H(posterior(b_k)).
double mutual_information(const Constellation& c, const ChannelParams& ch,
                          const QuadratureGrid& g);

/// Holevo bound chi(B,E) in bits on Eve's information about Bob's outcomes:
///   chi = S(rho_E) - sum_k w_k p(b_k) S(rho_{E|b_k}),
/// with one Gram-Schmidt factorization of Eve's ensemble reused across all
/// nodes. Values in [-1e-8, 0) are clamped to 0; anything more negative
/// throws std::runtime_error instead of being hidden.
double holevo_bound(const Constellation& c, const ChannelParams& ch, const QuadratureGrid& g);

struct HolevoDetail {
  double chi_bits = 0.0;
  bool rank_deficient = false;
  int effective_rank = 0;
};

HolevoDetail holevo_bound_detailed(const Constellation& c, const ChannelParams& ch,
                                   const QuadratureGrid& g);

/// Builds a grid and composes I(A;B) and chi(B,E) into a full report.
RateReport secret_key_rate(const Constellation& c, const ChannelParams& ch,
                           GridResolution res = {});

/// Serial reference implementations of the quadrature kernels. Same math,
/// plain node loop, no OpenMP; kept for testing and for the kernel benchmark.
namespace ref {

double mutual_information(const Constellation& c, const ChannelParams& ch,
                          const QuadratureGrid& g);
double holevo_bound(const Constellation& c, const ChannelParams& ch, const QuadratureGrid& g);

}  // namespace ref

}  // namespace cvqkd
