#pragma once

#include "cvqkd/constellation.hpp"

namespace cvqkd {

/// Parameters of the four-state unidimensional family
/// {|a1>, |-a1>, |a2>, |-a2>} with probabilities {p1, p1, p2, p2},
/// p2 = 1/2 - p1. The second amplitude is derived from the unit mean photon
/// number constraint: a2 = sqrt((1 - 2 p1 a1^2) / (2 p2)).
struct FourStateUDParams {
  double alpha1 = 0.0;  // > 0
  double p1 = 0.0;      // in (1/4, 1/2), exclusive

  /// Derived quantities; valid only when the parameters are feasible.
  double p2() const { return 0.5 - p1; }
  double alpha2() const;

  /// Feasible iff alpha2 is real and alpha2 > alpha1.
  bool feasible() const;
};

/// Two-ring amplitude-phase constellation: n1 states on the inner ring
/// (radius ud.alpha1) and n2 on the outer ring (radius ud.alpha2), each ring
/// inheriting the unidimensional probabilities via q_i = 2 p_i / N_i.
struct OAPKParams {
  int n1 = 0;  // >= 1
  int n2 = 0;  // >= 1
  FourStateUDParams ud;
  double phase_offset_inner = 0.0;
  double phase_offset_outer = 0.0;  // callers usually stagger by pi/n2
};

/// Staggered-ring default for the outer phase offset.
double default_outer_offset(int n2);

/// Builds the unidimensional four-state constellation. Throws
/// std::invalid_argument naming the violated constraint when the parameters
/// are infeasible. Output has unit mean photon number by construction.
Constellation build_four_state_ud(const FourStateUDParams& p);

/// Builds the two-ring constellation with per-state probabilities
/// 2 p1/n1 (inner) and 2 p2/n2 (outer). Throws if the rings collide or the
/// underlying parameters are infeasible.
Constellation build_oapk(const OAPKParams& p);

/// n equiprobable states on the unit circle, phases 2 pi k / n. Requires n >= 2.
Constellation build_psk(int n);

/// Equiprobable states on two rings with radius ratio ring_ratio > 1, inner
/// radius solved so the mean photon number is 1. The outer ring is offset by
/// pi / n2 relative to the inner. Requires n1, n2 >= 1.
Constellation build_apk(int n1, int n2, double ring_ratio = 2.0);

}  // namespace cvqkd
