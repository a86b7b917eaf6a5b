#pragma once

#include <Eigen/Dense>
#include <span>

#include "cvqkd/constellation.hpp"

namespace cvqkd {

using ComplexMatrix = Eigen::MatrixXcd;

/// Eigenvalues at or below this floor are dropped before lambda*log2(lambda);
/// tiny negative rounding eigenvalues would otherwise produce NaN.
inline constexpr double kEigenvalueFloor = 1e-14;

/// A Gram-Schmidt pivot 1 - sum|M_ki|^2 below this is clamped to zero and the
/// factorization flagged rank-deficient.
inline constexpr double kPivotClampTol = 1e-12;

/// A pivot below this signals an invalid (non-PSD) Gram matrix rather than
/// rounding noise.
inline constexpr double kPivotNegativeTol = -1e-9;

/// Inner product of two coherent states,
/// <a|b> = exp((conj(a)*b - a*conj(b))/2) * exp(-|a - b|^2 / 2).
/// Total function; the magnitude is always in (0, 1].
Complex overlap(Complex a, Complex b);

/// Hermitian matrix of pairwise coherent-state overlaps V_ij = <alpha_i|alpha_j>.
struct GramMatrix {
  ComplexMatrix entries;
};

GramMatrix gram_matrix(const Constellation& c);

/// Lower-triangular matrix M from Gram-Schmidt orthogonalization of the
/// ensemble: M_ki = <psi_i|alpha_k> expresses state k in the orthonormal
/// basis {|psi_i>}. Rows have unit norm; M M^dagger reconstructs V^T.
struct ProjectionMatrix {
  ComplexMatrix entries;
  bool rank_deficient = false;  // at least one pivot was clamped to zero
  int effective_rank = 0;       // pivots that survived the clamp threshold
};

/// Row-by-row Gram-Schmidt recurrence:
///   M_k0 = V_0k
///   M_ki = (V_ik - sum_{j<i} conj(M_ij) M_kj) / M_ii   for 1 <= i < k
///   M_kk = sqrt(1 - sum_{i<k} |M_ki|^2)
/// A pivot argument below kPivotClampTol is clamped to 0 (rank-deficient
/// ensemble); below kPivotNegativeTol it throws std::invalid_argument since
/// the input cannot have been positive semidefinite.
ProjectionMatrix gram_schmidt(const GramMatrix& v);

/// Hermitian, unit-trace, PSD matrix of an ensemble in the orthonormal basis.
struct DensityMatrix {
  ComplexMatrix entries;
};

/// rho_ij = sum_k w_k M_ki conj(M_kj). Weights must match the matrix size.
DensityMatrix density_matrix(std::span<const double> weights, const ProjectionMatrix& m);
DensityMatrix density_matrix(const Constellation& c, const ProjectionMatrix& m);

/// In-place variant for hot loops; out is resized and overwritten.
void density_matrix_into(std::span<const double> weights, const ProjectionMatrix& m,
                         ComplexMatrix& out);

/// Von Neumann entropy in bits: Shannon entropy of the eigenvalue spectrum,
/// eigenvalues at or below kEigenvalueFloor dropped. Throws std::runtime_error
/// with matrix diagnostics if the eigensolver fails to converge.
double von_neumann_entropy(const DensityMatrix& rho);

/// Independent check on the Gram-Schmidt path: the weighted Gram matrix
/// W_ij = sqrt(p_i p_j) V_ij shares the nonzero spectrum of the ensemble
/// density operator. Returns the Shannon entropy of its eigenvalues in bits.
double entropy_via_weighted_gram(const Constellation& c);

/// Shannon entropy in bits of a nonnegative vector; entries <= 0 contribute 0.
double shannon_entropy_bits(std::span<const double> p);

/// Entropy in bits of an eigenvalue spectrum, applying kEigenvalueFloor.
double spectrum_entropy_bits(const Eigen::VectorXd& eigenvalues);

}  // namespace cvqkd
