#include "cvqkd/ensemble.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cvqkd {

Complex overlap(Complex a, Complex b) {
  // (conj(a)*b - a*conj(b))/2 = i * Im(conj(a)*b), a pure phase.
  const double phase = std::imag(std::conj(a) * b);
  const double distance_sq = std::norm(a - b);
  return std::exp(-0.5 * distance_sq) * Complex(std::cos(phase), std::sin(phase));
}

GramMatrix gram_matrix(const Constellation& c) {
  const auto& alpha = c.amplitudes();
  const Eigen::Index n = static_cast<Eigen::Index>(alpha.size());
  ComplexMatrix v(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    v(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      v(i, j) = overlap(alpha[i], alpha[j]);
      v(j, i) = std::conj(v(i, j));
    }
  }
  return GramMatrix{std::move(v)};
}

ProjectionMatrix gram_schmidt(const GramMatrix& gram) {
  const ComplexMatrix& v = gram.entries;
  const Eigen::Index n = v.rows();
  if (n != v.cols()) {
    throw std::invalid_argument("gram_schmidt: matrix is not square");
  }

  ProjectionMatrix result;
  result.entries = ComplexMatrix::Zero(n, n);
  ComplexMatrix& m = result.entries;
  result.effective_rank = 0;

  for (Eigen::Index k = 0; k < n; ++k) {
    m(k, 0) = v(0, k);
    for (Eigen::Index i = 1; i < k; ++i) {
      if (std::real(m(i, i)) == 0.0) {
        // Basis vector i was annihilated by an earlier clamp; state k has no
        // component along it.
        m(k, i) = 0.0;
        continue;
      }
      Complex acc = v(i, k);
      for (Eigen::Index j = 0; j < i; ++j) {
        acc -= std::conj(m(i, j)) * m(k, j);
      }
      m(k, i) = acc / m(i, i);
    }
    if (k > 0) {
      double pivot = 1.0;
      for (Eigen::Index i = 0; i < k; ++i) {
        pivot -= std::norm(m(k, i));
      }
      if (pivot < kPivotNegativeTol) {
        std::ostringstream msg;
        msg << "gram_schmidt: pivot " << pivot << " at row " << k
            << " is negative beyond rounding; input matrix is not positive semidefinite";
        throw std::invalid_argument(msg.str());
      }
      if (pivot < kPivotClampTol) {
        m(k, k) = 0.0;
        result.rank_deficient = true;
      } else {
        m(k, k) = std::sqrt(pivot);
        ++result.effective_rank;
      }
    } else {
      ++result.effective_rank;
    }
  }
  return result;
}

void density_matrix_into(std::span<const double> weights, const ProjectionMatrix& proj,
                         ComplexMatrix& out) {
  const ComplexMatrix& m = proj.entries;
  const Eigen::Index n = m.rows();
  if (static_cast<Eigen::Index>(weights.size()) != n) {
    throw std::invalid_argument("density_matrix: weight count does not match matrix size");
  }
  out = ComplexMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double w = weights[k];
    if (w == 0.0) continue;
    // Row k is zero beyond column k; only the leading (k+1)x(k+1) block updates.
    for (Eigen::Index i = 0; i <= k; ++i) {
      const Complex wi = w * m(k, i);
      for (Eigen::Index j = 0; j <= k; ++j) {
        out(i, j) += wi * std::conj(m(k, j));
      }
    }
  }
}

DensityMatrix density_matrix(std::span<const double> weights, const ProjectionMatrix& proj) {
  DensityMatrix rho;
  density_matrix_into(weights, proj, rho.entries);
  return rho;
}

DensityMatrix density_matrix(const Constellation& c, const ProjectionMatrix& proj) {
  return density_matrix(std::span<const double>(c.probabilities()), proj);
}

namespace {

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& a, const char* context) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << context << ": eigen-decomposition failed to converge (size " << a.rows() << ", norm "
        << a.norm() << ", trace " << a.trace().real() << ")";
    throw std::runtime_error(msg.str());
  }
  return solver.eigenvalues();
}

}  // namespace

double spectrum_entropy_bits(const Eigen::VectorXd& eigenvalues) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    const double lambda = eigenvalues[i];
    if (lambda > kEigenvalueFloor) {
      s -= lambda * std::log2(lambda);
    }
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return spectrum_entropy_bits(hermitian_eigenvalues(rho.entries, "von_neumann_entropy"));
}

double entropy_via_weighted_gram(const Constellation& c) {
  const GramMatrix gram = gram_matrix(c);
  const auto& p = c.probabilities();
  const Eigen::Index n = gram.entries.rows();
  ComplexMatrix w(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      w(i, j) = std::sqrt(p[i] * p[j]) * gram.entries(i, j);
    }
  }
  return spectrum_entropy_bits(hermitian_eigenvalues(w, "entropy_via_weighted_gram"));
}

double shannon_entropy_bits(std::span<const double> p) {
  double h = 0.0;
  for (double q : p) {
    if (q > 0.0) {
      h -= q * std::log2(q);
    }
  }
  return h;
}

}  // namespace cvqkd
