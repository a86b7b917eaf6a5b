#pragma once

#include <complex>
#include <string>
#include <vector>

namespace cvqkd {

using Complex = std::complex<double>;

/// A finite set of coherent-state amplitudes with a probability
/// distribution. Amplitudes are dimensionless quadrature amplitudes in
/// shot-noise units. Immutable after construction; the constructor
/// validates the invariants and throws std::invalid_argument on
/// violation:
///   - amplitudes nonempty and the same length as probabilities
///   - probabilities nonnegative, summing to 1 within 1e-12
///   - no two amplitudes equal within 1e-12
class Constellation {
 public:
  Constellation(std::vector<Complex> amplitudes, std::vector<double> probabilities,
                std::string label = "");

  std::size_t size() const { return amplitudes_.size(); }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  const std::vector<double>& probabilities() const { return probabilities_; }
  const std::string& label() const { return label_; }

  static constexpr double kProbabilitySumTol = 1e-12;
  static constexpr double kDuplicateTol = 1e-12;

 private:
  std::vector<Complex> amplitudes_;
  std::vector<double> probabilities_;
  std::string label_;
};

/// Mean photon number sum_i p_i |alpha_i|^2 of the ensemble.
double mean_photon_number(const Constellation& c);

}  // namespace cvqkd
