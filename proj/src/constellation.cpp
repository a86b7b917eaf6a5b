#include "cvqkd/constellation.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace cvqkd {

Constellation::Constellation(std::vector<Complex> amplitudes,
                             std::vector<double> probabilities, std::string label)
    : amplitudes_(std::move(amplitudes)),
      probabilities_(std::move(probabilities)),
      label_(std::move(label)) {
  if (amplitudes_.empty()) {
    throw std::invalid_argument("constellation: amplitude list is empty");
  }
  if (amplitudes_.size() != probabilities_.size()) {
    throw std::invalid_argument("constellation: " + std::to_string(amplitudes_.size()) +
                                " amplitudes but " + std::to_string(probabilities_.size()) +
                                " probabilities");
  }
  double sum = 0.0;
  for (double p : probabilities_) {
    if (p < 0.0) {
      throw std::invalid_argument("constellation: negative probability " + std::to_string(p));
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbabilitySumTol) {
    throw std::invalid_argument("constellation: probabilities sum to " + std::to_string(sum) +
                                ", expected 1 within 1e-12");
  }
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    for (std::size_t j = i + 1; j < amplitudes_.size(); ++j) {
      if (std::abs(amplitudes_[i] - amplitudes_[j]) <= kDuplicateTol) {
        throw std::invalid_argument("constellation: amplitudes " + std::to_string(i) + " and " +
                                    std::to_string(j) + " coincide within 1e-12");
      }
    }
  }
}

double mean_photon_number(const Constellation& c) {
  double n = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    n += c.probabilities()[i] * std::norm(c.amplitudes()[i]);
  }
  return n;
}

}  // namespace cvqkd
