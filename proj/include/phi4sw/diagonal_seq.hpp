#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "phi4sw/errors.hpp"

namespace phi4sw {

// Coefficients of an odd-harmonic diagonal standing wave
//
//   sum_i  a_{2i+1} sin((2i+1) x) sin((2i+1) t)
//
// Only odd harmonics are stored; even harmonics are identically zero by
// construction. Entry i holds the coefficient of harmonic 2i+1.
template <class Real>
class DiagonalSeq {
 public:
  DiagonalSeq() = default;
  explicit DiagonalSeq(std::size_t n_modes) : coeffs_(n_modes, Real(0)) {}
  explicit DiagonalSeq(std::vector<Real> coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t modes() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }
  int max_harmonic() const { return coeffs_.empty() ? 0 : 2 * static_cast<int>(coeffs_.size()) - 1; }

  Real& mode(std::size_t i) { return coeffs_.at(i); }
  const Real& mode(std::size_t i) const { return coeffs_.at(i); }

  // Coefficient of sin(j x) sin(j t) for any j: zero for even harmonics,
  // non-positive indices, and harmonics beyond the truncation.
  Real harmonic_or_zero(int j) const {
    if (j < 1 || j % 2 == 0) return Real(0);
    const std::size_t i = static_cast<std::size_t>((j - 1) / 2);
    return i < coeffs_.size() ? coeffs_[i] : Real(0);
  }

  const std::vector<Real>& values() const { return coeffs_; }
  std::vector<Real>& values() { return coeffs_; }

  DiagonalSeq scaled(const Real& factor) const {
    DiagonalSeq out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] * factor;
    return out;
  }

  bool all_finite() const {
    using std::isfinite;
    for (const auto& v : coeffs_)
      if (!isfinite(v)) return false;
    return true;
  }

 private:
  std::vector<Real> coeffs_;
};

}  // namespace phi4sw
