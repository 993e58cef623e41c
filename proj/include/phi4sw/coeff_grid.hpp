#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "phi4sw/errors.hpp"

namespace phi4sw {

// Dense coefficient grid of a sine-sine field
//
//   sum_{n=1..Nx} sum_{j=1..Nt}  C(n,j) sin(n x) sin(j t)
//
// n is the spatial harmonic, j the temporal one.
template <class Real>
class CoeffGrid {
 public:
  CoeffGrid() : nx_(0), nt_(0) {}
  CoeffGrid(int nx, int nt) : nx_(nx), nt_(nt), c_(static_cast<std::size_t>(nx) * nt, Real(0)) {}

  int max_x() const { return nx_; }
  int max_t() const { return nt_; }

  Real& at(int n, int j) { return c_[index(n, j)]; }
  const Real& at(int n, int j) const { return c_[index(n, j)]; }

  Real at_or_zero(int n, int j) const {
    if (n < 1 || j < 1 || n > nx_ || j > nt_) return Real(0);
    return c_[index(n, j)];
  }

  const std::vector<Real>& values() const { return c_; }
  std::vector<Real>& values() { return c_; }

  Real max_abs() const {
    using std::abs;
    Real m(0);
    for (const auto& v : c_)
      if (abs(v) > m) m = abs(v);
    return m;
  }

  bool all_finite() const {
    using std::isfinite;
    for (const auto& v : c_)
      if (!isfinite(v)) return false;
    return true;
  }

 private:
  std::size_t index(int n, int j) const {
    if (n < 1 || j < 1 || n > nx_ || j > nt_) throw DomainError("grid index out of range");
    return static_cast<std::size_t>(n - 1) * nt_ + (j - 1);
  }

  int nx_, nt_;
  std::vector<Real> c_;
};

// Mixed-parity intermediate of a product of two sine-sine fields
//
//   sum_{m=0..Mx} sum_{l=0..Mt}  W(m,l) cos(m x) cos(l t)
//
// The (0,0) entry is the constant term; no half-weights are folded in.
template <class Real>
class CosCosGrid {
 public:
  CosCosGrid() : mx_(0), mt_(0) {}
  CosCosGrid(int mx, int mt)
      : mx_(mx), mt_(mt), c_(static_cast<std::size_t>(mx + 1) * (mt + 1), Real(0)) {}

  int max_x() const { return mx_; }
  int max_t() const { return mt_; }

  Real& at(int m, int l) { return c_[index(m, l)]; }
  const Real& at(int m, int l) const { return c_[index(m, l)]; }

  Real at_or_zero(int m, int l) const {
    if (m < 0 || l < 0 || m > mx_ || l > mt_) return Real(0);
    return c_[index(m, l)];
  }

 private:
  std::size_t index(int m, int l) const {
    if (m < 0 || l < 0 || m > mx_ || l > mt_) throw DomainError("grid index out of range");
    return static_cast<std::size_t>(m) * (mt_ + 1) + l;
  }

  int mx_, mt_;
  std::vector<Real> c_;
};

}  // namespace phi4sw
