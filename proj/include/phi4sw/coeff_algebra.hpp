#pragma once

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "phi4sw/coeff_grid.hpp"
#include "phi4sw/diagonal_seq.hpp"
#include "phi4sw/errors.hpp"

// Exact coefficient-space algebra for standing-wave trigonometric series.
//
// Products are computed by discrete convolution with the product-to-sum
// identities
//
//   sin(a) sin(b) = (cos(a-b) - cos(a+b)) / 2
//   cos(a) sin(b) = (sin(b+a) + sin(b-a)) / 2
//   cos(a) cos(b) = (cos(a-b) + cos(a+b)) / 2
//
// applied per axis. Output truncations equal the sum of input truncations,
// so there is no aliasing: results are exact for the truncated inputs.

namespace phi4sw {

// u * v for two sine-sine fields; the result lives on the cos(m x) cos(l t) basis.
template <class Real>
CosCosGrid<Real> product_sine_sine(const CoeffGrid<Real>& u, const CoeffGrid<Real>& v) {
  CosCosGrid<Real> w(u.max_x() + v.max_x(), u.max_t() + v.max_t());
  for (int a = 1; a <= u.max_x(); ++a) {
    for (int i = 1; i <= u.max_t(); ++i) {
      const Real& uc = u.at(a, i);
      if (uc == 0) continue;
      for (int b = 1; b <= v.max_x(); ++b) {
        for (int l = 1; l <= v.max_t(); ++l) {
          const Real& vc = v.at(b, l);
          if (vc == 0) continue;
          const Real p = uc * vc / 4;
          const int dx = std::abs(a - b), sx = a + b;
          const int dt = std::abs(i - l), st = i + l;
          w.at(dx, dt) += p;
          w.at(dx, st) -= p;
          w.at(sx, dt) -= p;
          w.at(sx, st) += p;
        }
      }
    }
  }
  return w;
}

// w * v for a cos-cos field times a sine-sine field; the result is sine-sine.
template <class Real>
CoeffGrid<Real> product_coscos_sinsin(const CosCosGrid<Real>& w, const CoeffGrid<Real>& v) {
  CoeffGrid<Real> out(w.max_x() + v.max_x(), w.max_t() + v.max_t());
  // cos(m x) sin(b x) = ( sin((b+m) x) + sin((b-m) x) ) / 2, sin(-n) = -sin(n)
  const auto axis_terms = [](int m, int b, int (&harm)[2], int (&sign)[2]) {
    int cnt = 0;
    harm[cnt] = b + m;
    sign[cnt++] = 1;
    if (b != m) {
      harm[cnt] = std::abs(b - m);
      sign[cnt++] = (b > m) ? 1 : -1;
    }
    return cnt;
  };
  for (int m = 0; m <= w.max_x(); ++m) {
    for (int l = 0; l <= w.max_t(); ++l) {
      const Real& wc = w.at(m, l);
      if (wc == 0) continue;
      for (int b = 1; b <= v.max_x(); ++b) {
        for (int i = 1; i <= v.max_t(); ++i) {
          const Real& vc = v.at(b, i);
          if (vc == 0) continue;
          const Real p = wc * vc / 4;
          int hx[2], sx[2], ht[2], st[2];
          const int cx = axis_terms(m, b, hx, sx);
          const int ct = axis_terms(l, i, ht, st);
          for (int ix = 0; ix < cx; ++ix)
            for (int it = 0; it < ct; ++it)
              out.at(hx[ix], ht[it]) += (sx[ix] * st[it] > 0) ? p : -p;
        }
      }
    }
  }
  return out;
}

template <class Real>
CoeffGrid<Real> diag_to_grid(const DiagonalSeq<Real>& a) {
  const int h = a.max_harmonic();
  CoeffGrid<Real> g(h, h);
  for (std::size_t i = 0; i < a.modes(); ++i) {
    const int j = 2 * static_cast<int>(i) + 1;
    g.at(j, j) = a.mode(i);
  }
  return g;
}

template <class Real>
CosCosGrid<Real> square_diagonal_field(const DiagonalSeq<Real>& a) {
  const auto g = diag_to_grid(a);
  return product_sine_sine(g, g);
}

// Sine-sine Fourier coefficients of (sum_j a_j sin(jx) sin(jt))^3, exact up to
// harmonic 3(2N-1) in each direction.
template <class Real>
CoeffGrid<Real> cube_diagonal_field(const DiagonalSeq<Real>& a) {
  if (a.empty()) throw DomainError("cube of an empty sequence");
  return product_coscos_sinsin(square_diagonal_field(a), diag_to_grid(a));
}

// 1-D analogue for odd-harmonic cosine series: coefficients of g^3 where
// g = sum_m f_m cos(m z), m odd. Entry i of input/output is harmonic 2i+1;
// the output extends to harmonic 3(2M-1).
template <class Real>
std::vector<Real> cube_cosine_series(const std::vector<Real>& f) {
  if (f.empty()) throw DomainError("cube of an empty series");
  const int M = static_cast<int>(f.size());
  const int hmax = 2 * M - 1;
  const auto fc = [&](int m) -> const Real& { return f[static_cast<std::size_t>((m - 1) / 2)]; };

  // square: even-cosine series, harmonics 0..2*hmax
  std::vector<Real> sq(static_cast<std::size_t>(hmax) + 1, Real(0));  // index = harmonic/2
  for (int a = 1; a <= hmax; a += 2) {
    if (fc(a) == 0) continue;
    for (int b = 1; b <= hmax; b += 2) {
      if (fc(b) == 0) continue;
      const Real p = fc(a) * fc(b) / 2;
      sq[static_cast<std::size_t>(std::abs(a - b) / 2)] += p;
      sq[static_cast<std::size_t>((a + b) / 2)] += p;
    }
  }

  // times g again: odd-cosine series up to 3*hmax
  std::vector<Real> out(static_cast<std::size_t>((3 * hmax + 1) / 2), Real(0));
  const auto add = [&](int h, const Real& val) {
    out[static_cast<std::size_t>((h - 1) / 2)] += val;  // cos is even: |h|
  };
  for (int e = 0; e <= 2 * hmax; e += 2) {
    const Real& wc = sq[static_cast<std::size_t>(e / 2)];
    if (wc == 0) continue;
    for (int b = 1; b <= hmax; b += 2) {
      if (fc(b) == 0) continue;
      const Real p = (e == 0) ? wc * fc(b) : wc * fc(b) / 2;
      if (e == 0) {
        add(b, p);
      } else {
        add(e + b, p);
        add(std::abs(e - b), p);
      }
    }
  }
  return out;
}

// Diagonal residuals R_jj of the first-order solvability system.
//
// Convention: R_jj is 16 times the raw (j,j) Fourier coefficient of
// 2*omega1 * d^2(phi0)/dt^2 + phi0^3, divided by a1^3, with the input
// normalized so a1 = c1 = 1 and omega1 = c_omega * a1^2. A single mode
// c = (1) therefore gives R_11 = 9 - 32*c_omega.
//
// Returns residuals for all 3N available equations, harmonics 2k-1 for
// k = 1..3N (the last one is identically zero: the cube reaches 6N-3).
template <class Real>
DiagonalSeq<Real> diagonal_residuals(const DiagonalSeq<Real>& c, const Real& c_omega) {
  if (c.empty()) throw DomainError("empty coefficient sequence");
  if (!(c.mode(0) == 1)) throw DomainError("diagonal residuals require c1 = 1");
  const auto d = cube_diagonal_field(c);
  const int n_eq = 3 * static_cast<int>(c.modes());
  DiagonalSeq<Real> r(static_cast<std::size_t>(n_eq));
  for (int k = 1; k <= n_eq; ++k) {
    const int j = 2 * k - 1;
    r.mode(static_cast<std::size_t>(k - 1)) =
        16 * (d.at_or_zero(j, j) - 2 * c_omega * j * j * c.harmonic_or_zero(j));
  }
  return r;
}

// Full residual grid of the first-order equation: for given phi0 coefficients
// a and candidate phi1 coefficients b,
//
//   R_nj = (j^2 - n^2) b_nj + 2*omega1 n^2 a_n delta_nj - D_nj
//
// where D is the cube of phi0. Linear in b for fixed a; no normalization.
template <class Real>
CoeffGrid<Real> offdiagonal_residuals(const DiagonalSeq<Real>& a, const CoeffGrid<Real>& b,
                                      const Real& omega1) {
  CoeffGrid<Real> d;
  int hx = b.max_x(), ht = b.max_t();
  if (!a.empty()) {
    d = cube_diagonal_field(a);
    hx = std::max(hx, d.max_x());
    ht = std::max(ht, d.max_t());
  }
  CoeffGrid<Real> r(hx, ht);
  for (int n = 1; n <= hx; ++n) {
    for (int j = 1; j <= ht; ++j) {
      Real val = Real(j * j - n * n) * b.at_or_zero(n, j) - d.at_or_zero(n, j);
      if (n == j) val += 2 * omega1 * n * n * a.harmonic_or_zero(n);
      r.at(n, j) = val;
    }
  }
  return r;
}

}  // namespace phi4sw
