#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "phi4sw/coeff_algebra.hpp"
#include "phi4sw/coeff_grid.hpp"
#include "phi4sw/diagonal_seq.hpp"
#include "phi4sw/elliptic.hpp"
#include "phi4sw/errors.hpp"
#include "phi4sw/real.hpp"

// Assembly of the standing-wave asymptotic solution: elliptic-cosine leading
// order, first and second corrections with zero diagonal gauge, the frequency
// expansion, and spectral verification against the original wave equation.

namespace phi4sw {

template <class Real>
struct AsymptoticSolution {
  Real amplitude;
  Real epsilon;
  Real omega1;  // frequency shift at first order: gamma^2/(64 k^2) * A^2
  Real omega2;  // second order: -omega1^2 / 2
  EllipticParams<Real> params;
  DiagonalSeq<Real> phi0;  // a_{2n-1} = 2 A gamma f_{2n-1} / k
  CoeffGrid<Real> phi1;    // b_nj = D_nj/(j^2-n^2) off-diagonal, zero diagonal
  CoeffGrid<Real> phi2;    // h_nj = H_nj/(j^2-n^2) off-diagonal, zero diagonal

  Real frequency() const { return 1 + omega1 * epsilon + omega2 * epsilon * epsilon; }
};

// Leading-order coefficients a_{2n-1} = 2 A gamma f_{2n-1} / k.
template <class Real>
DiagonalSeq<Real> build_phi0(const EllipticParams<Real>& p, const Real& amplitude,
                             std::size_t n_modes) {
  if (n_modes < 1) throw DomainError("need at least one mode");
  auto f = f_sequence(p.q, n_modes);
  return f.scaled(2 * amplitude * p.gamma / p.k);
}

namespace detail {

// Offending diagonal harmonics of a forcing grid, relative to rel_tol times
// the largest coefficient.
template <class Real>
std::vector<std::pair<int, int>> diagonal_offenders(const CoeffGrid<Real>& g, const Real& rel_tol) {
  using std::abs;
  const Real bound = rel_tol * g.max_abs();
  std::vector<std::pair<int, int>> bad;
  const int m = std::min(g.max_x(), g.max_t());
  for (int j = 1; j <= m; ++j)
    if (abs(g.at(j, j)) > bound) bad.emplace_back(j, j);
  return bad;
}

}  // namespace phi4sw::detail

// First correction: b_nj = D_nj / (j^2 - n^2) off the diagonal, zero on it.
// The diagonal of the forcing 2*omega1*phi0_tt + phi0^3 must vanish (that is
// exactly the condition the leading order was built to satisfy); any diagonal
// entry above rel_tol * max|D| raises ResonanceError naming the harmonics.
template <class Real>
CoeffGrid<Real> build_phi1(const DiagonalSeq<Real>& phi0, const Real& omega1,
                           const Real& rel_tol = pow10<Real>(-15)) {
  if (phi0.empty()) throw DomainError("empty leading order");
  auto d = cube_diagonal_field(phi0);
  // forcing diagonal: D_jj - 2*omega1*j^2*a_j
  const int m = std::min(d.max_x(), d.max_t());
  for (int j = 1; j <= m; ++j) d.at(j, j) -= 2 * omega1 * j * j * phi0.harmonic_or_zero(j);
  const auto bad = detail::diagonal_offenders(d, rel_tol);
  if (!bad.empty()) throw ResonanceError(bad);

  CoeffGrid<Real> b(d.max_x(), d.max_t());
  for (int n = 1; n <= d.max_x(); ++n)
    for (int j = 1; j <= d.max_t(); ++j)
      if (n != j) b.at(n, j) = d.at(n, j) / Real(j * j - n * n);
  return b;
}

// Second correction. H = 2*omega1 * phi1_tt + 3*phi1*phi0^2 must have a
// vanishing diagonal once phi1 carries the zero-diagonal gauge; then
// h_nj = H_nj / (j^2 - n^2) and omega2 = -omega1^2/2 removes the secular
// diagonal forcing of the leading order.
template <class Real>
std::pair<CoeffGrid<Real>, Real> build_phi2(const DiagonalSeq<Real>& phi0,
                                            const CoeffGrid<Real>& phi1, const Real& omega1,
                                            const Real& rel_tol = pow10<Real>(-15)) {
  auto h = product_coscos_sinsin(square_diagonal_field(phi0), phi1);  // phi0^2 * phi1
  for (int n = 1; n <= h.max_x(); ++n)
    for (int j = 1; j <= h.max_t(); ++j) {
      Real v = 3 * h.at(n, j) - 2 * omega1 * j * j * phi1.at_or_zero(n, j);
      h.at(n, j) = v;
    }
  const auto bad = detail::diagonal_offenders(h, rel_tol);
  if (!bad.empty()) throw ResonanceError(bad);

  CoeffGrid<Real> out(h.max_x(), h.max_t());
  for (int n = 1; n <= h.max_x(); ++n)
    for (int j = 1; j <= h.max_t(); ++j)
      if (n != j) out.at(n, j) = h.at(n, j) / Real(j * j - n * n);
  const Real omega2 = -omega1 * omega1 / 2;
  return {std::move(out), omega2};
}

template <class Real>
Real frequency(const EllipticParams<Real>& p, const Real& amplitude, const Real& epsilon) {
  const Real om1 = p.gamma * p.gamma / (64 * p.k * p.k) * amplitude * amplitude;
  return 1 + om1 * epsilon - om1 * om1 / 2 * epsilon * epsilon;
}

// Full solution at a given amplitude and expansion parameter. n_modes counts
// the odd harmonics of the leading order; the corrections carry the exact
// (unaliased) truncations 3(2N-1) and 5(2N-1).
template <class Real>
AsymptoticSolution<Real> build_solution(const EllipticParams<Real>& p, const Real& amplitude,
                                        const Real& epsilon, std::size_t n_modes = 20) {
  AsymptoticSolution<Real> sol;
  sol.amplitude = amplitude;
  sol.epsilon = epsilon;
  sol.params = p;
  sol.omega1 = p.gamma * p.gamma / (64 * p.k * p.k) * amplitude * amplitude;
  sol.omega2 = -sol.omega1 * sol.omega1 / 2;
  sol.phi0 = build_phi0(p, amplitude, n_modes);
  if (amplitude == 0) {
    const int h = sol.phi0.max_harmonic();
    sol.phi1 = CoeffGrid<Real>(3 * h, 3 * h);
    sol.phi2 = CoeffGrid<Real>(5 * h, 5 * h);
    return sol;
  }
  sol.phi1 = build_phi1(sol.phi0, sol.omega1);
  auto [phi2, om2] = build_phi2(sol.phi0, sol.phi1, sol.omega1);
  sol.phi2 = std::move(phi2);
  sol.omega2 = om2;
  return sol;
}

namespace detail {

// phi0 + eps*phi1 + eps^2*phi2 as one grid on the phi2 extent.
template <class Real>
CoeffGrid<Real> combined_grid(const AsymptoticSolution<Real>& sol) {
  const int hx = std::max(sol.phi2.max_x(), std::max(sol.phi1.max_x(), sol.phi0.max_harmonic()));
  const int ht = std::max(sol.phi2.max_t(), std::max(sol.phi1.max_t(), sol.phi0.max_harmonic()));
  CoeffGrid<Real> c(hx, ht);
  for (std::size_t i = 0; i < sol.phi0.modes(); ++i) {
    const int j = 2 * static_cast<int>(i) + 1;
    c.at(j, j) += sol.phi0.mode(i);
  }
  const Real e = sol.epsilon;
  for (int n = 1; n <= sol.phi1.max_x(); ++n)
    for (int j = 1; j <= sol.phi1.max_t(); ++j)
      if (sol.phi1.at(n, j) != 0) c.at(n, j) += e * sol.phi1.at(n, j);
  for (int n = 1; n <= sol.phi2.max_x(); ++n)
    for (int j = 1; j <= sol.phi2.max_t(); ++j)
      if (sol.phi2.at(n, j) != 0) c.at(n, j) += e * e * sol.phi2.at(n, j);
  return c;
}

// Values of a sine-sine grid on the uniform lattice x_i = 2 pi i / g,
// t_l = 2 pi l / g, by separable partial summation.
template <class Real>
std::vector<std::vector<Real>> lattice_values(const CoeffGrid<Real>& c, int g) {
  using std::sin;
  const int hmax = std::max(c.max_x(), c.max_t());
  const Real two_pi = 2 * pi_value<Real>();
  // sin_tab[m][i] = sin(m * 2 pi i / g), m = 1..hmax
  std::vector<std::vector<Real>> sin_tab(static_cast<std::size_t>(hmax) + 1,
                                         std::vector<Real>(static_cast<std::size_t>(g)));
  for (int m = 1; m <= hmax; ++m)
    for (int i = 0; i < g; ++i)
      sin_tab[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)] =
          sin(two_pi * m * i / g);

  // partial[n][l] = sum_j C(n,j) sin(j t_l)
  std::vector<std::vector<Real>> partial(static_cast<std::size_t>(c.max_x()) + 1,
                                         std::vector<Real>(static_cast<std::size_t>(g), Real(0)));
  for (int n = 1; n <= c.max_x(); ++n)
    for (int j = 1; j <= c.max_t(); ++j) {
      const Real& v = c.at(n, j);
      if (v == 0) continue;
      auto& row = partial[static_cast<std::size_t>(n)];
      const auto& st = sin_tab[static_cast<std::size_t>(j)];
      for (int l = 0; l < g; ++l) row[static_cast<std::size_t>(l)] += v * st[static_cast<std::size_t>(l)];
    }

  std::vector<std::vector<Real>> field(static_cast<std::size_t>(g),
                                       std::vector<Real>(static_cast<std::size_t>(g), Real(0)));
  for (int n = 1; n <= c.max_x(); ++n) {
    const auto& row = partial[static_cast<std::size_t>(n)];
    bool live = false;
    for (int l = 0; l < g && !live; ++l) live = (row[static_cast<std::size_t>(l)] != 0);
    if (!live) continue;
    const auto& sx = sin_tab[static_cast<std::size_t>(n)];
    for (int i = 0; i < g; ++i) {
      const Real& s = sx[static_cast<std::size_t>(i)];
      auto& frow = field[static_cast<std::size_t>(i)];
      for (int l = 0; l < g; ++l) frow[static_cast<std::size_t>(l)] += s * row[static_cast<std::size_t>(l)];
    }
  }
  return field;
}

}  // namespace phi4sw::detail

// Field value phi0 + eps*phi1 + eps^2*phi2 at (x, t), with the scaled time
// t~ = omega(eps) * t, by direct trigonometric summation.
template <class Real>
Real evaluate_field(const AsymptoticSolution<Real>& sol, const Real& x, const Real& t) {
  using std::sin;
  const Real tt = sol.frequency() * t;
  Real v(0);
  for (std::size_t i = 0; i < sol.phi0.modes(); ++i) {
    const int j = 2 * static_cast<int>(i) + 1;
    v += sol.phi0.mode(i) * sin(j * x) * sin(j * tt);
  }
  const auto sum_grid = [&](const CoeffGrid<Real>& g) {
    Real s(0);
    for (int n = 1; n <= g.max_x(); ++n) {
      Real inner(0);
      bool live = false;
      for (int j = 1; j <= g.max_t(); ++j) {
        const Real& cv = g.at(n, j);
        if (cv == 0) continue;
        live = true;
        inner += cv * sin(j * tt);
      }
      if (live) s += inner * sin(n * x);
    }
    return s;
  };
  v += sol.epsilon * sum_grid(sol.phi1);
  v += sol.epsilon * sol.epsilon * sum_grid(sol.phi2);
  return v;
}

// Sup-norm of the wave-equation residual phi_xx - phi_tt - eps*phi^3 on a
// uniform lattice, one entry per requested eps. Derivatives come from exact
// term-by-term differentiation of the series; the cubic term is evaluated
// pointwise. The solution's own eps is ignored in favor of the given list.
template <class Real>
std::vector<Real> pde_residual_scan(const AsymptoticSolution<Real>& sol,
                                    const std::vector<Real>& epsilons, int grid_size) {
  using std::abs;
  if (grid_size < 64) throw DomainError("scan grid must have at least 64 points per axis");
  std::vector<Real> out;
  out.reserve(epsilons.size());
  AsymptoticSolution<Real> work = sol;
  for (const auto& eps : epsilons) {
    work.epsilon = eps;
    const Real om = work.frequency();
    const auto c = detail::combined_grid(work);
    // phi_xx - phi_tt = sum (om^2 j^2 - n^2) C_nj sin sin  on the scaled time lattice
    CoeffGrid<Real> lgrid(c.max_x(), c.max_t());
    for (int n = 1; n <= c.max_x(); ++n)
      for (int j = 1; j <= c.max_t(); ++j)
        if (c.at(n, j) != 0) lgrid.at(n, j) = (om * om * j * j - Real(n) * n) * c.at(n, j);
    const auto f = detail::lattice_values(c, grid_size);
    const auto lf = detail::lattice_values(lgrid, grid_size);
    Real sup(0);
    for (int i = 0; i < grid_size; ++i)
      for (int l = 0; l < grid_size; ++l) {
        const Real& phi = f[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
        const Real r =
            lf[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] - eps * phi * phi * phi;
        if (abs(r) > sup) sup = abs(r);
      }
    out.push_back(sup);
  }
  return out;
}

}  // namespace phi4sw
