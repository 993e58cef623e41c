#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "phi4sw/coeff_algebra.hpp"
#include "phi4sw/diagonal_seq.hpp"
#include "phi4sw/errors.hpp"
#include "phi4sw/real.hpp"

// Iterative solution of the N leading equations of the diagonal resonance
// system: successive single-variable cubic solves with real-root selection
// and a convergence sweep over the previously solved equations.

namespace phi4sw {

enum class RootPick {
  SmallestAbs,  // among real roots with |x| < 1, take the smallest in magnitude
  FirstFound,   // take the first qualifying root in the solver's enumeration order
};

template <class Real>
struct SolveReport {
  int n = 0;
  Real delta;
  RootPick root_pick = RootPick::SmallestAbs;
  DiagonalSeq<Real> c;          // c1 = 1, modes up to harmonic 2N-1
  Real c_omega;                 // frequency-shift coefficient: omega1 = c_omega * a1^2
  std::vector<Real> residuals;  // equations k = 1..3N (harmonic 2k-1)
  int sweeps = 0;               // re-solve sweep passes executed
  bool converged = false;

  Real max_solved_residual() const { return max_over(1, n); }
  Real max_tail_residual() const { return max_over(n + 1, 3 * n); }

 private:
  Real max_over(int k_lo, int k_hi) const {
    using std::abs;
    Real m(0);
    for (int k = k_lo; k <= k_hi && k <= static_cast<int>(residuals.size()); ++k)
      if (abs(residuals[static_cast<std::size_t>(k - 1)]) > m)
        m = abs(residuals[static_cast<std::size_t>(k - 1)]);
    return m;
  }
};

// The unique c_omega that zeroes the first diagonal equation. The equation is
// affine in c_omega with slope -32, so this is an exact one-step elimination:
// R_11 = 16*D_11 - 32*c_omega = 0.
template <class Real>
Real eliminate_comega(const DiagonalSeq<Real>& c) {
  if (c.empty()) throw DomainError("empty coefficient sequence");
  if (!(c.mode(0) == 1)) throw DomainError("c_omega elimination requires c1 = 1");
  const auto d = cube_diagonal_field(c);
  return d.at(1, 1) / 2;
}

namespace detail {

// All real roots of c0 + c1 x + c2 x^2 + c3 x^3, discriminant-classified and
// evaluated in the working precision, each polished by one Newton step.
template <class Real>
std::vector<Real> real_roots_cubic(const std::array<Real, 4>& c) {
  using std::abs;
  using std::acos;
  using std::cos;
  using std::sqrt;
  using boost::multiprecision::cbrt;
  using std::cbrt;

  Real scale(0);
  for (const auto& v : c)
    if (abs(v) > scale) scale = abs(v);
  if (scale == 0) throw DomainError("zero polynomial");
  const Real tiny = scale * pow10<Real>(-static_cast<long>(working_precision()) + 6);

  std::vector<Real> roots;
  if (abs(c[3]) <= tiny) {
    if (abs(c[2]) <= tiny) {
      if (abs(c[1]) <= tiny) throw DomainError("constant polynomial");
      roots.push_back(-c[0] / c[1]);
    } else {
      const Real disc = c[1] * c[1] - 4 * c[2] * c[0];
      if (disc >= 0) {
        const Real sd = sqrt(disc);
        // stable quadratic roots
        const Real t = (c[1] >= 0) ? (-c[1] - sd) / 2 : (-c[1] + sd) / 2;
        roots.push_back(t / c[2]);
        if (t != 0) roots.push_back(c[0] / t);
      }
    }
  } else {
    const Real B = c[2] / c[3], C = c[1] / c[3], D = c[0] / c[3];
    const Real p = C - B * B / 3;
    const Real qq = 2 * B * B * B / 27 - B * C / 3 + D;
    const Real shift = -B / 3;
    const Real disc = -4 * p * p * p - 27 * qq * qq;
    if (disc > 0) {
      // three real roots, trigonometric form
      const Real m = 2 * sqrt(-p / 3);
      Real arg = 3 * qq / (p * m);
      if (arg > 1) arg = Real(1);
      if (arg < -1) arg = Real(-1);
      const Real theta = acos(arg) / 3;
      const Real two_pi_3 = 2 * pi_value<Real>() / 3;
      for (int i = 0; i < 3; ++i) roots.push_back(m * cos(theta - i * two_pi_3) + shift);
    } else {
      // one real root, Cardano with the stable companion product
      const Real sd = sqrt(qq * qq / 4 + p * p * p / 27);
      const Real w = (qq >= 0) ? -qq / 2 - sd : -qq / 2 + sd;
      const Real u = cbrt(w);
      const Real t = (u == 0) ? Real(0) : u - p / (3 * u);
      roots.push_back(t + shift);
    }
  }

  // one Newton polish step on the original polynomial
  for (auto& x : roots) {
    const Real fx = c[0] + x * (c[1] + x * (c[2] + x * c[3]));
    const Real dfx = c[1] + x * (2 * c[2] + x * 3 * c[3]);
    if (dfx != 0) x -= fx / dfx;
  }
  return roots;
}

}  // namespace detail

// Real root with |x| < 1 (strict) of a cubic or lower-degree polynomial.
// With several qualifying roots, SmallestAbs picks the one of least
// magnitude; FirstFound takes the solver's enumeration order.
template <class Real>
Real solve_cubic_real_unit(const std::array<Real, 4>& coeffs, RootPick pick = RootPick::SmallestAbs,
                           int equation_index = 0) {
  using std::abs;
  const auto roots = detail::real_roots_cubic(coeffs);
  bool found = false;
  Real best(0);
  for (const auto& r : roots) {
    if (!(abs(r) < 1)) continue;
    if (!found) {
      best = r;
      found = true;
      if (pick == RootPick::FirstFound) break;
    } else if (pick == RootPick::SmallestAbs && abs(r) < abs(best)) {
      best = r;
    }
  }
  if (!found) throw NoQualifyingRoot("no real root with modulus below one", equation_index);
  return best;
}

namespace detail {

// Exact cubic through the four nodes x = 0, 1, -1, 2. Evaluations of the
// diagonal residual as one coefficient varies are cubic polynomials, so this
// recovers them without symbolic expansion.
template <class Real, class Eval>
std::array<Real, 4> interpolate_cubic(Eval&& eval) {
  const Real g0 = eval(Real(0));
  const Real g1 = eval(Real(1));
  const Real gm1 = eval(Real(-1));
  const Real g2 = eval(Real(2));
  std::array<Real, 4> c;
  c[2] = (g1 + gm1) / 2 - g0;
  const Real bd = (g1 - gm1) / 2;  // b + d
  c[3] = ((g2 - g0 - 4 * c[2]) / 2 - bd) / 3;
  c[1] = bd - c[3];
  c[0] = g0;
  return c;
}

// Residual of equation k (harmonic 2k-1) for the current coefficients:
// 16*(D_jj - 2*c_omega*j^2*c_j) with j = 2k-1.
template <class Real>
Real equation_residual(const DiagonalSeq<Real>& c, const Real& c_omega, int k) {
  const auto d = cube_diagonal_field(c);
  const int j = 2 * k - 1;
  return 16 * (d.at_or_zero(j, j) - 2 * c_omega * j * j * c.harmonic_or_zero(j));
}

}  // namespace detail

// Replicates the successive-elimination algorithm: for k = 2..N, free
// c_{2k-1}, express c_omega from the first equation, solve equation k as a
// cubic in c_{2k-1}, then sweep the previously solved equations re-solving
// any whose residual exceeds delta (with c_omega held at its refreshed
// numeric value) until a clean pass.
template <class Real>
SolveReport<Real> galerkin_solve(int n, const Real& delta, RootPick pick = RootPick::SmallestAbs,
                                 int max_sweeps = 100) {
  using std::abs;
  if (n < 2 || n > 50) throw ConfigError("truncation must satisfy 2 <= N <= 50");
  if (!(delta > 0)) throw ConfigError("delta must be positive");

  SolveReport<Real> rep;
  rep.n = n;
  rep.delta = delta;
  rep.root_pick = pick;

  DiagonalSeq<Real> c(static_cast<std::size_t>(n));
  c.mode(0) = Real(1);
  int total_sweeps = 0;

  for (int k = 2; k <= n; ++k) {
    // initial solve: c_omega eliminated as a function of the free coefficient
    const auto cubic = detail::interpolate_cubic<Real>([&](const Real& x) {
      c.mode(static_cast<std::size_t>(k - 1)) = x;
      const auto d = cube_diagonal_field(c);
      const Real cw = d.at(1, 1) / 2;  // zero of the first equation
      const int j = 2 * k - 1;
      return 16 * (d.at_or_zero(j, j) - 2 * cw * j * j * x);
    });
    c.mode(static_cast<std::size_t>(k - 1)) = solve_cubic_real_unit(cubic, pick, k);

    // sweep previously solved equations until a clean pass
    bool clean = false;
    int sweeps_here = 0;
    while (!clean) {
      if (++sweeps_here > max_sweeps) throw NonConvergence("sweep cap exceeded");
      ++total_sweeps;
      clean = true;
      const Real cw = eliminate_comega(c);
      for (int j = 2; j <= k; ++j) {
        if (abs(detail::equation_residual(c, cw, j)) > delta) {
          clean = false;
          const auto fix = detail::interpolate_cubic<Real>([&](const Real& x) {
            c.mode(static_cast<std::size_t>(j - 1)) = x;
            return detail::equation_residual(c, cw, j);
          });
          c.mode(static_cast<std::size_t>(j - 1)) = solve_cubic_real_unit(fix, pick, j);
        }
      }
    }
  }

  rep.c = c;
  rep.c_omega = eliminate_comega(c);
  rep.residuals = diagonal_residuals(c, rep.c_omega).values();
  rep.sweeps = total_sweeps;
  rep.converged = rep.max_solved_residual() < delta;
  return rep;
}

template <class Real>
struct SufficiencyScan {
  int minimal_n = 0;  // 0 when no N up to N_max passes
  std::vector<std::pair<int, Real>> tail_maxima;
};

// Smallest truncation N whose unsolved-tail residuals all pass delta, with
// the per-N tail maxima recorded for every N scanned.
template <class Real>
SufficiencyScan<Real> sufficiency_scan(int n_max, const Real& delta,
                                       RootPick pick = RootPick::SmallestAbs) {
  if (n_max < 2) throw ConfigError("scan needs N_max >= 2");
  SufficiencyScan<Real> out;
  for (int n = 2; n <= n_max; ++n) {
    const auto rep = galerkin_solve(n, delta, pick);
    const Real tail = rep.max_tail_residual();
    out.tail_maxima.emplace_back(n, tail);
    if (out.minimal_n == 0 && rep.converged && tail < delta) out.minimal_n = n;
  }
  return out;
}

}  // namespace phi4sw
