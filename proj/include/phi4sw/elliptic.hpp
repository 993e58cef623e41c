#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "phi4sw/coeff_algebra.hpp"
#include "phi4sw/diagonal_seq.hpp"
#include "phi4sw/errors.hpp"
#include "phi4sw/real.hpp"

// Elliptic toolkit: complete integrals via the arithmetic-geometric mean,
// nome <-> modulus conversion through theta series, the Fourier coefficients
// of the elliptic cosine, and the transcendental equation that pins the nome
// of the resonance-free standing wave.

namespace phi4sw {

template <class Real>
struct EllipticParams {
  Real k;       // modulus, in (0,1)
  Real kprime;  // sqrt(1 - k^2)
  Real K;       // quarter period K(k)
  Real Kprime;  // K(k')
  Real q;       // nome exp(-pi K'/K)
  Real gamma;   // 2 pi / K
  Real alpha;   // 2 K / pi

  // Max absolute defect of the internal consistency relations
  // k^2 + k'^2 = 1, q = exp(-pi K'/K), alpha*gamma = 4.
  Real consistency_defect() const {
    using std::abs;
    using std::exp;
    const Real pi = pi_value<Real>();
    Real d = abs(k * k + kprime * kprime - 1);
    d = std::max(d, abs(q - exp(-pi * Kprime / K)));
    d = std::max(d, abs(alpha * gamma - 4));
    return d;
  }
};

// Complete elliptic integral of the first kind by AGM iteration:
// K(k) = pi / (2 * agm(1, k')).
template <class Real>
Real agm_elliptic_K(const Real& k) {
  using std::abs;
  using std::sqrt;
  if (!(k > 0 && k < 1)) throw DomainError("modulus must lie in (0,1)");
  Real a(1), b = sqrt(Real(1) - k * k);
  const Real eps = pow10<Real>(-static_cast<long>(working_precision()) - 2);
  while (abs(a - b) > eps * a) {
    const Real an = (a + b) / 2;
    b = sqrt(a * b);
    a = an;
  }
  return pi_value<Real>() / (2 * a);
}

template <class Real>
Real nome_from_modulus(const Real& k) {
  using std::exp;
  using std::sqrt;
  if (!(k > 0 && k < 1)) throw DomainError("modulus must lie in (0,1)");
  const Real kp = sqrt(Real(1) - k * k);
  return exp(-pi_value<Real>() * agm_elliptic_K(kp) / agm_elliptic_K(k));
}

// Inverse of the nome map via the theta-series ratio k = theta2^2 / theta3^2.
template <class Real>
Real modulus_from_nome(const Real& q) {
  using std::pow;
  if (!(q > 0 && q < 1)) throw DomainError("nome must lie in (0,1)");
  const Real eps = pow10<Real>(-static_cast<long>(working_precision()) - 4);
  Real theta2(0), theta3(1);
  Real qp(1);  // q^(n(n+1)) running product for theta2
  for (int n = 0;; ++n) {
    if (n > 0) qp *= pow(q, 2 * n);  // q^(n(n+1)) = q^((n-1)n) * q^(2n)
    theta2 += qp;
    const Real t3term = pow(q, (n + 1) * (n + 1));
    theta3 += 2 * t3term;
    if (qp < eps && t3term < eps) break;
    if (n > 100000) throw DomainError("theta series failed to converge");
  }
  using std::sqrt;
  theta2 *= 2 * sqrt(sqrt(q));
  const Real r = theta2 / theta3;
  return r * r;
}

template <class Real>
EllipticParams<Real> params_from_nome(const Real& q) {
  using std::sqrt;
  EllipticParams<Real> p;
  p.q = q;
  p.k = modulus_from_nome(q);
  p.kprime = sqrt(Real(1) - p.k * p.k);
  p.K = agm_elliptic_K(p.k);
  p.Kprime = agm_elliptic_K(p.kprime);
  const Real pi = pi_value<Real>();
  p.gamma = 2 * pi / p.K;
  p.alpha = 2 * p.K / pi;
  return p;
}

// f_{2n-1} = q^(n-1/2) / (1 + q^(2n-1)), the Fourier coefficients of the
// elliptic cosine up to the gamma/k prefactor. Entries are positive and
// strictly decreasing.
template <class Real>
DiagonalSeq<Real> f_sequence(const Real& q, std::size_t n_modes) {
  using std::pow;
  using std::sqrt;
  if (!(q > 0 && q < 1)) throw DomainError("nome must lie in (0,1)");
  if (n_modes < 1) throw DomainError("need at least one mode");
  DiagonalSeq<Real> f(n_modes);
  const Real sq = sqrt(q);
  Real qn(1);  // q^(n-1)
  for (std::size_t n = 1; n <= n_modes; ++n) {
    const Real num = qn * sq;  // q^(n-1/2)
    f.mode(n - 1) = num / (1 + num * num);
    qn *= q;
  }
  return f;
}

namespace detail {

// Series terms count so the dropped geometric tail sits below 10^-(digits+10).
template <class Real>
int nome_series_terms(const Real& q) {
  using std::log10;
  const long digits = static_cast<long>(working_precision());
  const Real lg = -log10(q);
  if (!(lg > 0)) throw DomainError("nome must lie in (0,1)");
  long n = static_cast<long>(static_cast<double>(Real((digits + 10) / lg))) + 2;
  return static_cast<int>(std::max(n, 8L));
}

}  // namespace detail

// Left-hand side of the nome equation
//
//   3 sum f_n^2 - (1/4 + sum q^n/(1+q^2n))^2 + 2 (sum f_n)^2 = 0,
//   f_n = q^(n-1/2)/(1+q^(2n-1)),
//
// whose root in (0,1) makes the elliptic-cosine coefficient sequence solve
// the diagonal resonance system.
template <class Real>
Real nome_equation_residual(const Real& q, int n_terms) {
  using std::sqrt;
  if (!(q > 0 && q < 1)) throw DomainError("nome must lie in (0,1)");
  Real sum_f(0), sum_f2(0), sum_t(0);
  const Real sq = sqrt(q);
  Real qn1(1);  // q^(n-1)
  Real qn(q);   // q^n
  for (int n = 1; n <= n_terms; ++n) {
    const Real num = qn1 * sq;  // q^(n-1/2)
    const Real f = num / (1 + num * num);
    sum_f += f;
    sum_f2 += f * f;
    sum_t += qn / (1 + qn * qn);
    qn1 *= q;
    qn *= q;
  }
  const Real b = Real(1) / 4 + sum_t;
  return 3 * sum_f2 - b * b + 2 * sum_f * sum_f;
}

namespace detail {

template <class Real>
Real nome_equation_derivative(const Real& q, int n_terms) {
  // term-by-term analytic derivative of the residual
  using std::pow;
  using std::sqrt;
  Real sum_f(0), sum_t(0), dsum_f(0), dsum_f2(0), dsum_t(0);
  for (int n = 1; n <= n_terms; ++n) {
    const Real e = Real(2 * n - 1) / 2;
    const Real u = pow(q, e);            // q^(n-1/2)
    const Real du = e * u / q;
    const Real v = 1 + u * u;            // 1 + q^(2n-1)
    const Real f = u / v;
    const Real df = du * (1 - u * u) / (v * v);
    sum_f += f;
    dsum_f += df;
    dsum_f2 += 2 * f * df;
    const Real w = pow(q, n);
    const Real dw = n * w / q;
    const Real z = 1 + w * w;
    sum_t += w / z;
    dsum_t += dw * (1 - w * w) / (z * z);
  }
  const Real b = Real(1) / 4 + sum_t;
  return 3 * dsum_f2 - 2 * b * dsum_t + 4 * sum_f * dsum_f;
}

}  // namespace detail

// Root of the nome equation on (0,1): log-spaced bracket scan, bisection,
// then Newton polish with the analytic derivative. Exactly one sign change
// is expected on the scan; zero or several raise BracketError.
template <class Real>
Real solve_nome(const Real& tolerance) {
  using std::abs;
  using std::pow;
  const long digits = static_cast<long>(working_precision());
  if (!(tolerance >= pow10<Real>(-(digits - 5))))
    throw DomainError("tolerance below what the working precision supports");

  const int scan_points = 64;
  const Real lo(Real(1) / 10000), hi(Real(9) / 10);
  Real qa(0), qb(0), ra(0);
  int changes = 0;
  Real prev_q = lo;
  Real prev_r = nome_equation_residual(lo, detail::nome_series_terms(lo));
  const Real ratio = pow(hi / lo, Real(1) / (scan_points - 1));
  Real x = lo;
  for (int i = 1; i < scan_points; ++i) {
    x *= ratio;
    const Real r = nome_equation_residual(x, detail::nome_series_terms(x));
    if ((prev_r < 0) != (r < 0)) {
      if (changes == 0) {
        qa = prev_q;
        qb = x;
        ra = prev_r;
      }
      ++changes;
    }
    prev_q = x;
    prev_r = r;
  }
  if (changes == 0) throw BracketError("no sign change of the nome equation on the scan grid");
  if (changes > 1) throw BracketError("multiple sign changes of the nome equation on the scan grid");

  // bisect to roughly half the requested accuracy
  Real a = qa, b = qb, fa = ra;
  const Real coarse = std::max(tolerance, pow10<Real>(-(digits / 2)));
  while (b - a > coarse * a) {
    const Real m = (a + b) / 2;
    const Real fm = nome_equation_residual(m, detail::nome_series_terms(m));
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }

  // Newton polish
  Real r = (a + b) / 2;
  const int terms = detail::nome_series_terms(r);
  for (int it = 0; it < 64; ++it) {
    const Real fr = nome_equation_residual(r, terms);
    const Real dr = detail::nome_equation_derivative(r, terms);
    const Real step = fr / dr;
    r -= step;
    if (abs(step) < tolerance / 4) break;
  }
  return r;
}

// Fourier-series evaluation of the elliptic cosine,
// cn(z,k) = (gamma/k) sum f_{2n-1} cos((2n-1) gamma z / 4).
// Truncation is chosen from the geometric decay of the coefficients.
template <class Real>
Real cn_series(const Real& z, const EllipticParams<Real>& p) {
  using std::cos;
  using std::log10;
  const long digits = static_cast<long>(working_precision());
  const Real lg = -log10(p.q);
  const int n_modes = static_cast<int>(static_cast<double>(Real((2 * (digits + 8)) / lg))) / 2 + 4;
  const auto f = f_sequence(p.q, static_cast<std::size_t>(n_modes));
  const Real step = p.gamma * z / 4;
  Real s(0);
  for (std::size_t n = 0; n < f.modes(); ++n)
    s += f.mode(n) * cos(Real(2 * static_cast<int>(n) + 1) * step);
  return p.gamma / p.k * s;
}

// Descending Landen (AGM) evaluation of the elliptic cosine; the independent
// second codepath used to cross-check the Fourier series.
template <class Real>
Real cn_agm(const Real& z, const Real& k) {
  using std::abs;
  using std::asin;
  using std::cos;
  using std::sin;
  using std::sqrt;
  if (!(k > 0 && k < 1)) throw DomainError("modulus must lie in (0,1)");
  const Real eps = pow10<Real>(-static_cast<long>(working_precision()) - 2);
  std::vector<Real> av, cv;
  Real a(1), b = sqrt(Real(1) - k * k), c = k;
  av.push_back(a);
  cv.push_back(c);
  while (abs(c) > eps * a) {
    const Real an = (a + b) / 2;
    c = (a - b) / 2;
    b = sqrt(a * b);
    a = an;
    av.push_back(a);
    cv.push_back(c);
  }
  const int n = static_cast<int>(av.size()) - 1;
  Real phi = av[static_cast<std::size_t>(n)] * z;
  for (int i = 0; i < n; ++i) phi *= 2;
  for (int i = n; i >= 1; --i) {
    // previous angle satisfies sin(2 phi_prev - phi) = (c_i/a_i) sin(phi);
    // the defect angle lies in (-pi/2, pi/2), so the principal branch applies
    Real s = cv[static_cast<std::size_t>(i)] / av[static_cast<std::size_t>(i)] * sin(phi);
    if (s > 1) s = Real(1);
    if (s < -1) s = Real(-1);
    phi = (phi + asin(s)) / 2;
  }
  return cos(phi);
}

// Max pointwise defect of the elliptic-cosine differential equation
// cn'' = (2k^2 - 1) cn - 2 k^2 cn^3, with cn'' from term-by-term
// differentiation of the Fourier series.
template <class Real>
Real verify_cn_ode(const EllipticParams<Real>& p, int sample_count, int n_modes = 0) {
  using std::abs;
  using std::cos;
  using std::log10;
  if (n_modes <= 0) {
    const long digits = static_cast<long>(working_precision());
    const Real lg = -log10(p.q);
    n_modes = static_cast<int>(static_cast<double>(Real((digits + 8) / lg))) + 4;
  }
  const auto f = f_sequence(p.q, static_cast<std::size_t>(n_modes));
  const Real k2 = p.k * p.k;
  Real worst(0);
  for (int s = 0; s < sample_count; ++s) {
    const Real z = 4 * p.K * s / sample_count;
    const Real step = p.gamma * z / 4;
    Real cn(0), cnpp(0);
    for (std::size_t n = 0; n < f.modes(); ++n) {
      const int m = 2 * static_cast<int>(n) + 1;
      const Real term = f.mode(n) * cos(m * step);
      cn += term;
      const Real w = m * p.gamma / 4;
      cnpp -= w * w * term;
    }
    cn *= p.gamma / p.k;
    cnpp *= p.gamma / p.k;
    const Real defect = abs(cnpp - (2 * k2 - 1) * cn + 2 * k2 * cn * cn * cn);
    if (defect > worst) worst = defect;
  }
  return worst;
}

// Max relative defect of the proportionality identity for the cubed series:
// the odd-cosine cube coefficients F_j of the f sequence must equal
// (2(2k^2-1)/gamma^2 + j^2/8) f_j. F is computed by convolution.
template <class Real>
Real verify_proportionality(const EllipticParams<Real>& p, int max_j, std::size_t n_modes) {
  using std::abs;
  const auto f = f_sequence(p.q, n_modes);
  const auto cube = cube_cosine_series(f.values());  // coefficients of (sum f cos)^3
  const Real base = 2 * (2 * p.k * p.k - 1) / (p.gamma * p.gamma);
  Real worst(0);
  for (int j = 1; j <= max_j; j += 2) {
    const Real fj = f.harmonic_or_zero(j);
    if (fj == 0) break;
    // cn^3 = (gamma/k)^3 g^3 and cn^3 = (gamma^3 / 4 k^3) sum F_j cos(...)
    const Real F = 4 * cube[static_cast<std::size_t>((j - 1) / 2)];
    const Real expected = (base + Real(j) * j / 8) * fj;
    const Real defect = abs(F - expected) / abs(expected);
    if (defect > worst) worst = defect;
  }
  return worst;
}

template <class Real>
struct ClosedFormParams {
  EllipticParams<Real> params;
  Real omega1_coeff;         // gamma^2 / (64 k^2): frequency shift per amplitude^2
  Real omega1_f_normalized;  // 1/256: the same shift when the amplitude is f1
  Real fsq_defect;           // sum f_n^2 - (1 - 2k^2)/(3 gamma^2)
};

// Solves the nome equation and assembles every derived parameter of the
// closed-form leading order.
template <class Real>
ClosedFormParams<Real> closed_form_params() {
  const long digits = static_cast<long>(working_precision());
  const Real tol = pow10<Real>(-(digits - 5));
  const Real q = solve_nome(tol);
  ClosedFormParams<Real> out;
  out.params = params_from_nome(q);
  const Real& k = out.params.k;
  const Real& gamma = out.params.gamma;
  out.omega1_coeff = gamma * gamma / (64 * k * k);
  out.omega1_f_normalized = Real(1) / 256;
  const auto f = f_sequence(q, static_cast<std::size_t>(detail::nome_series_terms(q)));
  Real s(0);
  for (const auto& v : f.values()) s += v * v;
  out.fsq_defect = s - (1 - 2 * k * k) / (3 * gamma * gamma);
  return out;
}

}  // namespace phi4sw
