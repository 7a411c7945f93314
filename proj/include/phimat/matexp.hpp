#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "errors.hpp"
#include "mat2.hpp"
#include "tclass.hpp"

namespace phimat {

/// Truncation controls for exp_series. The series stops once the latest
/// term's max entry modulus falls below tol (absolute; the scaled matrix has
/// norm <= 1, so 1e-15 sits below double resolution of O(1) entries).
struct SeriesConfig {
  double tol = 1e-15;
  int max_terms = 100;
};

/// Matrix exponential by truncated Taylor series with scaling and squaring:
/// the input is scaled by 2^-s so its max entry modulus is <= 1, summed, and
/// the partial sum squared s times. Plain Taylor loses accuracy once the norm
/// is much larger than 1, hence the scaling. This is the generic engine every
/// closed-form path in this library is measured against.
inline Mat2c exp_series(const Mat2c& m, const SeriesConfig& cfg = {}) {
  int s = 0;
  const double norm = max_abs(m);
  if (norm > 1.0) s = static_cast<int>(std::ceil(std::log2(norm)));
  const Mat2c scaled = cplx{std::ldexp(1.0, -s)} * m;  // exact: power-of-two scale

  Mat2c term = Mat2c::identity();
  Mat2c sum = term;
  bool converged = max_abs(term) < cfg.tol;
  for (int n = 1; n < cfg.max_terms && !converged; ++n) {
    term = term * scaled * cplx{1.0 / n};
    sum = sum + term;
    converged = max_abs(term) < cfg.tol;
  }
  if (!converged) throw no_convergence{cfg.max_terms};

  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

/// Closed form of exp(angle * phi(alpha)):
///   cos(alpha angle) I + sin(alpha angle)/alpha * phi(alpha)
/// written out densely as [[cos, j sin/alpha], [j alpha sin, cos]].
/// cos/sin are applied to alpha*angle directly, with no argument reduction;
/// accuracy degrades for |alpha*angle| beyond ~1e8.
inline Mat2c exp_phi(double alpha, double angle) {
  if (alpha == 0.0) throw zero_alpha{};
  const double c = std::cos(alpha * angle);
  const double s = std::sin(alpha * angle);
  return {cplx{c}, cplx{0.0, s / alpha}, cplx{0.0, alpha * s}, cplx{c}};
}

/// Exponential of a full structured matrix. a I commutes with b phi, so
/// exp(T) = exp(a) * exp(b phi). Throws overflow when exp(a) is not finite.
inline Mat2c exp_t(const TMatrix& t) {
  const double scale = std::exp(t.a());
  if (!std::isfinite(scale)) throw overflow{"exp(a) overflows double precision"};
  return cplx{scale} * exp_phi(t.alpha(), t.b());
}

/// The classical Euler identity, exp(j angle) = cos(angle) + j sin(angle).
/// This is the 1x1 specialization the matrix form must stay compatible with.
inline cplx classic_euler(double angle) { return {std::cos(angle), std::sin(angle)}; }

///// Pauli sigma1 through the exponential: -j * exp(m pi/2 * phi(1)) with
/// m = 1 + 4k. Exact in exact arithmetic; in doubles the deviation grows
/// roughly with |m| because m pi/2 is inexact.
inline Mat2c sigma1_via_exp(std::int64_t k) {
  const double m = static_cast<double>(1 + 4 * k);
  return cplx{0.0, -1.0} * exp_phi(1.0, m * (std::numbers::pi / 2.0));
}

/// Deviations measured by run_identity_suite, together with the samples that
/// produced them. note1/note3/note4/pauli are pinned to alpha = 1, where
/// those identities live; note2 uses the alpha the suite ran at.
struct IdentityReport {
  double note1_dev = 0.0;  // classical Euler parts vs exp_phi(1, .) entries
  double note2_dev = 0.0;  // |det(exp_phi(alpha, .)) - 1|
  double note3_dev = 0.0;  // exp_phi(1, 2 m pi) vs I
  double note4_dev = 0.0;  // exp_phi(1, (1+4k) pi/2) vs phi(1)
  double pauli_dev = 0.0;  // sigma1_via_exp(k) vs [[0,1],[1,0]]
  double alpha = 1.0;
  std::vector<double> phi_samples;
  std::vector<std::int64_t> m_samples;
  std::vector<std::int64_t> k_samples;
};

inline IdentityReport run_identity_suite(double alpha, std::span<const double> phi_samples,
                                         std::span<const std::int64_t> m_samples,
                                         std::span<const std::int64_t> k_samples) {
  if (alpha == 0.0) throw zero_alpha{};
  constexpr double pi = std::numbers::pi;

  IdentityReport rep;
  rep.alpha = alpha;
  rep.phi_samples.assign(phi_samples.begin(), phi_samples.end());
  rep.m_samples.assign(m_samples.begin(), m_samples.end());
  rep.k_samples.assign(k_samples.begin(), k_samples.end());

  for (double ph : phi_samples) {
    const cplx z = classic_euler(ph);
    const Mat2c e1 = exp_phi(1.0, ph);
    const cplx sin_part = cplx{0.0, -1.0} * e1.e12;  // off-diagonal carries j sin
    rep.note1_dev = std::max({rep.note1_dev, std::abs(cplx{z.real()} - e1.e11),
                              std::abs(cplx{z.imag()} - sin_part)});
    rep.note2_dev = std::max(rep.note2_dev, std::abs(det(exp_phi(alpha, ph)) - 1.0));
  }
  for (std::int64_t m : m_samples) {
    const Mat2c e = exp_phi(1.0, 2.0 * static_cast<double>(m) * pi);
    rep.note3_dev = std::max(rep.note3_dev, max_abs_diff(e, Mat2c::identity()));
  }
  for (std::int64_t k : k_samples) {
    const double m = static_cast<double>(1 + 4 * k);
    const Mat2c e = exp_phi(1.0, m * (pi / 2.0));
    rep.note4_dev = std::max(rep.note4_dev, max_abs_diff(e, phi(1.0)));
    rep.pauli_dev = std::max(rep.pauli_dev, max_abs_diff(sigma1_via_exp(k), psi(1.0)));
  }
  return rep;
}

}  // namespace phimat
