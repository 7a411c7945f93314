#pragma once

#include <cmath>
#include <cstdint>

#include "errors.hpp"
#include "mat2.hpp"

namespace phimat {

/// The imaginary unit matrix [[0, j], [j a^2, 0]]. Squares to -alpha^2 I,
/// which is what lets it play the role of j in the structured algebra.
/// At alpha = 1 it equals j * sigma1.
inline Mat2c phi(double alpha) {
  if (alpha == 0.0) throw zero_alpha{};
  return {cplx{}, cplx{0.0, 1.0}, cplx{0.0, alpha * alpha}, cplx{}};
}

/// The real companion -j * phi(alpha) = [[0, 1], [alpha^2, 0]].
/// At alpha = 1 this is the Pauli matrix sigma1.
inline Mat2c psi(double alpha) {
  if (alpha == 0.0) throw zero_alpha{};
  return {cplx{}, cplx{1.0}, cplx{alpha * alpha}, cplx{}};
}

/// Structured matrix a I + b phi(alpha), stored as its (a, b, alpha) triple.
/// For a fixed alpha the class is closed and commutative under multiplication,
/// mirroring the complex numbers a + j b. alpha is a class parameter, not a
/// measured quantity: products require bitwise-equal alphas.
class TMatrix {
public:
  TMatrix(double a, double b, double alpha) : a_(a), b_(b), alpha_(alpha) {
    if (alpha == 0.0) throw zero_alpha{};
  }

  double a() const { return a_; }
  double b() const { return b_; }
  double alpha() const { return alpha_; }

  /// a^2 + alpha^2 b^2. Nonnegative; zero only at a = b = 0.
  double det() const { return a_ * a_ + (alpha_ * alpha_) * (b_ * b_); }

  /// The dense form [[a, j b], [j alpha^2 b, a]].
  Mat2c dense() const {
    return {cplx{a_}, cplx{0.0, b_}, cplx{0.0, (alpha_ * alpha_) * b_}, cplx{a_}};
  }

  /// (a I - b phi) / det. Throws singular_matrix when det vanishes.
  TMatrix inverse() const {
    const double d = det();
    if (d == 0.0) throw singular_matrix{};
    if (!std::isfinite(d)) throw overflow{"determinant overflows double precision"};
    return {a_ / d, -b_ / d, alpha_};
  }

  bool operator==(const TMatrix&) const = default;

  friend TMatrix operator*(const TMatrix& lhs, const TMatrix& rhs) {
    if (lhs.alpha_ != rhs.alpha_) throw alpha_mismatch{};
    const double a2 = lhs.alpha_ * lhs.alpha_;
    // (a1 a2 - alpha^2 b1 b2, a1 b2 + a2 b1): both components are symmetric
    // in the operands, so the product commutes bitwise.
    return {lhs.a_ * rhs.a_ - a2 * (lhs.b_ * rhs.b_),
            lhs.a_ * rhs.b_ + rhs.a_ * lhs.b_, lhs.alpha_};
  }

private:
  double a_, b_, alpha_;
};

/// n-th power of psi(alpha) by the parity rule: alpha^n I for even n,
/// alpha^(n-1) psi(alpha) for odd n. One scalar pow replaces n matrix
/// products. Throws overflow instead of returning non-finite entries.
inline Mat2c psi_pow(double alpha, std::uint64_t n) {
  if (alpha == 0.0) throw zero_alpha{};
  const bool odd = (n % 2 != 0);
  const double lead = std::pow(alpha, static_cast<double>(odd ? n - 1 : n));
  if (odd) {
    const double lower = lead * (alpha * alpha);  // alpha^(n+1)
    if (!std::isfinite(lead) || !std::isfinite(lower))
      throw overflow{"alpha^n overflows double precision"};
    return {cplx{}, cplx{lead}, cplx{lower}, cplx{}};
  }
  if (!std::isfinite(lead)) throw overflow{"alpha^n overflows double precision"};
  return {cplx{lead}, cplx{}, cplx{}, cplx{lead}};
}

/// Reference route for psi_pow: n explicit matrix products, no shortcuts.
inline Mat2c psi_pow_naive(double alpha, std::uint64_t n) {
  if (alpha == 0.0) throw zero_alpha{};
  const Mat2c p = psi(alpha);
  Mat2c acc = Mat2c::identity();
  for (std::uint64_t i = 0; i < n; ++i) acc = acc * p;
  return acc;
}

}  // namespace phimat
