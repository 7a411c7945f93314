#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace phimat {

using cplx = std::complex<double>;

/// Dense 2x2 complex matrix. Entry e_rc sits in row r, column c.
/// All operations assume finite entries; nothing here checks for NaN/Inf.
struct Mat2c {
  cplx e11{}, e12{}, e21{}, e22{};

  static constexpr Mat2c identity() { return {cplx{1.0}, cplx{}, cplx{}, cplx{1.0}}; }
  static constexpr Mat2c zero() { return {}; }

  bool operator==(const Mat2c&) const = default;
};

constexpr Mat2c operator+(const Mat2c& a, const Mat2c& b) {
  return {a.e11 + b.e11, a.e12 + b.e12, a.e21 + b.e21, a.e22 + b.e22};
}

constexpr Mat2c operator-(const Mat2c& a, const Mat2c& b) {
  return {a.e11 - b.e11, a.e12 - b.e12, a.e21 - b.e21, a.e22 - b.e22};
}

constexpr Mat2c operator*(const Mat2c& a, const Mat2c& b) {
  return {a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22,
          a.e21 * b.e11 + a.e22 * b.e21, a.e21 * b.e12 + a.e22 * b.e22};
}

constexpr Mat2c operator*(const cplx& s, const Mat2c& m) {
  return {s * m.e11, s * m.e12, s * m.e21, s * m.e22};
}

constexpr Mat2c operator*(const Mat2c& m, const cplx& s) { return s * m; }

constexpr cplx det(const Mat2c& m) { return m.e11 * m.e22 - m.e12 * m.e21; }

/// Largest entry modulus; the norm behind every tolerance in this library.
inline double max_abs(const Mat2c& m) {
  return std::max({std::abs(m.e11), std::abs(m.e12), std::abs(m.e21), std::abs(m.e22)});
}

/// Max entry modulus of a - b. Symmetric, zero exactly when a == b.
inline double max_abs_diff(const Mat2c& a, const Mat2c& b) { return max_abs(a - b); }

}  // namespace phimat
