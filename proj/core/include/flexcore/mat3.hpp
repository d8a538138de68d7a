#pragma once

#include <array>

#include "flexcore/errors.hpp"
#include "flexcore/scalar.hpp"

namespace flexcore {

template <typename T>
using Mat3 = std::array<std::array<T, 3>, 3>;

/// Cofactor expansion along the first row. Works over any commutative
/// ring type with +, - and *.
template <typename T>
T det3(const Mat3<T>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline Mat3<Scalar> mat3_identity() {
  return {{{Scalar(1), Scalar(0), Scalar(0)},
           {Scalar(0), Scalar(1), Scalar(0)},
           {Scalar(0), Scalar(0), Scalar(1)}}};
}

inline Mat3<Scalar> mat3_mul(const Mat3<Scalar>& a, const Mat3<Scalar>& b) {
  Mat3<Scalar> out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return out;
}

inline std::array<Scalar, 3> mat3_apply(const Mat3<Scalar>& a,
                                        const std::array<Scalar, 3>& v) {
  return {a[0][0] * v[0] + a[0][1] * v[1] + a[0][2] * v[2],
          a[1][0] * v[0] + a[1][1] * v[1] + a[1][2] * v[2],
          a[2][0] * v[0] + a[2][1] * v[1] + a[2][2] * v[2]};
}

/// Exact inverse via the adjugate; throws SingularMatrixError when the
/// determinant vanishes.
inline Mat3<Scalar> mat3_inverse(const Mat3<Scalar>& m) {
  const Scalar d = det3(m);
  if (d.is_zero()) throw SingularMatrixError("3x3 matrix is singular");
  auto cof = [&](int i, int j) {
    const int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
    const int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
    return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
  };
  Mat3<Scalar> inv{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) inv[j][i] = cof(i, j) / d;  // adjugate transpose
  return inv;
}

}  // namespace flexcore
