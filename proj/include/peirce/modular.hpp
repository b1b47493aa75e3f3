#pragma once

#include <cstdint>
#include <numeric>

#include <Eigen/Core>

namespace peirce {

using Scalar = std::int64_t;

/// Coefficient vector of an element over Z_k.
using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using RowCoeffs = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;
using CoeffMatrix =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Least non-negative residue of a modulo k.
constexpr Scalar mod(Scalar a, Scalar k) {
  Scalar r = a % k;
  return r < 0 ? r + k : r;
}

/// Reduces every coefficient of an Eigen expression into [0, k).
template <typename Derived>
auto reduced(const Eigen::MatrixBase<Derived>& m, Scalar k) {
  return m.unaryExpr([k](Scalar a) { return mod(a, k); }).eval();
}

template <typename Derived>
void reduce_in_place(Eigen::MatrixBase<Derived>& m, Scalar k) {
  m = m.unaryExpr([k](Scalar a) { return mod(a, k); });
}

struct Bezout {
  Scalar gcd;
  Scalar u;
  Scalar v;
};

/// u*a + v*b == gcd(a, b), for non-negative a, b.
constexpr Bezout extended_gcd(Scalar a, Scalar b) {
  Scalar old_r = a, r = b;
  Scalar old_u = 1, u = 0;
  Scalar old_v = 0, v = 1;
  while (r != 0) {
    const Scalar q = old_r / r;
    Scalar t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_u - q * u;
    old_u = u;
    u = t;
    t = old_v - q * v;
    old_v = v;
    v = t;
  }
  return {old_r, old_u, old_v};
}

/// A unit u of Z_k with u*a == gcd(a, k) (mod k). a must be nonzero mod k.
Scalar normalizing_unit(Scalar a, Scalar k);

}  // namespace peirce
