#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "peirce/modular.hpp"

namespace peirce {

/// Howell normal form of the row span of `rows` over Z_k.
///
/// The result is in row echelon form with every pivot a divisor of k, the
/// entries above each pivot reduced into [0, pivot), and the Howell property:
/// the rows whose first j entries vanish span every element of the row span
/// whose first j entries vanish. Two matrices have the same row span iff
/// their Howell forms are identical.
CoeffMatrix howell_form(const CoeffMatrix& rows, Scalar k);

/// An additive subgroup of Z_k^n closed under Z_k-scaling, held in Howell form.
class Submodule {
 public:
  /// The zero submodule of Z_k^n.
  Submodule(Scalar modulus, int ambient_dim);

  static Submodule span(const CoeffMatrix& rows, Scalar modulus);
  static Submodule span(std::span<const Coeffs> vectors, Scalar modulus,
                        int ambient_dim);
  static Submodule whole(Scalar modulus, int ambient_dim);

  Scalar modulus() const { return modulus_; }
  int ambient_dim() const { return ambient_dim_; }

  /// Canonical basis rows; byte-identical for equal spans.
  const CoeffMatrix& rows() const { return rows_; }
  Coeffs row(int i) const { return rows_.row(i).transpose(); }
  int rank() const { return static_cast<int>(rows_.rows()); }
  bool is_zero() const { return rows_.rows() == 0; }

  /// Number of elements of the subgroup.
  std::uint64_t size() const;

  bool contains(const Coeffs& v) const;
  bool contains(const Submodule& other) const;

  /// Every element, each exactly once, in no particular order.
  std::vector<Coeffs> elements() const;

  Submodule operator+(const Submodule& other) const;
  Submodule intersect(const Submodule& other) const;

  friend bool operator==(const Submodule& a, const Submodule& b) {
    // Eigen's == does not check shapes.
    return a.modulus_ == b.modulus_ && a.ambient_dim_ == b.ambient_dim_ &&
           a.rows_.rows() == b.rows_.rows() && a.rows_ == b.rows_;
  }

 private:
  Submodule(Scalar modulus, int ambient_dim, CoeffMatrix canonical_rows);

  Scalar modulus_;
  int ambient_dim_;
  CoeffMatrix rows_;
};

/// All v in Z_k^n with map * v == 0, where map is m x n.
Submodule kernel(const CoeffMatrix& map, Scalar modulus);

/// Some v with map * v == target, if one exists.
std::optional<Coeffs> solve(const CoeffMatrix& map, const Coeffs& target,
                            Scalar modulus);

}  // namespace peirce
