#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "peirce/modular.hpp"
#include "peirce/submodule.hpp"

namespace peirce {

/// A finite ring presented by structure constants on a free Z_k-module.
///
/// Nothing beyond bilinearity is assumed: the product need not be
/// associative, commutative or unital.
struct RingSpec {
  std::string name;
  Scalar modulus = 2;
  std::vector<std::string> basis;
  /// table[i * dim + j] holds the coefficients of basis_i * basis_j.
  std::vector<Coeffs> table;

  int dim() const { return static_cast<int>(basis.size()); }
  const Coeffs& product(int i, int j) const {
    return table[static_cast<std::size_t>(i * dim() + j)];
  }
  Coeffs& product(int i, int j) {
    return table[static_cast<std::size_t>(i * dim() + j)];
  }

  /// A spec with the given labels and an all-zero table.
  static RingSpec zero_table(std::string name, Scalar modulus,
                             std::vector<std::string> basis);

  /// Throws std::invalid_argument describing the first broken invariant.
  void validate() const;
};

class Element;

/// Shared, immutable handle to a validated RingSpec. Copies compare equal;
/// independently constructed rings never do, even with identical tables.
class Ring {
 public:
  explicit Ring(RingSpec spec);

  const RingSpec& spec() const { return impl_->spec; }
  const std::string& name() const { return impl_->spec.name; }
  Scalar modulus() const { return impl_->spec.modulus; }
  int dim() const { return impl_->spec.dim(); }
  const std::vector<std::string>& labels() const { return impl_->spec.basis; }

  /// Number of elements, k^d.
  std::uint64_t size() const { return impl_->size; }

  Element zero() const;
  Element basis(int i) const;
  std::vector<Element> basis_elements() const;
  Element element(const Coeffs& coeffs) const;
  /// Mixed-radix decoding; the first coordinate is the most significant.
  Element element_at(std::uint64_t index) const;
  /// Label index, or -1.
  int find_label(const std::string& label) const;

  /// Matrix of y -> basis_i * y.
  const CoeffMatrix& left_multiplication(int i) const {
    return impl_->left[static_cast<std::size_t>(i)];
  }
  Coeffs multiply(const Coeffs& x, const Coeffs& y) const;
  std::uint64_t index_of(const Coeffs& coeffs) const;
  Coeffs coeffs_at(std::uint64_t index) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.impl_ == b.impl_;
  }

 private:
  struct Impl {
    RingSpec spec;
    std::uint64_t size;
    std::vector<CoeffMatrix> left;
  };
  std::shared_ptr<const Impl> impl_;
};

/// An element of a finite ring; arithmetic between different rings throws
/// std::invalid_argument.
class Element {
 public:
  Element(Ring ring, Coeffs coeffs);

  const Ring& ring() const { return ring_; }
  const Coeffs& coeffs() const { return coeffs_; }
  Scalar operator[](int i) const { return coeffs_(i); }
  std::uint64_t index() const { return ring_.index_of(coeffs_); }
  bool is_zero() const { return coeffs_.isZero(); }

  /// Label sum such as "e+a11" or "2*b12+c21"; "0" for zero.
  std::string to_string() const;

  Element operator-() const;
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);

  friend Element operator+(Element x, const Element& y) { return x += y; }
  friend Element operator-(Element x, const Element& y) { return x -= y; }
  friend Element operator*(const Element& x, const Element& y);
  friend Element operator*(Scalar s, const Element& x);

  friend bool operator==(const Element& x, const Element& y) {
    return x.ring_ == y.ring_ && x.coeffs_ == y.coeffs_;
  }

 private:
  Ring ring_;
  Coeffs coeffs_;
};

void require_same_ring(const Ring& a, const Ring& b);

/// (x, y, z) = (xy)z - x(yz).
Element associator(const Element& x, const Element& y, const Element& z);

/// [x, y] = xy - yx.
Element commutator(const Element& x, const Element& y);

inline std::uint64_t element_index(const Element& x) { return x.index(); }

}  // namespace peirce
