#pragma once

#include <optional>
#include <string>
#include <vector>

#include "peirce/ring.hpp"

namespace peirce::fixtures {

/// Associative, six basis labels (e, a11, b11, b12, c21, d22); the products
/// are those of the first printed multiplication table.
Ring paper_example_1(Scalar k = 2);

/// Five basis labels (e, a11, b12, c21, d22); the products are those of the
/// second printed multiplication table.
Ring paper_example_2(Scalar k = 2);

/// 2x2 matrices over Z_k on the matrix units (e11, e12, e21, e22).
Ring matrix2(Scalar k = 2);

/// Upper-triangular 2x2 matrices over Z_k on (e11, e12, e22).
Ring triangular2(Scalar k = 2);

/// Zorn vector matrices (alpha, v; w, beta) over Z_k on the basis
/// (alpha, v1, v2, v3, w1, w2, w3, beta), with product
///   (a1 a2 + v1.w2,  a1 v2 + b2 v1 - w1 x w2;
///    a2 w1 + b1 w2 + v1 x v2,  b1 b2 + w1.v2).
Ring zorn(Scalar k = 2);

/// All products zero.
Ring zero_ring(Scalar k, int dim);

/// Componentwise ring on the concatenated bases; labels get ".1" and ".2"
/// suffixes.
Ring direct_sum(const Ring& a, const Ring& b);

/// Flags a fixture is known to have; each is re-derived on load.
struct Expectations {
  bool associative;
  bool alternative;
  std::optional<bool> prime;
  bool torsion_free_3;
};

struct Fixture {
  std::string name;
  Ring ring;
  Expectations expected;
  /// Coefficients of the designated idempotent, when there is one.
  std::optional<Element> idempotent;
};

/// Names accepted by make(): example1, example2, matrix2, triangular2,
/// zorn, zero, matrix2_sum.
const std::vector<std::string>& names();

/// Builds a fixture and checks its expectations and designated idempotent
/// against ring-analysis; a mismatch throws std::logic_error.
Fixture make(const std::string& name, Scalar k = 2);

/// Parses "<name>_k<modulus>" (as produced by fixture ring names).
std::optional<Fixture> from_ring_name(const std::string& ring_name);

/// Every fixture at moduli 2 and 3 plus the Z_4 matrix and triangular rings,
/// restricted to at most max_size elements.
std::vector<Fixture> catalog(std::uint64_t max_size);

}  // namespace peirce::fixtures
