#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "peirce/cayley.hpp"
#include "peirce/fixtures.hpp"
#include "peirce/ring.hpp"
#include "peirce/ring_io.hpp"

using namespace peirce;
namespace fx = peirce::fixtures;

namespace {

Element el(const Ring& r, const char* text) { return parse_element(r, text); }

}  // namespace

TEST_CASE("element addition") {
  const Ring r = fx::paper_example_2(2);
  CHECK((r.zero() + r.zero()).is_zero());
  CHECK((el(r, "a11") + el(r, "a11")).is_zero());
  const Element mixed = el(r, "b12") + el(r, "c21");
  CHECK(mixed.to_string() == "b12+c21");
  CHECK(mixed[2] == 1);
  CHECK(mixed[3] == 1);
}

TEST_CASE("element multiplication follows the printed table") {
  const Ring r = fx::paper_example_2(2);
  CHECK(el(r, "e") * el(r, "e") == el(r, "e"));
  CHECK(el(r, "b12") * el(r, "c21") == el(r, "a11"));
  for (std::uint64_t i = 0; i < r.size(); ++i) CHECK((r.element_at(i) * r.zero()).is_zero());
}

TEST_CASE("associator and commutator examples") {
  const Ring r2 = fx::paper_example_2(2);
  CHECK(associator(el(r2, "b12"), el(r2, "c21"), el(r2, "a11")) == el(r2, "a11"));
  CHECK(commutator(el(r2, "e"), el(r2, "b12")) == el(r2, "b12"));
  CHECK(commutator(el(r2, "e"), el(r2, "c21")) == el(r2, "c21"));
  const Ring r3 = fx::paper_example_2(3);
  CHECK(commutator(el(r3, "e"), el(r3, "c21")) == -el(r3, "c21"));
  CHECK(commutator(el(r3, "e"), el(r3, "c21")) == el(r3, "2*c21"));
  for (std::uint64_t i = 0; i < r2.size(); ++i) {
    const Element x = r2.element_at(i);
    CHECK(commutator(x, x).is_zero());
    CHECK(associator(x, el(r2, "b12"), r2.zero()).is_zero());
  }
  const Ring r1 = fx::paper_example_1(2);
  for (const auto& x : r1.basis_elements())
    for (const auto& y : r1.basis_elements())
      for (const auto& z : r1.basis_elements()) CHECK(associator(x, y, z).is_zero());
}

TEST_CASE("element_index is mixed radix with the first coordinate most significant") {
  const Ring r = fx::paper_example_2(2);
  CHECK(r.zero().index() == 0);
  CHECK(el(r, "e").index() == 16);
  CHECK(el(r, "d22").index() == 1);
  CHECK_THROWS_AS(r.element_at(32), std::out_of_range);
  for (const auto& f : fx::catalog(4096)) {
    const Ring& ring = f.ring;
    for (std::uint64_t i = 0; i < ring.size(); ++i) {
      const Element x = ring.element_at(i);
      REQUIRE(x.index() == i);
      REQUIRE(ring.element(x.coeffs()) == x);
    }
  }
}

TEST_CASE("cross-ring arithmetic is rejected") {
  const Ring a = fx::matrix2(2);
  const Ring b = fx::matrix2(2);
  CHECK_FALSE(a == b);
  CHECK_THROWS_AS(a.basis(0) + b.basis(0), std::invalid_argument);
  CHECK_THROWS_AS(a.basis(0) * b.basis(0), std::invalid_argument);
  CHECK_THROWS_AS(commutator(a.basis(0), b.basis(1)), std::invalid_argument);
}

TEST_CASE("RingSpec validation") {
  RingSpec s = RingSpec::zero_table("t", 2, {"x", "y"});
  CHECK_NOTHROW(s.validate());
  s.product(0, 1)(1) = 2;
  CHECK_THROWS_AS(Ring{s}, std::invalid_argument);
  CHECK_THROWS_AS(Ring(RingSpec::zero_table("t", 2, {"x", "x"})), std::invalid_argument);
  CHECK_THROWS_AS(Ring(RingSpec::zero_table("t", 1, {"x"})), std::invalid_argument);
  CHECK_THROWS_AS(Ring(RingSpec::zero_table("t", 2, {})), std::invalid_argument);
}

TEST_CASE("multiplication agrees with the naive structure-constant oracle") {
  for (const auto& f : fx::catalog(1024)) {
    CAPTURE(f.ring.name());
    const oracle::Table t(f.ring);
    const CayleyTable c(f.ring);
    for (oracle::Index x = 0; x < t.size(); ++x) {
      for (oracle::Index y = 0; y < t.size(); ++y) {
        REQUIRE(c.mul(x, y) == t.mul(x, y));
        REQUIRE(c.add(x, y) == t.add(x, y));
      }
    }
    for (oracle::Index x = 0; x < t.size(); x += 1 + t.size() / 16) {
      for (oracle::Index y = 0; y < t.size(); y += 1 + t.size() / 16) {
        const Element ex = f.ring.element_at(x), ey = f.ring.element_at(y);
        REQUIRE((ex * ey).index() == t.mul(x, y));
      }
    }
  }
}

TEST_CASE("bilinearity and associator trilinearity, exhaustively") {
  for (const auto& f : fx::catalog(4096)) {
    CAPTURE(f.ring.name());
    const CayleyTable t(f.ring);
    const auto n = t.size();
    bool bilinear = true, trilinear = true;
    for (oracle::Index x = 0; x < n; ++x) {
      for (oracle::Index y = 0; y < n; ++y) {
        const auto xy = t.add(x, y);
        for (oracle::Index z = 0; z < n; ++z) {
          bilinear &= t.mul(xy, z) == t.add(t.mul(x, z), t.mul(y, z)) &&
                      t.mul(z, xy) == t.add(t.mul(z, x), t.mul(z, y));
          // Each slot of (., ., .) with the other two fixed at z.
          trilinear &= t.associator(xy, z, z) == t.add(t.associator(x, z, z), t.associator(y, z, z)) &&
                       t.associator(z, xy, z) == t.add(t.associator(z, x, z), t.associator(z, y, z)) &&
                       t.associator(z, z, xy) == t.add(t.associator(z, z, x), t.associator(z, z, y));
        }
      }
    }
    CHECK(bilinear);
    CHECK(trilinear);
  }
}

TEST_CASE("canonicalize examples") {
  const Ring r = fx::paper_example_2(2);
  CHECK(Submodule::span(std::vector<Coeffs>{}, 2, r.dim()).is_zero());
  CHECK(Submodule::span(std::vector<Coeffs>{r.zero().coeffs()}, 2, r.dim()).rank() == 0);
  const auto b12 = el(r, "b12").coeffs();
  const Submodule dup = Submodule::span(std::vector<Coeffs>{b12, b12}, 2, r.dim());
  CHECK(dup.rank() == 1);
  CHECK(dup.row(0) == b12);
  const auto e = el(r, "e").coeffs(), a = el(r, "a11").coeffs(), ea = (el(r, "e") + el(r, "a11")).coeffs();
  CHECK(Submodule::span(std::vector<Coeffs>{e, ea}, 2, r.dim()) ==
        Submodule::span(std::vector<Coeffs>{e, a}, 2, r.dim()));
  const Submodule again = Submodule::span(dup.rows(), 2);
  CHECK(again == dup);
}

TEST_CASE("kernel examples") {
  CHECK(kernel(CoeffMatrix::Zero(3, 3), 2).rank() == 3);
  CHECK(kernel(CoeffMatrix::Identity(3, 3), 2).is_zero());
  CoeffMatrix two(1, 1);
  two << 2;
  const Submodule k = kernel(two, 4);
  CHECK(k.size() == 2);
  Coeffs v(1);
  v << 2;
  CHECK(k.contains(v));
}
