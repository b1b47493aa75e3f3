#include <doctest.h>

#include <algorithm>
#include <iterator>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "peirce/submodule.hpp"

using namespace peirce;

namespace {

Coeffs vec(std::initializer_list<Scalar> xs) {
  Coeffs c(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Scalar x : xs) c(i++) = x;
  return c;
}

std::vector<Coeffs> random_vectors(std::mt19937& rng, int count, int dim, Scalar k) {
  std::uniform_int_distribution<Scalar> coeff(0, k - 1);
  std::vector<Coeffs> out;
  for (int i = 0; i < count; ++i) {
    Coeffs v(dim);
    for (int l = 0; l < dim; ++l) v(l) = coeff(rng);
    out.push_back(v);
  }
  return out;
}

// Every vector of Z_k^dim, brute force.
std::vector<Coeffs> all_vectors(int dim, Scalar k) {
  std::vector<Coeffs> out;
  Coeffs v = Coeffs::Zero(dim);
  while (true) {
    out.push_back(v);
    int l = dim - 1;
    while (l >= 0 && v(l) == k - 1) v(l--) = 0;
    if (l < 0) break;
    ++v(l);
  }
  return out;
}

// Additive closure of a set of generators, by brute force.
std::set<std::vector<Scalar>> closure(const std::vector<Coeffs>& gens, int dim, Scalar k) {
  std::set<std::vector<Scalar>> seen{std::vector<Scalar>(static_cast<std::size_t>(dim), 0)};
  std::vector<std::vector<Scalar>> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    auto x = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      auto y = x;
      for (int l = 0; l < dim; ++l) y[l] = (y[l] + g(l)) % k;
      if (seen.insert(y).second) frontier.push_back(y);
    }
  }
  return seen;
}

std::set<std::vector<Scalar>> as_set(const Submodule& m) {
  std::set<std::vector<Scalar>> out;
  for (const auto& e : m.elements()) out.insert(std::vector<Scalar>(e.data(), e.data() + e.size()));
  return out;
}

}  // namespace

TEST_CASE("howell form over Z_4 keeps the annihilator row") {
  CoeffMatrix m(1, 2);
  m << 2, 1;
  const Submodule s = Submodule::span(m, 4);
  // 2*(2,1) = (0,2) is in the span and must be visible from the rows.
  CHECK(s.contains(vec({0, 2})));
  CHECK_FALSE(s.contains(vec({0, 1})));
  CHECK(s.size() == 4);
}

TEST_CASE("span canonical form is invariant under shuffling, duplication and unit scaling") {
  std::mt19937 rng(7);
  for (Scalar k : {2, 3, 4, 6, 9}) {
    for (int trial = 0; trial < 30; ++trial) {
      auto gens = random_vectors(rng, 3, 4, k);
      const Submodule base = Submodule::span(gens, k, 4);
      auto shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      shuffled.push_back(gens[0]);
      shuffled.push_back(reduced(Coeffs(gens[1] + gens[2]), k));
      for (Scalar u = 1; u < k; ++u) {
        if (std::gcd(u, k) != 1) continue;
        shuffled.push_back(reduced(Coeffs(u * gens[1]), k));
      }
      const Submodule other = Submodule::span(shuffled, k, 4);
      CHECK(other == base);
      CHECK(other.rows().rows() == base.rows().rows());
    }
  }
}

TEST_CASE("span elements agree with brute-force additive closure") {
  std::mt19937 rng(11);
  for (Scalar k : {2, 4, 6}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto gens = random_vectors(rng, 2, 3, k);
      const Submodule s = Submodule::span(gens, k, 3);
      const auto expect = closure(gens, 3, k);
      CHECK(as_set(s) == expect);
      CHECK(s.size() == expect.size());
      for (const auto& v : all_vectors(3, k)) {
        CHECK(s.contains(v) == (expect.count(std::vector<Scalar>(v.data(), v.data() + 3)) > 0));
      }
    }
  }
}

TEST_CASE("kernel, intersection and sum against enumeration") {
  std::mt19937 rng(5);
  for (Scalar k : {2, 3, 4, 6}) {
    for (int trial = 0; trial < 15; ++trial) {
      CoeffMatrix map(2, 3);
      std::uniform_int_distribution<Scalar> coeff(0, k - 1);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 3; ++c) map(r, c) = coeff(rng);
      const Submodule ker = kernel(map, k);
      std::set<std::vector<Scalar>> expect;
      for (const auto& v : all_vectors(3, k)) {
        if (reduced(Coeffs(map * v), k).isZero()) expect.insert({v(0), v(1), v(2)});
      }
      CHECK(as_set(ker) == expect);

      const Submodule a = Submodule::span(random_vectors(rng, 2, 3, k), k, 3);
      const Submodule b = Submodule::span(random_vectors(rng, 2, 3, k), k, 3);
      std::set<std::vector<Scalar>> both;
      const auto sa = as_set(a), sb = as_set(b);
      std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                            std::inserter(both, both.begin()));
      CHECK(as_set(a.intersect(b)) == both);
      CHECK((a + b).contains(a));
      CHECK((a + b).contains(b));
      CHECK((a + b).size() * both.size() == a.size() * b.size());
    }
  }
}

TEST_CASE("solve finds a preimage exactly when one exists") {
  std::mt19937 rng(3);
  for (Scalar k : {4, 6}) {
    for (int trial = 0; trial < 20; ++trial) {
      CoeffMatrix map(2, 2);
      std::uniform_int_distribution<Scalar> coeff(0, k - 1);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) map(r, c) = coeff(rng);
      for (const auto& t : all_vectors(2, k)) {
        bool exists = false;
        for (const auto& v : all_vectors(2, k)) exists = exists || reduced(Coeffs(map * v), k) == t;
        const auto sol = solve(map, t, k);
        CHECK(sol.has_value() == exists);
        if (sol) CHECK(reduced(Coeffs(map * *sol), k) == t);
      }
    }
  }
}

TEST_CASE("zero and whole submodules") {
  const Submodule z(4, 3);
  CHECK(z.is_zero());
  CHECK(z.size() == 1);
  const Submodule w = Submodule::whole(4, 3);
  CHECK(w.size() == 64);
  CHECK(w.contains(z));
  CHECK(w.intersect(z) == z);
}
