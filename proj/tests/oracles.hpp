#pragma once

// Brute-force reference implementations used only by tests. Products are
// computed straight from the structure-constant table of the RingSpec, with
// no use of the library's arithmetic, linear algebra or Cayley tables.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "peirce/ring.hpp"

namespace oracle {

using peirce::Ring;
using peirce::Scalar;
using Index = std::uint32_t;

class Table {
 public:
  explicit Table(const Ring& ring) : k_(ring.modulus()), d_(ring.dim()) {
    n_ = 1;
    for (int i = 0; i < d_; ++i) n_ *= static_cast<Index>(k_);
    std::vector<std::vector<Scalar>> all(n_);
    for (Index x = 0; x < n_; ++x) all[x] = decode(x);
    const auto& spec = ring.spec();
    add_.resize(static_cast<std::size_t>(n_) * n_);
    mul_.resize(static_cast<std::size_t>(n_) * n_);
    neg_.resize(n_);
    for (Index x = 0; x < n_; ++x) {
      std::vector<Scalar> m(static_cast<std::size_t>(d_));
      for (int l = 0; l < d_; ++l) m[l] = (k_ - all[x][l]) % k_;
      neg_[x] = encode(m);
      for (Index y = 0; y < n_; ++y) {
        std::vector<Scalar> s(static_cast<std::size_t>(d_)), p(static_cast<std::size_t>(d_), 0);
        for (int l = 0; l < d_; ++l) s[l] = (all[x][l] + all[y][l]) % k_;
        for (int i = 0; i < d_; ++i) {
          if (all[x][i] == 0) continue;
          for (int j = 0; j < d_; ++j) {
            if (all[y][j] == 0) continue;
            const auto& c = spec.table[static_cast<std::size_t>(i * d_ + j)];
            for (int l = 0; l < d_; ++l) p[l] = (p[l] + all[x][i] * all[y][j] * c(l)) % k_;
          }
        }
        add_[at(x, y)] = encode(s);
        mul_[at(x, y)] = encode(p);
      }
    }
  }

  Index size() const { return n_; }
  Index add(Index x, Index y) const { return add_[at(x, y)]; }
  Index mul(Index x, Index y) const { return mul_[at(x, y)]; }
  Index sub(Index x, Index y) const { return add(x, neg_[y]); }
  Index bracket(Index x, Index y) const { return sub(mul(x, y), mul(y, x)); }
  Index assoc(Index x, Index y, Index z) const {
    return sub(mul(mul(x, y), z), mul(x, mul(y, z)));
  }

  std::vector<Scalar> decode(Index x) const {
    std::vector<Scalar> c(static_cast<std::size_t>(d_));
    for (int j = d_ - 1; j >= 0; --j) {
      c[j] = x % k_;
      x /= static_cast<Index>(k_);
    }
    return c;
  }
  Index encode(const std::vector<Scalar>& c) const {
    Index x = 0;
    for (int j = 0; j < d_; ++j) x = x * static_cast<Index>(k_) + static_cast<Index>(c[j]);
    return x;
  }

 private:
  std::size_t at(Index x, Index y) const { return static_cast<std::size_t>(x) * n_ + y; }
  Scalar k_;
  int d_;
  Index n_;
  std::vector<Index> add_, mul_, neg_;
};

inline bool associative(const Table& t) {
  for (Index x = 0; x < t.size(); ++x)
    for (Index y = 0; y < t.size(); ++y)
      for (Index z = 0; z < t.size(); ++z)
        if (t.assoc(x, y, z) != 0) return false;
  return true;
}

inline bool alternative(const Table& t) {
  for (Index x = 0; x < t.size(); ++x)
    for (Index y = 0; y < t.size(); ++y)
      if (t.assoc(x, x, y) != 0 || t.assoc(y, x, x) != 0) return false;
  return true;
}

inline bool flexible(const Table& t) {
  for (Index x = 0; x < t.size(); ++x)
    for (Index y = 0; y < t.size(); ++y)
      if (t.assoc(x, y, x) != 0) return false;
  return true;
}

inline bool in_nucleus(const Table& t, Index u) {
  for (Index x = 0; x < t.size(); ++x)
    for (Index y = 0; y < t.size(); ++y)
      if (t.assoc(u, x, y) != 0 || t.assoc(x, u, y) != 0 || t.assoc(x, y, u) != 0) return false;
  return true;
}

inline bool central(const Table& t, Index u) {
  for (Index x = 0; x < t.size(); ++x)
    if (t.bracket(u, x) != 0) return false;
  return in_nucleus(t, u);
}

inline std::set<Index> nucleus(const Table& t) {
  std::set<Index> out;
  for (Index u = 0; u < t.size(); ++u)
    if (in_nucleus(t, u)) out.insert(u);
  return out;
}

inline std::set<Index> centre(const Table& t) {
  std::set<Index> out;
  for (Index u = 0; u < t.size(); ++u)
    if (central(t, u)) out.insert(u);
  return out;
}

/// Smallest set containing a that is closed under +, and under left and
/// right multiplication by every element.
inline std::vector<bool> ideal(const Table& t, Index a) {
  std::vector<bool> in(t.size(), false);
  std::vector<Index> members{0};
  in[0] = true;
  std::vector<Index> queue{a};
  while (!queue.empty()) {
    const Index x = queue.back();
    queue.pop_back();
    if (in[x]) continue;
    in[x] = true;
    members.push_back(x);
    for (Index m : std::vector<Index>(members)) {
      const Index s = t.add(x, m);
      if (!in[s]) queue.push_back(s);
    }
    for (Index r = 0; r < t.size(); ++r) {
      if (!in[t.mul(r, x)]) queue.push_back(t.mul(r, x));
      if (!in[t.mul(x, r)]) queue.push_back(t.mul(x, r));
    }
  }
  return in;
}

/// Every pair of nonzero principal ideals has a nonzero product.
inline bool prime_by_ideals(const Table& t) {
  std::vector<std::vector<bool>> classes;
  std::vector<std::size_t> cls(t.size(), 0);
  for (Index a = 1; a < t.size(); ++a) {
    auto id = ideal(t, a);
    auto it = std::find(classes.begin(), classes.end(), id);
    cls[a] = static_cast<std::size_t>(it - classes.begin());
    if (it == classes.end()) classes.push_back(std::move(id));
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = 0; j < classes.size(); ++j) {
      bool nonzero = false;
      for (Index x = 0; x < t.size() && !nonzero; ++x) {
        if (!classes[i][x]) continue;
        for (Index y = 0; y < t.size() && !nonzero; ++y) {
          if (classes[j][y] && t.mul(x, y) != 0) nonzero = true;
        }
      }
      if (!nonzero) return false;
    }
  }
  return true;
}

/// (a r) b = 0 for all r implies a = 0 or b = 0 (left), or a (r b) (right).
inline bool prime_criterion(const Table& t, bool left) {
  for (Index a = 1; a < t.size(); ++a) {
    for (Index b = 1; b < t.size(); ++b) {
      bool nonzero = false;
      for (Index r = 0; r < t.size() && !nonzero; ++r) {
        const Index v = left ? t.mul(t.mul(a, r), b) : t.mul(a, t.mul(r, b));
        nonzero = v != 0;
      }
      if (!nonzero) return false;
    }
  }
  return true;
}

/// Elements of R11 + R22 relative to e, i.e. with vanishing off-diagonal
/// parts, bracketing to zero with every element of the chosen off-diagonal
/// component but lying outside the centre; ascending.
inline std::vector<Index> condition_counterexamples(const Table& t, Index e, bool side12) {
  auto p11 = [&](Index a) { return t.mul(e, t.mul(a, e)); };
  auto p12 = [&](Index a) { return t.sub(t.mul(e, a), p11(a)); };
  auto p21 = [&](Index a) { return t.sub(t.mul(a, e), p11(a)); };
  std::set<Index> off;
  for (Index a = 0; a < t.size(); ++a) off.insert(side12 ? p12(a) : p21(a));
  std::vector<Index> out;
  for (Index s = 0; s < t.size(); ++s) {
    if (p12(s) != 0 || p21(s) != 0) continue;
    bool hyp = true;
    for (Index x : off) hyp = hyp && t.bracket(s, x) == 0;
    if (hyp && !central(t, s)) out.push_back(s);
  }
  return out;
}

}  // namespace oracle
