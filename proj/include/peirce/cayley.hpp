#pragma once

#include <cstdint>
#include <vector>

#include "peirce/ring.hpp"

namespace peirce {

/// Addition and multiplication of a small ring tabulated on element indices.
///
/// Exhaustive scans (oracles, map verification, map search) work on indices
/// through this table instead of on coefficient vectors.
class CayleyTable {
 public:
  using Index = std::uint32_t;

  /// Limit on |R| accepted by the constructor.
  static constexpr std::uint64_t kMaxSize = 4096;

  explicit CayleyTable(const Ring& ring);

  const Ring& ring() const { return ring_; }
  Index size() const { return n_; }

  Index add(Index x, Index y) const { return add_[at(x, y)]; }
  Index mul(Index x, Index y) const { return mul_[at(x, y)]; }
  Index neg(Index x) const { return neg_[x]; }
  Index sub(Index x, Index y) const { return add(x, neg(y)); }
  Index bracket(Index x, Index y) const { return sub(mul(x, y), mul(y, x)); }
  Index associator(Index x, Index y, Index z) const {
    return sub(mul(mul(x, y), z), mul(x, mul(y, z)));
  }

 private:
  std::size_t at(Index x, Index y) const {
    return static_cast<std::size_t>(x) * n_ + y;
  }

  Ring ring_;
  Index n_;
  std::vector<Index> add_;
  std::vector<Index> mul_;
  std::vector<Index> neg_;
};

}  // namespace peirce
