#include "peirce/cayley.hpp"

#include <stdexcept>

namespace peirce {

CayleyTable::CayleyTable(const Ring& ring) : ring_(ring) {
  if (ring.size() > kMaxSize) {
    throw std::invalid_argument("ring '" + ring.name() +
                                "' too large to tabulate");
  }
  n_ = static_cast<Index>(ring.size());
  const Scalar k = ring.modulus();
  std::vector<Coeffs> all;
  all.reserve(n_);
  for (Index x = 0; x < n_; ++x) all.push_back(ring.coeffs_at(x));

  add_.resize(static_cast<std::size_t>(n_) * n_);
  mul_.resize(static_cast<std::size_t>(n_) * n_);
  neg_.resize(n_);
  // Left-multiplication matrix of each element, so a product is one
  // matrix-vector multiply.
  std::vector<CoeffMatrix> left(n_);
  for (Index x = 0; x < n_; ++x) {
    CoeffMatrix l = CoeffMatrix::Zero(ring.dim(), ring.dim());
    for (int i = 0; i < ring.dim(); ++i) {
      if (all[x](i) != 0) l += all[x](i) * ring.left_multiplication(i);
    }
    left[x] = std::move(l);
    neg_[x] = static_cast<Index>(ring.index_of(reduced(-all[x], k)));
  }
  for (Index x = 0; x < n_; ++x) {
    for (Index y = 0; y < n_; ++y) {
      add_[at(x, y)] = static_cast<Index>(ring.index_of(reduced(all[x] + all[y], k)));
      mul_[at(x, y)] = static_cast<Index>(ring.index_of(reduced(left[x] * all[y], k)));
    }
  }
}

}  // namespace peirce
