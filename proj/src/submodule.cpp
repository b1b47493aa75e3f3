#include "peirce/submodule.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace peirce {

Scalar normalizing_unit(Scalar a, Scalar k) {
  a = mod(a, k);
  if (a == 0) throw std::invalid_argument("normalizing_unit: zero entry");
  const Scalar g = std::gcd(a, k);
  for (Scalar u = 1; u < k; ++u) {
    if (std::gcd(u, k) == 1 && mod(u * a, k) == g) return u;
  }
  // A unit always exists: the residue of (a/g)^{-1} mod k/g lifts to a unit.
  throw std::logic_error("normalizing_unit: no unit found");
}

namespace {

int pivot_column(const RowCoeffs& row) {
  for (Eigen::Index c = 0; c < row.size(); ++c) {
    if (row(c) != 0) return static_cast<int>(c);
  }
  return -1;
}

}  // namespace

CoeffMatrix howell_form(const CoeffMatrix& input, Scalar k) {
  const Eigen::Index n = input.cols();
  std::vector<RowCoeffs> rows;
  rows.reserve(static_cast<std::size_t>(input.rows()) * 2);
  for (Eigen::Index i = 0; i < input.rows(); ++i) {
    RowCoeffs r = reduced(input.row(i), k);
    if (!r.isZero()) rows.push_back(std::move(r));
  }

  std::size_t top = 0;
  for (Eigen::Index c = 0; c < n && top < rows.size(); ++c) {
    for (std::size_t s = top + 1; s < rows.size(); ++s) {
      if (rows[s](c) == 0) continue;
      if (rows[top](c) == 0) {
        std::swap(rows[top], rows[s]);
        continue;
      }
      const Scalar a = rows[top](c);
      const Scalar b = rows[s](c);
      const auto [g, u, v] = extended_gcd(a, b);
      RowCoeffs combined = reduced(u * rows[top] + v * rows[s], k);
      RowCoeffs cleared = reduced((b / g) * rows[top] - (a / g) * rows[s], k);
      rows[top] = std::move(combined);
      rows[s] = std::move(cleared);
    }
    if (rows[top](c) == 0) continue;

    rows[top] = reduced(normalizing_unit(rows[top](c), k) * rows[top], k);
    const Scalar pivot = rows[top](c);
    // Multiples of the pivot row that kill the pivot entry must stay in the
    // span of the rows below it.
    if (pivot != 1) {
      RowCoeffs annihilated = reduced((k / pivot) * rows[top], k);
      if (!annihilated.isZero()) rows.push_back(std::move(annihilated));
    }
    ++top;
  }
  rows.resize(std::min(top, rows.size()));

  for (std::size_t j = 0; j < rows.size(); ++j) {
    const int c = pivot_column(rows[j]);
    const Scalar pivot = rows[j](c);
    for (std::size_t i = 0; i < j; ++i) {
      const Scalar q = rows[i](c) / pivot;
      if (q != 0) rows[i] = reduced(rows[i] - q * rows[j], k);
    }
  }

  CoeffMatrix out(static_cast<Eigen::Index>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.row(static_cast<Eigen::Index>(i)) = rows[i];
  }
  return out;
}

Submodule::Submodule(Scalar modulus, int ambient_dim)
    : Submodule(modulus, ambient_dim, CoeffMatrix(0, ambient_dim)) {}

Submodule::Submodule(Scalar modulus, int ambient_dim, CoeffMatrix rows)
    : modulus_(modulus), ambient_dim_(ambient_dim), rows_(std::move(rows)) {
  if (modulus_ < 2) throw std::invalid_argument("Submodule: modulus < 2");
}

Submodule Submodule::span(const CoeffMatrix& rows, Scalar modulus) {
  return Submodule(modulus, static_cast<int>(rows.cols()),
                   howell_form(rows, modulus));
}

Submodule Submodule::span(std::span<const Coeffs> vectors, Scalar modulus,
                          int ambient_dim) {
  CoeffMatrix m(static_cast<Eigen::Index>(vectors.size()), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim) {
      throw std::invalid_argument("Submodule::span: vector length mismatch");
    }
    m.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  }
  return span(m, modulus);
}

Submodule Submodule::whole(Scalar modulus, int ambient_dim) {
  return span(CoeffMatrix::Identity(ambient_dim, ambient_dim), modulus);
}

std::uint64_t Submodule::size() const {
  std::uint64_t n = 1;
  for (Eigen::Index i = 0; i < rows_.rows(); ++i) {
    const int c = pivot_column(rows_.row(i));
    n *= static_cast<std::uint64_t>(modulus_ / rows_(i, c));
  }
  return n;
}

bool Submodule::contains(const Coeffs& v) const {
  if (v.size() != ambient_dim_) return false;
  RowCoeffs rest = reduced(v.transpose(), modulus_);
  for (Eigen::Index i = 0; i < rows_.rows(); ++i) {
    const int c = pivot_column(rows_.row(i));
    const Scalar pivot = rows_(i, c);
    if (rest(c) % pivot != 0) return false;
    rest = reduced(rest - (rest(c) / pivot) * rows_.row(i), modulus_);
  }
  return rest.isZero();
}

bool Submodule::contains(const Submodule& other) const {
  for (Eigen::Index i = 0; i < other.rows_.rows(); ++i) {
    if (!contains(Coeffs(other.rows_.row(i).transpose()))) return false;
  }
  return true;
}

std::vector<Coeffs> Submodule::elements() const {
  const Eigen::Index r = rows_.rows();
  std::vector<Scalar> orders(static_cast<std::size_t>(r));
  for (Eigen::Index i = 0; i < r; ++i) {
    orders[static_cast<std::size_t>(i)] =
        modulus_ / rows_(i, pivot_column(rows_.row(i)));
  }
  std::vector<Coeffs> out;
  out.reserve(size());
  std::vector<Scalar> lambda(static_cast<std::size_t>(r), 0);
  while (true) {
    Coeffs v = Coeffs::Zero(ambient_dim_);
    for (Eigen::Index i = 0; i < r; ++i) {
      v += lambda[static_cast<std::size_t>(i)] * rows_.row(i).transpose();
    }
    out.push_back(reduced(v, modulus_));
    Eigen::Index i = 0;
    for (; i < r; ++i) {
      auto& l = lambda[static_cast<std::size_t>(i)];
      if (++l < orders[static_cast<std::size_t>(i)]) break;
      l = 0;
    }
    if (i == r) break;
  }
  return out;
}

Submodule Submodule::operator+(const Submodule& other) const {
  if (modulus_ != other.modulus_ || ambient_dim_ != other.ambient_dim_) {
    throw std::invalid_argument("Submodule: incompatible operands");
  }
  CoeffMatrix stacked(rows_.rows() + other.rows_.rows(), ambient_dim_);
  stacked << rows_, other.rows_;
  return span(stacked, modulus_);
}

Submodule Submodule::intersect(const Submodule& other) const {
  if (modulus_ != other.modulus_ || ambient_dim_ != other.ambient_dim_) {
    throw std::invalid_argument("Submodule: incompatible operands");
  }
  // Zassenhaus: rows (a | a) and (b | 0); the rows with a vanishing left
  // half carry the intersection in their right half.
  const int n = ambient_dim_;
  CoeffMatrix z = CoeffMatrix::Zero(rows_.rows() + other.rows_.rows(), 2 * n);
  z.topLeftCorner(rows_.rows(), n) = rows_;
  z.topRightCorner(rows_.rows(), n) = rows_;
  z.bottomLeftCorner(other.rows_.rows(), n) = other.rows_;
  const CoeffMatrix h = howell_form(z, modulus_);
  std::vector<Coeffs> found;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    if (h.row(i).head(n).isZero()) found.push_back(h.row(i).tail(n).transpose());
  }
  return span(found, modulus_, n);
}

Submodule kernel(const CoeffMatrix& map, Scalar modulus) {
  const Eigen::Index m = map.rows();
  const Eigen::Index n = map.cols();
  CoeffMatrix augmented(n, m + n);
  augmented << map.transpose(), CoeffMatrix::Identity(n, n);
  const CoeffMatrix h = howell_form(augmented, modulus);
  std::vector<Coeffs> found;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    if (h.row(i).head(m).isZero()) found.push_back(h.row(i).tail(n).transpose());
  }
  return Submodule::span(found, modulus, static_cast<int>(n));
}

std::optional<Coeffs> solve(const CoeffMatrix& map, const Coeffs& target,
                            Scalar modulus) {
  if (target.size() != map.rows()) {
    throw std::invalid_argument("solve: target length mismatch");
  }
  // Solutions of map*v = t are the kernel vectors (s, v) of [-t | map] with
  // s = 1; the Howell form exposes the ideal of attainable s in its first row.
  CoeffMatrix extended(map.rows(), map.cols() + 1);
  extended << reduced(-target, modulus), map;
  const Submodule ker = kernel(extended, modulus);
  if (ker.is_zero() || ker.rows()(0, 0) != 1) return std::nullopt;
  return Coeffs(ker.rows().row(0).tail(map.cols()).transpose());
}

}  // namespace peirce
