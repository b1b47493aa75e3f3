#include "peirce/ring.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace peirce {

RingSpec RingSpec::zero_table(std::string name, Scalar modulus,
                              std::vector<std::string> basis) {
  RingSpec spec{std::move(name), modulus, std::move(basis), {}};
  const int d = spec.dim();
  spec.table.assign(static_cast<std::size_t>(d * d), Coeffs::Zero(d));
  return spec;
}

void RingSpec::validate() const {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  const int d = dim();
  if (d < 1) throw std::invalid_argument("ring needs at least one basis label");
  std::set<std::string> seen;
  for (const auto& label : basis) {
    if (label.empty()) throw std::invalid_argument("empty basis label");
    if (!seen.insert(label).second) {
      throw std::invalid_argument("duplicate basis label '" + label + "'");
    }
  }
  if (table.size() != static_cast<std::size_t>(d * d)) {
    throw std::invalid_argument("table must have dim*dim entries");
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Coeffs& c = product(i, j);
      std::ostringstream where;
      where << "table[" << i << "][" << j << "]";
      if (c.size() != d) {
        throw std::invalid_argument(where.str() + " must have length " +
                                    std::to_string(d));
      }
      for (int l = 0; l < d; ++l) {
        if (c(l) < 0 || c(l) >= modulus) {
          throw std::invalid_argument(where.str() + "[" + std::to_string(l) +
                                      "] not reduced modulo " +
                                      std::to_string(modulus));
        }
      }
    }
  }
}

Ring::Ring(RingSpec spec) {
  spec.validate();
  auto impl = std::make_shared<Impl>();
  const int d = spec.dim();
  std::uint64_t size = 1;
  for (int i = 0; i < d; ++i) {
    if (size > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(spec.modulus)) {
      throw std::invalid_argument("ring too large to index");
    }
    size *= static_cast<std::uint64_t>(spec.modulus);
  }
  impl->size = size;
  impl->left.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    CoeffMatrix l(d, d);
    for (int j = 0; j < d; ++j) l.col(j) = spec.product(i, j);
    impl->left.push_back(std::move(l));
  }
  impl->spec = std::move(spec);
  impl_ = std::move(impl);
}

Element Ring::zero() const { return Element(*this, Coeffs::Zero(dim())); }

Element Ring::basis(int i) const {
  if (i < 0 || i >= dim()) throw std::out_of_range("basis index out of range");
  return Element(*this, Coeffs::Unit(dim(), i));
}

std::vector<Element> Ring::basis_elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(dim()));
  for (int i = 0; i < dim(); ++i) out.push_back(basis(i));
  return out;
}

Element Ring::element(const Coeffs& coeffs) const {
  if (coeffs.size() != dim()) {
    throw std::invalid_argument("coefficient vector has wrong length");
  }
  return Element(*this, reduced(coeffs, modulus()));
}

Element Ring::element_at(std::uint64_t index) const {
  return Element(*this, coeffs_at(index));
}

int Ring::find_label(const std::string& label) const {
  const auto& b = labels();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] == label) return static_cast<int>(i);
  }
  return -1;
}

Coeffs Ring::multiply(const Coeffs& x, const Coeffs& y) const {
  const int d = dim();
  Coeffs out = Coeffs::Zero(d);
  for (int i = 0; i < d; ++i) {
    if (x(i) != 0) out += x(i) * (impl_->left[static_cast<std::size_t>(i)] * y);
  }
  return reduced(out, modulus());
}

std::uint64_t Ring::index_of(const Coeffs& coeffs) const {
  const auto k = static_cast<std::uint64_t>(modulus());
  std::uint64_t index = 0;
  for (Eigen::Index j = 0; j < coeffs.size(); ++j) {
    index = index * k + static_cast<std::uint64_t>(coeffs(j));
  }
  return index;
}

Coeffs Ring::coeffs_at(std::uint64_t index) const {
  if (index >= size()) throw std::out_of_range("element index out of range");
  const auto k = static_cast<std::uint64_t>(modulus());
  Coeffs c(dim());
  for (int j = dim() - 1; j >= 0; --j) {
    c(j) = static_cast<Scalar>(index % k);
    index /= k;
  }
  return c;
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) {
    throw std::invalid_argument("elements of rings '" + a.name() + "' and '" +
                                b.name() + "' cannot be combined");
  }
}

Element::Element(Ring ring, Coeffs coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}

std::string Element::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < ring_.dim(); ++i) {
    const Scalar c = coeffs_(i);
    if (c == 0) continue;
    if (!first) out << '+';
    if (c != 1) out << c << '*';
    out << ring_.labels()[static_cast<std::size_t>(i)];
    first = false;
  }
  return first ? "0" : out.str();
}

Element Element::operator-() const {
  return Element(ring_, reduced(-coeffs_, ring_.modulus()));
}

Element& Element::operator+=(const Element& other) {
  require_same_ring(ring_, other.ring_);
  coeffs_ = reduced(coeffs_ + other.coeffs_, ring_.modulus());
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_ring(ring_, other.ring_);
  coeffs_ = reduced(coeffs_ - other.coeffs_, ring_.modulus());
  return *this;
}

Element operator*(const Element& x, const Element& y) {
  require_same_ring(x.ring_, y.ring_);
  return Element(x.ring_, x.ring_.multiply(x.coeffs_, y.coeffs_));
}

Element operator*(Scalar s, const Element& x) {
  return Element(x.ring_, reduced(s * x.coeffs_, x.ring_.modulus()));
}

Element associator(const Element& x, const Element& y, const Element& z) {
  return (x * y) * z - x * (y * z);
}

Element commutator(const Element& x, const Element& y) {
  return x * y - y * x;
}

}  // namespace peirce
