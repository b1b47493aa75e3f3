#include "peirce/fixtures.hpp"

#include <numeric>
#include <stdexcept>

#include <Eigen/Geometry>

#include "peirce/analysis.hpp"

namespace peirce::fixtures {

namespace {

std::string suffixed(const std::string& base, Scalar k) {
  return base + "_k" + std::to_string(k);
}

/// Sets basis_i * basis_j = basis_l for labels; everything else stays 0.
struct TableBuilder {
  RingSpec spec;

  TableBuilder(std::string name, Scalar k, std::vector<std::string> labels)
      : spec(RingSpec::zero_table(std::move(name), k, std::move(labels))) {}

  int at(const std::string& label) const {
    for (int i = 0; i < spec.dim(); ++i) {
      if (spec.basis[static_cast<std::size_t>(i)] == label) return i;
    }
    throw std::logic_error("unknown label " + label);
  }

  TableBuilder& set(const std::string& x, const std::string& y,
                    const std::string& product) {
    spec.product(at(x), at(y)) = Coeffs::Unit(spec.dim(), at(product));
    return *this;
  }
};

bool is_prime_number(Scalar k) {
  if (k < 2) return false;
  for (Scalar p = 2; p * p <= k; ++p) {
    if (k % p == 0) return false;
  }
  return true;
}

void require_modulus(Scalar k) {
  if (k < 2) throw std::invalid_argument("fixture modulus must be at least 2");
}

}  // namespace

Ring paper_example_1(Scalar k) {
  require_modulus(k);
  TableBuilder t(suffixed("example1", k), k, {"e", "a11", "b11", "b12", "c21", "d22"});
  t.set("e", "e", "e").set("e", "a11", "a11").set("e", "b11", "b11").set("e", "b12", "b12");
  t.set("a11", "e", "a11");
  t.set("b11", "e", "b11").set("b11", "b11", "b11").set("b11", "b12", "b12");
  t.set("c21", "e", "c21");
  return Ring(std::move(t.spec));
}

Ring paper_example_2(Scalar k) {
  require_modulus(k);
  TableBuilder t(suffixed("example2", k), k, {"e", "a11", "b12", "c21", "d22"});
  t.set("e", "e", "e").set("e", "a11", "a11").set("e", "b12", "b12");
  t.set("a11", "e", "a11").set("a11", "a11", "a11");
  t.set("b12", "c21", "a11");
  t.set("c21", "e", "c21").set("c21", "b12", "d22");
  return Ring(std::move(t.spec));
}

Ring matrix2(Scalar k) {
  require_modulus(k);
  TableBuilder t(suffixed("matrix2", k), k, {"e11", "e12", "e21", "e22"});
  const char* units[2][2] = {{"e11", "e12"}, {"e21", "e22"}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int l = 0; l < 2; ++l) t.set(units[i][j], units[j][l], units[i][l]);
    }
  }
  return Ring(std::move(t.spec));
}

Ring triangular2(Scalar k) {
  require_modulus(k);
  TableBuilder t(suffixed("triangular2", k), k, {"e11", "e12", "e22"});
  t.set("e11", "e11", "e11").set("e11", "e12", "e12");
  t.set("e12", "e22", "e12").set("e22", "e22", "e22");
  return Ring(std::move(t.spec));
}

Ring zorn(Scalar k) {
  require_modulus(k);
  RingSpec spec = RingSpec::zero_table(
      suffixed("zorn", k), k, {"alpha", "v1", "v2", "v3", "w1", "w2", "w3", "beta"});
  using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const Coeffs x = Coeffs::Unit(8, i);
      const Coeffs y = Coeffs::Unit(8, j);
      const Scalar a1 = x(0), b1 = x(7), a2 = y(0), b2 = y(7);
      const Vec3 v1 = x.segment<3>(1), w1 = x.segment<3>(4);
      const Vec3 v2 = y.segment<3>(1), w2 = y.segment<3>(4);
      Coeffs p(8);
      p(0) = a1 * a2 + v1.dot(w2);
      p.segment<3>(1) = a1 * v2 + b2 * v1 - w1.cross(w2);
      p.segment<3>(4) = a2 * w1 + b1 * w2 + v1.cross(v2);
      p(7) = b1 * b2 + w1.dot(v2);
      spec.product(i, j) = reduced(p, k);
    }
  }
  return Ring(std::move(spec));
}

Ring zero_ring(Scalar k, int dim) {
  require_modulus(k);
  std::vector<std::string> labels;
  for (int i = 1; i <= dim; ++i) labels.push_back("z" + std::to_string(i));
  return Ring(RingSpec::zero_table(suffixed("zero", k), k, std::move(labels)));
}

Ring direct_sum(const Ring& a, const Ring& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("direct_sum: moduli differ");
  }
  const int da = a.dim();
  const int db = b.dim();
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(l + ".1");
  for (const auto& l : b.labels()) labels.push_back(l + ".2");
  RingSpec spec = RingSpec::zero_table(a.name() + "+" + b.name(), a.modulus(),
                                       std::move(labels));
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) spec.product(i, j).head(da) = a.spec().product(i, j);
  }
  for (int i = 0; i < db; ++i) {
    for (int j = 0; j < db; ++j) {
      spec.product(da + i, da + j).tail(db) = b.spec().product(i, j);
    }
  }
  return Ring(std::move(spec));
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> all{
      "example1", "example2", "matrix2", "triangular2", "zorn", "zero", "matrix2_sum"};
  return all;
}

Fixture make(const std::string& name, Scalar k) {
  require_modulus(k);
  const bool prime_k = is_prime_number(k);
  const bool tf3 = std::gcd(Scalar{3}, k) == 1;
  auto with_label = [](const Ring& r, const std::string& label) {
    return std::optional<Element>(r.basis(r.find_label(label)));
  };

  std::optional<Fixture> f;
  if (name == "example1") {
    Ring r = paper_example_1(k);
    f = Fixture{name, r, {true, true, false, tf3}, with_label(r, "e")};
  } else if (name == "example2") {
    // The printed table is neither alternative nor flexible:
    // (x,x,a11) = a11 for x = b12 + c21.
    Ring r = paper_example_2(k);
    f = Fixture{name, r, {false, false, false, tf3}, with_label(r, "e")};
  } else if (name == "matrix2") {
    Ring r = matrix2(k);
    f = Fixture{name, r, {true, true, prime_k, tf3}, with_label(r, "e11")};
  } else if (name == "triangular2") {
    Ring r = triangular2(k);
    f = Fixture{name, r, {true, true, false, tf3}, with_label(r, "e11")};
  } else if (name == "zorn") {
    Ring r = zorn(k);
    f = Fixture{name, r, {false, true, prime_k, tf3}, with_label(r, "alpha")};
  } else if (name == "zero") {
    Ring r = zero_ring(k, 2);
    f = Fixture{name, r, {true, true, false, tf3}, std::nullopt};
  } else if (name == "matrix2_sum") {
    Ring r = Ring([&] {
      RingSpec s = direct_sum(matrix2(k), matrix2(k)).spec();
      s.name = suffixed("matrix2_sum", k);
      return s;
    }());
    f = Fixture{name, r, {true, true, false, tf3}, with_label(r, "e11.1")};
  } else {
    throw std::invalid_argument("unknown fixture '" + name + "'");
  }

  const Ring& r = f->ring;
  auto mismatch = [&](const std::string& what) {
    throw std::logic_error("fixture " + r.name() + ": " + what +
                           " disagrees with ring-analysis");
  };
  if (is_associative(r).holds != f->expected.associative) mismatch("associative");
  if (is_alternative(r).holds != f->expected.alternative) mismatch("alternative");
  if (is_torsion_free(r, 3).holds != f->expected.torsion_free_3) mismatch("3-torsion");
  // Ideal enumeration is quadratic in |R|; larger fixtures are trusted.
  if (f->expected.prime && r.size() <= 1024 &&
      is_prime_by_ideals(r).holds != *f->expected.prime) {
    mismatch("prime");
  }
  if (f->idempotent && !is_nontrivial_idempotent(*f->idempotent)) {
    mismatch("designated idempotent");
  }
  return *std::move(f);
}

std::optional<Fixture> from_ring_name(const std::string& ring_name) {
  const auto pos = ring_name.rfind("_k");
  if (pos == std::string::npos) return std::nullopt;
  const std::string base = ring_name.substr(0, pos);
  const std::string digits = ring_name.substr(pos + 2);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
      digits.size() > 6) {
    return std::nullopt;
  }
  for (const auto& n : names()) {
    if (n == base) return make(base, std::stoll(digits));
  }
  return std::nullopt;
}

std::vector<Fixture> catalog(std::uint64_t max_size) {
  std::vector<Fixture> out;
  auto add = [&](const std::string& name, Scalar k) {
    Fixture f = make(name, k);
    if (f.ring.size() <= max_size) out.push_back(std::move(f));
  };
  for (Scalar k : {2, 3}) {
    for (const auto& n : names()) add(n, k);
  }
  add("matrix2", 4);
  add("triangular2", 4);
  return out;
}

}  // namespace peirce::fixtures
