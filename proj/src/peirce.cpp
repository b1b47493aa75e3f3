#include "peirce/peirce.hpp"

#include <stdexcept>
#include <string>

#include "peirce/analysis.hpp"

namespace peirce {

namespace {

std::size_t slot(int i, int j) {
  if (i < 1 || i > 2 || j < 1 || j > 2) {
    throw std::out_of_range("Peirce indices must be 1 or 2");
  }
  return static_cast<std::size_t>((i - 1) * 2 + (j - 1));
}

std::string component_name(int i, int j) {
  return "R" + std::to_string(i) + std::to_string(j);
}

Element checked_idempotent(const Ring& ring, Element e1) {
  require_same_ring(ring, e1.ring());
  if (!(e1 * e1 == e1)) {
    throw std::invalid_argument("'" + e1.to_string() + "' is not an idempotent");
  }
  if (!is_nontrivial_idempotent(e1)) {
    throw std::invalid_argument("'" + e1.to_string() +
                                "' is a trivial idempotent (zero or unity)");
  }
  return e1;
}

std::array<Submodule, 4> components_of(const Ring& ring, const Element& e1) {
  std::array<std::vector<Coeffs>, 4> images;
  for (const auto& b : ring.basis_elements()) {
    const Element eb = e1 * b;
    const Element be = b * e1;
    const Element p11 = e1 * be;
    images[0].push_back(p11.coeffs());
    images[1].push_back((eb - p11).coeffs());
    images[2].push_back((be - p11).coeffs());
    images[3].push_back((b - eb - be + p11).coeffs());
  }
  const Scalar k = ring.modulus();
  const int d = ring.dim();
  return {Submodule::span(images[0], k, d), Submodule::span(images[1], k, d),
          Submodule::span(images[2], k, d), Submodule::span(images[3], k, d)};
}

/// Least pair (x, y), x in a and y in b, with x*y outside target (or nonzero
/// when target is null).
std::optional<Witness> least_product_violation(const Ring& ring,
                                               const Submodule& a,
                                               const Submodule& b,
                                               const Submodule* target,
                                               const std::string& relation) {
  for (const auto& x : elements_of(ring, a)) {
    for (const auto& y : elements_of(ring, b)) {
      const Element p = x * y;
      const bool ok = target ? target->contains(p.coeffs()) : p.is_zero();
      if (!ok) return Witness{relation, {x, y}, p};
    }
  }
  return std::nullopt;
}

}  // namespace

const Element& PeirceParts::operator()(int i, int j) const {
  switch (slot(i, j)) {
    case 0: return p11;
    case 1: return p12;
    case 2: return p21;
    default: return p22;
  }
}

PeirceFrame::PeirceFrame(const Ring& ring, Element e1)
    : ring_(ring),
      e1_(checked_idempotent(ring, std::move(e1))),
      components_(components_of(ring_, e1_)) {
  const Scalar k = ring_.modulus();
  const int d = ring_.dim();

  Submodule total(k, d);
  for (const auto& c : components_) total = total + c;
  if (!(total == Submodule::whole(k, d))) {
    for (std::uint64_t i = 0; i < ring_.size(); ++i) {
      if (!total.contains(ring_.coeffs_at(i))) {
        direct_sum_ = Verdict::fail({"components do not span", {ring_.element_at(i)}, {}});
        break;
      }
    }
  }
  for (int a = 0; a < 4 && direct_sum_.holds; ++a) {
    for (int b = a + 1; b < 4 && direct_sum_.holds; ++b) {
      const Submodule meet =
          components_[static_cast<std::size_t>(a)].intersect(
              components_[static_cast<std::size_t>(b)]);
      if (meet.is_zero()) continue;
      const auto elems = elements_of(ring_, meet);
      direct_sum_ = Verdict::fail(
          {component_name(a / 2 + 1, a % 2 + 1) + " and " +
               component_name(b / 2 + 1, b % 2 + 1) + " intersect",
           {elems.at(1)},
           {}});
    }
  }

  for (const auto& x : ring_.basis_elements()) {
    for (int i = 1; i <= 2 && compatibility_.holds; ++i) {
      for (int j = 1; j <= 2 && compatibility_.holds; ++j) {
        const Element lhs = right_idempotent_action(*this, left_idempotent_action(*this, i, x), j);
        const Element rhs = left_idempotent_action(*this, i, right_idempotent_action(*this, x, j));
        if (!(lhs == rhs)) {
          compatibility_ = Verdict::fail(
              {"(e" + std::to_string(i) + "a)e" + std::to_string(j) + " = e" +
                   std::to_string(i) + "(ae" + std::to_string(j) + ")",
               {x},
               lhs - rhs});
        }
      }
    }
  }
}

const Submodule& PeirceFrame::component(int i, int j) const {
  return components_[slot(i, j)];
}

PeirceParts PeirceFrame::project(const Element& a) const {
  require_same_ring(ring_, a.ring());
  const Element ea = e1_ * a;
  const Element ae = a * e1_;
  const Element p11 = e1_ * ae;
  return {p11, ea - p11, ae - p11, a - ea - ae + p11};
}

Element left_idempotent_action(const PeirceFrame& frame, int i, const Element& a) {
  const Element ea = frame.idempotent() * a;
  return i == 1 ? ea : a - ea;
}

Element right_idempotent_action(const PeirceFrame& frame, const Element& a, int j) {
  const Element ae = a * frame.idempotent();
  return j == 1 ? ae : a - ae;
}

Verdict check_peirce_relations(const PeirceFrame& frame) {
  const Ring& ring = frame.ring();
  if (Verdict alt = is_alternative(ring); !alt) {
    Witness w = *alt.witness;
    w.relation = "ring is not alternative: " + w.relation;
    return Verdict::fail(std::move(w));
  }
  const Submodule zero(ring.modulus(), ring.dim());

  // The bilinear relations are decided on component generators; elements are
  // enumerated only to extract the least witness.
  auto violates = [&](const Submodule& a, const Submodule& b,
                      const Submodule& target) {
    for (int r = 0; r < a.rank(); ++r) {
      for (int s = 0; s < b.rank(); ++s) {
        if (!target.contains(ring.multiply(a.row(r), b.row(s)))) return true;
      }
    }
    return false;
  };
  auto fail = [&](const Submodule& a, const Submodule& b, const Submodule& target,
                  const std::string& relation) {
    return Verdict::fail(
        *least_product_violation(ring, a, b, target.is_zero() ? nullptr : &target, relation));
  };

  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      for (int l = 1; l <= 2; ++l) {
        const auto& a = frame.component(i, j);
        const auto& b = frame.component(j, l);
        const auto& t = frame.component(i, l);
        if (violates(a, b, t)) {
          return fail(a, b, t, "(i) " + component_name(i, j) + "*" +
                                   component_name(j, l) + " in " + component_name(i, l));
        }
      }
    }
  }
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      const auto& a = frame.component(i, j);
      const auto& t = frame.component(j, i);
      if (violates(a, a, t)) {
        return fail(a, a, t, "(ii) " + component_name(i, j) + "*" +
                                 component_name(i, j) + " in " + component_name(j, i));
      }
    }
  }
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      for (int k = 1; k <= 2; ++k) {
        for (int l = 1; l <= 2; ++l) {
          if (j == k || (i == k && j == l)) continue;
          const auto& a = frame.component(i, j);
          const auto& b = frame.component(k, l);
          if (violates(a, b, zero)) {
            return fail(a, b, zero, "(iii) " + component_name(i, j) + "*" +
                                        component_name(k, l) + " = 0");
          }
        }
      }
    }
  }
  for (const auto& [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
    for (const auto& x : elements_of(ring, frame.component(i, j))) {
      const Element sq = x * x;
      if (!sq.is_zero()) {
        return Verdict::fail({"(iv) x^2 = 0 in " + component_name(i, j), {x}, sq});
      }
    }
  }
  return Verdict::pass();
}

Submodule condition_subspace(const PeirceFrame& frame, ConditionSide side) {
  const Ring& ring = frame.ring();
  const Scalar k = ring.modulus();
  const int d = ring.dim();
  const Submodule diagonal = frame.component(1, 1) + frame.component(2, 2);
  const Submodule& off = side == ConditionSide::r12 ? frame.component(1, 2)
                                                    : frame.component(2, 1);
  const int g = diagonal.rank();
  const int m = off.rank();
  if (g == 0) return diagonal;

  // Parametrize s = sum lambda_r g_r over the diagonal generators; the
  // hypothesis is linear in lambda.
  CoeffMatrix map(std::max(m, 1) * d, g);
  map.setZero();
  for (int r = 0; r < g; ++r) {
    const Element gr = ring.element(diagonal.row(r));
    for (int c = 0; c < m; ++c) {
      map.block(c * d, r, d, 1) = commutator(gr, ring.element(off.row(c))).coeffs();
    }
  }
  const Submodule params = kernel(map, k);
  std::vector<Coeffs> gens;
  for (int p = 0; p < params.rank(); ++p) {
    gens.push_back(reduced(diagonal.rows().transpose() * params.row(p), k));
  }
  return Submodule::span(gens, k, d);
}

Verdict check_condition(const PeirceFrame& frame, ConditionSide side) {
  const Ring& ring = frame.ring();
  const Submodule hypothesis = condition_subspace(frame, side);
  const Submodule z = centre(ring);
  if (z.contains(hypothesis)) return Verdict::pass();
  const std::string off = side == ConditionSide::r12 ? "R12" : "R21";
  for (const auto& s : elements_of(ring, hypothesis)) {
    if (!z.contains(s.coeffs())) {
      return Verdict::fail({"[s," + off + "] = 0 but s not central", {s}, {}});
    }
  }
  throw std::logic_error("check_condition: no witness outside the centre");
}

}  // namespace peirce
