#include "peirce/lie_maps.hpp"

#include <stdexcept>

#include "peirce/analysis.hpp"
#include "peirce/cayley.hpp"
#include "peirce/ring_io.hpp"

namespace peirce {

namespace {

using Index = CayleyTable::Index;

void require_self_map(const MapTable& d) {
  if (!(d.domain() == d.codomain())) {
    throw std::invalid_argument("derivable maps must be self-maps");
  }
}

Index image(const MapTable& phi, Index x) { return static_cast<Index>(phi[x]); }

std::vector<bool> central_indices(const Ring& ring) {
  const Submodule z = centre(ring);
  std::vector<bool> out(ring.size());
  for (std::uint64_t i = 0; i < ring.size(); ++i) out[i] = z.contains(ring.coeffs_at(i));
  return out;
}

}  // namespace

MapTable::MapTable(Ring domain, Ring codomain, std::vector<std::uint64_t> values)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), values_(std::move(values)) {
  if (values_.size() != domain_.size()) {
    throw std::invalid_argument("map must list " + std::to_string(domain_.size()) +
                                " values, got " + std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] >= codomain_.size()) {
      throw std::invalid_argument("value " + std::to_string(values_[i]) + " at position " +
                                  std::to_string(i) + " is not an element index of '" +
                                  codomain_.name() + "'");
    }
  }
}

MapTable MapTable::from_function(const Ring& domain, const Ring& codomain,
                                 const std::function<Element(const Element&)>& f) {
  std::vector<std::uint64_t> values(domain.size());
  for (std::uint64_t i = 0; i < domain.size(); ++i) {
    const Element y = f(domain.element_at(i));
    require_same_ring(codomain, y.ring());
    values[i] = y.index();
  }
  return MapTable(domain, codomain, std::move(values));
}

MapTable MapTable::identity(const Ring& ring) {
  std::vector<std::uint64_t> values(ring.size());
  for (std::uint64_t i = 0; i < ring.size(); ++i) values[i] = i;
  return MapTable(ring, ring, std::move(values));
}

MapTable MapTable::zero(const Ring& domain, const Ring& codomain) {
  return MapTable(domain, codomain, std::vector<std::uint64_t>(domain.size(), 0));
}

Element MapTable::operator()(const Element& x) const {
  require_same_ring(domain_, x.ring());
  return codomain_.element_at(values_[x.index()]);
}

bool MapTable::is_bijective() const {
  if (domain_.size() != codomain_.size()) return false;
  std::vector<bool> hit(codomain_.size(), false);
  for (auto v : values_) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

MapTable MapTable::after(const MapTable& inner) const {
  require_same_ring(domain_, inner.codomain_);
  std::vector<std::uint64_t> values(inner.values_.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = values_[inner.values_[i]];
  return MapTable(inner.domain_, codomain_, std::move(values));
}

Verdict is_lie_multiplicative(const MapTable& phi) {
  const CayleyTable dom(phi.domain());
  const CayleyTable cod(phi.codomain());
  for (Index x = 0; x < dom.size(); ++x) {
    for (Index y = 0; y < dom.size(); ++y) {
      const Index lhs = image(phi, dom.bracket(x, y));
      const Index rhs = cod.bracket(image(phi, x), image(phi, y));
      if (lhs != rhs) {
        return Verdict::fail({"phi([x,y]) = [phi(x),phi(y)]",
                              {phi.domain().element_at(x), phi.domain().element_at(y)},
                              phi.codomain().element_at(cod.sub(lhs, rhs))});
      }
    }
  }
  return Verdict::pass();
}

Verdict is_lie_derivable(const MapTable& d) {
  require_self_map(d);
  const CayleyTable t(d.domain());
  for (Index x = 0; x < t.size(); ++x) {
    for (Index y = 0; y < t.size(); ++y) {
      const Index lhs = image(d, t.bracket(x, y));
      const Index rhs = t.add(t.bracket(image(d, x), y), t.bracket(x, image(d, y)));
      if (lhs != rhs) {
        return Verdict::fail({"D([x,y]) = [D(x),y] + [x,D(y)]",
                              {d.domain().element_at(x), d.domain().element_at(y)},
                              d.domain().element_at(t.sub(lhs, rhs))});
      }
    }
  }
  return Verdict::pass();
}

Verdict is_lie_triple_derivable(const MapTable& d) {
  require_self_map(d);
  const CayleyTable t(d.domain());
  for (Index x = 0; x < t.size(); ++x) {
    for (Index y = 0; y < t.size(); ++y) {
      const Index xy = t.bracket(x, y);
      const Index dx_y = t.bracket(image(d, x), y);
      const Index x_dy = t.bracket(x, image(d, y));
      for (Index z = 0; z < t.size(); ++z) {
        const Index lhs = image(d, t.bracket(xy, z));
        const Index rhs = t.add(t.add(t.bracket(dx_y, z), t.bracket(x_dy, z)),
                                t.bracket(xy, image(d, z)));
        if (lhs != rhs) {
          const Ring& r = d.domain();
          return Verdict::fail(
              {"D([[x,y],z]) = [[D(x),y],z] + [[x,D(y)],z] + [[x,y],D(z)]",
               {r.element_at(x), r.element_at(y), r.element_at(z)},
               r.element_at(t.sub(lhs, rhs))});
        }
      }
    }
  }
  return Verdict::pass();
}

Derivability evaluate_derivability(const MapTable& d) {
  Derivability out{is_lie_derivable(d), is_lie_triple_derivable(d)};
  if (out.derivable.holds && !out.triple_derivable.holds) {
    throw std::logic_error("Lie derivable map is not Lie triple derivable");
  }
  return out;
}

Element additivity_defect(const MapTable& phi, const Element& a, const Element& b) {
  return phi(a + b) - phi(a) - phi(b);
}

DefectReport::DefectReport(const MapTable& phi)
    : domain_(phi.domain()), codomain_(phi.codomain()) {
  const CayleyTable dom(domain_);
  const CayleyTable cod(codomain_);
  const std::vector<bool> central = central_indices(codomain_);
  const Index n = dom.size();
  defects_.resize(static_cast<std::size_t>(n) * n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const Index d = cod.sub(cod.sub(image(phi, dom.add(a, b)), image(phi, a)), image(phi, b));
      defects_[static_cast<std::size_t>(a) * n + b] = d;
      if (d != 0 && !first_nonzero_) {
        first_nonzero_.emplace(domain_.element_at(a), domain_.element_at(b));
      }
      if (!central[d] && !first_non_central_) {
        first_non_central_.emplace(domain_.element_at(a), domain_.element_at(b));
      }
    }
  }
}

Element DefectReport::defect(const Element& a, const Element& b) const {
  require_same_ring(domain_, a.ring());
  require_same_ring(domain_, b.ring());
  return codomain_.element_at(defects_[a.index() * domain_.size() + b.index()]);
}

bool DefectReport::recomputes(const MapTable& phi) const {
  for (std::uint64_t a = 0; a < domain_.size(); ++a) {
    for (std::uint64_t b = 0; b < domain_.size(); ++b) {
      const Element x = domain_.element_at(a);
      const Element y = domain_.element_at(b);
      if (!(additivity_defect(phi, x, y) == defect(x, y))) return false;
    }
  }
  return true;
}

DefectReport check_almost_additive(const MapTable& phi) { return DefectReport(phi); }

MapTable inner_lie_derivation(const Element& x) {
  const Ring& r = x.ring();
  return MapTable::from_function(r, r, [&](const Element& y) { return commutator(x, y); });
}

MapTable central_shift(const MapTable& phi,
                       const std::function<Element(const Element&)>& shift) {
  const Ring& dom = phi.domain();
  const Ring& cod = phi.codomain();
  const Submodule z = centre(cod);
  const CayleyTable t(dom);
  std::vector<bool> is_commutator(dom.size(), false);
  for (Index x = 0; x < t.size(); ++x) {
    for (Index y = 0; y < t.size(); ++y) is_commutator[t.bracket(x, y)] = true;
  }
  std::vector<std::uint64_t> values(dom.size());
  for (std::uint64_t i = 0; i < dom.size(); ++i) {
    const Element x = dom.element_at(i);
    const Element s = shift(x);
    require_same_ring(cod, s.ring());
    if (!z.contains(s.coeffs())) {
      throw std::invalid_argument("shift value " + s.to_string() + " at " + x.to_string() +
                                  " is not central");
    }
    if (is_commutator[i] && !s.is_zero()) {
      throw std::invalid_argument("shift must vanish on the commutator value " +
                                  x.to_string());
    }
    values[i] = (phi(x) + s).index();
  }
  return MapTable(dom, cod, std::move(values));
}

namespace {

class LieMapSearch {
 public:
  LieMapSearch(const Ring& domain, const Ring& codomain, const SearchOptions& options)
      : domain_(domain), codomain_(codomain), dom_(domain), cod_(codomain),
        options_(options), n_(dom_.size()), m_(cod_.size()), phi_(n_, 0), used_(m_, false),
        preimages_(n_) {
    for (Index x = 0; x < n_; ++x) {
      for (Index y = 0; y < n_; ++y) {
        const Index c = dom_.bracket(x, y);
        if (c > x && c > y) preimages_[c].emplace_back(x, y);
      }
    }
  }

  SearchResult run() {
    result_.complete = extend(0);
    return std::move(result_);
  }

 private:
  /// Constraints that become fully assigned once phi(t) = v.
  bool consistent(Index t, Index v) const {
    auto value = [&](Index x) { return x == t ? v : phi_[x]; };
    for (Index y = 0; y <= t; ++y) {
      for (const auto& [a, b] : {std::pair{t, y}, std::pair{y, t}}) {
        const Index c = dom_.bracket(a, b);
        if (c <= t && cod_.bracket(value(a), value(b)) != value(c)) return false;
      }
    }
    for (const auto& [a, b] : preimages_[t]) {
      if (cod_.bracket(phi_[a], phi_[b]) != v) return false;
    }
    return true;
  }

  /// False once the budget is exhausted.
  bool extend(Index t) {
    if (t == n_) {
      std::vector<std::uint64_t> values(phi_.begin(), phi_.end());
      result_.maps.emplace_back(domain_, codomain_, std::move(values));
      return true;
    }
    // phi(0) = phi([0,0]) = [phi(0),phi(0)] = 0.
    const Index last = t == 0 ? 1 : m_;
    for (Index v = 0; v < last; ++v) {
      if (options_.injective && used_[v]) continue;
      if (!consistent(t, v)) continue;
      if (result_.nodes >= options_.budget) return false;
      ++result_.nodes;
      phi_[t] = v;
      used_[v] = true;
      const bool finished = extend(t + 1);
      used_[v] = false;
      if (!finished) return false;
    }
    return true;
  }

  Ring domain_;
  Ring codomain_;
  CayleyTable dom_;
  CayleyTable cod_;
  SearchOptions options_;
  Index n_;
  Index m_;
  std::vector<Index> phi_;
  std::vector<bool> used_;
  std::vector<std::vector<std::pair<Index, Index>>> preimages_;
  SearchResult result_;
};

}  // namespace

SearchResult search_lie_multiplicative_bijections(const Ring& domain, const Ring& codomain,
                                                  const SearchOptions& options) {
  if (domain.size() != codomain.size() && options.injective) {
    throw std::invalid_argument("search needs rings of equal size");
  }
  if (options.budget == 0) throw std::invalid_argument("search budget must be positive");
  return LieMapSearch(domain, codomain, options).run();
}

nlohmann::ordered_json map_to_json(const MapTable& phi, bool inline_rings) {
  nlohmann::ordered_json j;
  if (inline_rings) {
    j["domain"] = ring_to_json(phi.domain());
    j["codomain"] = ring_to_json(phi.codomain());
  } else {
    j["domain"] = phi.domain().name();
    j["codomain"] = phi.codomain().name();
  }
  j["values"] = phi.values();
  return j;
}

MapTable map_from_json(const nlohmann::json& j, const RingResolver& resolve) {
  if (!j.is_object()) throw ParseError("/", "expected an object");
  auto ring_at = [&](const char* key) -> Ring {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError("/", std::string("missing key '") + key + "'");
    if (it->is_string()) {
      auto r = resolve(it->get<std::string>());
      if (!r) {
        throw ParseError(std::string("/") + key,
                         "unknown ring '" + it->get<std::string>() + "'");
      }
      return *r;
    }
    return ring_from_json(*it, std::string("/") + key);
  };
  const Ring domain = ring_at("domain");
  Ring codomain = ring_at("codomain");
  if (codomain.name() == domain.name() && codomain.modulus() == domain.modulus() &&
      codomain.labels() == domain.labels() && codomain.spec().table == domain.spec().table) {
    codomain = domain;
  }

  auto it = j.find("values");
  if (it == j.end()) throw ParseError("/", "missing key 'values'");
  if (!it->is_array()) throw ParseError("/values", "expected an array");
  if (it->size() != domain.size()) {
    throw ParseError("/values", "expected " + std::to_string(domain.size()) +
                                    " values, got " + std::to_string(it->size()));
  }
  std::vector<std::uint64_t> values;
  values.reserve(it->size());
  for (std::size_t i = 0; i < it->size(); ++i) {
    const auto& v = (*it)[i];
    const std::string at = "/values/" + std::to_string(i);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
        static_cast<std::uint64_t>(v.get<std::int64_t>()) >= codomain.size()) {
      throw ParseError(at, "expected an element index below " +
                               std::to_string(codomain.size()));
    }
    values.push_back(v.get<std::uint64_t>());
  }
  return MapTable(domain, codomain, std::move(values));
}

}  // namespace peirce
