#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "peirce/ring.hpp"
#include "peirce/verdict.hpp"

namespace peirce {

/// A set map between finite rings, stored as its full value table:
/// values[element_index(x)] = element_index(image of x).
///
/// Lie multiplicative maps need not be additive, so basis images do not
/// determine them.
class MapTable {
 public:
  /// Throws std::invalid_argument unless values has one in-range entry per
  /// domain element.
  MapTable(Ring domain, Ring codomain, std::vector<std::uint64_t> values);

  static MapTable from_function(const Ring& domain, const Ring& codomain,
                                const std::function<Element(const Element&)>& f);
  static MapTable identity(const Ring& ring);
  static MapTable zero(const Ring& domain, const Ring& codomain);

  const Ring& domain() const { return domain_; }
  const Ring& codomain() const { return codomain_; }
  const std::vector<std::uint64_t>& values() const { return values_; }

  Element operator()(const Element& x) const;
  std::uint64_t operator[](std::uint64_t index) const { return values_[index]; }

  bool is_bijective() const;

  /// Pointwise composition, (this after inner)(x) = this(inner(x)).
  MapTable after(const MapTable& inner) const;

  friend bool operator==(const MapTable& a, const MapTable& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ &&
           a.values_ == b.values_;
  }

 private:
  Ring domain_;
  Ring codomain_;
  std::vector<std::uint64_t> values_;
};

/// phi([x,y]) = [phi(x), phi(y)] for all ordered pairs.
Verdict is_lie_multiplicative(const MapTable& phi);

/// D([x,y]) = [D(x),y] + [x,D(y)] for all pairs. Self-maps only.
Verdict is_lie_derivable(const MapTable& d);

/// D([[x,y],z]) = [[D(x),y],z] + [[x,D(y)],z] + [[x,y],D(z)] for all triples.
Verdict is_lie_triple_derivable(const MapTable& d);

struct Derivability {
  Verdict derivable;
  Verdict triple_derivable;
};

/// Both predicates; throws std::logic_error if a Lie derivable map is not
/// Lie triple derivable.
Derivability evaluate_derivability(const MapTable& d);

/// phi(a+b) - phi(a) - phi(b).
Element additivity_defect(const MapTable& phi, const Element& a, const Element& b);

/// Additivity defects of every ordered pair, judged against the centre of
/// the codomain.
class DefectReport {
 public:
  explicit DefectReport(const MapTable& phi);

  /// Stored defect of the pair.
  Element defect(const Element& a, const Element& b) const;

  bool all_zero() const { return !first_nonzero_.has_value(); }
  bool all_central() const { return !first_non_central_.has_value(); }

  /// Least (a, b) with a nonzero defect, or with a defect outside the centre.
  const std::optional<std::pair<Element, Element>>& first_nonzero() const {
    return first_nonzero_;
  }
  const std::optional<std::pair<Element, Element>>& first_non_central() const {
    return first_non_central_;
  }

  /// Every stored defect agrees with a fresh evaluation of the map.
  bool recomputes(const MapTable& phi) const;

 private:
  Ring domain_;
  Ring codomain_;
  std::vector<std::uint64_t> defects_;
  std::optional<std::pair<Element, Element>> first_nonzero_;
  std::optional<std::pair<Element, Element>> first_non_central_;
};

/// All defects lie in the centre of the codomain.
DefectReport check_almost_additive(const MapTable& phi);

/// y -> [x, y].
MapTable inner_lie_derivation(const Element& x);

/// psi(x) = phi(x) + shift(x). Throws std::invalid_argument unless every
/// shift value is central in the codomain and the shift vanishes on every
/// commutator value [x, y] of the domain.
MapTable central_shift(const MapTable& phi,
                       const std::function<Element(const Element&)>& shift);

struct SearchOptions {
  /// Maximum number of partial assignments visited.
  std::uint64_t budget = 1'000'000;
  /// Require distinct images (bijections). Without it the search finds all
  /// Lie multiplicative maps.
  bool injective = true;
};

struct SearchResult {
  /// Lexicographic order of value tables.
  std::vector<MapTable> maps;
  /// The search tree was exhausted within budget.
  bool complete = false;
  std::uint64_t nodes = 0;
};

/// Backtracking in ascending element_index order. phi(0) = 0 is forced and
/// each bracket constraint is checked as soon as x, y and [x,y] are
/// assigned.
SearchResult search_lie_multiplicative_bijections(const Ring& domain,
                                                  const Ring& codomain,
                                                  const SearchOptions& options = {});

/// Map file: {"domain", "codomain", "values"}; domain and codomain are ring
/// names or inline ring objects.
nlohmann::ordered_json map_to_json(const MapTable& phi, bool inline_rings = false);

using RingResolver = std::function<std::optional<Ring>(const std::string& name)>;

/// Named rings are looked up through resolve; inline rings are loaded. A
/// domain equal by name to the codomain yields a single shared Ring.
MapTable map_from_json(const nlohmann::json& j, const RingResolver& resolve);

}  // namespace peirce
