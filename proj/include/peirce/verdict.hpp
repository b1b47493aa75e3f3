#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "peirce/ring.hpp"

namespace peirce {

/// A concrete counterexample: the relation that failed, its arguments, and
/// the offending value when there is one.
struct Witness {
  std::string relation;
  std::vector<Element> args;
  std::optional<Element> value;
};

/// Outcome of a decision procedure. A failing verdict always carries a
/// witness that re-verifies.
struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return holds; }

  static Verdict pass() { return {}; }
  static Verdict fail(Witness w) { return {false, std::move(w)}; }
};

}  // namespace peirce
