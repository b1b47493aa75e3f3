#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "peirce/analysis.hpp"
#include "peirce/lie_maps.hpp"
#include "peirce/peirce.hpp"

namespace peirce {

bool operator==(const Witness& a, const Witness& b);
bool operator==(const Verdict& a, const Verdict& b);

struct TorsionAnswer {
  Scalar order;
  Verdict verdict;

  friend bool operator==(const TorsionAnswer&, const TorsionAnswer&) = default;
};

/// Every structural predicate of one ring.
struct AnalysisReport {
  std::string ring;
  Verdict associative;
  Verdict alternative;
  Verdict flexible;
  Verdict linearized_flexible;
  std::vector<TorsionAnswer> torsion_free;
  Verdict prime_by_ideals;
  Verdict prime_left;
  Verdict prime_right;
  Submodule nucleus;
  Submodule centre;
  std::optional<Element> unity;
  std::vector<Idempotent> idempotents;

  bool prime_procedures_agree() const {
    return prime_by_ideals.holds == prime_left.holds &&
           prime_left.holds == prime_right.holds;
  }
};

bool operator==(const AnalysisReport& a, const AnalysisReport& b);

AnalysisReport analyze(const Ring& ring, const std::vector<Scalar>& torsion_orders = {2, 3});

/// Stable key order: ring, flags, nucleus, centre, unity, idempotents,
/// witnesses. Submodules are lists of canonical rows; elements are
/// element_index values with a label-sum rendering alongside.
nlohmann::ordered_json to_json(const AnalysisReport& report);

/// Inverse of to_json for reports of `ring`. Throws ParseError.
AnalysisReport analysis_report_from_json(const nlohmann::json& j, const Ring& ring);

/// Peirce frame summary: component bases, relation checks, conditions.
struct PeirceReport {
  Element idempotent;
  std::vector<Submodule> components;  // R11, R12, R21, R22
  Verdict direct_sum;
  Verdict compatibility;
  Verdict relations;
  Submodule condition_i_subspace;
  Submodule condition_ii_subspace;
  Verdict condition_i;
  Verdict condition_ii;
};

bool operator==(const PeirceReport& a, const PeirceReport& b);

PeirceReport peirce_report(const PeirceFrame& frame);
nlohmann::ordered_json to_json(const PeirceReport& report);
PeirceReport peirce_report_from_json(const nlohmann::json& j, const Ring& ring);

/// Predicate verdict of a map plus, when applicable, its defect summary.
struct MapReport {
  std::string kind;
  Verdict predicate;
  bool bijective;
  std::optional<DefectReport> defects;
};

nlohmann::ordered_json to_json(const MapReport& report);

nlohmann::ordered_json witness_to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j, const Ring& ring);

/// Human-readable renderings.
std::string to_text(const AnalysisReport& report, const Ring& ring);
std::string to_text(const PeirceReport& report);
std::string to_text(const MapReport& report);

}  // namespace peirce
