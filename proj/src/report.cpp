#include "peirce/report.hpp"

#include <algorithm>
#include <sstream>

#include "peirce/ring_io.hpp"

namespace peirce {

namespace {

using ojson = nlohmann::ordered_json;

ojson rows_to_json(const Submodule& m) {
  ojson rows = ojson::array();
  for (int i = 0; i < m.rank(); ++i) {
    const Coeffs r = m.row(i);
    rows.push_back(std::vector<Scalar>(r.data(), r.data() + r.size()));
  }
  return rows;
}

Submodule rows_from_json(const nlohmann::json& j, const Ring& ring, const std::string& at) {
  if (!j.is_array()) throw ParseError(at, "expected an array of rows");
  std::vector<Coeffs> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& r = j[i];
    if (!r.is_array() || r.size() != static_cast<std::size_t>(ring.dim())) {
      throw ParseError(at + "/" + std::to_string(i), "expected a coefficient row");
    }
    Coeffs c(ring.dim());
    for (int l = 0; l < ring.dim(); ++l) c(l) = r[static_cast<std::size_t>(l)].get<Scalar>();
    rows.push_back(c);
  }
  return Submodule::span(rows, ring.modulus(), ring.dim());
}

ojson element_to_json(const Element& x) {
  ojson j;
  j["index"] = x.index();
  j["element"] = x.to_string();
  return j;
}

Element element_from_json(const nlohmann::json& j, const Ring& ring, const std::string& at) {
  if (!j.is_object() || !j.contains("index") || !j["index"].is_number_unsigned()) {
    throw ParseError(at, "expected {\"index\", \"element\"}");
  }
  const auto i = j["index"].get<std::uint64_t>();
  if (i >= ring.size()) throw ParseError(at + "/index", "element index out of range");
  return ring.element_at(i);
}

const char* kind_name(IdempotentKind k) {
  switch (k) {
    case IdempotentKind::zero: return "zero";
    case IdempotentKind::unity: return "unity";
    default: return "nontrivial";
  }
}

IdempotentKind kind_from_name(const std::string& s, const std::string& at) {
  if (s == "zero") return IdempotentKind::zero;
  if (s == "unity") return IdempotentKind::unity;
  if (s == "nontrivial") return IdempotentKind::nontrivial;
  throw ParseError(at, "unknown idempotent kind '" + s + "'");
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string describe(const Witness& w) {
  std::ostringstream out;
  out << w.relation << " at (";
  for (std::size_t i = 0; i < w.args.size(); ++i) {
    out << (i ? ", " : "") << w.args[i].to_string();
  }
  out << ")";
  if (w.value) out << " = " << w.value->to_string();
  return out.str();
}

void verdict_line(std::ostringstream& out, const std::string& name, const Verdict& v) {
  out << name << ": " << yes_no(v.holds);
  if (v.witness) out << "  [" << describe(*v.witness) << "]";
  out << "\n";
}

void basis_lines(std::ostringstream& out, const std::string& name, const Ring& ring,
                 const Submodule& m) {
  out << name << " (" << m.size() << " elements): ";
  if (m.is_zero()) out << "0";
  for (int i = 0; i < m.rank(); ++i) {
    out << (i ? ", " : "") << ring.element(m.row(i)).to_string();
  }
  out << "\n";
}

}  // namespace

bool operator==(const Witness& a, const Witness& b) {
  return a.relation == b.relation && a.args == b.args && a.value == b.value;
}

bool operator==(const Verdict& a, const Verdict& b) {
  return a.holds == b.holds && a.witness == b.witness;
}

bool operator==(const AnalysisReport& a, const AnalysisReport& b) {
  if (a.idempotents.size() != b.idempotents.size()) return false;
  for (std::size_t i = 0; i < a.idempotents.size(); ++i) {
    if (!(a.idempotents[i].element == b.idempotents[i].element) ||
        a.idempotents[i].kind != b.idempotents[i].kind) {
      return false;
    }
  }
  return a.ring == b.ring && a.associative == b.associative &&
         a.alternative == b.alternative && a.flexible == b.flexible &&
         a.linearized_flexible == b.linearized_flexible && a.torsion_free == b.torsion_free &&
         a.prime_by_ideals == b.prime_by_ideals && a.prime_left == b.prime_left &&
         a.prime_right == b.prime_right && a.nucleus == b.nucleus && a.centre == b.centre &&
         a.unity == b.unity;
}

AnalysisReport analyze(const Ring& ring, const std::vector<Scalar>& torsion_orders) {
  std::vector<TorsionAnswer> torsion;
  for (Scalar m : torsion_orders) torsion.push_back({m, is_torsion_free(ring, m)});
  std::sort(torsion.begin(), torsion.end(),
            [](const TorsionAnswer& a, const TorsionAnswer& b) { return a.order < b.order; });
  return AnalysisReport{ring.name(),
                        is_associative(ring),
                        is_alternative(ring),
                        is_flexible(ring),
                        check_linearized_flexible(ring),
                        std::move(torsion),
                        is_prime_by_ideals(ring),
                        prime_criterion(ring, PrimeVariant::left),
                        prime_criterion(ring, PrimeVariant::right),
                        nucleus(ring),
                        centre(ring),
                        find_unity(ring),
                        idempotents(ring)};
}

ojson witness_to_json(const Witness& w) {
  ojson j;
  j["relation"] = w.relation;
  ojson args = ojson::array();
  ojson labels = ojson::array();
  for (const auto& a : w.args) {
    args.push_back(a.index());
    labels.push_back(a.to_string());
  }
  j["args"] = std::move(args);
  j["labels"] = std::move(labels);
  j["value"] = w.value ? ojson(w.value->index()) : ojson(nullptr);
  return j;
}

Witness witness_from_json(const nlohmann::json& j, const Ring& ring) {
  Witness w;
  w.relation = j.at("relation").get<std::string>();
  for (const auto& a : j.at("args")) w.args.push_back(ring.element_at(a.get<std::uint64_t>()));
  if (!j.at("value").is_null()) w.value = ring.element_at(j["value"].get<std::uint64_t>());
  return w;
}

ojson to_json(const AnalysisReport& r) {
  ojson flags;
  flags["associative"] = r.associative.holds;
  flags["alternative"] = r.alternative.holds;
  flags["flexible"] = r.flexible.holds;
  flags["linearized_flexible"] = r.linearized_flexible.holds;
  ojson torsion;
  for (const auto& t : r.torsion_free) torsion[std::to_string(t.order)] = t.verdict.holds;
  flags["torsion_free"] = std::move(torsion);
  flags["prime_by_ideals"] = r.prime_by_ideals.holds;
  flags["prime_left"] = r.prime_left.holds;
  flags["prime_right"] = r.prime_right.holds;
  flags["prime_agreement"] = r.prime_procedures_agree();

  ojson witnesses = ojson::object();
  auto add = [&](const std::string& name, const Verdict& v) {
    if (v.witness) witnesses[name] = witness_to_json(*v.witness);
  };
  add("associative", r.associative);
  add("alternative", r.alternative);
  add("flexible", r.flexible);
  add("linearized_flexible", r.linearized_flexible);
  for (const auto& t : r.torsion_free) add("torsion_free_" + std::to_string(t.order), t.verdict);
  add("prime_by_ideals", r.prime_by_ideals);
  add("prime_left", r.prime_left);
  add("prime_right", r.prime_right);

  ojson idem = ojson::array();
  for (const auto& i : r.idempotents) {
    ojson e = element_to_json(i.element);
    e["kind"] = kind_name(i.kind);
    idem.push_back(std::move(e));
  }

  ojson j;
  j["ring"] = r.ring;
  j["flags"] = std::move(flags);
  j["nucleus"] = rows_to_json(r.nucleus);
  j["centre"] = rows_to_json(r.centre);
  j["unity"] = r.unity ? element_to_json(*r.unity) : ojson(nullptr);
  j["idempotents"] = std::move(idem);
  j["witnesses"] = std::move(witnesses);
  return j;
}

AnalysisReport analysis_report_from_json(const nlohmann::json& j, const Ring& ring) {
  try {
    const auto& flags = j.at("flags");
    const auto& witnesses = j.at("witnesses");
    auto verdict = [&](const std::string& witness_key, bool holds) {
      Verdict v{holds, std::nullopt};
      if (witnesses.contains(witness_key)) v.witness = witness_from_json(witnesses[witness_key], ring);
      return v;
    };
    auto flag = [&](const std::string& name) {
      return verdict(name, flags.at(name).get<bool>());
    };
    std::vector<TorsionAnswer> torsion;
    for (const auto& [order, holds] : flags.at("torsion_free").items()) {
      torsion.push_back({std::stoll(order),
                         verdict("torsion_free_" + order, holds.get<bool>())});
    }
    std::sort(torsion.begin(), torsion.end(),
              [](const TorsionAnswer& a, const TorsionAnswer& b) { return a.order < b.order; });
    std::vector<Idempotent> idem;
    for (std::size_t i = 0; i < j.at("idempotents").size(); ++i) {
      const auto& e = j["idempotents"][i];
      const std::string at = "/idempotents/" + std::to_string(i);
      idem.push_back({element_from_json(e, ring, at),
                      kind_from_name(e.at("kind").get<std::string>(), at + "/kind")});
    }
    std::optional<Element> unity;
    if (!j.at("unity").is_null()) unity = element_from_json(j["unity"], ring, "/unity");
    return AnalysisReport{j.at("ring").get<std::string>(),
                          flag("associative"),
                          flag("alternative"),
                          flag("flexible"),
                          flag("linearized_flexible"),
                          std::move(torsion),
                          flag("prime_by_ideals"),
                          flag("prime_left"),
                          flag("prime_right"),
                          rows_from_json(j.at("nucleus"), ring, "/nucleus"),
                          rows_from_json(j.at("centre"), ring, "/centre"),
                          std::move(unity),
                          std::move(idem)};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("/", std::string("malformed analysis report: ") + e.what());
  }
}

PeirceReport peirce_report(const PeirceFrame& frame) {
  return PeirceReport{frame.idempotent(),
                      {frame.component(1, 1), frame.component(1, 2), frame.component(2, 1),
                       frame.component(2, 2)},
                      frame.direct_sum(),
                      frame.compatibility(),
                      check_peirce_relations(frame),
                      condition_subspace(frame, ConditionSide::r12),
                      condition_subspace(frame, ConditionSide::r21),
                      check_condition(frame, ConditionSide::r12),
                      check_condition(frame, ConditionSide::r21)};
}

ojson to_json(const PeirceReport& r) {
  auto verdict = [](const Verdict& v) {
    ojson j;
    j["holds"] = v.holds;
    j["witness"] = v.witness ? witness_to_json(*v.witness) : ojson(nullptr);
    return j;
  };
  ojson j;
  j["idempotent"] = element_to_json(r.idempotent);
  ojson comps;
  const char* names[] = {"R11", "R12", "R21", "R22"};
  for (std::size_t i = 0; i < 4; ++i) comps[names[i]] = rows_to_json(r.components[i]);
  j["components"] = std::move(comps);
  j["direct_sum"] = verdict(r.direct_sum);
  j["compatibility"] = verdict(r.compatibility);
  j["relations"] = verdict(r.relations);
  j["condition_i_subspace"] = rows_to_json(r.condition_i_subspace);
  j["condition_ii_subspace"] = rows_to_json(r.condition_ii_subspace);
  j["condition_i"] = verdict(r.condition_i);
  j["condition_ii"] = verdict(r.condition_ii);
  return j;
}

bool operator==(const PeirceReport& a, const PeirceReport& b) {
  return a.idempotent == b.idempotent && a.components == b.components &&
         a.direct_sum == b.direct_sum && a.compatibility == b.compatibility &&
         a.relations == b.relations && a.condition_i_subspace == b.condition_i_subspace &&
         a.condition_ii_subspace == b.condition_ii_subspace &&
         a.condition_i == b.condition_i && a.condition_ii == b.condition_ii;
}

PeirceReport peirce_report_from_json(const nlohmann::json& j, const Ring& ring) {
  try {
    auto verdict = [&](const std::string& key) {
      const auto& v = j.at(key);
      Verdict out{v.at("holds").get<bool>(), std::nullopt};
      if (!v.at("witness").is_null()) out.witness = witness_from_json(v["witness"], ring);
      return out;
    };
    const auto& comps = j.at("components");
    std::vector<Submodule> components;
    for (const char* name : {"R11", "R12", "R21", "R22"}) {
      components.push_back(rows_from_json(comps.at(name), ring, std::string("/components/") + name));
    }
    return PeirceReport{element_from_json(j.at("idempotent"), ring, "/idempotent"),
                        std::move(components),
                        verdict("direct_sum"),
                        verdict("compatibility"),
                        verdict("relations"),
                        rows_from_json(j.at("condition_i_subspace"), ring, "/condition_i_subspace"),
                        rows_from_json(j.at("condition_ii_subspace"), ring, "/condition_ii_subspace"),
                        verdict("condition_i"),
                        verdict("condition_ii")};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("/", std::string("malformed Peirce report: ") + e.what());
  }
}

ojson to_json(const MapReport& r) {
  ojson j;
  j["kind"] = r.kind;
  j["holds"] = r.predicate.holds;
  j["witness"] = r.predicate.witness ? witness_to_json(*r.predicate.witness) : ojson(nullptr);
  j["bijective"] = r.bijective;
  if (r.defects) {
    const DefectReport& d = *r.defects;
    ojson defects;
    defects["additive"] = d.all_zero();
    defects["almost_additive"] = d.all_central();
    if (const auto& p = d.first_nonzero()) {
      ojson s;
      s["args"] = {p->first.index(), p->second.index()};
      s["labels"] = {p->first.to_string(), p->second.to_string()};
      s["defect"] = element_to_json(d.defect(p->first, p->second));
      defects["sample_defect"] = std::move(s);
    } else {
      defects["sample_defect"] = nullptr;
    }
    if (const auto& p = d.first_non_central()) {
      ojson s;
      s["args"] = {p->first.index(), p->second.index()};
      s["labels"] = {p->first.to_string(), p->second.to_string()};
      s["defect"] = element_to_json(d.defect(p->first, p->second));
      defects["non_central_defect"] = std::move(s);
    } else {
      defects["non_central_defect"] = nullptr;
    }
    j["defects"] = std::move(defects);
  } else {
    j["defects"] = nullptr;
  }
  return j;
}

std::string to_text(const AnalysisReport& r, const Ring& ring) {
  std::ostringstream out;
  out << "ring: " << r.ring << "\n";
  verdict_line(out, "associative", r.associative);
  verdict_line(out, "alternative", r.alternative);
  verdict_line(out, "flexible", r.flexible);
  verdict_line(out, "linearized flexible", r.linearized_flexible);
  for (const auto& t : r.torsion_free) {
    verdict_line(out, std::to_string(t.order) + "-torsion free", t.verdict);
  }
  verdict_line(out, "prime (ideal pairs)", r.prime_by_ideals);
  verdict_line(out, "prime (aR.b criterion)", r.prime_left);
  verdict_line(out, "prime (a.Rb criterion)", r.prime_right);
  out << "primeness procedures agree: " << yes_no(r.prime_procedures_agree()) << "\n";
  basis_lines(out, "nucleus", ring, r.nucleus);
  basis_lines(out, "centre", ring, r.centre);
  out << "unity: " << (r.unity ? r.unity->to_string() : "none") << "\n";
  out << "idempotents:";
  for (const auto& i : r.idempotents) {
    out << " " << i.element.to_string() << " (" << kind_name(i.kind) << ")";
  }
  out << "\n";
  return out.str();
}

std::string to_text(const PeirceReport& r) {
  std::ostringstream out;
  const Ring& ring = r.idempotent.ring();
  out << "idempotent: " << r.idempotent.to_string() << "\n";
  const char* names[] = {"R11", "R12", "R21", "R22"};
  for (std::size_t i = 0; i < 4; ++i) basis_lines(out, names[i], ring, r.components[i]);
  verdict_line(out, "direct sum", r.direct_sum);
  verdict_line(out, "e_i a.e_j = e_i.a e_j", r.compatibility);
  verdict_line(out, "Peirce relations (i)-(iv)", r.relations);
  basis_lines(out, "hypothesis of condition (i)", ring, r.condition_i_subspace);
  verdict_line(out, "condition (i)", r.condition_i);
  basis_lines(out, "hypothesis of condition (ii)", ring, r.condition_ii_subspace);
  verdict_line(out, "condition (ii)", r.condition_ii);
  return out.str();
}

std::string to_text(const MapReport& r) {
  std::ostringstream out;
  verdict_line(out, r.kind, r.predicate);
  out << "bijective: " << yes_no(r.bijective) << "\n";
  if (r.defects) {
    const DefectReport& d = *r.defects;
    out << "additive: " << yes_no(d.all_zero()) << "\n";
    out << "almost additive: " << yes_no(d.all_central()) << "\n";
    if (const auto& p = d.first_nonzero()) {
      out << "sample defect: phi(a+b)-phi(a)-phi(b) at (" << p->first.to_string() << ", "
          << p->second.to_string() << ") = " << d.defect(p->first, p->second).to_string()
          << "\n";
    }
    if (const auto& p = d.first_non_central()) {
      out << "non-central defect at (" << p->first.to_string() << ", "
          << p->second.to_string() << ") = " << d.defect(p->first, p->second).to_string()
          << "\n";
    }
  }
  return out.str();
}

}  // namespace peirce
