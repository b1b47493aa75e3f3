#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "peirce/fixtures.hpp"
#include "peirce/lie_maps.hpp"
#include "peirce/report.hpp"
#include "peirce/ring_io.hpp"

namespace {

using namespace peirce;
using ojson = nlohmann::ordered_json;

constexpr int kAssertionFailed = 1;
constexpr int kError = 2;

struct Options {
  std::string format = "text";
  std::vector<std::string> asserts;
};

/// A ring file, or a fixture ring name such as "matrix2_k2".
Ring resolve_ring(const std::string& arg) {
  if (std::filesystem::exists(arg)) return load_ring_file(arg);
  if (auto f = fixtures::from_ring_name(arg)) return f->ring;
  throw std::runtime_error("cannot open '" + arg + "' (not a file or fixture ring name)");
}

std::string assertion_text(const ojson& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

/// Checks "a.b.c=value" gates against the JSON report; failures go to stderr.
bool check_asserts(const ojson& report, const std::vector<std::string>& asserts) {
  bool ok = true;
  for (const auto& a : asserts) {
    const auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("--assert expects key=value, got '" + a + "'");
    }
    const std::string key = a.substr(0, eq);
    const std::string want = a.substr(eq + 1);
    std::string pointer;
    std::stringstream parts(key);
    for (std::string part; std::getline(parts, part, '.');) pointer += "/" + part;
    const ojson::json_pointer ptr(pointer);
    if (!report.contains(ptr)) {
      std::cerr << "assertion failed: " << key << " is not a report field\n";
      ok = false;
      continue;
    }
    const std::string got = assertion_text(report.at(ptr));
    if (got != want) {
      std::cerr << "assertion failed: " << key << ": expected " << want << ", got " << got
                << "\n";
      ok = false;
    }
  }
  return ok;
}

int emit(const Options& opt, const ojson& json, const std::string& text) {
  const std::string out = opt.format == "json" ? json.dump(2) + "\n" : text;
  std::fwrite(out.data(), 1, out.size(), stdout);
  std::fflush(stdout);
  return check_asserts(json, opt.asserts) ? 0 : kAssertionFailed;
}

int cmd_analyze(const Options& opt, const std::string& ring_arg,
                const std::vector<Scalar>& orders) {
  const Ring ring = resolve_ring(ring_arg);
  const AnalysisReport r = analyze(ring, orders);
  return emit(opt, to_json(r), to_text(r, ring));
}

int cmd_peirce(const Options& opt, const std::string& ring_arg, const std::string& idem) {
  const Ring ring = resolve_ring(ring_arg);
  const PeirceReport r = peirce_report(PeirceFrame(ring, parse_element(ring, idem)));
  return emit(opt, to_json(r), to_text(r));
}

MapReport map_report(const MapTable& phi, const std::string& kind) {
  MapReport r{kind, {}, phi.is_bijective(), std::nullopt};
  if (kind == "lie") {
    r.predicate = is_lie_multiplicative(phi);
    if (r.predicate.holds && r.bijective) r.defects = check_almost_additive(phi);
    return r;
  }
  const Derivability d = evaluate_derivability(phi);
  r.predicate = kind == "lie-derivable" ? d.derivable : d.triple_derivable;
  if (r.predicate.holds) r.defects = check_almost_additive(phi);
  return r;
}

int cmd_verify_map(const Options& opt, const std::vector<std::string>& files,
                   const std::string& kind) {
  std::map<std::string, Ring> rings;
  for (std::size_t i = 0; i + 1 < files.size(); ++i) {
    const Ring r = resolve_ring(files[i]);
    rings.emplace(r.name(), r);
  }
  const std::string& map_file = files.back();
  const MapTable phi = [&] {
    try {
      return map_from_json(parse_json(read_file(map_file)),
                           [&](const std::string& name) -> std::optional<Ring> {
                             if (auto it = rings.find(name); it != rings.end()) return it->second;
                             if (auto f = fixtures::from_ring_name(name)) return f->ring;
                             return std::nullopt;
                           });
    } catch (const ParseError& e) {
      throw ParseError(map_file + ": " + e.where(),
                       std::string(e.what()).substr(e.where().size() + 2));
    }
  }();
  if (kind != "lie" && !(phi.domain() == phi.codomain())) {
    throw std::invalid_argument("--kind " + kind + " needs a self-map");
  }
  const MapReport r = map_report(phi, kind);
  return emit(opt, to_json(r), to_text(r));
}

int cmd_search(const Options& opt, const std::string& ring_arg, const std::string& codomain_arg,
               bool self, long long budget, bool non_injective, const std::string& out_dir) {
  if (budget <= 0) throw std::invalid_argument("--budget must be positive");
  if (self == !codomain_arg.empty()) {
    throw std::invalid_argument("give exactly one of --self and --codomain");
  }
  const Ring domain = resolve_ring(ring_arg);
  const Ring codomain = self ? domain : resolve_ring(codomain_arg);
  const SearchResult s = search_lie_multiplicative_bijections(
      domain, codomain, {static_cast<std::uint64_t>(budget), !non_injective});

  ojson j;
  j["domain"] = domain.name();
  j["codomain"] = codomain.name();
  j["complete"] = s.complete;
  j["nodes"] = s.nodes;
  j["count"] = s.maps.size();
  ojson maps = ojson::array();
  std::ostringstream text;
  text << "domain: " << domain.name() << "\ncodomain: " << codomain.name()
       << "\ncomplete: " << (s.complete ? "yes" : "no") << "\nnodes: " << s.nodes
       << "\nmaps found: " << s.maps.size() << "\n";
  for (std::size_t i = 0; i < s.maps.size(); ++i) {
    const MapTable& phi = s.maps[i];
    const bool almost = check_almost_additive(phi).all_central();
    ojson m = map_to_json(phi);
    m["almost_additive"] = almost;
    text << "map " << i << ": almost additive: " << (almost ? "yes" : "no") << "  values "
         << map_to_json(phi)["values"].dump() << "\n";
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      char name[32];
      std::snprintf(name, sizeof name, "map_%04zu.json", i);
      std::ofstream(std::filesystem::path(out_dir) / name) << map_to_json(phi).dump(2) << "\n";
    }
    maps.push_back(std::move(m));
  }
  j["maps"] = std::move(maps);
  return emit(opt, j, text.str());
}

int cmd_export(const std::string& name, Scalar modulus, const std::string& output) {
  const std::string text = write_ring(fixtures::make(name, modulus).ring);
  if (output.empty() || output == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
  } else {
    std::ofstream(output, std::ios::binary) << text;
  }
  return 0;
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--assert", opt.asserts,
                  "Gate on a report field, e.g. flags.alternative=true (repeatable)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure-constant ring analysis and Lie-map verification"};
  app.require_subcommand(1);
  Options opt;

  std::string ring_arg, idempotent, codomain_arg, kind = "lie", out_dir, fixture_name, output;
  std::vector<std::string> files;
  std::vector<Scalar> orders{2, 3};
  long long budget = 1'000'000;
  bool self = false, non_injective = false;
  Scalar modulus = 2;

  auto* analyze_cmd = app.add_subcommand("analyze", "Structural report for a ring");
  analyze_cmd->add_option("ring", ring_arg, "Ring file or fixture ring name")->required();
  analyze_cmd->add_option("--torsion", orders, "Torsion orders to test")
      ->delimiter(',')
      ->capture_default_str();
  add_common(analyze_cmd, opt);

  auto* peirce_cmd = app.add_subcommand("peirce", "Peirce decomposition and conditions (i), (ii)");
  peirce_cmd->add_option("ring", ring_arg, "Ring file or fixture ring name")->required();
  peirce_cmd->add_option("--idempotent", idempotent, "Label sum or element index")->required();
  add_common(peirce_cmd, opt);

  auto* verify_cmd = app.add_subcommand("verify-map", "Check a map file against a predicate");
  verify_cmd->add_option("files", files, "Ring files referenced by name, then the map file")
      ->required();
  verify_cmd->add_option("--kind", kind, "Predicate")
      ->check(CLI::IsMember({"lie", "lie-derivable", "lie-triple"}))
      ->capture_default_str();
  add_common(verify_cmd, opt);

  auto* search_cmd = app.add_subcommand("search-maps", "Enumerate Lie multiplicative bijections");
  search_cmd->add_option("ring", ring_arg, "Domain ring file or fixture ring name")->required();
  search_cmd->add_flag("--self", self, "Search maps from the ring to itself");
  search_cmd->add_option("--codomain", codomain_arg, "Codomain ring file or fixture ring name");
  search_cmd->add_option("--budget", budget, "Node budget")->capture_default_str();
  search_cmd->add_flag("--non-injective", non_injective, "Drop the injectivity constraint");
  search_cmd->add_option("--out-dir", out_dir, "Write each map as a map file here");
  add_common(search_cmd, opt);

  auto* fixtures_cmd = app.add_subcommand("fixtures", "Fixture rings");
  fixtures_cmd->require_subcommand(1);
  auto* export_cmd = fixtures_cmd->add_subcommand("export", "Write a fixture as a ring file");
  export_cmd->add_option("name", fixture_name, "Fixture name")
      ->required()
      ->check(CLI::IsMember(fixtures::names()));
  export_cmd->add_option("--modulus", modulus, "Coefficient modulus k")->capture_default_str();
  export_cmd->add_option("-o,--output", output, "Output file (default stdout)");
  auto* list_cmd = fixtures_cmd->add_subcommand("list", "List fixture names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(opt, ring_arg, orders);
    if (*peirce_cmd) return cmd_peirce(opt, ring_arg, idempotent);
    if (*verify_cmd) return cmd_verify_map(opt, files, kind);
    if (*search_cmd) {
      return cmd_search(opt, ring_arg, codomain_arg, self, budget, non_injective, out_dir);
    }
    if (*export_cmd) return cmd_export(fixture_name, modulus, output);
    if (*list_cmd) {
      for (const auto& n : fixtures::names()) std::cout << n << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
