#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "peirce/fixtures.hpp"
#include "peirce/lie_maps.hpp"
#include "peirce/report.hpp"
#include "peirce/ring_io.hpp"

using namespace peirce;
namespace fx = peirce::fixtures;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(PEIRCE_CLI) + " " + args + " > cli_out.txt 2> cli_err.txt";
  const int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, read_file("cli_out.txt"), read_file("cli_err.txt")};
}

std::string golden(const char* name) {
  return (std::filesystem::path(PEIRCE_GOLDEN_DIR) / name).string();
}

bool has(const std::string& text, const std::string& part) {
  return text.find(part) != std::string::npos;
}

void write(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

Element el(const Ring& r, const char* text) { return parse_element(r, text); }

}  // namespace

TEST_CASE("fixtures export reproduces the golden files") {
  for (const auto& [name, file] : {std::pair{"example1", "example1_k2.json"},
                                   std::pair{"example2", "example2_k2.json"}}) {
    const Run r = cli(std::string("fixtures export ") + name + " --modulus 2");
    CHECK(r.status == 0);
    CHECK(r.out == read_file(golden(file)));
  }
  CHECK(cli("fixtures export nosuch").status == 2);
  const Run list = cli("fixtures list");
  CHECK(has(list.out, "zorn"));
}

TEST_CASE("analyze") {
  Run r = cli("analyze " + golden("example2_k2.json") + " --format json");
  REQUIRE(r.status == 0);
  const Ring ring = load_ring_file(golden("example2_k2.json"));
  const AnalysisReport parsed = analysis_report_from_json(parse_json(r.out), ring);
  CHECK(parsed == analyze(ring));
  CHECK_FALSE(parsed.associative.holds);
  CHECK(parsed.associative.witness->args ==
        std::vector<Element>{el(ring, "b12"), el(ring, "c21"), el(ring, "a11")});

  r = cli("analyze " + golden("example1_k2.json") +
          " --assert flags.associative=true --assert flags.torsion_free.3=true");
  CHECK(r.status == 0);
  CHECK(has(r.out, "associative: yes"));

  r = cli("analyze " + golden("example2_k2.json") + " --assert flags.alternative=true");
  CHECK(r.status == 1);
  CHECK(has(r.err, "assertion failed: flags.alternative"));
  CHECK(cli("analyze matrix2_k2 --assert flags.nosuch=true").status == 1);
  CHECK(cli("analyze matrix2_k2 --assert novalue").status == 2);
  CHECK(cli("analyze matrix2_k2 --torsion 2,3,4 --assert flags.torsion_free.4=false").status == 0);
}

TEST_CASE("analyze reports positioned parse errors") {
  write("broken.json", "{\n  \"name\": \"x\",\n  \"modulus\": 2,\n  \"basis\": [\"a\",]\n}\n");
  Run r = cli("analyze broken.json");
  CHECK(r.status == 2);
  CHECK(has(r.err, "broken.json: line 4"));
  write("badcoeff.json",
        R"({"name":"x","modulus":2,"basis":["a"],"table":[[[3]]]})");
  r = cli("analyze badcoeff.json");
  CHECK(r.status == 2);
  CHECK(has(r.err, "/table/0/0/0"));
  CHECK(cli("analyze does_not_exist.json").status == 2);
  CHECK(cli("analyze matrix2_k2 --bogus-flag").status == 2);
  CHECK(cli("").status == 2);
}

TEST_CASE("peirce") {
  Run r = cli("peirce " + golden("example1_k2.json") + " --idempotent e --format json");
  REQUIRE(r.status == 0);
  const Ring ring = load_ring_file(golden("example1_k2.json"));
  const PeirceReport p = peirce_report_from_json(parse_json(r.out), ring);
  CHECK(p == peirce_report(PeirceFrame(ring, el(ring, "e"))));
  CHECK_FALSE(p.condition_ii.holds);
  CHECK(p.condition_ii.witness->args.at(0) == el(ring, "b11"));
  CHECK(cli("peirce " + golden("example1_k2.json") +
            " --idempotent 32 --assert condition_ii.holds=false --assert condition_ii.witness.labels.0=b11")
            .status == 0);
  r = cli("peirce matrix2_k2 --idempotent e12");
  CHECK(r.status == 2);
  CHECK(has(r.err, "not an idempotent"));
  CHECK(cli("peirce zorn_k2 --idempotent alpha --assert condition_i.holds=true "
            "--assert condition_ii.holds=true").status == 0);
}

TEST_CASE("verify-map") {
  const Ring m = fx::matrix2(2);
  const Element one = el(m, "e11+e22");
  const Element e11 = el(m, "e11");
  auto swap = [&](const Element& a, const Element& b) {
    return MapTable::from_function(m, m, [&](const Element& x) { return x == a ? b : x == b ? a : x; });
  };
  write("central_swap.json", map_to_json(swap(e11, e11 + one)).dump());
  Run r = cli("verify-map central_swap.json --kind lie --format json");
  REQUIRE(r.status == 0);
  auto j = parse_json(r.out);
  CHECK(j["holds"] == true);
  CHECK(j["defects"]["additive"] == false);
  CHECK(j["defects"]["almost_additive"] == true);
  CHECK(j["defects"]["sample_defect"]["defect"]["element"] == "e11+e22");

  write("identity.json", map_to_json(MapTable::identity(m), true).dump());
  r = cli("verify-map identity.json --assert holds=true --assert defects.additive=true");
  CHECK(r.status == 0);

  write("bad.json", map_to_json(swap(e11, el(m, "e12"))).dump());
  r = cli("verify-map bad.json --format json");
  CHECK(r.status == 0);
  j = parse_json(r.out);
  CHECK(j["holds"] == false);
  CHECK(j["witness"]["args"].size() == 2);

  write("ad.json", map_to_json(inner_lie_derivation(el(m, "e12"))).dump());
  CHECK(cli("verify-map ad.json --kind lie-derivable --assert holds=true --assert defects.additive=true").status == 0);
  CHECK(cli("verify-map ad.json --kind lie-triple --assert holds=true").status == 0);

  // Ring files are matched to map files by name.
  const Ring e2 = load_ring_file(golden("example2_k2.json"));
  write("e2_identity.json", map_to_json(MapTable::identity(e2)).dump());
  CHECK(cli(golden("example2_k2.json").insert(0, "verify-map ") + " e2_identity.json --assert holds=true").status == 0);

  write("short.json", R"({"domain":"matrix2_k2","codomain":"matrix2_k2","values":[0,1]})");
  r = cli("verify-map short.json");
  CHECK(r.status == 2);
  CHECK(has(r.err, "/values"));
  CHECK(cli("verify-map ad.json --kind nosuch").status == 2);
}

TEST_CASE("search-maps") {
  Run r = cli("search-maps triangular2_k2 --self --format json --out-dir found");
  REQUIRE(r.status == 0);
  auto j = parse_json(r.out);
  CHECK(j["complete"] == true);
  const auto s = search_lie_multiplicative_bijections(fx::triangular2(2), fx::triangular2(2));
  REQUIRE(j["maps"].size() == s.maps.size());
  for (std::size_t i = 0; i < s.maps.size(); ++i) {
    CHECK(j["maps"][i]["values"] == parse_json(map_to_json(s.maps[i]).dump())["values"]);
  }
  CHECK(std::filesystem::exists("found/map_0000.json"));
  CHECK(cli("verify-map found/map_0000.json --assert holds=true").status == 0);
  r = cli("search-maps triangular2_k2 --self --budget 1 --format json");
  CHECK(r.status == 0);
  CHECK(parse_json(r.out)["complete"] == false);
  CHECK(cli("search-maps triangular2_k2 --self --budget 0").status == 2);
  CHECK(cli("search-maps triangular2_k2 --self --budget -3").status == 2);
  CHECK(cli("search-maps triangular2_k2").status == 2);
  CHECK(cli("search-maps triangular2_k2 --codomain matrix2_k2").status == 2);
  CHECK(cli("search-maps matrix2_k2 --self --assert complete=true --assert count=384").status == 0);
}

TEST_CASE("runs are deterministic") {
  const Run a = cli("analyze zorn_k2 --format json");
  const Run b = cli("analyze zorn_k2 --format json");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}
