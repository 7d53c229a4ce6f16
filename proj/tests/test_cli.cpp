#include <cstdlib>

#include "cli_harness.hpp"
#include "doctest.h"
#include "json.hpp"
#include "torsym/catalog.hpp"
#include "torsym/document.hpp"
#include "torsym/symmetry.hpp"

using namespace torsym;
using harness::run;
using Json = nlohmann::ordered_json;

namespace {

const char* kSquareInequalities = R"({"n": 2, "inequalities": [
  {"normal": [-1, 0], "offset": 0}, {"normal": [1, 0], "offset": 1},
  {"normal": [0, -1], "offset": 0}, {"normal": [0, 1], "offset": 1}]})";

const char* kTriangleInequalities = R"({"n": 2, "inequalities": [
  {"normal": [-1, 0], "offset": 0}, {"normal": [0, -1], "offset": 0},
  {"normal": [1, 1], "offset": "5/2"}]})";

const char* kPyramidInequalities = R"({"n": 3, "inequalities": [
  {"normal": [0, 0, -1], "offset": 0}, {"normal": [1, 0, 1], "offset": 1},
  {"normal": [-1, 0, 1], "offset": 1}, {"normal": [0, 1, 1], "offset": 1},
  {"normal": [0, -1, 1], "offset": 1}]})";

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("validate") {
  auto cp2 = harness::catalog_file("cp2.json", {"cp", "2"});
  CHECK(run({"validate", cp2}).code == cli::kOk);

  auto doc = emit_pair_document(catalog_cp(2));
  doc.replace(doc.find("\"F2\": [0, 1]"), 12, "\"F2\": [0, 2]");
  auto bad = run({"validate", harness::write_file("cp2-doubled.json", doc)});
  CHECK(bad.code == cli::kDomainError);
  CHECK(contains(bad.out, "{F1,F2}"));
  CHECK(contains(bad.out, "{F2,F3}"));

  CHECK(run({"validate", harness::write_file("broken.json", "{\"n\": ")}).code == cli::kParseError);
  CHECK(run({"validate", (harness::scratch_dir() / "missing.json").string()}).code == cli::kParseError);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == cli::kParseError);
  CHECK(run({"frobnicate"}).code == cli::kParseError);
  CHECK(run({"validate"}).code == cli::kParseError);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("symmetry") {
  auto text = run({"symmetry", harness::catalog_file("cp2.json", {"cp", "2"})});
  CHECK(text.code == cli::kOk);
  CHECK(contains(text.out, "group: SU(3)\n"));
  auto h1 = run({"symmetry", harness::catalog_file("h1.json", {"hirzebruch", "1"})});
  CHECK(contains(h1.out, "group: SU(2) x T^1\n"));
  auto json = run({"--json", "symmetry", harness::catalog_file("square.json", {"hirzebruch", "0"})});
  auto j = Json::parse(json.out);
  CHECK(j["schema"] == cli::kReportSchema);
  CHECK(j["command"] == "symmetry");
  CHECK(j["ok"] == true);
  CHECK(j["group"] == "SU(2) x SU(2)");
  CHECK(j["torus_rank"] == 0);
  CHECK(j["construction"]["steps"].size() == 2);
}

TEST_CASE("aut") {
  auto cp2 = run({"aut", harness::catalog_file("cp2.json", {"cp", "2"})});
  CHECK(cp2.code == cli::kOk);
  CHECK(contains(cp2.out, "order: 6 "));
  auto square = run({"--json", "aut", harness::catalog_file("square.json", {"hirzebruch", "0"})});
  auto j = Json::parse(square.out);
  CHECK(j["order"] == 8);
  CHECK(j["phi_image_order"] == 4);

  auto big = harness::catalog_file("cp12.json", {"cp", "12"});
  auto guarded = run({"--json", "aut", big});
  CHECK(guarded.code == cli::kDomainError);
  CHECK(Json::parse(guarded.out)["error"]["kind"] == "SizeGuardError");

  ::setenv("TORSYM_SIZE_GUARD", "2", 1);
  CHECK(run({"aut", harness::catalog_file("cp2.json", {"cp", "2"})}).code == cli::kDomainError);
  ::setenv("TORSYM_SIZE_GUARD", "20", 1);
  CHECK(run({"aut", harness::catalog_file("cp1.json", {"cp", "1"})}).code == cli::kOk);
  ::unsetenv("TORSYM_SIZE_GUARD");
}

TEST_CASE("blowup and blowdown") {
  auto p5 = harness::catalog_file("p5.json", {"p5"});
  auto up = run({"blowup", p5, "F1,F2"});
  REQUIRE(up.code == cli::kOk);
  auto up_pair = parse_pair_document(up.out);
  CHECK(up_pair.facet_count() == 6);
  CHECK(up.out == emit_pair_document(up_pair));

  auto up_path = harness::write_file("p5-up.json", up.out);
  auto down = run({"blowdown", up_path, "E2"});
  REQUIRE(down.code == cli::kOk);
  CHECK(pair_isomorphic(parse_pair_document(down.out), catalog_p5()).has_value());

  CHECK(run({"blowdown", p5, "F1"}).code == cli::kDomainError);
  CHECK(run({"blowup", p5, "F1,Q"}).code == cli::kDomainError);

  auto out_path = (harness::scratch_dir() / "written.json").string();
  CHECK(run({"--output", out_path, "blowup", p5, "F1,F2"}).code == cli::kOk);
  CHECK(harness::read_file(out_path) == up.out);
}

TEST_CASE("triple") {
  auto square = harness::catalog_file("square.json", {"hirzebruch", "0"});
  auto classes = Json::parse(run({"--json", "triple", square}).out);
  CHECK(classes["reduced"]["n"] == 0);
  CHECK(classes["blocks"].size() == 2);

  auto crossing = run({"triple", square, "--partition", "F1,F2|F3,F4"});
  CHECK(crossing.code == cli::kDomainError);
  CHECK(contains(crossing.err, "error: "));

  auto singletons = Json::parse(run({"--json", "triple", square, "--partition", "F1|F2|F3|F4"}).out);
  CHECK(singletons["blocks"].empty());
  CHECK(parse_pair_document(singletons["reduced"].dump()) == catalog_hirzebruch(0));

  // Facets left out of the partition become singletons.
  auto partial = Json::parse(run({"--json", "triple", square, "--partition", "F1,F3"}).out);
  CHECK(partial["blocks"].size() == 1);
  CHECK(partial["reduced"]["n"] == 1);
}

TEST_CASE("catalog") {
  auto cp3 = run({"catalog", "cp", "3"});
  REQUIRE(cp3.code == cli::kOk);
  auto p = parse_pair_document(cp3.out);
  CHECK(p.lambda("F4") == make_vector({-1, -1, -1}));
  CHECK(p.complex().maximal_faces().size() == 4);
  CHECK(parse_pair_document(run({"catalog", "hirzebruch", "0"}).out) == catalog_hirzebruch(0));
  CHECK(run({"catalog", "nonsense"}).code == cli::kDomainError);
  CHECK(run({"catalog", "cp", "x"}).code != cli::kOk);
  // --json does not change document verbs.
  CHECK(run({"--json", "catalog", "p5"}).out == run({"catalog", "p5"}).out);
  for (const auto& e : catalog_suite()) {
    std::vector<std::string> args{"catalog", e.name};
    args.insert(args.end(), e.parameters.begin(), e.parameters.end());
    auto doc = run(args);
    REQUIRE_MESSAGE(doc.code == cli::kOk, e.label());
    CHECK(doc.out == emit_pair_document(e.pair));
    CHECK(run({"validate", harness::write_file("entry.json", doc.out)}).code == cli::kOk);
  }
}

TEST_CASE("delzant") {
  auto square = run({"delzant", harness::write_file("square-ineq.json", kSquareInequalities)});
  CHECK(square.code == cli::kOk);
  CHECK(contains(square.out, "sign check: pass"));
  CHECK(contains(square.out, "group: SU(2) x SU(2)"));
  auto triangle = run({"delzant", harness::write_file("triangle-ineq.json", kTriangleInequalities)});
  CHECK(contains(triangle.out, "group: SU(3)"));
  auto pyramid = run({"--json", "delzant", harness::write_file("pyramid-ineq.json", kPyramidInequalities)});
  CHECK(pyramid.code == cli::kDomainError);
  CHECK(Json::parse(pyramid.out)["error"]["kind"] == "NotSimpleError");
}
