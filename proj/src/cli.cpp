#include "torsym/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "torsym/catalog.hpp"
#include "torsym/document.hpp"
#include "torsym/symmetry.hpp"

namespace torsym::cli {

namespace {

using Json = nlohmann::ordered_json;

const Integer kSafeLimit = (Integer(1) << 53) - 1;

Json integer_json(const Integer& x) {
  if (abs(x) <= kSafeLimit) return Json(x.get_si());
  return Json(x.get_str());
}

Json vector_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

Json matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

std::string braces(const NameList& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + "}";
}

std::string tuple(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out + ")";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

CharacteristicPair load_valid_pair(const std::string& path) {
  CharacteristicPair pair = parse_pair_document(read_file(path));
  require_valid(pair);
  return pair;
}

NameList split(const std::string& text, char sep) {
  NameList out;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = text.find(sep, start);
    std::string item = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    out.push_back(first == std::string::npos ? "" : item.substr(first, last - first + 1));
    if (end == std::string::npos) return out;
    start = end + 1;
  }
}

NameList parse_facet_list(const std::string& text) {
  NameList out = split(text, ',');
  for (const auto& f : out)
    if (f.empty()) throw Error(ErrorKind::InvalidArgument, "empty facet name in '" + text + "'");
  return out;
}

// Facets missing from the text form singleton blocks.
FacetPartition parse_partition(const std::string& text, const CharacteristicPair& pair) {
  FacetPartition blocks;
  std::set<std::string> listed;
  for (const auto& block : split(text, '|')) {
    blocks.push_back(parse_facet_list(block));
    listed.insert(blocks.back().begin(), blocks.back().end());
  }
  for (const auto& f : pair.facets())
    if (!listed.count(f)) blocks.push_back({f});
  return blocks;
}

std::size_t size_guard() {
  const char* value = std::getenv("TORSYM_SIZE_GUARD");
  if (!value || !*value) return kDefaultSizeGuard;
  try {
    std::size_t used = 0;
    const unsigned long parsed = std::stoul(value, &used);
    if (used == std::string(value).size()) return parsed;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidArgument, std::string("TORSYM_SIZE_GUARD='") + value + "' is not a count");
}

struct Output {
  Json report;       // machine-readable form
  std::string text;  // human-readable form
  bool ok = true;
};

Output document_output(const CharacteristicPair& pair) {
  Output o;
  o.text = emit_pair_document(pair);
  return o;
}

Json report_header(const std::string& command) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  return j;
}

// ---------------------------------------------------------------------------
// Verbs

Output cmd_validate(const std::string& path) {
  const CharacteristicPair pair = parse_pair_document(read_file(path));
  Report report = validate_pair(pair);
  if (report.ok()) {
    try {
      const auto normalized = normalize_omniorientation(pair).first;
      report.merge(check_vertex_class_bound(normalized));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ZeroDual) throw;
      report.add("zero-dual", e.what());
    }
  }
  Output o;
  o.ok = report.ok();
  o.report = report_header("validate");
  o.report["ok"] = o.ok;
  o.report["facets"] = pair.facet_count();
  o.report["n"] = pair.rank();
  Json violations = Json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"code", v.code}, {"message", v.message}, {"facets", v.facets}});
  o.report["violations"] = violations;

  if (o.ok) {
    o.text = "valid: n = " + std::to_string(pair.rank()) + ", " + std::to_string(pair.facet_count()) + " facets\n";
  } else {
    o.text = "invalid: " + std::to_string(report.violations.size()) + " violation(s)\n";
    for (const auto& v : report.violations) {
      o.text += "  " + v.code + ": " + v.message;
      if (!v.facets.empty()) o.text += " " + braces(v.facets);
      o.text += "\n";
    }
  }
  return o;
}

void add_symmetry(const CharacteristicPair& pair, Output& o) {
  const auto [normalized, signs] = normalize_omniorientation(pair);
  const FacetClassPartition classes = facet_classes(normalized);
  const SymmetryGroupType group = maximal_group_type(normalized);
  const ConstructionTree tree = build_construction_tree(normalized);

  Json sign_json = Json::object();
  std::string sign_text;
  for (std::size_t i = 0; i < pair.facet_count(); ++i) {
    sign_json[pair.facets()[i]] = signs.sign[i];
    sign_text += " " + pair.facets()[i] + (signs.sign[i] > 0 ? ":+" : ":-");
  }
  Json class_json = Json::array();
  std::string class_text, weyl_text;
  for (const auto& c : classes.classes) {
    class_json.push_back({{"facets", c.facets}, {"dual", vector_json(c.representative)}});
    class_text += " " + braces(c.facets);
    if (c.facets.size() >= 2) weyl_text += " S" + braces(c.facets);
  }
  Json weyl_json = Json::array();
  for (const auto& c : classes.classes) weyl_json.push_back(c.facets);

  Json steps = Json::array();
  std::string step_text;
  std::size_t index = 0;
  for (const auto& step : tree.steps) {
    step_text += "  " + std::to_string(++index) + ". ";
    if (const auto* b = std::get_if<BlowUpStep>(&step)) {
      steps.push_back({{"step", "blow-up"}, {"face", b->face}, {"exceptional", b->exceptional}});
      step_text += "blow-up " + braces(b->face) + " -> " + b->exceptional + "\n";
    } else {
      const Decomposition& d = std::get<SplitOffStep>(step).decomposition;
      steps.push_back({{"step", "split-off"},
                       {"class", d.class_facets},
                       {"k", d.k},
                       {"chosen", d.chosen_facet},
                       {"mu", vector_json(d.mu)},
                       {"reduced_facets", d.reduced.facets()}});
      step_text += "split-off " + braces(d.class_facets) + " k=" + std::to_string(d.k) + " chosen " +
                   d.chosen_facet + " mu " + tuple(d.mu) + "\n";
    }
  }

  o.report["normalized_signs"] = sign_json;
  o.report["classes"] = class_json;
  o.report["group"] = group.to_string();
  o.report["su_sizes"] = group.su_sizes;
  o.report["torus_rank"] = group.torus_rank;
  o.report["weyl_partition"] = weyl_json;
  o.report["construction"] = {{"steps", steps},
                              {"leaf", {{"n", tree.leaf.rank()}, {"facets", tree.leaf.facets()}}}};

  o.text += "signs:" + sign_text + "\n";
  o.text += "classes:" + class_text + "\n";
  o.text += "group: " + group.to_string() + "\n";
  o.text += "weyl group:" + (weyl_text.empty() ? std::string(" 1") : weyl_text) + "\n";
  o.text += "construction:\n" + step_text;
  o.text += "  leaf: n = " + std::to_string(tree.leaf.rank()) + ", facets " + braces(tree.leaf.facets()) + "\n";
}

Output cmd_symmetry(const std::string& path) {
  const CharacteristicPair pair = load_valid_pair(path);
  Output o;
  o.report = report_header("symmetry");
  o.report["ok"] = true;
  add_symmetry(pair, o);
  return o;
}

Output cmd_aut(const std::string& path) {
  const CharacteristicPair pair = load_valid_pair(path);
  const std::size_t guard = size_guard();
  if (pair.facet_count() > guard)
    throw Error(ErrorKind::SizeGuard, std::to_string(pair.facet_count()) + " facets exceed the limit of " +
                                          std::to_string(guard) + " (set TORSYM_SIZE_GUARD to raise it)");
  const CharacteristicPair normalized = normalize_omniorientation(pair).first;
  const FacetClassPartition classes = facet_classes(normalized);
  const auto automorphisms = aut_char_pair(normalized);

  Output o;
  o.report = report_header("aut");
  o.report["ok"] = true;
  o.report["order"] = automorphisms.size();
  Json list = Json::array();
  std::size_t in_image = 0;
  std::string lines;
  for (const auto& a : automorphisms) {
    bool preserving = true;
    for (const auto& c : classes.classes)
      for (const auto& f : c.facets)
        if (classes.class_of(a.f(f)) != &c) preserving = false;
    in_image += preserving;
    Json f = Json::object();
    lines += " ";
    for (const auto& v : normalized.facets()) {
      f[v] = a.f(v);
      lines += " " + v + "->" + a.f(v);
    }
    lines += "  g=" + to_string(a.g) + (preserving ? "  phi\n" : "\n");
    list.push_back({{"f", f}, {"g", matrix_json(a.g)}, {"in_phi_image", preserving}});
  }
  o.report["phi_image_order"] = in_image;
  o.report["automorphisms"] = list;
  o.text = "order: " + std::to_string(automorphisms.size()) + " (" + std::to_string(in_image) +
           " in the image of phi)\n" + lines;
  return o;
}

Output cmd_blowup(const std::string& path, const std::string& face) {
  const CharacteristicPair pair = load_valid_pair(path);
  return document_output(blowup_face(pair, parse_facet_list(face)).pair);
}

Output cmd_blowdown(const std::string& path, const std::string& facet) {
  const CharacteristicPair pair = load_valid_pair(path);
  return document_output(blowdown(pair, facet));
}

Output cmd_triple(const std::string& path, const std::optional<std::string>& partition_text) {
  const CharacteristicPair pair = load_valid_pair(path);
  const CharacteristicPair normalized = normalize_omniorientation(pair).first;
  FacetPartition partition;
  if (partition_text) {
    partition = parse_partition(*partition_text, normalized);
  } else {
    for (const auto& c : facet_classes(normalized).classes) partition.push_back(c.facets);
  }
  const AdmissibleTriple t = extract_admissible_triple(normalized, partition);

  Output o;
  o.report = report_header("triple");
  o.report["ok"] = true;
  Json blocks = Json::array();
  o.text = "blocks:\n";
  for (std::size_t i = 0; i < t.blocks.size(); ++i) {
    blocks.push_back({{"facets", t.blocks[i]},
                      {"chosen", t.chosen[i]},
                      {"mu", vector_json(t.psi_data[i])},
                      {"marked", t.marked[i] ? Json(*t.marked[i]) : Json(nullptr)}});
    o.text += "  " + braces(t.blocks[i]) + " chosen " + t.chosen[i] + " mu " + tuple(t.psi_data[i]) +
              " marked " + (t.marked[i] ? *t.marked[i] : std::string("-")) + "\n";
  }
  if (t.blocks.empty()) o.text += "  (none)\n";
  const std::string reduced = emit_pair_document(t.reduced);
  o.report["blocks"] = blocks;
  o.report["reduced"] = Json::parse(reduced);
  o.text += "N:\n" + reduced;
  return o;
}

Output cmd_catalog(const std::string& name, const std::vector<std::string>& params) {
  return document_output(catalog_pair(name, params));
}

Output cmd_delzant(const std::string& path) {
  const InequalitySystem system = parse_inequality_document(read_file(path));
  const CharacteristicPair pair = delzant_pair(system.inequalities, system.n);
  const Report signs = check_delzant_sign_theorem(pair);
  Output o;
  o.ok = signs.ok();
  o.report = report_header("delzant");
  o.report["ok"] = o.ok;
  o.report["pair"] = Json::parse(emit_pair_document(pair));
  Json violations = Json::array();
  for (const auto& v : signs.violations)
    violations.push_back({{"code", v.code}, {"message", v.message}, {"facets", v.facets}});
  o.report["sign_violations"] = violations;
  o.text = "facets: " + braces(pair.facets()) + "\n";
  o.text += signs.ok() ? "sign check: pass\n"
                       : "sign check: " + std::to_string(signs.violations.size()) + " violation(s)\n";
  for (const auto& v : signs.violations) o.text += "  " + v.message + "\n";
  add_symmetry(pair, o);
  return o;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal torus symmetry of quasitoric manifolds from characteristic pairs", "torsym"};
  app.require_subcommand(1);
  bool json = false;
  std::string output_path;
  app.add_flag("--json", json, "Emit reports as JSON");
  app.add_option("--output", output_path, "Write the primary output to FILE");
  app.fallthrough();

  std::string file, face, facet, name;
  std::vector<std::string> params;
  std::optional<std::string> partition;

  auto* validate = app.add_subcommand("validate", "Check a pair document");
  validate->add_option("file", file, "Pair document")->required();
  auto* symmetry = app.add_subcommand("symmetry", "Maximal symmetry group type and construction");
  symmetry->add_option("file", file, "Pair document")->required();
  auto* aut = app.add_subcommand("aut", "Automorphism group of the pair");
  aut->add_option("file", file, "Pair document")->required();
  auto* blowup = app.add_subcommand("blowup", "Blow up a face, e.g. F1,F2");
  blowup->add_option("file", file, "Pair document")->required();
  blowup->add_option("face", face, "Comma-separated facets")->required();
  auto* blowdown_cmd = app.add_subcommand("blowdown", "Blow down an exceptional facet");
  blowdown_cmd->add_option("file", file, "Pair document")->required();
  blowdown_cmd->add_option("facet", facet, "Exceptional facet")->required();
  auto* triple = app.add_subcommand("triple", "Admissible triple of a facet partition");
  triple->add_option("file", file, "Pair document")->required();
  triple->add_option("--partition", partition, "Blocks such as \"F1,F3|F2,F4\"");
  auto* catalog = app.add_subcommand("catalog", "Emit a catalog pair: cp, product, hirzebruch, bott, polygon, prism, p5");
  catalog->add_option("name", name, "Catalog family")->required();
  catalog->add_option("params", params, "Family parameters");
  auto* delzant = app.add_subcommand("delzant", "Pair of a Delzant polytope given by inequalities");
  delzant->add_option("file", file, "Inequality document")->required();

  std::string command;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    command = app.get_subcommands().front()->get_name();
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    Output o;
    if (command == "validate") o = cmd_validate(file);
    else if (command == "symmetry") o = cmd_symmetry(file);
    else if (command == "aut") o = cmd_aut(file);
    else if (command == "blowup") o = cmd_blowup(file, face);
    else if (command == "blowdown") o = cmd_blowdown(file, facet);
    else if (command == "triple") o = cmd_triple(file, partition);
    else if (command == "catalog") o = cmd_catalog(name, params);
    else o = cmd_delzant(file);

    const std::string body = json && !o.report.is_null() ? o.report.dump(2) + "\n" : o.text;
    if (output_path.empty()) {
      out << body;
    } else {
      std::ofstream file_out(output_path, std::ios::binary);
      if (!(file_out << body)) throw Error(ErrorKind::Parse, "cannot write '" + output_path + "'");
    }
    return o.ok ? kOk : kDomainError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (json) {
      Json j = report_header(command);
      j["ok"] = false;
      j["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
      out << j.dump(2) << "\n";
    }
    return e.kind() == ErrorKind::Parse ? kParseError : kDomainError;
  }
}

}  // namespace torsym::cli
