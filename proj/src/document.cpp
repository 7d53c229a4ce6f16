#include "torsym/document.hpp"

#include <regex>
#include <set>

#include "json.hpp"

namespace torsym {

namespace {

using nlohmann::json;

const Integer kSafeLimit = (Integer(1) << 53) - 1;

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorKind::Parse, message); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

void require_fields(const json& doc, std::initializer_list<const char*> fields, const std::string& what) {
  if (!doc.is_object()) fail(what + " must be a JSON object");
  std::set<std::string> expected(fields.begin(), fields.end());
  for (const auto& [key, value] : doc.items())
    if (!expected.count(key)) fail(what + " has unexpected field \"" + key + "\"");
  for (const auto* f : fields)
    if (!doc.contains(f)) fail(what + " is missing field \"" + std::string(f) + "\"");
}

Integer read_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
    return Integer(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    static const std::regex pattern("-?(0|[1-9][0-9]*)");
    const auto& s = v.get_ref<const std::string&>();
    if (!std::regex_match(s, pattern)) fail(where + ": \"" + s + "\" is not a decimal integer");
    return Integer(s);
  }
  fail(where + " must be an integer");
}

Rational read_rational(const json& v, const std::string& where) {
  if (v.is_string()) {
    static const std::regex pattern("-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?");
    const auto& s = v.get_ref<const std::string&>();
    if (!std::regex_match(s, pattern)) fail(where + ": \"" + s + "\" is not an exact rational");
    Rational q(s);
    q.canonicalize();
    return q;
  }
  return Rational(read_integer(v, where));
}

IntVector read_vector(const json& v, std::size_t n, const std::string& where) {
  if (!v.is_array()) fail(where + " must be an array");
  if (v.size() != n)
    fail(where + " has " + std::to_string(v.size()) + " entries, expected " + std::to_string(n));
  IntVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(read_integer(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::size_t read_rank(const json& v) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) fail("\"n\" must be a non-negative integer");
  return v.get<std::size_t>();
}

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string name_array(const NameList& names) {
  std::string out = "[";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + quoted(names[i]);
  return out + "]";
}

}  // namespace

std::string integer_literal(const Integer& x) {
  if (abs(x) <= kSafeLimit) return x.get_str();
  return "\"" + x.get_str() + "\"";
}

CharacteristicPair parse_pair_document(std::string_view text) {
  const json doc = parse_json(text);
  require_fields(doc, {"n", "facets", "max_simplices", "lambda"}, "pair document");
  const std::size_t n = read_rank(doc["n"]);

  const json& facets = doc["facets"];
  if (!facets.is_array()) fail("\"facets\" must be an array of strings");
  NameList names;
  std::set<std::string> seen;
  for (const auto& f : facets) {
    if (!f.is_string()) fail("\"facets\" must be an array of strings");
    if (!seen.insert(f.get<std::string>()).second) fail("facet \"" + f.get<std::string>() + "\" is listed twice");
    names.push_back(f.get<std::string>());
  }

  const json& simplices = doc["max_simplices"];
  if (!simplices.is_array()) fail("\"max_simplices\" must be an array");
  std::vector<NameList> faces;
  for (const auto& s : simplices) {
    if (!s.is_array()) fail("each maximal simplex must be an array of facet names");
    NameList face;
    for (const auto& v : s) {
      if (!v.is_string()) fail("each maximal simplex must be an array of facet names");
      if (!seen.count(v.get<std::string>())) fail("simplex names unknown facet \"" + v.get<std::string>() + "\"");
      face.push_back(v.get<std::string>());
    }
    faces.push_back(std::move(face));
  }

  const json& lambda = doc["lambda"];
  if (!lambda.is_object()) fail("\"lambda\" must be an object keyed by facet");
  for (const auto& [key, value] : lambda.items())
    if (!seen.count(key)) fail("\"lambda\" names unknown facet \"" + key + "\"");
  std::vector<IntVector> columns;
  for (const auto& f : names) {
    if (!lambda.contains(f)) fail("\"lambda\" has no entry for facet \"" + f + "\"");
    columns.push_back(read_vector(lambda[f], n, "lambda[\"" + f + "\"]"));
  }

  try {
    return CharacteristicPair(n, SimplicialComplex(names, faces), std::move(columns));
  } catch (const Error& e) {
    fail(e.what());
  }
}

std::string emit_pair_document(const CharacteristicPair& pair) {
  const auto& k = pair.complex();
  std::string out = "{\n";
  out += "  \"n\": " + std::to_string(pair.rank()) + ",\n";
  out += "  \"facets\": " + name_array(pair.facets()) + ",\n";

  std::vector<Face> faces = k.maximal_faces();
  std::sort(faces.begin(), faces.end());
  out += "  \"max_simplices\": [";
  for (std::size_t i = 0; i < faces.size(); ++i)
    out += std::string(i ? "," : "") + "\n    " + name_array(k.names(faces[i]));
  out += faces.empty() ? "],\n" : "\n  ],\n";

  out += "  \"lambda\": {";
  for (std::size_t i = 0; i < pair.facet_count(); ++i) {
    out += std::string(i ? "," : "") + "\n    " + quoted(pair.facets()[i]) + ": [";
    const IntVector& v = pair.lambda(i);
    for (std::size_t j = 0; j < v.size(); ++j) out += (j ? ", " : "") + integer_literal(v[j]);
    out += "]";
  }
  out += pair.facet_count() == 0 ? "}\n" : "\n  }\n";
  return out + "}\n";
}

InequalitySystem parse_inequality_document(std::string_view text) {
  const json doc = parse_json(text);
  require_fields(doc, {"n", "inequalities"}, "inequality document");
  InequalitySystem system;
  system.n = read_rank(doc["n"]);
  const json& list = doc["inequalities"];
  if (!list.is_array()) fail("\"inequalities\" must be an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "inequality " + std::to_string(i + 1);
    require_fields(list[i], {"normal", "offset"}, where);
    system.inequalities.push_back({read_vector(list[i]["normal"], system.n, where + " normal"),
                                   read_rational(list[i]["offset"], where + " offset")});
  }
  return system;
}

}  // namespace torsym
