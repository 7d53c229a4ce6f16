#include "torsym/catalog.hpp"

#include <regex>

namespace torsym {

namespace {

IntVector unit(std::size_t n, std::size_t i) {
  IntVector v(n);
  v[i] = 1;
  return v;
}

CharacteristicPair checked(CharacteristicPair pair, const std::string& what) {
  Report r = validate_pair(pair);
  if (!r.ok())
    throw Error(ErrorKind::InvalidArgument, what + " is not a valid pair: " + r.violations.front().message);
  return pair;
}

Integer parse_integer(const std::string& s) {
  static const std::regex pattern("[-+]?[0-9]+");
  if (!std::regex_match(s, pattern)) throw Error(ErrorKind::InvalidArgument, "'" + s + "' is not an integer");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

std::size_t parse_size(const std::string& s, std::size_t low, std::size_t high) {
  Integer x = parse_integer(s);
  if (x < static_cast<long>(low) || x > static_cast<long>(high))
    throw Error(ErrorKind::InvalidArgument, "'" + s + "' is outside " + std::to_string(low) + ".." +
                                                std::to_string(high));
  return x.get_ui();
}

void require_count(const std::string& name, std::span<const std::string> params, std::size_t count) {
  if (params.size() != count)
    throw Error(ErrorKind::InvalidArgument, name + " takes " + std::to_string(count) + " parameter(s), got " +
                                                std::to_string(params.size()));
}

}  // namespace

CharacteristicPair catalog_cp(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cp needs n >= 1");
  NameList names;
  std::vector<IntVector> lambda;
  for (std::size_t i = 0; i <= n; ++i) names.push_back("F" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) lambda.push_back(unit(n, i));
  lambda.push_back(IntVector(n, Integer(-1)));
  std::vector<NameList> faces;
  for (std::size_t skip = n + 1; skip-- > 0;) {
    NameList face;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) face.push_back(names[i]);
    faces.push_back(std::move(face));
  }
  return CharacteristicPair(n, SimplicialComplex(names, faces), std::move(lambda));
}

CharacteristicPair catalog_product(std::span<const std::size_t> dims) {
  if (dims.empty() || dims.size() > 26) throw Error(ErrorKind::InvalidArgument, "product needs 1..26 factors");
  std::size_t n = 0;
  for (auto d : dims) {
    if (d == 0) throw Error(ErrorKind::InvalidArgument, "product factors need dimension >= 1");
    n += d;
  }
  NameList names;
  std::vector<IntVector> lambda;
  std::vector<std::vector<NameList>> block_faces;
  std::size_t offset = 0;
  for (std::size_t b = 0; b < dims.size(); ++b) {
    const CharacteristicPair factor = catalog_cp(dims[b]);
    const std::string prefix(1, static_cast<char>('A' + b));
    for (std::size_t i = 0; i < factor.facet_count(); ++i) {
      names.push_back(prefix + std::to_string(i + 1));
      IntVector v(n);
      for (std::size_t j = 0; j < dims[b]; ++j) v[offset + j] = factor.lambda(i)[j];
      lambda.push_back(std::move(v));
    }
    std::vector<NameList> faces;
    for (const auto& f : factor.complex().maximal_faces()) {
      NameList face;
      for (auto i : f) face.push_back(prefix + std::to_string(i + 1));
      faces.push_back(std::move(face));
    }
    block_faces.push_back(std::move(faces));
    offset += dims[b];
  }
  std::vector<NameList> faces{{}};
  for (const auto& options : block_faces) {
    std::vector<NameList> next;
    for (const auto& base : faces)
      for (const auto& f : options) {
        NameList face = base;
        face.insert(face.end(), f.begin(), f.end());
        next.push_back(std::move(face));
      }
    faces = std::move(next);
  }
  return CharacteristicPair(n, SimplicialComplex(names, faces), std::move(lambda));
}

CharacteristicPair catalog_hirzebruch(const Integer& a) {
  const std::vector<IntVector> normals{make_vector({1, 0}), make_vector({0, 1}), IntVector{Integer(-1), a},
                                       make_vector({0, -1})};
  return catalog_polygon(normals);
}

CharacteristicPair catalog_bott(std::size_t n, std::span<const Integer> twists) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "bott needs n >= 1");
  if (twists.size() != n * (n - 1) / 2)
    throw Error(ErrorKind::InvalidArgument, "bott " + std::to_string(n) + " takes " +
                                                std::to_string(n * (n - 1) / 2) + " twists");
  NameList names;
  for (std::size_t i = 0; i < 2 * n; ++i) names.push_back("F" + std::to_string(i + 1));
  std::vector<IntVector> lambda;
  for (std::size_t i = 0; i < n; ++i) lambda.push_back(unit(n, i));
  std::size_t t = 0;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector v(n);
    v[i] = -1;
    for (std::size_t j = i + 1; j < n; ++j) v[j] = twists[t++];
    lambda.push_back(std::move(v));
  }
  std::vector<NameList> faces;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    NameList face;
    for (std::size_t i = 0; i < n; ++i) face.push_back(names[(mask >> i & 1) ? n + i : i]);
    faces.push_back(std::move(face));
  }
  return CharacteristicPair(n, SimplicialComplex(names, faces), std::move(lambda));
}

CharacteristicPair catalog_polygon(std::span<const IntVector> normals) {
  const std::size_t m = normals.size();
  if (m < 3) throw Error(ErrorKind::InvalidArgument, "a polygon needs at least 3 edges");
  NameList names;
  std::vector<NameList> faces;
  for (std::size_t i = 0; i < m; ++i) {
    if (normals[i].size() != 2) throw Error(ErrorKind::InvalidArgument, "polygon normals are 2-vectors");
    names.push_back("F" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < m; ++i) faces.push_back({names[i], names[(i + 1) % m]});
  return checked(CharacteristicPair(2, SimplicialComplex(names, faces),
                                    std::vector<IntVector>(normals.begin(), normals.end())),
                 "polygon");
}

CharacteristicPair catalog_prism(const Integer& a) {
  NameList names{"T1", "T2", "T3", "B1", "B2"};
  std::vector<NameList> faces;
  for (const auto& b : {"B1", "B2"})
    for (std::size_t skip = 3; skip-- > 0;) {
      NameList face;
      for (std::size_t i = 0; i < 3; ++i)
        if (i != skip) face.push_back(names[i]);
      face.push_back(b);
      faces.push_back(std::move(face));
    }
  std::vector<IntVector> lambda{make_vector({1, 0, 0}), make_vector({0, 1, 0}),
                                IntVector{Integer(-1), Integer(-1), a}, make_vector({0, 0, 1}),
                                make_vector({0, 0, -1})};
  return CharacteristicPair(3, SimplicialComplex(names, faces), std::move(lambda));
}

CharacteristicPair catalog_p5() {
  NameList names{"F1", "F2", "F3", "F4", "E"};
  std::vector<NameList> faces{{"F1", "F2", "F4"}, {"F1", "F3", "F4"}, {"F2", "F3", "F4"},
                              {"E", "F1", "F2"},  {"E", "F1", "F3"},  {"E", "F2", "F3"}};
  std::vector<IntVector> lambda{make_vector({1, 0, 0}), make_vector({0, 1, 0}), make_vector({-1, -1, 0}),
                                make_vector({0, 0, -1}), make_vector({1, 1, 1})};
  return CharacteristicPair(3, SimplicialComplex(names, faces), std::move(lambda));
}

CharacteristicPair catalog_pair(const std::string& name, std::span<const std::string> params) {
  if (name == "cp") {
    require_count(name, params, 1);
    return catalog_cp(parse_size(params[0], 1, 64));
  }
  if (name == "product") {
    std::vector<std::size_t> dims;
    for (const auto& p : params) dims.push_back(parse_size(p, 1, 64));
    return catalog_product(dims);
  }
  if (name == "hirzebruch") {
    require_count(name, params, 1);
    return catalog_hirzebruch(parse_integer(params[0]));
  }
  if (name == "bott") {
    if (params.empty()) throw Error(ErrorKind::InvalidArgument, "bott needs the height n");
    const std::size_t n = parse_size(params[0], 1, 16);
    std::vector<Integer> twists;
    for (const auto& p : params.subspan(1)) twists.push_back(parse_integer(p));
    return catalog_bott(n, twists);
  }
  if (name == "polygon") {
    // Normals as "x,y", either one per parameter or joined with ';'.
    std::vector<IntVector> normals;
    static const std::regex normal("\\s*([-+]?[0-9]+)\\s*,\\s*([-+]?[0-9]+)\\s*");
    for (const auto& p : params) {
      std::size_t start = 0;
      while (start <= p.size()) {
        std::size_t end = p.find(';', start);
        if (end == std::string::npos) end = p.size();
        const std::string item = p.substr(start, end - start);
        std::smatch m;
        if (!std::regex_match(item, m, normal))
          throw Error(ErrorKind::InvalidArgument, "'" + item + "' is not a normal x,y");
        normals.push_back({parse_integer(m[1]), parse_integer(m[2])});
        start = end + 1;
      }
    }
    return catalog_polygon(normals);
  }
  if (name == "prism") {
    if (params.size() > 1) throw Error(ErrorKind::InvalidArgument, "prism takes at most one parameter");
    return catalog_prism(params.empty() ? Integer(0) : parse_integer(params[0]));
  }
  if (name == "p5") {
    require_count(name, params, 0);
    return catalog_p5();
  }
  throw Error(ErrorKind::UnknownCatalog, "no catalog entry named '" + name + "'");
}

std::string CatalogEntry::label() const {
  std::string out = name;
  for (const auto& p : parameters) out += " " + p;
  return out;
}

std::vector<CatalogEntry> catalog_suite() {
  const std::vector<std::vector<std::string>> specs{
      {"cp", "1"},          {"cp", "2"},          {"cp", "3"},           {"cp", "4"},
      {"product", "1", "1"}, {"product", "2", "1"}, {"product", "1", "1", "1"}, {"product", "2", "2"},
      {"hirzebruch", "0"},  {"hirzebruch", "1"},  {"hirzebruch", "-2"},  {"hirzebruch", "3"},
      {"bott", "2", "0"},   {"bott", "3", "0", "0", "0"}, {"bott", "3", "1", "0", "0"},
      {"bott", "3", "1", "2", "3"}, {"bott", "3", "-1", "2", "-3"},
      {"polygon", "1,0;1,1;0,1;-1,0;0,-1"}, {"polygon", "1,0;1,1;0,1;-1,0;-1,-1;0,-1"},
      {"prism", "0"},       {"prism", "1"},       {"p5"},
  };
  std::vector<CatalogEntry> out;
  for (const auto& s : specs) {
    std::vector<std::string> params(s.begin() + 1, s.end());
    CharacteristicPair pair = catalog_pair(s[0], params);
    out.push_back({s[0], std::move(params), std::move(pair)});
  }
  return out;
}

}  // namespace torsym
