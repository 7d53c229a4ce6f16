#include "torsym/complex.hpp"

#include <algorithm>
#include <functional>

namespace torsym {

namespace {

std::string join_names(const NameList& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  return out + "}";
}

bool subset_of(const Face& small, const Face& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

SimplicialComplex::SimplicialComplex(NameList vertices,
                                     const std::vector<NameList>& maximal_faces)
    : vertices_(std::move(vertices)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!index_.emplace(vertices_[i], i).second)
      throw Error(ErrorKind::LabelCollision, "vertex '" + vertices_[i] + "' listed twice");
  }
  faces_.reserve(maximal_faces.size());
  for (const auto& f : maximal_faces) faces_.push_back(face_of(f));
  std::sort(faces_.begin(), faces_.end());
  face_set_.insert(faces_.begin(), faces_.end());
}

std::optional<std::size_t> SimplicialComplex::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SimplicialComplex::require_index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + name + "'");
  return it->second;
}

NameList SimplicialComplex::names(const Face& face) const {
  NameList out;
  out.reserve(face.size());
  for (auto i : face) out.push_back(vertices_.at(i));
  return out;
}

Face SimplicialComplex::face_of(std::span<const std::string> names) const {
  Face f;
  f.reserve(names.size());
  for (const auto& n : names) f.push_back(require_index(n));
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

bool SimplicialComplex::contains_face(const Face& face) const {
  return std::any_of(faces_.begin(), faces_.end(),
                     [&](const Face& m) { return subset_of(face, m); });
}

bool SimplicialComplex::is_maximal_face(const Face& face) const {
  return face_set_.contains(face);
}

std::size_t SimplicialComplex::degree(std::size_t vertex) const {
  return static_cast<std::size_t>(std::count_if(faces_.begin(), faces_.end(), [&](const Face& f) {
    return std::binary_search(f.begin(), f.end(), vertex);
  }));
}

Report validate_complex(const SimplicialComplex& k, std::size_t n) {
  Report report;
  const auto& faces = k.maximal_faces();
  if (faces.empty()) report.add("empty", "complex has no maximal faces");

  for (const auto& f : faces)
    if (f.size() != n)
      report.add("not-pure",
                 "maximal face " + join_names(k.names(f)) + " has " + std::to_string(f.size()) +
                     " vertices, expected " + std::to_string(n),
                 k.names(f));

  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (i + 1 < faces.size() && faces[i] == faces[i + 1])
      report.add("not-sperner", "maximal face " + join_names(k.names(faces[i])) + " listed twice",
                 k.names(faces[i]));
    for (std::size_t j = 0; j < faces.size(); ++j)
      if (i != j && faces[i] != faces[j] && subset_of(faces[i], faces[j]))
        report.add("not-sperner",
                   join_names(k.names(faces[i])) + " is contained in " +
                       join_names(k.names(faces[j])),
                   k.names(faces[i]));
  }

  if (n >= 1) {
    std::map<Face, std::size_t> ridges;
    for (const auto& f : faces) {
      if (f.size() != n) continue;
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        Face r = f;
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(drop));
        ++ridges[r];
      }
    }
    for (const auto& [r, count] : ridges)
      if (count > 2)
        report.add("ridge",
                   "ridge " + join_names(k.names(r)) + " lies in " + std::to_string(count) +
                       " maximal faces",
                   k.names(r));
  }

  std::vector<bool> used(k.vertex_count(), false);
  for (const auto& f : faces)
    for (auto v : f) used[v] = true;
  for (std::size_t v = 0; v < used.size(); ++v)
    if (!used[v]) report.add("unused-vertex", "vertex " + k.name(v) + " lies in no face", {k.name(v)});
  return report;
}

bool is_closed_pseudomanifold(const SimplicialComplex& k, std::size_t n) {
  if (n == 0) return k.maximal_faces().size() == 1;
  std::map<Face, std::size_t> ridges;
  for (const auto& f : k.maximal_faces()) {
    if (f.size() != n) return false;
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      Face r = f;
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(drop));
      ++ridges[r];
    }
  }
  return std::all_of(ridges.begin(), ridges.end(), [](const auto& e) { return e.second == 2; });
}

bool is_face(const SimplicialComplex& k, std::span<const std::string> simplex) {
  return k.contains_face(k.face_of(simplex));
}

SimplicialComplex link_of_face(const SimplicialComplex& k, std::span<const std::string> simplex) {
  const Face sigma = k.face_of(simplex);
  std::vector<bool> in_link(k.vertex_count(), false);
  std::vector<NameList> faces;
  for (const auto& f : k.maximal_faces()) {
    if (!subset_of(sigma, f)) continue;
    NameList rest;
    for (auto v : f)
      if (!std::binary_search(sigma.begin(), sigma.end(), v)) {
        rest.push_back(k.name(v));
        in_link[v] = true;
      }
    faces.push_back(std::move(rest));
  }
  NameList vertices;
  for (std::size_t v = 0; v < k.vertex_count(); ++v)
    if (in_link[v]) vertices.push_back(k.name(v));
  return SimplicialComplex(std::move(vertices), faces);
}

SimplicialComplex link_of_vertex(const SimplicialComplex& k, const std::string& v) {
  k.require_index(v);
  const std::string simplex[] = {v};
  return link_of_face(k, simplex);
}

SimplicialComplex join_with_simplex_boundary(const SimplicialComplex& k, std::size_t count,
                                             std::span<const std::string> labels) {
  if (count < 2)
    throw Error(ErrorKind::InvalidArgument, "simplex boundary needs at least two vertices");
  if (labels.size() != count)
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(count) + " labels");
  NameList vertices(labels.begin(), labels.end());
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second || k.index_of(l))
      throw Error(ErrorKind::LabelCollision, "label '" + l + "' is not fresh");
  vertices.insert(vertices.end(), k.vertices().begin(), k.vertices().end());

  std::vector<NameList> faces;
  for (std::size_t omit = 0; omit < count; ++omit)
    for (const auto& f : k.maximal_faces()) {
      NameList face;
      for (std::size_t i = 0; i < count; ++i)
        if (i != omit) face.push_back(labels[i]);
      for (auto v : f) face.push_back(k.name(v));
      faces.push_back(std::move(face));
    }
  return SimplicialComplex(std::move(vertices), faces);
}

SimplicialComplex stellar_subdivision(const SimplicialComplex& k,
                                      std::span<const std::string> simplex,
                                      const std::string& apex) {
  const Face sigma = k.face_of(simplex);
  if (!k.contains_face(sigma))
    throw Error(ErrorKind::NotAFace, join_names(k.names(sigma)) + " is not a face");
  if (k.index_of(apex)) throw Error(ErrorKind::LabelCollision, "apex '" + apex + "' is not fresh");

  std::vector<NameList> faces;
  for (const auto& f : k.maximal_faces()) {
    if (!subset_of(sigma, f)) {
      faces.push_back(k.names(f));
      continue;
    }
    for (auto drop : sigma) {
      NameList face;
      for (auto v : f)
        if (v != drop) face.push_back(k.name(v));
      face.push_back(apex);
      faces.push_back(std::move(face));
    }
  }
  NameList vertices = k.vertices();
  vertices.push_back(apex);
  return SimplicialComplex(std::move(vertices), faces);
}

// ---------------------------------------------------------------------------
// Bijections

VertexBijection::VertexBijection(std::map<std::string, std::string> mapping)
    : mapping_(std::move(mapping)) {}

VertexBijection VertexBijection::identity(const NameList& vertices) {
  std::map<std::string, std::string> m;
  for (const auto& v : vertices) m.emplace(v, v);
  return VertexBijection(std::move(m));
}

const std::string& VertexBijection::operator()(const std::string& v) const {
  auto it = mapping_.find(v);
  if (it == mapping_.end()) throw Error(ErrorKind::UnknownVertex, "bijection does not map '" + v + "'");
  return it->second;
}

bool VertexBijection::is_identity() const {
  return std::all_of(mapping_.begin(), mapping_.end(),
                     [](const auto& e) { return e.first == e.second; });
}

VertexBijection VertexBijection::inverse() const {
  std::map<std::string, std::string> m;
  for (const auto& [a, b] : mapping_) m.emplace(b, a);
  return VertexBijection(std::move(m));
}

VertexBijection operator*(const VertexBijection& a, const VertexBijection& b) {
  std::map<std::string, std::string> m;
  for (const auto& [x, y] : b.mapping_) m.emplace(x, a(y));
  return VertexBijection(std::move(m));
}

bool is_complex_isomorphism(const SimplicialComplex& from, const SimplicialComplex& to,
                            const VertexBijection& f) {
  if (from.vertex_count() != to.vertex_count() || f.size() != from.vertex_count()) return false;
  if (from.maximal_faces().size() != to.maximal_faces().size()) return false;
  std::set<std::string> images;
  for (const auto& v : from.vertices()) {
    auto it = f.mapping().find(v);
    if (it == f.mapping().end() || !to.index_of(it->second)) return false;
    images.insert(it->second);
  }
  if (images.size() != from.vertex_count()) return false;
  std::set<Face> hit;
  for (const auto& face : from.maximal_faces()) {
    NameList image;
    for (auto v : face) image.push_back(f(from.name(v)));
    Face g = to.face_of(image);
    if (!to.is_maximal_face(g)) return false;
    hit.insert(g);
  }
  return hit.size() == to.maximal_faces().size();
}

void for_each_complex_isomorphism(const SimplicialComplex& from, const SimplicialComplex& to,
                         const std::function<bool(const VertexBijection&)>& visit) {
  const std::size_t n = from.vertex_count();
  if (n != to.vertex_count() || from.maximal_faces().size() != to.maximal_faces().size()) return;
  {
    std::multiset<std::size_t> a, b;
    for (const auto& f : from.maximal_faces()) a.insert(f.size());
    for (const auto& f : to.maximal_faces()) b.insert(f.size());
    if (a != b) return;
  }

  std::vector<std::size_t> from_degree(n), to_degree(n);
  for (std::size_t v = 0; v < n; ++v) {
    from_degree[v] = from.degree(v);
    to_degree[v] = to.degree(v);
  }
  // Maximal faces whose largest vertex is v are complete once v is assigned.
  std::vector<std::vector<const Face*>> completed_at(n), touching(n);
  for (const auto& f : from.maximal_faces()) {
    if (!f.empty()) completed_at[f.back()].push_back(&f);
    for (auto v : f) touching[v].push_back(&f);
  }

  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);

  auto consistent = [&](std::size_t v) {
    for (const Face* f : touching[v]) {
      Face partial;
      for (auto u : *f)
        if (u <= v) partial.push_back(image[u]);
      std::sort(partial.begin(), partial.end());
      if (!to.contains_face(partial)) return false;
    }
    for (const Face* f : completed_at[v]) {
      Face full;
      for (auto u : *f) full.push_back(image[u]);
      std::sort(full.begin(), full.end());
      if (!to.is_maximal_face(full)) return false;
    }
    return true;
  };

  bool stop = false;
  std::function<void(std::size_t)> extend = [&](std::size_t v) {
    if (stop) return;
    if (v == n) {
      std::map<std::string, std::string> m;
      for (std::size_t u = 0; u < n; ++u) m.emplace(from.name(u), to.name(image[u]));
      if (!visit(VertexBijection(std::move(m)))) stop = true;
      return;
    }
    for (std::size_t c = 0; c < n && !stop; ++c) {
      if (used[c] || to_degree[c] != from_degree[v]) continue;
      image[v] = c;
      used[c] = true;
      if (consistent(v)) extend(v + 1);
      used[c] = false;
      image[v] = n;
    }
  };
  extend(0);
}

std::vector<VertexBijection> complex_isomorphisms(const SimplicialComplex& from,
                                                  const SimplicialComplex& to) {
  std::vector<VertexBijection> out;
  for_each_complex_isomorphism(from, to, [&](const VertexBijection& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::optional<VertexBijection> first_complex_isomorphism(const SimplicialComplex& from,
                                                         const SimplicialComplex& to) {
  std::optional<VertexBijection> out;
  for_each_complex_isomorphism(from, to, [&](const VertexBijection& f) {
    out = f;
    return false;
  });
  return out;
}

}  // namespace torsym
