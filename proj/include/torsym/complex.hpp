#pragma once

// Simplicial complexes dual to simple polytopes.
//
// Vertices carry stable string identifiers; faces are stored internally as
// sorted lists of vertex positions, but every public result that leaves the
// module names vertices by identifier.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "torsym/error.hpp"

namespace torsym {

using Face = std::vector<std::size_t>;
using NameList = std::vector<std::string>;

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Throws Error(UnknownVertex) for a face naming an unlisted vertex and
  // Error(LabelCollision) for repeated vertex identifiers.
  SimplicialComplex(NameList vertices, const std::vector<NameList>& maximal_faces);

  const NameList& vertices() const noexcept { return vertices_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  // Sorted lexicographically; duplicates from the input are kept so that
  // validation can report them.
  const std::vector<Face>& maximal_faces() const noexcept { return faces_; }

  std::optional<std::size_t> index_of(const std::string& name) const;
  std::size_t require_index(const std::string& name) const;
  const std::string& name(std::size_t index) const { return vertices_.at(index); }
  NameList names(const Face& face) const;
  // Sorted positions of the named vertices.
  Face face_of(std::span<const std::string> names) const;

  bool contains_face(const Face& face) const;
  bool is_maximal_face(const Face& face) const;
  // Number of maximal faces containing the vertex.
  std::size_t degree(std::size_t vertex) const;

 private:
  NameList vertices_;
  std::map<std::string, std::size_t> index_;
  std::vector<Face> faces_;
  std::set<Face> face_set_;
};

// Purity at dimension n-1, the Sperner condition, the ridge condition and
// that every vertex lies in some maximal face.
Report validate_complex(const SimplicialComplex& k, std::size_t n);

// Every ridge lies in exactly two maximal faces (for n >= 1).
bool is_closed_pseudomanifold(const SimplicialComplex& k, std::size_t n);

bool is_face(const SimplicialComplex& k, std::span<const std::string> simplex);

SimplicialComplex link_of_vertex(const SimplicialComplex& k, const std::string& v);
SimplicialComplex link_of_face(const SimplicialComplex& k, std::span<const std::string> simplex);

// Join of the boundary of a (k-1)-simplex on the given fresh labels with K.
// The new labels come first in the vertex order.
SimplicialComplex join_with_simplex_boundary(const SimplicialComplex& k, std::size_t count,
                                             std::span<const std::string> labels);

// Stellar subdivision at a face: faces containing it are replaced by the cone
// from `apex` over (boundary of the face) * link(face). The apex is appended
// to the vertex order.
SimplicialComplex stellar_subdivision(const SimplicialComplex& k,
                                      std::span<const std::string> simplex,
                                      const std::string& apex);

class VertexBijection {
 public:
  VertexBijection() = default;
  explicit VertexBijection(std::map<std::string, std::string> mapping);

  static VertexBijection identity(const NameList& vertices);

  const std::map<std::string, std::string>& mapping() const noexcept { return mapping_; }
  const std::string& operator()(const std::string& v) const;
  std::size_t size() const noexcept { return mapping_.size(); }
  bool is_identity() const;

  VertexBijection inverse() const;
  // (a * b)(v) == a(b(v))
  friend VertexBijection operator*(const VertexBijection& a, const VertexBijection& b);
  friend bool operator==(const VertexBijection&, const VertexBijection&) = default;
  friend auto operator<=>(const VertexBijection& a, const VertexBijection& b) {
    return a.mapping_ <=> b.mapping_;
  }

 private:
  std::map<std::string, std::string> mapping_;
};

// Does the bijection carry maximal faces of `from` onto maximal faces of `to`?
bool is_complex_isomorphism(const SimplicialComplex& from, const SimplicialComplex& to,
                            const VertexBijection& f);

// Calls `visit` for each isomorphism in the order documented below until it
// returns false.
void for_each_complex_isomorphism(const SimplicialComplex& from, const SimplicialComplex& to,
                                  const std::function<bool(const VertexBijection&)>& visit);

// All isomorphisms, found by backtracking over degree-refined candidates.
// Ordered lexicographically by the images of `from`'s vertices in vertex
// order, with candidates tried in `to`'s vertex order.
std::vector<VertexBijection> complex_isomorphisms(const SimplicialComplex& from,
                                                  const SimplicialComplex& to);

std::optional<VertexBijection> first_complex_isomorphism(const SimplicialComplex& from,
                                                         const SimplicialComplex& to);

}  // namespace torsym
