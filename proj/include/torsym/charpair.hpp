#pragma once

// Characteristic pairs (K, lambda): a simplicial complex on the facet set
// together with a lattice vector per facet, nonsingular on every maximal face.
//
// "Identifier order" below always means the vertex order of the complex,
// i.e. document order for pairs read from files.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "torsym/complex.hpp"
#include "torsym/error.hpp"
#include "torsym/lattice.hpp"

namespace torsym {

class CharacteristicPair {
 public:
  CharacteristicPair() = default;
  // lambda is aligned with complex.vertices(); every vector must have length
  // `rank`. Structural mismatches throw Error(InvalidArgument); mathematical
  // validity is checked separately by validate_pair.
  CharacteristicPair(std::size_t rank, SimplicialComplex complex, std::vector<IntVector> lambda);

  std::size_t rank() const noexcept { return rank_; }
  const SimplicialComplex& complex() const noexcept { return complex_; }
  const NameList& facets() const noexcept { return complex_.vertices(); }
  std::size_t facet_count() const noexcept { return complex_.vertex_count(); }

  const std::vector<IntVector>& lambda() const noexcept { return lambda_; }
  const IntVector& lambda(std::size_t facet) const { return lambda_.at(facet); }
  const IntVector& lambda(const std::string& facet) const {
    return lambda_.at(complex_.require_index(facet));
  }

  // Columns lambda(F) for F in the face, in face order.
  IntMatrix lambda_matrix(const Face& face) const;

  friend bool operator==(const CharacteristicPair& a, const CharacteristicPair& b) {
    return a.rank_ == b.rank_ && a.complex_.vertices() == b.complex_.vertices() &&
           a.complex_.maximal_faces() == b.complex_.maximal_faces() && a.lambda_ == b.lambda_;
  }

 private:
  std::size_t rank_ = 0;
  SimplicialComplex complex_;
  std::vector<IntVector> lambda_;
};

Report validate_pair(const CharacteristicPair& pair);
// Throws Error(InvalidPair) listing the first violations.
void require_valid(const CharacteristicPair& pair);

// Additive model of H^2: generators are the facets, relations are the rows
// of the characteristic matrix.
struct CohomologyModel {
  AbelianGroupPresentation presentation;
  std::vector<IntVector> pd;  // canonical class of each facet

  bool equal(std::size_t a, std::size_t b) const { return pd[a] == pd[b]; }
  bool opposite(std::size_t a, std::size_t b) const;
};

CohomologyModel cohomology_model(const CharacteristicPair& pair);

struct OmniOrientationSigns {
  std::vector<int> sign;  // +1 or -1 per facet, identifier order

  bool is_identity() const;
};

CharacteristicPair apply_signs(const CharacteristicPair& pair, const OmniOrientationSigns& signs);

// Flips lambda columns so that facets whose duals agree up to sign agree
// exactly. Within each group of +-related duals the lowest facet keeps its
// sign. Throws Error(ZeroDual) if some dual vanishes.
std::pair<CharacteristicPair, OmniOrientationSigns> normalize_omniorientation(
    const CharacteristicPair& pair);

struct FacetClass {
  NameList facets;           // identifier order
  IntVector representative;  // canonical class
};

struct FacetClassPartition {
  std::vector<FacetClass> classes;  // ordered by lowest facet

  const FacetClass* class_of(const std::string& facet) const;
  std::vector<std::size_t> sizes() const;
};

// Partition of the facets by exact equality of duals. Throws
// Error(NotNormalized) if two distinct duals are negatives of each other.
FacetClassPartition facet_classes(const CharacteristicPair& pair);
FacetClassPartition facet_classes(const CharacteristicPair& pair, const CohomologyModel& model);

// At every vertex of the polytope (maximal face) each class misses at most
// one of its facets.
Report check_vertex_class_bound(const CharacteristicPair& pair);

CharacteristicPair restrict_to_facet(const CharacteristicPair& pair, const std::string& facet);

struct Restriction {
  CharacteristicPair pair;
  IntMatrix projection;  // rank(result) x rank(parent); carries parent vectors down
};

Restriction restrict_to_face_with_projection(const CharacteristicPair& pair,
                                             std::span<const std::string> face);
CharacteristicPair restrict_to_face(const CharacteristicPair& pair,
                                    std::span<const std::string> face);

struct PairIsomorphism {
  VertexBijection f;
  IntMatrix g;  // g * lambda(F) == lambda'(f(F)), up to sign in sign-slack mode
};

enum class SignMode { Exact, AllowFlips };

// Lattice map sending the columns of `from` at the face to the given target
// columns; nullopt if the source columns are not a basis.
std::optional<IntMatrix> solve_on_face(const IntMatrix& source, const IntMatrix& target);

bool verify_isomorphism(const CharacteristicPair& p, const CharacteristicPair& q,
                        const PairIsomorphism& iso, SignMode mode = SignMode::Exact);

// Throws Error(RankMismatch) for pairs of different rank.
std::optional<PairIsomorphism> pair_isomorphic(const CharacteristicPair& p,
                                               const CharacteristicPair& q,
                                               SignMode mode = SignMode::Exact);

// ---------------------------------------------------------------------------
// Delzant polytopes

struct Inequality {
  IntVector normal;  // outward, primitive
  Rational offset;   // <normal, x> <= offset
};

// Facets are named F1..Fm in inequality order.
CharacteristicPair delzant_pair(std::span<const Inequality> inequalities, std::size_t n);

// No two facets may have duals that are negatives without being equal.
Report check_delzant_sign_theorem(const CharacteristicPair& pair);

}  // namespace torsym
