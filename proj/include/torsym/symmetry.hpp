#pragma once

// Maximal symmetry of a characteristic pair.
//
// Facets with equal Poincare duals (after omniorientation normalization) are
// permuted by the Weyl group of the maximal compact connected group G; each
// class of size k contributes an SU(k) factor to a covering group of G and
// the remaining rank is a torus. This module computes that type directly and
// through the inductive sphere-bundle / blow-up construction, together with
// the automorphism group of the pair and admissible-triple data.
//
// Unless noted, ties are broken by facet identifier order (the vertex order
// of the pair's complex).

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "torsym/charpair.hpp"

namespace torsym {

struct SymmetryGroupType {
  std::vector<std::size_t> su_sizes;  // descending, each >= 2
  std::size_t torus_rank = 0;

  // "SU(3)", "SU(2) x SU(2)", "SU(2) x T^1", "T^2"; "1" for the trivial group.
  std::string to_string() const;
  friend bool operator==(const SymmetryGroupType&, const SymmetryGroupType&) = default;
};

// Throws Error(Internal) if the class sizes overrun the rank.
SymmetryGroupType group_type_from_class_sizes(std::span<const std::size_t> sizes, std::size_t rank);
SymmetryGroupType maximal_group_type(const CharacteristicPair& pair);

enum class CaseTag { SphereBundle, BlowUp };  // Case 1 / Case 2 of the induction

struct ClassCase {
  CaseTag tag;
  // SphereBundle: the facet left out (every other co-one subset is a face
  // as well). BlowUp: empty.
  std::string chosen_facet;
};

// Error(SingletonClass) for fewer than two facets; Error(DichotomyViolation)
// when the class is not a face but some co-one subset is not a face either.
ClassCase classify_class(const CharacteristicPair& pair, std::span<const std::string> facets);

struct Decomposition {
  NameList class_facets;
  std::size_t k = 0;
  std::string chosen_facet;
  CharacteristicPair reduced;  // N
  IntMatrix projection;        // parent lattice -> N's lattice
  IntVector mu;                // projection of the class sum

  // Basis (lambda of class minus chosen, then lambda of the remaining facets
  // at `anchor_vertex`) in which the class columns take the block form, and
  // the class sum in that basis; its first k-1 entries vanish.
  NameList anchor_vertex;
  IntMatrix adapted_basis;
  IntVector adapted_sum;

  // Witness that complex(parent) is the join of the (k-1)-simplex boundary on
  // the class with complex(N).
  VertexBijection join_isomorphism;
};

// Throws Error(CaseMismatch) unless the class is in the sphere-bundle case.
Decomposition decompose_case1(const CharacteristicPair& pair, std::span<const std::string> facets);

// The block-form pair built from N and mu: class facets other than the chosen
// one become e_1..e_{k-1}, the chosen facet becomes (-1,...,-1, mu), and N's
// facets (0,...,0, lambda_N).
CharacteristicPair block_reconstruction(const Decomposition& d, const CharacteristicPair& reduced,
                                        const IntVector& mu);

// "E", then "E2", "E3", ... whichever is unused.
std::string fresh_exceptional_label(const CharacteristicPair& pair);

struct BlowUp {
  CharacteristicPair pair;
  std::string exceptional;
};

// Stellar subdivision at an arbitrary face with lambda(E) = -sum lambda(face).
BlowUp blowup_face(const CharacteristicPair& pair, std::span<const std::string> face);
// Throws Error(CaseMismatch) unless the class is itself a face.
BlowUp blowup_class(const CharacteristicPair& pair, std::span<const std::string> facets);
// Inverse of blowup_face. Throws Error(NotExceptional) when the facet is not
// the exceptional facet of any stellar blow-up.
CharacteristicPair blowdown(const CharacteristicPair& pair, const std::string& exceptional);

struct BlowUpStep {
  NameList face;
  std::string exceptional;
};

struct SplitOffStep {
  Decomposition decomposition;
};

using ConstructionStep = std::variant<BlowUpStep, SplitOffStep>;

struct ConstructionTree {
  std::vector<ConstructionStep> steps;
  CharacteristicPair leaf;
  std::vector<NameList> leaf_partition;  // carried classes, all singletons

  std::vector<std::size_t> split_sizes() const;  // sorted descending
};

ConstructionTree build_construction_tree(const CharacteristicPair& pair);
// Rebuilds the input (up to pair isomorphism) from the leaf.
CharacteristicPair replay_construction_tree(const ConstructionTree& tree);

struct PairAutomorphism {
  VertexBijection f;
  IntMatrix g;

  PairAutomorphism inverse() const;
  friend PairAutomorphism operator*(const PairAutomorphism& a, const PairAutomorphism& b);
  friend bool operator==(const PairAutomorphism&, const PairAutomorphism&) = default;
};

bool is_pair_automorphism(const CharacteristicPair& pair, const PairAutomorphism& a);

// All permutations preserving every facet class setwise, in a fixed order
// with the identity first.
std::vector<VertexBijection> class_preserving_permutations(const FacetClassPartition& partition);

// The unique lift of a class-preserving permutation. Throws
// Error(NotClassPreserving) for other permutations.
PairAutomorphism phi(const CharacteristicPair& pair, const VertexBijection& perm);

std::vector<PairAutomorphism> aut_char_pair(const CharacteristicPair& pair);

using FacetPartition = std::vector<NameList>;

// Throws Error(NotAPartition) unless the blocks cover the facets exactly once.
bool weyl_partition_admissible(const CharacteristicPair& pair, const FacetPartition& partition);

struct AdmissibleTriple {
  std::vector<NameList> blocks;    // blocks of size >= 2, by lowest facet
  NameList chosen;                 // the facet left out of each block
  std::vector<IntVector> psi_data; // mu of each block in N's lattice
  CharacteristicPair reduced;      // N
  std::vector<std::optional<std::string>> marked;
  CharacteristicPair blown_up;     // input after blowing up face blocks
};

// `chosen` optionally overrides the facet left out of each block (one entry
// per block of size >= 2, empty string for the default lowest facet).
AdmissibleTriple extract_admissible_triple(const CharacteristicPair& pair,
                                           const FacetPartition& partition,
                                           std::span<const std::string> chosen = {});

// Equivalence of triples: some pair isomorphism of the reduced pairs carries
// marked facets to marked facets and mu to mu (up to sign for blocks of size 2).
bool triples_equivalent(const AdmissibleTriple& a, const AdmissibleTriple& b);

}  // namespace torsym
