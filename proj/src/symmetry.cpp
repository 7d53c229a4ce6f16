#include "torsym/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace torsym {

namespace {

std::string brace(const NameList& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  return out + "}";
}

// Lattice map solved on the first maximal face; nullopt if it does not
// extend to the whole pair.
std::optional<IntMatrix> lift(const CharacteristicPair& pair, const VertexBijection& f) {
  const std::size_t n = pair.rank();
  if (pair.complex().maximal_faces().empty()) return std::nullopt;
  const Face& anchor = pair.complex().maximal_faces().front();
  std::vector<IntVector> image;
  for (auto i : anchor) image.push_back(pair.lambda(f(pair.facets()[i])));
  auto g = solve_on_face(pair.lambda_matrix(anchor), IntMatrix::from_columns(image, n));
  if (!g) return std::nullopt;
  PairAutomorphism candidate{f, *g};
  if (!is_pair_automorphism(pair, candidate)) return std::nullopt;
  return g;
}

}  // namespace

std::string SymmetryGroupType::to_string() const {
  std::string out;
  for (auto k : su_sizes) {
    if (!out.empty()) out += " x ";
    out += "SU(" + std::to_string(k) + ")";
  }
  if (torus_rank > 0) {
    if (!out.empty()) out += " x ";
    out += "T^" + std::to_string(torus_rank);
  }
  return out.empty() ? "1" : out;
}

SymmetryGroupType group_type_from_class_sizes(std::span<const std::size_t> sizes,
                                              std::size_t rank) {
  SymmetryGroupType t;
  std::size_t used = 0;
  for (auto k : sizes) {
    if (k < 2) continue;
    t.su_sizes.push_back(k);
    used += k - 1;
  }
  if (used > rank)
    throw Error(ErrorKind::Internal, "class sizes exceed the rank: rank identity violated");
  std::sort(t.su_sizes.rbegin(), t.su_sizes.rend());
  t.torus_rank = rank - used;
  return t;
}

SymmetryGroupType maximal_group_type(const CharacteristicPair& pair) {
  const auto sizes = facet_classes(pair).sizes();
  return group_type_from_class_sizes(sizes, pair.rank());
}

ClassCase classify_class(const CharacteristicPair& pair, std::span<const std::string> facets) {
  const auto& k = pair.complex();
  const Face cls = k.face_of(facets);
  if (cls.size() < 2)
    throw Error(ErrorKind::SingletonClass, "class " + brace(k.names(cls)) + " has fewer than two facets");
  if (k.contains_face(cls)) return {CaseTag::BlowUp, {}};
  std::optional<std::size_t> chosen;
  for (auto drop : cls) {
    Face rest;
    for (auto v : cls)
      if (v != drop) rest.push_back(v);
    if (!k.contains_face(rest))
      throw Error(ErrorKind::DichotomyViolation,
                  "class " + brace(k.names(cls)) + " is not a face and neither is " + brace(k.names(rest)));
    if (!chosen) chosen = drop;
  }
  return {CaseTag::SphereBundle, k.name(*chosen)};
}

// ---------------------------------------------------------------------------
// Automorphisms

PairAutomorphism PairAutomorphism::inverse() const {
  return {f.inverse(), unimodular_inverse(g)};
}

PairAutomorphism operator*(const PairAutomorphism& a, const PairAutomorphism& b) {
  return {a.f * b.f, a.g * b.g};
}

bool is_pair_automorphism(const CharacteristicPair& pair, const PairAutomorphism& a) {
  return verify_isomorphism(pair, pair, {a.f, a.g}, SignMode::Exact);
}

std::vector<VertexBijection> class_preserving_permutations(const FacetClassPartition& partition) {
  std::vector<std::map<std::string, std::string>> current{{}};
  for (const auto& c : partition.classes) {
    NameList images = c.facets;
    std::sort(images.begin(), images.end());
    std::vector<NameList> perms;
    do perms.push_back(images);
    while (std::next_permutation(images.begin(), images.end()));
    // Identity first: rotate it to the front.
    auto id = std::find(perms.begin(), perms.end(), c.facets);
    std::rotate(perms.begin(), id, id + 1);

    std::vector<std::map<std::string, std::string>> next;
    for (const auto& base : current)
      for (const auto& p : perms) {
        auto m = base;
        for (std::size_t i = 0; i < p.size(); ++i) m.emplace(c.facets[i], p[i]);
        next.push_back(std::move(m));
      }
    current = std::move(next);
  }
  std::vector<VertexBijection> out;
  for (auto& m : current) out.emplace_back(std::move(m));
  return out;
}

PairAutomorphism phi(const CharacteristicPair& pair, const VertexBijection& perm) {
  const FacetClassPartition partition = facet_classes(pair);
  if (perm.size() != pair.facet_count())
    throw Error(ErrorKind::NotClassPreserving, "permutation does not act on every facet");
  for (const auto& c : partition.classes)
    for (const auto& f : c.facets) {
      auto it = perm.mapping().find(f);
      if (it == perm.mapping().end() ||
          std::find(c.facets.begin(), c.facets.end(), it->second) == c.facets.end())
        throw Error(ErrorKind::NotClassPreserving,
                    "permutation moves " + f + " out of its class " + brace(c.facets));
    }
  if (!is_complex_isomorphism(pair.complex(), pair.complex(), perm))
    throw Error(ErrorKind::Internal, "class-preserving permutation is not a complex automorphism");
  auto g = lift(pair, perm);
  if (!g) throw Error(ErrorKind::Internal, "lattice lift of a class-preserving permutation does not verify");
  return {perm, std::move(*g)};
}

std::vector<PairAutomorphism> aut_char_pair(const CharacteristicPair& pair) {
  require_valid(pair);
  std::vector<PairAutomorphism> out;
  for_each_complex_isomorphism(pair.complex(), pair.complex(), [&](const VertexBijection& f) {
    if (auto g = lift(pair, f)) out.push_back({f, std::move(*g)});
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Weyl partitions and admissible triples

namespace {

void require_partition(const CharacteristicPair& pair, const FacetPartition& partition) {
  std::set<std::string> seen;
  for (const auto& block : partition) {
    if (block.empty()) throw Error(ErrorKind::NotAPartition, "empty block");
    for (const auto& f : block) {
      if (!pair.complex().index_of(f))
        throw Error(ErrorKind::NotAPartition, "unknown facet '" + f + "'");
      if (!seen.insert(f).second)
        throw Error(ErrorKind::NotAPartition, "facet " + f + " appears twice");
    }
  }
  if (seen.size() != pair.facet_count())
    throw Error(ErrorKind::NotAPartition, "blocks do not cover every facet");
}

// Blocks of size >= 2 with facets in identifier order, ordered by lowest facet.
std::vector<NameList> nontrivial_blocks(const CharacteristicPair& pair,
                                        const FacetPartition& partition) {
  std::vector<Face> faces;
  for (const auto& block : partition)
    if (block.size() >= 2) faces.push_back(pair.complex().face_of(block));
  std::sort(faces.begin(), faces.end());
  std::vector<NameList> out;
  for (const auto& f : faces) out.push_back(pair.complex().names(f));
  return out;
}

}  // namespace

bool weyl_partition_admissible(const CharacteristicPair& pair, const FacetPartition& partition) {
  require_partition(pair, partition);
  const FacetClassPartition classes = facet_classes(pair);
  for (const auto& block : partition) {
    if (block.size() < 2) continue;
    const FacetClass* c = classes.class_of(block.front());
    for (const auto& f : block)
      if (std::find(c->facets.begin(), c->facets.end(), f) == c->facets.end()) return false;
  }
  return true;
}

AdmissibleTriple extract_admissible_triple(const CharacteristicPair& pair,
                                           const FacetPartition& partition,
                                           std::span<const std::string> chosen) {
  if (!weyl_partition_admissible(pair, partition))
    throw Error(ErrorKind::NotAdmissible, "partition has a block crossing facet classes");
  AdmissibleTriple triple;
  triple.blocks = nontrivial_blocks(pair, partition);
  if (!chosen.empty() && chosen.size() != triple.blocks.size())
    throw Error(ErrorKind::InvalidArgument, "one chosen facet per block required");

  CharacteristicPair current = pair;
  std::vector<std::optional<std::string>> exceptional(triple.blocks.size());
  for (std::size_t i = 0; i < triple.blocks.size(); ++i) {
    if (classify_class(current, triple.blocks[i]).tag == CaseTag::BlowUp) {
      BlowUp b = blowup_class(current, triple.blocks[i]);
      current = std::move(b.pair);
      exceptional[i] = std::move(b.exceptional);
    }
  }

  NameList face;
  for (std::size_t i = 0; i < triple.blocks.size(); ++i) {
    const NameList& block = triple.blocks[i];
    const ClassCase cc = classify_class(current, block);
    if (cc.tag != CaseTag::SphereBundle)
      throw Error(ErrorKind::Internal, "block " + brace(block) + " is still a face after blow-up");
    std::string pick = chosen.empty() || chosen[i].empty() ? block.front() : chosen[i];
    if (std::find(block.begin(), block.end(), pick) == block.end())
      throw Error(ErrorKind::InvalidArgument, pick + " is not in block " + brace(block));
    triple.chosen.push_back(pick);
    for (const auto& f : block)
      if (f != pick) face.push_back(f);
  }

  Restriction r = restrict_to_face_with_projection(current, face);
  for (std::size_t i = 0; i < triple.blocks.size(); ++i) {
    IntVector sum(current.rank());
    for (const auto& f : triple.blocks[i]) sum = sum + current.lambda(f);
    triple.psi_data.push_back(r.projection * sum);
    if (exceptional[i]) {
      if (!r.pair.complex().index_of(*exceptional[i]))
        throw Error(ErrorKind::Internal, "exceptional facet " + *exceptional[i] + " misses N");
      triple.marked.push_back(exceptional[i]);
    } else {
      triple.marked.push_back(std::nullopt);
    }
  }
  triple.reduced = std::move(r.pair);
  triple.blown_up = std::move(current);
  return triple;
}

bool triples_equivalent(const AdmissibleTriple& a, const AdmissibleTriple& b) {
  if (a.blocks.size() != b.blocks.size()) return false;
  for (std::size_t i = 0; i < a.blocks.size(); ++i)
    if (a.blocks[i].size() != b.blocks[i].size() ||
        a.marked[i].has_value() != b.marked[i].has_value())
      return false;
  if (a.reduced.rank() != b.reduced.rank()) return false;
  const CharacteristicPair& p = a.reduced;
  const CharacteristicPair& q = b.reduced;
  if (p.complex().maximal_faces().empty()) return false;
  const Face& anchor = p.complex().maximal_faces().front();
  const std::size_t n = p.rank();

  bool found = false;
  for_each_complex_isomorphism(p.complex(), q.complex(), [&](const VertexBijection& f) {
    for (std::size_t i = 0; i < a.marked.size(); ++i)
      if (a.marked[i] && f(*a.marked[i]) != *b.marked[i]) return true;
    std::vector<IntVector> image;
    for (auto v : anchor) image.push_back(q.lambda(f(p.facets()[v])));
    auto g = solve_on_face(p.lambda_matrix(anchor), IntMatrix::from_columns(image, n));
    if (!g || !verify_isomorphism(p, q, {f, *g})) return true;
    for (std::size_t i = 0; i < a.psi_data.size(); ++i) {
      const IntVector moved = *g * a.psi_data[i];
      if (moved == b.psi_data[i]) continue;
      if (a.blocks[i].size() == 2 && moved == -b.psi_data[i]) continue;
      return true;
    }
    found = true;
    return false;
  });
  return found;
}

}  // namespace torsym
