#include <algorithm>
#include <set>

#include "torsym/symmetry.hpp"

namespace torsym {

namespace {

std::string brace(const NameList& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + "}";
}

IntVector sum_of(const CharacteristicPair& pair, const NameList& facets) {
  IntVector s(pair.rank());
  for (const auto& f : facets) s = s + pair.lambda(f);
  return s;
}

std::set<std::set<std::string>> name_sets(const SimplicialComplex& k) {
  std::set<std::set<std::string>> out;
  for (const auto& face : k.maximal_faces()) {
    auto names = k.names(face);
    out.emplace(names.begin(), names.end());
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Sphere-bundle decomposition

Decomposition decompose_case1(const CharacteristicPair& pair, std::span<const std::string> facets) {
  const ClassCase cc = classify_class(pair, facets);
  if (cc.tag != CaseTag::SphereBundle)
    throw Error(ErrorKind::CaseMismatch,
                "class " + brace(NameList(facets.begin(), facets.end())) + " is a face");
  const auto& k = pair.complex();
  Decomposition d;
  d.class_facets = k.names(k.face_of(facets));
  d.k = d.class_facets.size();
  d.chosen_facet = cc.chosen_facet;

  NameList rest;
  for (const auto& f : d.class_facets)
    if (f != d.chosen_facet) rest.push_back(f);
  Restriction r = restrict_to_face_with_projection(pair, rest);
  d.reduced = std::move(r.pair);
  d.projection = std::move(r.projection);
  const IntVector sum = sum_of(pair, d.class_facets);
  d.mu = d.projection * sum;

  const Face rest_face = k.face_of(rest);
  const Face* anchor = nullptr;
  for (const auto& face : k.maximal_faces())
    if (std::includes(face.begin(), face.end(), rest_face.begin(), rest_face.end())) {
      anchor = &face;
      break;
    }
  if (!anchor) throw Error(ErrorKind::Internal, brace(rest) + " lies in no maximal face");
  d.anchor_vertex = k.names(*anchor);

  std::vector<IntVector> columns;
  for (const auto& f : rest) columns.push_back(pair.lambda(f));
  for (auto v : *anchor)
    if (!std::binary_search(rest_face.begin(), rest_face.end(), v)) columns.push_back(pair.lambda(v));
  d.adapted_basis = IntMatrix::from_columns(columns, pair.rank());
  d.adapted_sum = unimodular_inverse(d.adapted_basis) * sum;
  for (std::size_t i = 0; i + 1 < d.k; ++i)
    if (d.adapted_sum[i] != 0)
      throw Error(ErrorKind::Internal, "class sum " + to_string(d.adapted_sum) +
                                           " is not of block form in the adapted basis");

  SimplicialComplex join = join_with_simplex_boundary(d.reduced.complex(), d.k, d.class_facets);
  auto id = VertexBijection::identity(k.vertices());
  if (join.vertex_count() == k.vertex_count() && is_complex_isomorphism(k, join, id)) {
    d.join_isomorphism = std::move(id);
  } else if (auto f = first_complex_isomorphism(k, join)) {
    d.join_isomorphism = std::move(*f);
  } else {
    throw Error(ErrorKind::Internal, "complex is not the join of the class simplex boundary with N");
  }
  return d;
}

CharacteristicPair block_reconstruction(const Decomposition& d, const CharacteristicPair& reduced,
                                        const IntVector& mu) {
  const std::size_t head = d.k - 1;
  const std::size_t n = head + reduced.rank();
  if (mu.size() != reduced.rank())
    throw Error(ErrorKind::InvalidArgument, "mu has length " + std::to_string(mu.size()) +
                                                ", expected " + std::to_string(reduced.rank()));
  SimplicialComplex k = join_with_simplex_boundary(reduced.complex(), d.k, d.class_facets);
  std::vector<IntVector> lambda;
  std::size_t next = 0;
  for (const auto& f : d.class_facets) {
    IntVector v(n);
    if (f == d.chosen_facet) {
      for (std::size_t i = 0; i < head; ++i) v[i] = -1;
      for (std::size_t i = 0; i < mu.size(); ++i) v[head + i] = mu[i];
    } else {
      v[next++] = 1;
    }
    lambda.push_back(std::move(v));
  }
  for (const auto& u : reduced.lambda()) {
    IntVector v(n);
    for (std::size_t i = 0; i < u.size(); ++i) v[head + i] = u[i];
    lambda.push_back(std::move(v));
  }
  return CharacteristicPair(n, std::move(k), std::move(lambda));
}

// ---------------------------------------------------------------------------
// Blow-ups

std::string fresh_exceptional_label(const CharacteristicPair& pair) {
  if (!pair.complex().index_of("E")) return "E";
  for (std::size_t i = 2;; ++i) {
    std::string label = "E" + std::to_string(i);
    if (!pair.complex().index_of(label)) return label;
  }
}

BlowUp blowup_face(const CharacteristicPair& pair, std::span<const std::string> face) {
  std::string e = fresh_exceptional_label(pair);
  SimplicialComplex k = stellar_subdivision(pair.complex(), face, e);
  std::vector<IntVector> lambda = pair.lambda();
  lambda.push_back(-sum_of(pair, NameList(face.begin(), face.end())));
  CharacteristicPair result(pair.rank(), std::move(k), std::move(lambda));
  if (!validate_pair(result).ok())
    throw Error(ErrorKind::Internal, "blow-up at " + brace(NameList(face.begin(), face.end())) +
                                         " produced an invalid pair");
  return {std::move(result), std::move(e)};
}

BlowUp blowup_class(const CharacteristicPair& pair, std::span<const std::string> facets) {
  if (classify_class(pair, facets).tag != CaseTag::BlowUp)
    throw Error(ErrorKind::CaseMismatch,
                "class " + brace(NameList(facets.begin(), facets.end())) + " is not a face");
  return blowup_face(pair, facets);
}

CharacteristicPair blowdown(const CharacteristicPair& pair, const std::string& exceptional) {
  const auto& k = pair.complex();
  const std::size_t e = k.require_index(exceptional);
  const std::size_t n = pair.rank();
  const bool closed = is_closed_pseudomanifold(k, n);

  std::vector<Face> star_links;  // maximal faces of link(E), as positions
  std::set<std::size_t> link_vertices;
  for (const auto& face : k.maximal_faces()) {
    if (!std::binary_search(face.begin(), face.end(), e)) continue;
    Face tau;
    for (auto v : face)
      if (v != e) tau.push_back(v);
    link_vertices.insert(tau.begin(), tau.end());
    star_links.push_back(std::move(tau));
  }
  const std::vector<std::size_t> candidates(link_vertices.begin(), link_vertices.end());

  NameList vertices;
  for (const auto& v : k.vertices())
    if (v != exceptional) vertices.push_back(v);
  std::vector<IntVector> lambda;
  for (std::size_t i = 0; i < pair.facet_count(); ++i)
    if (i != e) lambda.push_back(pair.lambda(i));
  const auto target = name_sets(k);

  for (std::size_t size = 2; size <= std::min(n, candidates.size()); ++size) {
    std::vector<bool> pick(candidates.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      Face sigma;
      for (std::size_t i = 0; i < candidates.size(); ++i)
        if (pick[i]) sigma.push_back(candidates[i]);
      IntVector s(n);
      for (auto v : sigma) s = s + pair.lambda(v);
      if (pair.lambda(e) != -s) continue;

      std::set<std::set<std::string>> restored;
      for (const auto& face : k.maximal_faces())
        if (!std::binary_search(face.begin(), face.end(), e)) {
          auto names = k.names(face);
          restored.emplace(names.begin(), names.end());
        }
      for (const auto& tau : star_links) {
        std::size_t shared = 0;
        for (auto v : tau) shared += std::binary_search(sigma.begin(), sigma.end(), v);
        if (shared + 1 != sigma.size()) continue;
        std::set<std::string> face;
        for (auto v : sigma) face.insert(k.name(v));
        for (auto v : tau) face.insert(k.name(v));
        restored.insert(std::move(face));
      }
      std::vector<NameList> faces;
      for (const auto& f : restored) faces.emplace_back(f.begin(), f.end());
      SimplicialComplex down(vertices, faces);
      if (closed && !is_closed_pseudomanifold(down, n)) continue;
      const NameList sigma_names = k.names(sigma);
      if (name_sets(stellar_subdivision(down, sigma_names, exceptional)) != target) continue;
      CharacteristicPair result(n, std::move(down), lambda);
      if (validate_pair(result).ok()) return result;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  throw Error(ErrorKind::NotExceptional, exceptional + " is not the exceptional facet of a blow-up");
}

// ---------------------------------------------------------------------------
// Construction tree

std::vector<std::size_t> ConstructionTree::split_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& step : steps)
    if (const auto* s = std::get_if<SplitOffStep>(&step)) out.push_back(s->decomposition.k);
  std::sort(out.rbegin(), out.rend());
  return out;
}

ConstructionTree build_construction_tree(const CharacteristicPair& pair) {
  require_valid(pair);
  ConstructionTree tree;
  CharacteristicPair current = pair;
  std::vector<NameList> blocks;
  for (const auto& c : facet_classes(pair).classes) blocks.push_back(c.facets);

  for (;;) {
    // Largest block, ties to the one with the lowest facet.
    const NameList* next = nullptr;
    std::size_t best_low = 0;
    for (const auto& b : blocks) {
      if (b.size() < 2) continue;
      const std::size_t low = current.complex().face_of(b).front();
      if (!next || b.size() > next->size() || (b.size() == next->size() && low < best_low)) {
        next = &b;
        best_low = low;
      }
    }
    if (!next) break;
    const NameList block = *next;

    if (classify_class(current, block).tag == CaseTag::BlowUp) {
      BlowUp b = blowup_class(current, block);
      tree.steps.emplace_back(BlowUpStep{block, b.exceptional});
      current = std::move(b.pair);
      blocks.push_back({b.exceptional});
      continue;
    }

    Decomposition d = decompose_case1(current, block);
    const CharacteristicPair& reduced = d.reduced;
    std::vector<NameList> carried;
    for (const auto& b : blocks) {
      if (b == block) continue;
      NameList kept;
      for (const auto& f : b)
        if (reduced.complex().index_of(f)) kept.push_back(f);
      if (!kept.empty()) carried.push_back(std::move(kept));
    }
    if (reduced.facet_count() > 0) {
      const CohomologyModel model = cohomology_model(reduced);
      for (const auto& b : carried) {
        const auto first = reduced.complex().require_index(b.front());
        for (const auto& f : b)
          if (!model.equal(first, reduced.complex().require_index(f)))
            throw Error(ErrorKind::Internal, "carried block " + brace(b) +
                                                 " does not refine the classes of the reduced pair");
      }
    }
    current = reduced;
    blocks = std::move(carried);
    tree.steps.emplace_back(SplitOffStep{std::move(d)});
  }
  tree.leaf = std::move(current);
  tree.leaf_partition = std::move(blocks);
  return tree;
}

CharacteristicPair replay_construction_tree(const ConstructionTree& tree) {
  CharacteristicPair current = tree.leaf;
  for (auto it = tree.steps.rbegin(); it != tree.steps.rend(); ++it) {
    if (const auto* s = std::get_if<SplitOffStep>(&*it)) {
      const Decomposition& d = s->decomposition;
      auto iso = pair_isomorphic(d.reduced, current);
      if (!iso) throw Error(ErrorKind::Internal, "replayed pair differs from the recorded reduction");
      current = block_reconstruction(d, current, iso->g * d.mu);
    } else {
      current = blowdown(current, std::get<BlowUpStep>(*it).exceptional);
    }
  }
  return current;
}

}  // namespace torsym
