#include "torsym/charpair.hpp"

#include <algorithm>

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

}  // namespace

CharacteristicPair::CharacteristicPair(std::size_t rank, SimplicialComplex complex,
                                       std::vector<IntVector> lambda)
    : rank_(rank), complex_(std::move(complex)), lambda_(std::move(lambda)) {
  if (lambda_.size() != complex_.vertex_count())
    throw Error(ErrorKind::InvalidArgument, "one lattice vector per facet required");
  for (std::size_t i = 0; i < lambda_.size(); ++i)
    if (lambda_[i].size() != rank_)
      throw Error(ErrorKind::InvalidArgument, "lambda(" + complex_.name(i) + ") has length " +
                                                  std::to_string(lambda_[i].size()) +
                                                  ", expected " + std::to_string(rank_));
}

IntMatrix CharacteristicPair::lambda_matrix(const Face& face) const {
  std::vector<IntVector> cols;
  cols.reserve(face.size());
  for (auto i : face) cols.push_back(lambda_.at(i));
  return IntMatrix::from_columns(cols, rank_);
}

Report validate_pair(const CharacteristicPair& pair) {
  Report report = validate_complex(pair.complex(), pair.rank());
  for (const auto& face : pair.complex().maximal_faces()) {
    if (face.size() > pair.rank()) continue;
    std::vector<IntVector> cols;
    for (auto i : face) cols.push_back(pair.lambda(i));
    if (!is_part_of_basis(cols, pair.rank()))
      report.add("singular",
                 "lambda on " + brace(pair.complex().names(face)) + " is not part of a basis",
                 pair.complex().names(face));
  }
  return report;
}

void require_valid(const CharacteristicPair& pair) {
  Report r = validate_pair(pair);
  if (r.ok()) return;
  std::string msg;
  for (std::size_t i = 0; i < r.violations.size() && i < 3; ++i) {
    if (i) msg += "; ";
    msg += r.violations[i].message;
  }
  throw Error(ErrorKind::InvalidPair, msg);
}

// ---------------------------------------------------------------------------
// Cohomology

bool CohomologyModel::opposite(std::size_t a, std::size_t b) const {
  return pd[a] != pd[b] && presentation.canonical(-pd[a]) == pd[b];
}

CohomologyModel cohomology_model(const CharacteristicPair& pair) {
  require_valid(pair);
  const std::size_t n = pair.rank();
  const std::size_t m = pair.facet_count();
  // Row j holds <v_j, lambda(F_i)> for the standard dual basis v_j.
  IntMatrix relations(n, m);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) relations(j, i) = pair.lambda(i)[j];
  CohomologyModel model{cokernel_presentation(relations), {}};
  model.pd.reserve(m);
  for (std::size_t i = 0; i < m; ++i) model.pd.push_back(model.presentation.generator(i));
  return model;
}

bool OmniOrientationSigns::is_identity() const {
  return std::all_of(sign.begin(), sign.end(), [](int s) { return s == 1; });
}

CharacteristicPair apply_signs(const CharacteristicPair& pair, const OmniOrientationSigns& signs) {
  if (signs.sign.size() != pair.facet_count())
    throw Error(ErrorKind::InvalidArgument, "one sign per facet required");
  std::vector<IntVector> lambda = pair.lambda();
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (signs.sign[i] < 0) lambda[i] = -lambda[i];
  return CharacteristicPair(pair.rank(), pair.complex(), std::move(lambda));
}

std::pair<CharacteristicPair, OmniOrientationSigns> normalize_omniorientation(
    const CharacteristicPair& pair) {
  const CohomologyModel model = cohomology_model(pair);
  const std::size_t m = pair.facet_count();
  for (std::size_t i = 0; i < m; ++i)
    if (is_zero(model.pd[i]))
      throw Error(ErrorKind::ZeroDual, "facet " + pair.facets()[i] + " has zero Poincare dual");

  OmniOrientationSigns signs{std::vector<int>(m, 0)};
  for (std::size_t leader = 0; leader < m; ++leader) {
    if (signs.sign[leader] != 0) continue;
    signs.sign[leader] = 1;
    const IntVector negated = model.presentation.canonical(-model.pd[leader]);
    for (std::size_t j = leader + 1; j < m; ++j) {
      if (signs.sign[j] != 0) continue;
      if (model.pd[j] == model.pd[leader])
        signs.sign[j] = 1;
      else if (model.pd[j] == negated)
        signs.sign[j] = -1;
    }
  }
  CharacteristicPair normalized = apply_signs(pair, signs);

  const CohomologyModel check = cohomology_model(normalized);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (check.opposite(a, b))
        throw Error(ErrorKind::Internal, "normalization left opposite duals on " +
                                             pair.facets()[a] + ", " + pair.facets()[b]);
  return {std::move(normalized), std::move(signs)};
}

const FacetClass* FacetClassPartition::class_of(const std::string& facet) const {
  for (const auto& c : classes)
    if (std::find(c.facets.begin(), c.facets.end(), facet) != c.facets.end()) return &c;
  return nullptr;
}

std::vector<std::size_t> FacetClassPartition::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& c : classes) out.push_back(c.facets.size());
  return out;
}

FacetClassPartition facet_classes(const CharacteristicPair& pair, const CohomologyModel& model) {
  const std::size_t m = pair.facet_count();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (model.opposite(a, b))
        throw Error(ErrorKind::NotNormalized, "duals of " + pair.facets()[a] + " and " +
                                                  pair.facets()[b] + " differ by sign");
  FacetClassPartition partition;
  std::vector<bool> placed(m, false);
  for (std::size_t a = 0; a < m; ++a) {
    if (placed[a]) continue;
    FacetClass c{{}, model.pd[a]};
    for (std::size_t b = a; b < m; ++b)
      if (!placed[b] && model.pd[b] == model.pd[a]) {
        placed[b] = true;
        c.facets.push_back(pair.facets()[b]);
      }
    partition.classes.push_back(std::move(c));
  }
  return partition;
}

FacetClassPartition facet_classes(const CharacteristicPair& pair) {
  return facet_classes(pair, cohomology_model(pair));
}

Report check_vertex_class_bound(const CharacteristicPair& pair) {
  const FacetClassPartition partition = facet_classes(pair);
  const auto& k = pair.complex();
  Report report;
  for (const auto& vertex : k.maximal_faces()) {
    for (const auto& c : partition.classes) {
      std::size_t hits = 0;
      for (const auto& f : c.facets)
        if (std::binary_search(vertex.begin(), vertex.end(), k.require_index(f))) ++hits;
      if (hits + 1 < c.facets.size()) {
        NameList involved = k.names(vertex);
        involved.insert(involved.end(), c.facets.begin(), c.facets.end());
        report.add("vertex-class-bound",
                   "vertex " + brace(k.names(vertex)) + " meets class " + brace(c.facets) +
                       " in " + std::to_string(hits) + " facets",
                   std::move(involved));
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Restriction to faces

namespace {

Restriction restrict_once(const CharacteristicPair& pair, const std::string& facet) {
  const std::size_t idx = pair.complex().require_index(facet);
  IntMatrix q = quotient_by_primitive(pair.lambda(idx));
  SimplicialComplex link = link_of_vertex(pair.complex(), facet);
  std::vector<IntVector> lambda;
  lambda.reserve(link.vertex_count());
  for (const auto& v : link.vertices()) lambda.push_back(q * pair.lambda(v));
  CharacteristicPair out(pair.rank() - 1, std::move(link), std::move(lambda));
  Report r = validate_pair(out);
  if (!r.ok())
    throw Error(ErrorKind::InvalidPair, "restriction to " + facet + " is invalid: " +
                                            r.violations.front().message);
  return {std::move(out), std::move(q)};
}

}  // namespace

CharacteristicPair restrict_to_facet(const CharacteristicPair& pair, const std::string& facet) {
  require_valid(pair);
  return restrict_once(pair, facet).pair;
}

Restriction restrict_to_face_with_projection(const CharacteristicPair& pair,
                                             std::span<const std::string> face) {
  require_valid(pair);
  const Face sigma = pair.complex().face_of(face);
  if (!pair.complex().contains_face(sigma))
    throw Error(ErrorKind::NotAFace, brace(pair.complex().names(sigma)) + " is not a face");
  Restriction current{pair, IntMatrix::identity(pair.rank())};
  for (auto idx : sigma) {
    Restriction next = restrict_once(current.pair, pair.facets()[idx]);
    current.projection = next.projection * current.projection;
    current.pair = std::move(next.pair);
  }
  return current;
}

CharacteristicPair restrict_to_face(const CharacteristicPair& pair,
                                    std::span<const std::string> face) {
  return restrict_to_face_with_projection(pair, face).pair;
}

// ---------------------------------------------------------------------------
// Isomorphism

std::optional<IntMatrix> solve_on_face(const IntMatrix& source, const IntMatrix& target) {
  if (source.rows() != source.cols() || target.rows() != source.rows() ||
      target.cols() != source.cols())
    return std::nullopt;
  try {
    return map_columns(source, target);
  } catch (const Error&) {
    return std::nullopt;
  }
}

bool verify_isomorphism(const CharacteristicPair& p, const CharacteristicPair& q,
                        const PairIsomorphism& iso, SignMode mode) {
  const std::size_t n = p.rank();
  if (q.rank() != n || iso.g.rows() != n || iso.g.cols() != n) return false;
  if (n > 0 && abs(determinant(iso.g)) != 1) return false;
  if (!is_complex_isomorphism(p.complex(), q.complex(), iso.f)) return false;
  for (std::size_t i = 0; i < p.facet_count(); ++i) {
    const IntVector image = iso.g * p.lambda(i);
    const IntVector& expected = q.lambda(iso.f(p.facets()[i]));
    if (image == expected) continue;
    if (mode == SignMode::AllowFlips && image == -expected) continue;
    return false;
  }
  return true;
}

std::optional<PairIsomorphism> pair_isomorphic(const CharacteristicPair& p,
                                               const CharacteristicPair& q, SignMode mode) {
  if (p.rank() != q.rank())
    throw Error(ErrorKind::RankMismatch, "ranks " + std::to_string(p.rank()) + " and " +
                                             std::to_string(q.rank()) + " differ");
  if (p.complex().maximal_faces().empty()) return std::nullopt;
  const std::size_t n = p.rank();
  const Face& anchor = p.complex().maximal_faces().front();
  if (anchor.size() != n) return std::nullopt;
  const IntMatrix source = p.lambda_matrix(anchor);

  std::optional<PairIsomorphism> found;
  for_each_complex_isomorphism(p.complex(), q.complex(), [&](const VertexBijection& f) {
    std::vector<IntVector> cols;
    for (auto i : anchor) cols.push_back(q.lambda(f(p.facets()[i])));
    const std::size_t sign_patterns = mode == SignMode::Exact ? 1 : (std::size_t{1} << n);
    for (std::size_t mask = 0; mask < sign_patterns; ++mask) {
      std::vector<IntVector> signed_cols = cols;
      for (std::size_t j = 0; j < n; ++j)
        if (mask & (std::size_t{1} << j)) signed_cols[j] = -signed_cols[j];
      auto g = solve_on_face(source, IntMatrix::from_columns(signed_cols, n));
      if (!g) continue;
      PairIsomorphism iso{f, std::move(*g)};
      if (verify_isomorphism(p, q, iso, mode)) {
        found = std::move(iso);
        return false;
      }
    }
    return true;
  });
  return found;
}

}  // namespace torsym
