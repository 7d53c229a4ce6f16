#include <algorithm>

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "torsym/catalog.hpp"
#include "torsym/symmetry.hpp"

using namespace torsym;

namespace {

std::vector<std::size_t> class_sizes(const CharacteristicPair& p) {
  std::vector<std::size_t> sizes;
  for (const auto& c : facet_classes(p).classes)
    if (c.facets.size() >= 2) sizes.push_back(c.facets.size());
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

void check_rank_identity(const CharacteristicPair& p) {
  auto g = maximal_group_type(p);
  std::size_t total = g.torus_rank;
  for (auto k : g.su_sizes) total += k - 1;
  CHECK(total == p.rank());
  CHECK(g.su_sizes == class_sizes(p));
  CHECK(check_vertex_class_bound(p).ok());
}

}  // namespace

TEST_CASE("rank identity and vertex bound on random Bott towers") {
  gen::Rng rng(4242);
  for (int t = 0; t < 200; ++t) {
    auto p = gen::random_bott(rng, gen::uniform(rng, 1, 4));
    REQUIRE(validate_pair(p).ok());
    auto normalized = normalize_omniorientation(p).first;
    check_rank_identity(normalized);
    // Classes agree with the independent rational-solve oracle.
    CHECK(oracle::dual_partition(normalized).size() == facet_classes(normalized).classes.size());
  }
}

TEST_CASE("construction tree sizes match class sizes") {
  gen::Rng rng(99);
  std::vector<CharacteristicPair> inputs;
  for (const auto& e : catalog_suite()) inputs.push_back(e.pair);
  for (int t = 0; t < 50; ++t) inputs.push_back(gen::random_pair(rng));
  for (const auto& raw : inputs) {
    auto p = normalize_omniorientation(raw).first;
    check_rank_identity(p);
    auto tree = build_construction_tree(p);
    CHECK(tree.split_sizes() == class_sizes(p));
    for (const auto& block : tree.leaf_partition) CHECK(block.size() == 1);
    // The carried blocks cover the leaf facets; they may refine the leaf's own classes.
    NameList covered;
    for (const auto& block : tree.leaf_partition) covered.insert(covered.end(), block.begin(), block.end());
    std::sort(covered.begin(), covered.end());
    NameList leaf_facets = tree.leaf.facets();
    std::sort(leaf_facets.begin(), leaf_facets.end());
    CHECK(covered == leaf_facets);
    CHECK(pair_isomorphic(replay_construction_tree(tree), p).has_value());
  }
}

TEST_CASE("invariants are preserved by lattice changes") {
  gen::Rng rng(8);
  for (int t = 0; t < 30; ++t) {
    auto p = gen::random_pair(rng);
    auto q = gen::transform(p, gen::random_unimodular(rng, p.rank()));
    CHECK(maximal_group_type(normalize_omniorientation(p).first) ==
          maximal_group_type(normalize_omniorientation(q).first));
    CHECK(pair_isomorphic(p, q).has_value());
  }
}

TEST_CASE("library results are deterministic") {
  gen::Rng rng(55);
  for (int t = 0; t < 10; ++t) {
    auto p = normalize_omniorientation(gen::random_pair(rng)).first;
    auto a = build_construction_tree(p);
    auto b = build_construction_tree(p);
    CHECK(a.split_sizes() == b.split_sizes());
    CHECK(a.leaf == b.leaf);
    CHECK(a.leaf_partition == b.leaf_partition);
  }
}
