#pragma once

// Standard example pairs. Every builder returns a valid pair.

#include <span>
#include <string>
#include <vector>

#include "torsym/charpair.hpp"

namespace torsym {

// CP^n: facets F1..F{n+1}, lambda = e_1..e_n, (-1,...,-1).
CharacteristicPair catalog_cp(std::size_t n);
// CP^{n_1} x ... x CP^{n_k}; the blocks' facets are A1.., B1.., C1.., ...
CharacteristicPair catalog_product(std::span<const std::size_t> dims);
// Hirzebruch surface H_a: F1..F4 with (1,0), (0,1), (-1,a), (0,-1).
CharacteristicPair catalog_hirzebruch(const Integer& a);
// Bott tower of height n. `twists` lists c_ij for i < j row by row;
// F_i = e_i and F_{n+i} = -e_i + sum_{j>i} c_ij e_j.
CharacteristicPair catalog_bott(std::size_t n, std::span<const Integer> twists);
// Smooth polygon with the given edge normals in cyclic order.
CharacteristicPair catalog_polygon(std::span<const IntVector> normals);
// CP^2 x CP^1 with the triangle's third facet twisted to (-1,-1,a); facets
// T1,T2,T3 and B1,B2.
CharacteristicPair catalog_prism(const Integer& a);
// The vertex-cut 3-simplex on F1..F4,E with classes {F1,F2}, {F3}, {F4,E}.
CharacteristicPair catalog_p5();

// Dispatch by name with textual parameters: "cp 3", "product 2 1",
// "hirzebruch -1", "bott 3 1 0 2", "polygon 1,0 0,1 -1,0 0,-1", "prism 1",
// "p5". Throws Error(UnknownCatalog) or Error(InvalidArgument).
CharacteristicPair catalog_pair(const std::string& name, std::span<const std::string> params);

struct CatalogEntry {
  std::string name;
  std::vector<std::string> parameters;
  CharacteristicPair pair;

  std::string label() const;  // "cp 2", "p5", ...
};

// A fixed sample of every family, used by the test and acceptance suites.
std::vector<CatalogEntry> catalog_suite();

}  // namespace torsym
