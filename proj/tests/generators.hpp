#pragma once

// Seeded random inputs for property tests and the acceptance suite.

#include <algorithm>
#include <random>
#include <vector>

#include "torsym/catalog.hpp"
#include "torsym/symmetry.hpp"

namespace gen {

using namespace torsym;
using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline CharacteristicPair random_bott(Rng& rng, std::size_t n) {
  std::vector<Integer> twists;
  for (std::size_t i = 0; i < n * (n - 1) / 2; ++i) twists.emplace_back(uniform(rng, -3, 3));
  return catalog_bott(n, twists);
}

// Product of random elementary matrices and sign changes.
inline IntMatrix random_unimodular(Rng& rng, std::size_t n) {
  IntMatrix g = IntMatrix::identity(n);
  if (n == 0) return g;
  for (int step = 0; step < 6; ++step) {
    const std::size_t a = uniform(rng, 0, n - 1);
    const std::size_t b = uniform(rng, 0, n - 1);
    if (a != b) g.add_row_multiple(a, b, Integer(uniform(rng, -2, 2)));
    if (uniform(rng, 0, 3) == 0) g.negate_row(a);
  }
  return g;
}

inline CharacteristicPair transform(const CharacteristicPair& p, const IntMatrix& g) {
  std::vector<IntVector> lambda;
  for (const auto& v : p.lambda()) lambda.push_back(g * v);
  return CharacteristicPair(p.rank(), p.complex(), std::move(lambda));
}

// A random face with at least two vertices; the pair must have rank >= 2.
inline NameList random_face(Rng& rng, const CharacteristicPair& p) {
  if (p.rank() < 2) return {};
  const auto& faces = p.complex().maximal_faces();
  const Face& top = faces[uniform(rng, 0, faces.size() - 1)];
  NameList out;
  while (out.size() < 2) {
    out.clear();
    for (auto v : top)
      if (uniform(rng, 0, 1)) out.push_back(p.complex().name(v));
  }
  return out;
}

// Random base pair, up to two random blow-ups, then a random lattice change.
inline CharacteristicPair random_pair(Rng& rng) {
  CharacteristicPair p;
  switch (uniform(rng, 0, 4)) {
    case 0: p = random_bott(rng, uniform(rng, 2, 3)); break;
    case 1: p = catalog_cp(uniform(rng, 1, 3)); break;
    case 2: {
      std::vector<std::size_t> dims{std::size_t(uniform(rng, 1, 2)), std::size_t(uniform(rng, 1, 2))};
      p = catalog_product(dims);
      break;
    }
    case 3: p = catalog_hirzebruch(Integer(uniform(rng, -3, 3))); break;
    default: p = catalog_prism(Integer(uniform(rng, -2, 2))); break;
  }
  const long blowups = uniform(rng, 0, 2);
  for (long i = 0; i < blowups && p.rank() >= 2; ++i) p = blowup_face(p, random_face(rng, p)).pair;
  return transform(p, random_unimodular(rng, p.rank()));
}

// ---------------------------------------------------------------------------
// Delzant polygons and 3-polytopes

using RationalPoint = std::vector<Rational>;

struct Polygon {
  std::vector<IntVector> normals;  // cyclic order
  std::vector<Rational> offsets;
};

inline RationalPoint corner(const Polygon& p, std::size_t i) {
  const std::size_t j = (i + 1) % p.normals.size();
  const Rational a(p.normals[i][0]), b(p.normals[i][1]), c(p.normals[j][0]), d(p.normals[j][1]);
  const Rational det = a * d - b * c;
  Rational x = (p.offsets[i] * d - b * p.offsets[j]) / det;
  Rational y = (a * p.offsets[j] - c * p.offsets[i]) / det;
  x.canonicalize();
  y.canonicalize();
  return {x, y};
}

// Lattice length of edge i (between corners i-1 and i).
inline Rational edge_length(const Polygon& p, std::size_t i) {
  const std::size_t m = p.normals.size();
  const RationalPoint a = corner(p, (i + m - 1) % m), b = corner(p, i);
  // The edge direction (-u_y, u_x) is primitive.
  const Rational dx = b[0] - a[0], dy = b[1] - a[1];
  Rational t = p.normals[i][1] != 0 ? dx / Rational(-p.normals[i][1]) : dy / Rational(p.normals[i][0]);
  t.canonicalize();
  return abs(t);
}

inline Polygon random_start_polygon(Rng& rng) {
  if (uniform(rng, 0, 1) == 0) {
    const long s = uniform(rng, 1, 4);
    return {{make_vector({-1, 0}), make_vector({0, -1}), make_vector({1, 1})},
            {Rational(0), Rational(0), Rational(s)}};
  }
  const long a = uniform(rng, 0, 2), d = uniform(rng, 1, 2), c = a * d + uniform(rng, 1, 3);
  return {{make_vector({-1, 0}), make_vector({0, -1}), make_vector({1, a}), make_vector({0, 1})},
          {Rational(0), Rational(0), Rational(c), Rational(d)}};
}

// Cuts the corner between edges i and i+1 at a random depth below both
// adjacent edge lengths, which keeps the polygon Delzant.
inline void cut_corner(Rng& rng, Polygon& p, std::size_t i) {
  const std::size_t m = p.normals.size();
  const std::size_t j = (i + 1) % m;
  const Rational limit = std::min(edge_length(p, i), edge_length(p, j));
  const long q = uniform(rng, 2, 7);
  Rational eps = limit * Rational(uniform(rng, 1, q - 1), q);
  eps.canonicalize();
  IntVector normal = p.normals[i] + p.normals[j];
  Rational offset = p.offsets[i] + p.offsets[j] - eps;
  p.normals.insert(p.normals.begin() + static_cast<std::ptrdiff_t>(i + 1), normal);
  p.offsets.insert(p.offsets.begin() + static_cast<std::ptrdiff_t>(i + 1), offset);
}

inline std::vector<Inequality> random_delzant_polygon(Rng& rng) {
  Polygon p = random_start_polygon(rng);
  const long cuts = uniform(rng, 0, 4);
  for (long c = 0; c < cuts; ++c) cut_corner(rng, p, uniform(rng, 0, p.normals.size() - 1));
  const IntMatrix g = random_unimodular(rng, 2);
  // Lattice automorphisms act on normals by g and keep the offsets.
  std::vector<Inequality> out;
  for (std::size_t i = 0; i < p.normals.size(); ++i) out.push_back({g * p.normals[i], p.offsets[i]});
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

inline std::vector<Inequality> box(long a, long b, long c) {
  return {{make_vector({-1, 0, 0}), 0}, {make_vector({1, 0, 0}), a}, {make_vector({0, -1, 0}), 0},
          {make_vector({0, 1, 0}), b},  {make_vector({0, 0, -1}), 0}, {make_vector({0, 0, 1}), c}};
}

// Boxes, corner and edge truncations, and Bott-type twisted cubes.
inline std::vector<std::vector<Inequality>> cube_family() {
  std::vector<std::vector<Inequality>> out;
  for (long a = 1; a <= 3; ++a)
    for (long b = 1; b <= 2; ++b) {
      out.push_back(box(a, b, 2));
      auto vertex_cut = box(a, b, 2);
      vertex_cut.push_back({make_vector({1, 1, 1}), Rational(a + b + 2) - Rational(1, 2)});
      out.push_back(vertex_cut);
      auto edge_cut = box(a, b, 2);
      edge_cut.push_back({make_vector({1, 1, 0}), Rational(a + b) - Rational(1, 3)});
      out.push_back(edge_cut);
    }
  for (long c12 = 0; c12 <= 2; ++c12)
    for (long c13 = 0; c13 <= 1; ++c13)
      for (long c23 = 0; c23 <= 2; ++c23) {
        const long b3 = 1, b2 = c23 * b3 + 1, b1 = c12 * b2 + c13 * b3 + 1;
        out.push_back({{make_vector({-1, 0, 0}), 0},
                       {make_vector({0, -1, 0}), 0},
                       {make_vector({0, 0, -1}), 0},
                       {make_vector({1, c12, c13}), b1},
                       {make_vector({0, 1, c23}), b2},
                       {make_vector({0, 0, 1}), b3}});
      }
  return out;
}

}  // namespace gen
