#include <algorithm>
#include <set>

#include "torsym/charpair.hpp"

namespace torsym {

namespace {

using RationalVector = std::vector<Rational>;

// Solves rows * x = rhs exactly; nullopt if the square system is singular.
std::optional<RationalVector> solve_exact(std::vector<RationalVector> rows, RationalVector rhs) {
  const std::size_t n = rows.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && rows[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(rows[pivot], rows[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || rows[r][col] == 0) continue;
      Rational f = rows[r][col] / rows[col][col];
      for (std::size_t c = col; c < n; ++c) rows[r][c] -= f * rows[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = rhs[i] / rows[i][i];
    x[i].canonicalize();
  }
  return x;
}

Rational pairing(const IntVector& u, const RationalVector& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += Rational(u[i]) * x[i];
  return s;
}

// Calls visit(subset) for every k-subset of {0..m-1} in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t m, std::size_t k, Visit&& visit) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Generalized cross product of n-1 vectors in Z^n: spans their orthogonal
// complement when they are independent.
IntVector cross_product(const std::vector<IntVector>& rows, std::size_t n) {
  IntVector d(n);
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 0; r + 1 < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r, cc++) = rows[r][c];
      }
    d[j] = determinant(minor);
    if (j % 2 == 1) d[j] = -d[j];
  }
  return d;
}

void check_bounded(std::span<const Inequality> ineqs, std::size_t n) {
  std::vector<IntVector> normals;
  for (const auto& q : ineqs) normals.push_back(q.normal);
  if (rank(IntMatrix::from_rows(normals, n)) < n)
    throw Error(ErrorKind::Unbounded, "facet normals do not span the ambient space");
  // The recession cone {d : <u_i, d> <= 0} is pointed; it is nonzero iff it
  // has an extreme ray cut out by n-1 independent tight normals.
  for_each_subset(ineqs.size(), n - 1, [&](const std::vector<std::size_t>& subset) {
    std::vector<IntVector> rows;
    for (auto i : subset) rows.push_back(ineqs[i].normal);
    IntVector d = cross_product(rows, n);
    if (is_zero(d)) return;
    for (int sign : {1, -1}) {
      bool ray = true;
      for (const auto& q : ineqs) {
        Integer dot = 0;
        for (std::size_t j = 0; j < n; ++j) dot += q.normal[j] * d[j];
        if (sign * dot > 0) {
          ray = false;
          break;
        }
      }
      if (ray) throw Error(ErrorKind::Unbounded, "polyhedron contains the ray " + to_string(sign > 0 ? d : -d));
    }
  });
}

}  // namespace

CharacteristicPair delzant_pair(std::span<const Inequality> inequalities, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
  const std::size_t m = inequalities.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& u = inequalities[i].normal;
    if (u.size() != n)
      throw Error(ErrorKind::InvalidArgument, "normal " + std::to_string(i + 1) + " has wrong length");
    if (gcd_of(u) != 1)
      throw Error(ErrorKind::NotPrimitive, "normal " + to_string(u) + " is not primitive");
  }
  if (m <= n) throw Error(ErrorKind::Unbounded, "fewer than n+1 half-spaces cannot bound a polytope");
  check_bounded(inequalities, n);

  std::set<RationalVector> vertices;
  for_each_subset(m, n, [&](const std::vector<std::size_t>& subset) {
    std::vector<RationalVector> rows;
    RationalVector rhs;
    for (auto i : subset) {
      RationalVector row;
      for (const auto& x : inequalities[i].normal) row.emplace_back(x);
      rows.push_back(std::move(row));
      rhs.push_back(inequalities[i].offset);
    }
    auto x = solve_exact(std::move(rows), std::move(rhs));
    if (!x) return;
    for (const auto& q : inequalities)
      if (pairing(q.normal, *x) > q.offset) return;
    vertices.insert(std::move(*x));
  });
  if (vertices.empty()) throw Error(ErrorKind::Unbounded, "polyhedron is empty");

  NameList names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("F" + std::to_string(i + 1));

  std::vector<NameList> faces;
  std::vector<bool> touched(m, false);
  for (const auto& v : vertices) {
    NameList tight;
    for (std::size_t i = 0; i < m; ++i)
      if (pairing(inequalities[i].normal, v) == inequalities[i].offset) {
        tight.push_back(names[i]);
        touched[i] = true;
      }
    if (tight.size() != n) {
      std::string where = "(";
      for (std::size_t j = 0; j < v.size(); ++j) where += (j ? "," : "") + v[j].get_str();
      throw Error(ErrorKind::NotSimple, "vertex " + where + ") lies on " +
                                            std::to_string(tight.size()) + " facets");
    }
    faces.push_back(std::move(tight));
  }
  for (std::size_t i = 0; i < m; ++i)
    if (!touched[i]) throw Error(ErrorKind::RedundantFacet, "inequality " + names[i] + " is redundant");

  std::vector<IntVector> lambda;
  for (const auto& q : inequalities) lambda.push_back(q.normal);
  CharacteristicPair pair(n, SimplicialComplex(names, faces), std::move(lambda));
  require_valid(pair);
  return pair;
}

Report check_delzant_sign_theorem(const CharacteristicPair& pair) {
  const CohomologyModel model = cohomology_model(pair);
  Report report;
  for (std::size_t a = 0; a < pair.facet_count(); ++a)
    for (std::size_t b = a + 1; b < pair.facet_count(); ++b)
      if (model.opposite(a, b))
        report.add("opposite-duals",
                   "PD(" + pair.facets()[a] + ") = " + to_string(model.pd[a]) + " is the negative of PD(" +
                       pair.facets()[b] + ") = " + to_string(model.pd[b]),
                   {pair.facets()[a], pair.facets()[b]});
  return report;
}

}  // namespace torsym
