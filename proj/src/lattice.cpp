#include "torsym/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "torsym/error.hpp"

namespace torsym {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Rank: return "RankError";
    case ErrorKind::NotExtendable: return "NotExtendableError";
    case ErrorKind::NotPrimitive: return "NotPrimitiveError";
    case ErrorKind::UnknownVertex: return "UnknownVertexError";
    case ErrorKind::LabelCollision: return "LabelCollisionError";
    case ErrorKind::InvalidPair: return "InvalidPairError";
    case ErrorKind::ZeroDual: return "ZeroDualError";
    case ErrorKind::NotNormalized: return "NotNormalizedError";
    case ErrorKind::NotAFace: return "NotAFaceError";
    case ErrorKind::RankMismatch: return "RankMismatchError";
    case ErrorKind::NotSimple: return "NotSimpleError";
    case ErrorKind::Unbounded: return "UnboundedError";
    case ErrorKind::RedundantFacet: return "RedundantFacetError";
    case ErrorKind::SingletonClass: return "SingletonClassError";
    case ErrorKind::DichotomyViolation: return "DichotomyViolation";
    case ErrorKind::CaseMismatch: return "CaseMismatchError";
    case ErrorKind::NotExceptional: return "NotExceptionalError";
    case ErrorKind::NotClassPreserving: return "NotClassPreservingError";
    case ErrorKind::NotAPartition: return "NotAPartitionError";
    case ErrorKind::NotAdmissible: return "NotAdmissibleError";
    case ErrorKind::SizeGuard: return "SizeGuardError";
    case ErrorKind::UnknownCatalog: return "UnknownCatalogError";
    case ErrorKind::InvalidArgument: return "InvalidArgumentError";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Internal: return "InternalError";
  }
  return "Error";
}

IntVector make_vector(std::initializer_list<long> entries) {
  IntVector v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

std::string to_string(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  assert(a.size() == b.size());
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  assert(a.size() == b.size());
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVector operator-(const IntVector& a) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Integer gcd_of(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::InvalidArgument, "ragged matrix literal");
    for (long e : r) data_.emplace_back(e);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::span<const IntVector> columns, std::size_t height) {
  IntMatrix m(height, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != height)
      throw Error(ErrorKind::InvalidArgument,
                  "column " + std::to_string(j) + " has length " +
                      std::to_string(columns[j].size()) + ", expected " +
                      std::to_string(height));
    for (std::size_t i = 0; i < height; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t width) {
  IntMatrix m(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width)
      throw Error(ErrorKind::InvalidArgument, "row length mismatch");
    for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source,
                                 const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source,
                                 const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::InvalidArgument, "matrix product shape");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols() != v.size()) throw Error(ErrorKind::InvalidArgument, "matrix-vector shape");
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ",";
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ",";
      os << m(i, j).get_str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct Pivot {
  std::size_t row;
  std::size_t col;
  bool found = false;
};

Pivot smallest_entry(const IntMatrix& m, std::size_t from_row, std::size_t from_col) {
  Pivot best;
  Integer best_abs;
  for (std::size_t i = from_row; i < m.rows(); ++i)
    for (std::size_t j = from_col; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      Integer a = abs(m(i, j));
      if (!best.found || a < best_abs) {
        best = {i, j, true};
        best_abs = a;
      }
    }
  return best;
}

// Carries the working matrix together with the transforms so that every
// elementary operation updates U, U^-1, V and V^-1 consistently.
class SmithWorkspace {
 public:
  explicit SmithWorkspace(const IntMatrix& a)
      : d(a),
        u(IntMatrix::identity(a.rows())),
        u_inv(IntMatrix::identity(a.rows())),
        v(IntMatrix::identity(a.cols())),
        v_inv(IntMatrix::identity(a.cols())) {}

  void swap_rows(std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    u.swap_rows(a, b);
    u_inv.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    v.swap_cols(a, b);
    v_inv.swap_rows(a, b);
  }
  void add_row(std::size_t target, std::size_t source, const Integer& f) {
    d.add_row_multiple(target, source, f);
    u.add_row_multiple(target, source, f);
    u_inv.add_col_multiple(source, target, -f);
  }
  void add_col(std::size_t target, std::size_t source, const Integer& f) {
    d.add_col_multiple(target, source, f);
    v.add_col_multiple(target, source, f);
    v_inv.add_row_multiple(source, target, -f);
  }
  void negate_row(std::size_t i) {
    d.negate_row(i);
    u.negate_row(i);
    u_inv.negate_col(i);
  }

  IntMatrix d, u, u_inv, v, v_inv;
};

}  // namespace

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  SmithWorkspace w(a);
  const std::size_t limit = std::min(a.rows(), a.cols());
  std::size_t rank = 0;
  for (std::size_t t = 0; t < limit; ++t) {
    Pivot p = smallest_entry(w.d, t, t);
    if (!p.found) break;
    for (;;) {
      w.swap_rows(t, p.row);
      w.swap_cols(t, p.col);
      bool clean = true;
      const Integer pivot = w.d(t, t);
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (w.d(i, t) == 0) continue;
        Integer q = w.d(i, t) / pivot;
        w.add_row(i, t, -q);
        if (w.d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (w.d(t, j) == 0) continue;
        Integer q = w.d(t, j) / pivot;
        w.add_col(j, t, -q);
        if (w.d(t, j) != 0) clean = false;
      }
      if (!clean) {
        p = smallest_entry(w.d, t, t);
        continue;
      }
      // Enforce the divisibility chain on the remaining block.
      bool divisible = true;
      for (std::size_t i = t + 1; i < a.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (w.d(i, j) % pivot != 0) {
            w.add_row(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
      p = smallest_entry(w.d, t, t);
    }
    if (w.d(t, t) < 0) w.negate_row(t);
    ++rank;
  }
  return {std::move(w.u), std::move(w.d), std::move(w.v), std::move(w.u_inv),
          std::move(w.v_inv), rank};
}

// ---------------------------------------------------------------------------
// Hermite normal form

HermiteForm hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t j = 0; j < h.cols() && r < h.rows(); ++j) {
    bool has_pivot = false;
    for (;;) {
      std::size_t best = h.rows();
      Integer best_abs;
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h(i, j) == 0) continue;
        Integer v = abs(h(i, j));
        if (best == h.rows() || v < best_abs) {
          best = i;
          best_abs = v;
        }
      }
      if (best == h.rows()) break;
      has_pivot = true;
      h.swap_rows(r, best);
      bool others_zero = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, j) == 0) continue;
        Integer q = h(i, j) / h(r, j);
        h.add_row_multiple(i, r, -q);
        if (h(i, j) != 0) others_zero = false;
      }
      if (others_zero) break;
    }
    if (!has_pivot) continue;
    if (h(r, j) < 0) h.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(r, j).get_mpz_t());
      h.add_row_multiple(i, r, -q);
    }
    pivots.push_back(j);
    ++r;
  }
  IntMatrix trimmed(r, h.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) trimmed(i, j) = h(i, j);
  return {std::move(trimmed), std::move(pivots)};
}

std::size_t rank(const IntMatrix& m) { return hermite_normal_form(m).pivot_columns.size(); }

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::NotExtendable, "non-square matrix has no inverse");
  if (m.rows() == 0) return m;
  SmithDecomposition s = smith_normal_form(m);
  for (const auto& d : s.diagonal())
    if (d != 1) throw Error(ErrorKind::NotExtendable, "matrix is not unimodular: " + to_string(m));
  // m = U^-1 * V^-1, so m^-1 = V * U.
  return s.V * s.U;
}

IntMatrix map_columns(const IntMatrix& a, const IntMatrix& b) {
  return b * unimodular_inverse(a);
}

// ---------------------------------------------------------------------------
// Bases

namespace {

IntMatrix checked_columns(std::span<const IntVector> vectors, std::size_t n) {
  if (vectors.size() > n)
    throw Error(ErrorKind::Rank, std::to_string(vectors.size()) +
                                     " vectors cannot be part of a basis of Z^" +
                                     std::to_string(n));
  return IntMatrix::from_columns(vectors, n);
}

bool unit_smith_form(const SmithDecomposition& s, std::size_t k) {
  if (s.rank != k) return false;
  for (std::size_t i = 0; i < k; ++i)
    if (s.D(i, i) != 1) return false;
  return true;
}

}  // namespace

bool is_part_of_basis(std::span<const IntVector> vectors, std::size_t n) {
  IntMatrix a = checked_columns(vectors, n);
  if (vectors.empty()) return true;
  return unit_smith_form(smith_normal_form(a), vectors.size());
}

IntMatrix complete_to_basis(std::span<const IntVector> vectors, std::size_t n) {
  IntMatrix a = checked_columns(vectors, n);
  const std::size_t k = vectors.size();
  if (k == 0) return IntMatrix::identity(n);
  SmithDecomposition s = smith_normal_form(a);
  if (!unit_smith_form(s, k))
    throw Error(ErrorKind::NotExtendable, "vectors are not part of a basis of Z^" + std::to_string(n));
  // a = U^-1 * [I_k; 0] * V^-1: the first k columns of U^-1 times V^-1 give a,
  // and the remaining columns of U^-1 complete it.
  IntMatrix basis = s.U_inverse;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) basis(i, j) = a(i, j);
  return basis;
}

IntMatrix quotient_by_primitive(const IntVector& v) {
  if (v.empty() || gcd_of(v) != 1)
    throw Error(ErrorKind::NotPrimitive, to_string(v) + " is not primitive");
  const std::size_t n = v.size();
  const IntVector cols[] = {v};
  IntMatrix inv = unimodular_inverse(complete_to_basis(cols, n));
  IntMatrix q(n - 1, n);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q(i - 1, j) = inv(i, j);
  HermiteForm h = hermite_normal_form(q);
  if (h.H.rows() != n - 1) throw Error(ErrorKind::Internal, "quotient map lost rank");
  return h.H;
}

// ---------------------------------------------------------------------------
// Cokernels

AbelianGroupPresentation::AbelianGroupPresentation(IntMatrix relations)
    : generator_count_(relations.cols()), relations_(std::move(relations)) {
  hermite_ = hermite_normal_form(relations_);
  free_rank_ = generator_count_ - hermite_.pivot_columns.size();
  if (relations_.rows() > 0 && generator_count_ > 0) {
    for (const auto& d : smith_normal_form(relations_).diagonal())
      if (d > 1) torsion_.push_back(d);
  }
}

IntVector AbelianGroupPresentation::canonical(const IntVector& x) const {
  if (x.size() != generator_count_)
    throw Error(ErrorKind::InvalidArgument, "vector length does not match generator count");
  IntVector y = x;
  const IntMatrix& h = hermite_.H;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    const std::size_t p = hermite_.pivot_columns[i];
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), y[p].get_mpz_t(), h(i, p).get_mpz_t());
    if (q == 0) continue;
    for (std::size_t j = p; j < generator_count_; ++j) y[j] -= q * h(i, j);
  }
  return y;
}

IntVector AbelianGroupPresentation::generator(std::size_t i) const {
  IntVector e(generator_count_);
  e.at(i) = 1;
  return canonical(e);
}

bool AbelianGroupPresentation::equivalent(const IntVector& a, const IntVector& b) const {
  return canonical(a) == canonical(b);
}

AbelianGroupPresentation cokernel_presentation(const IntMatrix& relations) {
  return AbelianGroupPresentation(relations);
}

}  // namespace torsym
