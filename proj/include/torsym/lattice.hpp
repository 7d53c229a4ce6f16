#pragma once

// Exact integer linear algebra over Z^n.
//
// All matrices hold arbitrary-precision entries. Normal forms pick pivots by
// smallest nonzero absolute value, ties broken by lowest (row, column) index,
// so every result is a deterministic function of its input.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace torsym {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

IntVector make_vector(std::initializer_list<long> entries);
std::string to_string(const IntVector& v);
bool is_zero(const IntVector& v);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
Integer gcd_of(const IntVector& v);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  // Columns are the given vectors; each must have length `height`.
  static IntMatrix from_columns(std::span<const IntVector> columns, std::size_t height);
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t width);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;

  IntMatrix transpose() const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);
std::string to_string(const IntMatrix& m);

Integer determinant(const IntMatrix& m);
// Inverse of a matrix in GL(n,Z); throws Error(NotExtendable) otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

struct SmithDecomposition {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix D;  // rows x cols, diagonal with d1 | d2 | ...
  IntMatrix V;  // cols x cols, unimodular
  IntMatrix U_inverse;
  IntMatrix V_inverse;
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const;
};

// U * A * V == D.
SmithDecomposition smith_normal_form(const IntMatrix& a);

// Row-style Hermite normal form of the row lattice of A: nonzero rows only,
// pivots strictly increasing and positive, entries above a pivot reduced into
// [0, pivot).
struct HermiteForm {
  IntMatrix H;
  std::vector<std::size_t> pivot_columns;
};

HermiteForm hermite_normal_form(const IntMatrix& a);

// True iff the vectors extend to a basis of Z^n. Throws Error(Rank) when more
// than n vectors are given.
bool is_part_of_basis(std::span<const IntVector> vectors, std::size_t n);

// A matrix in GL(n,Z) whose leading columns are `vectors`.
// Throws Error(NotExtendable) when is_part_of_basis fails.
IntMatrix complete_to_basis(std::span<const IntVector> vectors, std::size_t n);

// Presentation of Z^m / (row lattice of the relation matrix).
class AbelianGroupPresentation {
 public:
  AbelianGroupPresentation() = default;
  explicit AbelianGroupPresentation(IntMatrix relations);

  std::size_t generator_count() const noexcept { return generator_count_; }
  const IntMatrix& relations() const noexcept { return relations_; }
  std::size_t free_rank() const noexcept { return free_rank_; }
  // Invariant factors greater than one.
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }
  const HermiteForm& reduced_relations() const noexcept { return hermite_; }

  // Canonical coset representative; two vectors get the same representative
  // iff they differ by an integer combination of relation rows.
  IntVector canonical(const IntVector& x) const;
  IntVector generator(std::size_t i) const;
  bool equivalent(const IntVector& a, const IntVector& b) const;

 private:
  std::size_t generator_count_ = 0;
  IntMatrix relations_;
  HermiteForm hermite_;
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

AbelianGroupPresentation cokernel_presentation(const IntMatrix& relations);

// (n-1) x n matrix Q with Q*v == 0 mapping Z^n onto Z^(n-1). The rows are in
// Hermite normal form, so Q depends only on the line spanned by v.
// Throws Error(NotPrimitive) unless gcd(v) == 1.
IntMatrix quotient_by_primitive(const IntVector& v);

// Unique integer solution X of X * A == B for A in GL(n,Z), i.e. the lattice
// map sending the columns of A to the columns of B.
IntMatrix map_columns(const IntMatrix& a, const IntMatrix& b);

}  // namespace torsym
