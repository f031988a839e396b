#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "nmfr/rational.hpp"

namespace nmfr {

using RationalVector = std::vector<Rational>;

// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  // Matrix whose columns are the given vectors (all of length `rows`).
  static RationalMatrix from_columns(std::size_t rows, std::span<const RationalVector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
  RationalVector column(std::size_t j) const;
  std::span<const Rational> entries() const { return entries_; }

  RationalMatrix transpose() const;

  // Appends rows (or columns) from another matrix with matching width (height).
  RationalMatrix with_rows_appended(const RationalMatrix& below) const;
  RationalMatrix with_columns_appended(const RationalMatrix& right) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

std::size_t rank(const RationalMatrix& m);

// Exact basis of the right kernel. One vector per free column of the reduced
// row echelon form, with a 1 in that column.
std::vector<RationalVector> nullspace_basis(const RationalMatrix& m);

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);
RationalVector matvec(const RationalMatrix& a, std::span<const Rational> v);

// Reduced row echelon form. Pivots are the first nonzero entry found scanning
// rows top-down in each column, so the result is deterministic.
struct EchelonForm {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};
EchelonForm reduced_row_echelon(RationalMatrix m);

bool is_zero(std::span<const Rational> v);

}  // namespace nmfr
