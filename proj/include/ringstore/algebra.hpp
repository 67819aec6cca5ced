#pragma once

// Exact arithmetic over prime fields GF(p) and dense matrices over them.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ringstore {

using Elem = std::uint32_t;
using RowVector = std::vector<Elem>;

bool is_prime(std::uint64_t value);

// Smallest prime >= value (value >= 2 is assumed; 0 and 1 map to 2).
std::uint32_t smallest_prime_at_least(std::uint32_t value);

// Context for arithmetic modulo a prime p. Elements are plain integers in
// [0, p); FieldSpec supplies the operations on them.
class FieldSpec {
 public:
  // Throws NotPrime if p is not a prime >= 2.
  explicit FieldSpec(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  bool contains(std::uint64_t v) const noexcept { return v < p_; }
  Elem reduce(std::int64_t v) const noexcept;

  Elem add(Elem a, Elem b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const noexcept {
    return a >= b ? a - b : static_cast<Elem>(std::uint64_t{a} + p_ - b);
  }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>(std::uint64_t{a} * b % p_);
  }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  // Throws ZeroInverse for a == 0.
  Elem inv(Elem a) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t p_;
};

class FieldElement {
 public:
  // Throws OutOfField unless value < field.p().
  FieldElement(FieldSpec field, std::uint64_t value);

  Elem value() const noexcept { return value_; }
  const FieldSpec& field() const noexcept { return field_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  FieldSpec field_;
  Elem value_;
};

FieldElement fe_inv(const FieldElement& a);

// Dense row-major matrix over GF(p). Immutable once built.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols,
         std::vector<Elem> entries);

  static Matrix identity(FieldSpec field, std::size_t size);
  static Matrix from_rows(FieldSpec field,
                          const std::vector<std::vector<Elem>>& rows);
  static Matrix from_columns(FieldSpec field, std::size_t rows,
                             const std::vector<std::vector<Elem>>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldSpec& field() const noexcept { return field_; }
  const std::vector<Elem>& entries() const noexcept { return entries_; }

  Elem at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  FieldElement element(std::size_t r, std::size_t c) const {
    return FieldElement(field_, at(r, c));
  }
  std::span<const Elem> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  RowVector column(std::size_t c) const;

  Matrix select_columns(std::span<const std::size_t> indices) const;
  Matrix select_rows(std::span<const std::size_t> indices) const;
  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> entries_;
};

// [a | b]; both must have the same row count and field.
Matrix hconcat(const Matrix& a, const Matrix& b);

Matrix mat_mul(const Matrix& a, const Matrix& b);

// x · a for a row vector x of length a.rows().
RowVector vec_mat_mul(std::span<const Elem> x, const Matrix& a);

std::size_t mat_rank(const Matrix& a);

// Throws Singular if a is not square and full rank.
Matrix mat_inverse(const Matrix& a);

// Solves x · g_sub = y for x, with g_sub square and invertible.
RowVector row_vec_solve(const Matrix& g_sub, std::span<const Elem> y);

// Returns some R with basis · R = targets; free variables are set to zero.
// Throws NotInSpan if a target column is outside the column span of basis.
Matrix express_in_columns(const Matrix& basis, const Matrix& targets);

// Columns start, start+1, ..., start+width-1 (mod a.cols()).
Matrix columns_cyclic_window(const Matrix& a, std::size_t start,
                             std::size_t width);

}  // namespace ringstore
