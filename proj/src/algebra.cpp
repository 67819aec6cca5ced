#include "ringstore/algebra.hpp"

#include <string>
#include <utility>

#include "ringstore/errors.hpp"

namespace ringstore {

namespace {

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
  if (a != b) {
    throw Error(ErrorCode::FieldMismatch,
                "operands over GF(" + std::to_string(a.p()) + ") and GF(" +
                    std::to_string(b.p()) + ")");
  }
}

std::string dims(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

// In-place reduction of a row-major rows x cols buffer to reduced row echelon
// form over the first `pivot_cols` columns. Returns the pivot column of each
// pivot row, in row order.
std::vector<std::size_t> reduce_rows(const FieldSpec& f, std::vector<Elem>& e,
                                     std::size_t rows, std::size_t cols,
                                     std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && e[sel * cols + c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < cols; ++j) {
        std::swap(e[sel * cols + j], e[r * cols + j]);
      }
    }
    const Elem scale = f.inv(e[r * cols + c]);
    for (std::size_t j = 0; j < cols; ++j) {
      e[r * cols + j] = f.mul(e[r * cols + j], scale);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Elem factor = e[i * cols + c];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        e[i * cols + j] = f.sub(e[i * cols + j], f.mul(factor, e[r * cols + j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

std::uint32_t smallest_prime_at_least(std::uint32_t value) {
  std::uint32_t candidate = value < 2 ? 2 : value;
  while (!is_prime(candidate)) ++candidate;
  return candidate;
}

FieldSpec::FieldSpec(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::NotPrime,
                "field modulus " + std::to_string(p) + " is not prime");
  }
}

Elem FieldSpec::reduce(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Elem FieldSpec::inv(Elem a) const {
  if (a % p_ == 0) {
    throw Error(ErrorCode::ZeroInverse, "zero has no multiplicative inverse");
  }
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a % p_;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce(t);
}

FieldElement::FieldElement(FieldSpec field, std::uint64_t value)
    : field_(field), value_(static_cast<Elem>(value)) {
  if (!field.contains(value)) {
    throw Error(ErrorCode::OutOfField,
                std::to_string(value) + " is not in [0, " +
                    std::to_string(field.p()) + ")");
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_.add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_.sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_.mul(value_, o.value_)};
}

FieldElement fe_inv(const FieldElement& a) {
  return {a.field(), a.field().inv(a.value())};
}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols,
               std::vector<Elem> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(rows_ * cols_) + " entries, got " +
                    std::to_string(entries_.size()));
  }
  for (Elem v : entries_) {
    if (!field_.contains(v)) {
      throw Error(ErrorCode::OutOfField,
                  "matrix entry " + std::to_string(v) + " not in GF(" +
                      std::to_string(field_.p()) + ")");
    }
  }
}

Matrix Matrix::identity(FieldSpec field, std::size_t size) {
  std::vector<Elem> e(size * size, 0);
  for (std::size_t i = 0; i < size; ++i) e[i * size + i] = 1;
  return {field, size, size, std::move(e)};
}

Matrix Matrix::from_rows(FieldSpec field,
                         const std::vector<std::vector<Elem>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Elem> e;
  e.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) {
      throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    }
    e.insert(e.end(), row.begin(), row.end());
  }
  return {field, rows.size(), cols, std::move(e)};
}

Matrix Matrix::from_columns(FieldSpec field, std::size_t rows,
                            const std::vector<std::vector<Elem>>& columns) {
  std::vector<Elem> e(rows * columns.size(), 0);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) {
      throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
    }
    for (std::size_t r = 0; r < rows; ++r) e[r * columns.size() + c] = columns[c][r];
  }
  return {field, rows, columns.size(), std::move(e)};
}

RowVector Matrix::column(std::size_t c) const {
  RowVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> indices) const {
  std::vector<Elem> e;
  e.reserve(rows_ * indices.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c : indices) {
      if (c >= cols_) {
        throw Error(ErrorCode::DimensionMismatch,
                    "column " + std::to_string(c) + " out of range");
      }
      e.push_back(at(r, c));
    }
  }
  return {field_, rows_, indices.size(), std::move(e)};
}

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const {
  std::vector<Elem> e;
  e.reserve(cols_ * indices.size());
  for (std::size_t r : indices) {
    if (r >= rows_) {
      throw Error(ErrorCode::DimensionMismatch,
                  "row " + std::to_string(r) + " out of range");
    }
    auto src = row(r);
    e.insert(e.end(), src.begin(), src.end());
  }
  return {field_, indices.size(), cols_, std::move(e)};
}

Matrix Matrix::transpose() const {
  std::vector<Elem> e(entries_.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) e[c * rows_ + r] = at(r, c);
  }
  return {field_, cols_, rows_, std::move(e)};
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "hconcat of " + dims(a) + " and " + dims(b));
  }
  std::vector<Elem> e;
  e.reserve(a.rows() * (a.cols() + b.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto ra = a.row(r);
    auto rb = b.row(r);
    e.insert(e.end(), ra.begin(), ra.end());
    e.insert(e.end(), rb.begin(), rb.end());
  }
  return {a.field(), a.rows(), a.cols() + b.cols(), std::move(e)};
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "cannot multiply " + dims(a) + " by " + dims(b));
  }
  const FieldSpec& f = a.field();
  std::vector<Elem> e(a.rows() * b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Elem x = a.at(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        Elem& dst = e[i * b.cols() + j];
        dst = f.add(dst, f.mul(x, b.at(l, j)));
      }
    }
  }
  return {f, a.rows(), b.cols(), std::move(e)};
}

RowVector vec_mat_mul(std::span<const Elem> x, const Matrix& a) {
  if (x.size() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "row vector of length " + std::to_string(x.size()) +
                    " times " + dims(a));
  }
  const FieldSpec& f = a.field();
  RowVector out(a.cols(), 0);
  for (std::size_t l = 0; l < a.rows(); ++l) {
    if (!f.contains(x[l])) {
      throw Error(ErrorCode::OutOfField, "vector entry outside the field");
    }
    if (x[l] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out[j] = f.add(out[j], f.mul(x[l], a.at(l, j)));
    }
  }
  return out;
}

std::size_t mat_rank(const Matrix& a) {
  std::vector<Elem> e = a.entries();
  return reduce_rows(a.field(), e, a.rows(), a.cols(), a.cols()).size();
}

Matrix mat_inverse(const Matrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) {
    throw Error(ErrorCode::Singular, "non-square " + dims(a) + " matrix");
  }
  const Matrix aug = hconcat(a, Matrix::identity(a.field(), n));
  std::vector<Elem> e = aug.entries();
  if (reduce_rows(a.field(), e, n, 2 * n, n).size() != n) {
    throw Error(ErrorCode::Singular, "matrix is singular");
  }
  std::vector<Elem> inv(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv[r * n + c] = e[r * 2 * n + n + c];
  }
  return {a.field(), n, n, std::move(inv)};
}

RowVector row_vec_solve(const Matrix& g_sub, std::span<const Elem> y) {
  if (g_sub.rows() != g_sub.cols() || y.size() != g_sub.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "solve with " + dims(g_sub) + " and vector of length " +
                    std::to_string(y.size()));
  }
  return vec_mat_mul(y, mat_inverse(g_sub));
}

Matrix express_in_columns(const Matrix& basis, const Matrix& targets) {
  if (basis.rows() != targets.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "basis " + dims(basis) + " vs targets " + dims(targets));
  }
  const FieldSpec& f = basis.field();
  const std::size_t rows = basis.rows();
  const std::size_t width = basis.cols() + targets.cols();
  std::vector<Elem> e = hconcat(basis, targets).entries();
  const auto pivots = reduce_rows(f, e, rows, width, basis.cols());
  for (std::size_t r = pivots.size(); r < rows; ++r) {
    for (std::size_t j = basis.cols(); j < width; ++j) {
      if (e[r * width + j] != 0) {
        throw Error(ErrorCode::NotInSpan,
                    "target column " + std::to_string(j - basis.cols()) +
                        " is not in the span of the basis");
      }
    }
  }
  std::vector<Elem> out(basis.cols() * targets.cols(), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t j = 0; j < targets.cols(); ++j) {
      out[pivots[r] * targets.cols() + j] = e[r * width + basis.cols() + j];
    }
  }
  return {f, basis.cols(), targets.cols(), std::move(out)};
}

Matrix columns_cyclic_window(const Matrix& a, std::size_t start,
                             std::size_t width) {
  if (width > a.cols()) {
    throw Error(ErrorCode::WidthTooLarge,
                "window width " + std::to_string(width) + " exceeds " +
                    std::to_string(a.cols()) + " columns");
  }
  if (start >= a.cols()) {
    throw Error(ErrorCode::BadArguments,
                "window start " + std::to_string(start) + " out of range");
  }
  std::vector<std::size_t> idx(width);
  for (std::size_t i = 0; i < width; ++i) idx[i] = (start + i) % a.cols();
  return a.select_columns(idx);
}

}  // namespace ringstore
