#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cech {

using Integer = mpz_class;
using Vector = std::vector<Integer>;

/// Dense row-major integer matrix with arbitrary-precision entries.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  Vector apply(std::span<const Integer> x) const;
  Matrix operator*(const Matrix& rhs) const;
  bool operator==(const Matrix& rhs) const = default;

  /// [this | rhs], same row count.
  Matrix hconcat(const Matrix& rhs) const;
  /// Columns [first, first+count).
  Matrix column_range(std::size_t first, std::size_t count) const;
  /// Rows [first, first+count).
  Matrix row_range(std::size_t first, std::size_t count) const;
  Matrix transpose() const;

  bool is_zero() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Integer> v);
std::string to_string(std::span<const Integer> v);

/// Least non-negative residue; `modulus` must be positive.
Integer mod_floor(const Integer& a, const Integer& modulus);

/// Diagonalization U·M·V = D with D = diag(d_1, ..., d_r, 0, ...), d_i > 0, d_i | d_{i+1}.
/// U and V are unimodular; their inverses are tracked alongside when requested.
struct SmithForm {
  Matrix U, U_inv;
  Matrix D;
  Matrix V, V_inv;
  std::vector<Integer> diagonal;  // the r nonzero invariants
  std::size_t rank() const noexcept { return diagonal.size(); }
};

struct SmithOptions {
  bool track_left = true;
  bool track_right = true;
};

/// Pivot rule: smallest nonzero |entry| of the active block, ties by row-major position.
SmithForm smith_normal_form(const Matrix& M, SmithOptions options = {});

/// Basis of the integer kernel {x : M x = 0}, as columns.
Matrix integer_kernel(const Matrix& M);

}  // namespace cech
