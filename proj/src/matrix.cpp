#include "cech/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "cech/errors.hpp"

namespace cech {

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ValidationError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix M(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ValidationError("row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < cols; ++j) M(i, j) = rows[i][j];
  }
  return M;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix M(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw ValidationError("column " + std::to_string(j) + " has wrong length");
    for (std::size_t i = 0; i < rows; ++i) M(i, j) = cols[j][i];
  }
  return M;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

Vector Matrix::apply(std::span<const Integer> x) const {
  if (x.size() != cols_) throw ValidationError("matrix-vector size mismatch");
  Vector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer& acc = y[i];
    auto r = row(i);
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(r[j]) != 0 && sgn(x[j]) != 0) acc += r[j] * x[j];
  }
  return y;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw ValidationError("matrix product size mismatch");
  Matrix P(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (sgn(rhs(k, j)) != 0) P(i, j) += a * rhs(k, j);
    }
  return P;
}

Matrix Matrix::hconcat(const Matrix& rhs) const {
  if (rows_ != rhs.rows_) throw ValidationError("hconcat row mismatch");
  Matrix M(rows_, cols_ + rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) M(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < rhs.cols_; ++j) M(i, cols_ + j) = rhs(i, j);
  }
  return M;
}

Matrix Matrix::column_range(std::size_t first, std::size_t count) const {
  Matrix M(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) M(i, j) = (*this)(i, first + j);
  return M;
}

Matrix Matrix::row_range(std::size_t first, std::size_t count) const {
  Matrix M(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) M(i, j) = (*this)(first + i, j);
  return M;
}

Matrix Matrix::transpose() const {
  Matrix T(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) T(j, i) = (*this)(i, j);
  return T;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << cech::to_string(row(i));
  }
  os << ']';
  return os.str();
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

std::string to_string(std::span<const Integer> v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ']';
  return os.str();
}

Integer mod_floor(const Integer& a, const Integer& modulus) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

namespace {

// Working state of one SNF run. Row operations act on A from the left and are
// mirrored into U (and inversely into U_inv); column operations likewise for V.
struct SmithState {
  Matrix A, U, U_inv, V, V_inv;
  bool left, right;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A(a, j), A(b, j));
    if (left) {
      for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U(a, j), U(b, j));
      for (std::size_t i = 0; i < U_inv.rows(); ++i) std::swap(U_inv(i, a), U_inv(i, b));
    }
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < A.rows(); ++i) std::swap(A(i, a), A(i, b));
    if (right) {
      for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V(i, a), V(i, b));
      for (std::size_t j = 0; j < V_inv.cols(); ++j) std::swap(V_inv(a, j), V_inv(b, j));
    }
  }

  // row_dst += k * row_src, A touched from column `from` on.
  void add_row(std::size_t dst, std::size_t src, const Integer& k, std::size_t from) {
    for (std::size_t j = from; j < A.cols(); ++j)
      if (sgn(A(src, j)) != 0) A(dst, j) += k * A(src, j);
    if (left) {
      for (std::size_t j = 0; j < U.cols(); ++j)
        if (sgn(U(src, j)) != 0) U(dst, j) += k * U(src, j);
      for (std::size_t i = 0; i < U_inv.rows(); ++i)
        if (sgn(U_inv(i, dst)) != 0) U_inv(i, src) -= k * U_inv(i, dst);
    }
  }

  // col_dst += k * col_src, A touched from row `from` on.
  void add_col(std::size_t dst, std::size_t src, const Integer& k, std::size_t from) {
    for (std::size_t i = from; i < A.rows(); ++i)
      if (sgn(A(i, src)) != 0) A(i, dst) += k * A(i, src);
    if (right) {
      for (std::size_t i = 0; i < V.rows(); ++i)
        if (sgn(V(i, src)) != 0) V(i, dst) += k * V(i, src);
      for (std::size_t j = 0; j < V_inv.cols(); ++j)
        if (sgn(V_inv(dst, j)) != 0) V_inv(src, j) -= k * V_inv(dst, j);
    }
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < A.cols(); ++j) A(r, j) = -A(r, j);
    if (left) {
      for (std::size_t j = 0; j < U.cols(); ++j) U(r, j) = -U(r, j);
      for (std::size_t i = 0; i < U_inv.rows(); ++i) U_inv(i, r) = -U_inv(i, r);
    }
  }

  bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < A.rows(); ++i)
      for (std::size_t j = t; j < A.cols(); ++j) {
        const Integer& x = A(i, j);
        if (sgn(x) == 0) continue;
        if (!found || mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) < 0) {
          best = x;
          pr = i;
          pc = j;
          found = true;
        }
      }
    return found;
  }
};

}  // namespace

SmithForm smith_normal_form(const Matrix& M, SmithOptions options) {
  const std::size_t m = M.rows(), n = M.cols();
  SmithState s{M, {}, {}, {}, {}, options.track_left, options.track_right};
  if (s.left) {
    s.U = Matrix::identity(m);
    s.U_inv = Matrix::identity(m);
  }
  if (s.right) {
    s.V = Matrix::identity(n);
    s.V_inv = Matrix::identity(n);
  }

  std::vector<Integer> diagonal;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    std::size_t pr = 0, pc = 0;
    if (!s.find_pivot(t, pr, pc)) break;
    for (;;) {
      s.swap_rows(t, pr);
      s.swap_cols(t, pc);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(s.A(i, t)) == 0) continue;
        Integer q = s.A(i, t) / s.A(t, t);
        if (sgn(q) != 0) s.add_row(i, t, -q, t);
        if (sgn(s.A(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(s.A(t, j)) == 0) continue;
        Integer q = s.A(t, j) / s.A(t, t);
        if (sgn(q) != 0) s.add_col(j, t, -q, t);
        if (sgn(s.A(t, j)) != 0) clean = false;
      }
      if (!clean) {
        s.find_pivot(t, pr, pc);
        continue;
      }
      // Pivot must divide the remaining block.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(s.A(i, j).get_mpz_t(), s.A(t, t).get_mpz_t())) {
            s.add_row(t, i, 1, t);
            divides = false;
            break;
          }
      if (!divides) {
        pr = t;
        pc = t;
        s.find_pivot(t, pr, pc);
        continue;
      }
      break;
    }
    if (sgn(s.A(t, t)) < 0) s.negate_row(t);
    diagonal.push_back(s.A(t, t));
  }

  SmithForm out;
  out.D = std::move(s.A);
  out.U = std::move(s.U);
  out.U_inv = std::move(s.U_inv);
  out.V = std::move(s.V);
  out.V_inv = std::move(s.V_inv);
  out.diagonal = std::move(diagonal);
  return out;
}

Matrix integer_kernel(const Matrix& M) {
  SmithForm snf = smith_normal_form(M, {.track_left = false, .track_right = true});
  const std::size_t r = snf.rank();
  return snf.V.column_range(r, M.cols() - r);
}

}  // namespace cech
