#include "cech/lattice.hpp"

#include "cech/abelian.hpp"
#include "cech/errors.hpp"

namespace cech {

Lattice Lattice::from_generators(std::size_t dim, const Matrix& generators) {
  if (generators.rows() != dim) throw ValidationError("lattice generators have wrong ambient dimension");
  Lattice L;
  L.dim_ = dim;
  SmithForm snf = smith_normal_form(generators, {.track_left = true, .track_right = false});
  const std::size_t r = snf.rank();
  L.basis_ = Matrix(dim, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < dim; ++i) L.basis_(i, j) = snf.U_inv(i, j) * snf.diagonal[j];
  L.reducer_ = std::move(snf.U);
  L.pivots_ = std::move(snf.diagonal);
  return L;
}

Lattice Lattice::zero(std::size_t dim) { return from_generators(dim, Matrix(dim, 0)); }

Lattice Lattice::full(std::size_t dim) { return from_generators(dim, Matrix::identity(dim)); }

Lattice Lattice::coordinate(std::size_t dim, const std::vector<std::size_t>& indices) {
  Matrix G(dim, indices.size());
  for (std::size_t k = 0; k < indices.size(); ++k) G(indices[k], k) = 1;
  return from_generators(dim, G);
}

Lattice Lattice::preimage(const Matrix& M, const Lattice& target) {
  if (M.rows() != target.dim()) throw ValidationError("preimage: dimension mismatch");
  const std::size_t m = M.cols();
  Matrix B = target.basis();
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = 0; j < B.cols(); ++j) B(i, j) = -B(i, j);
  Matrix K = integer_kernel(M.hconcat(B));
  return from_generators(m, K.row_range(0, m));
}

std::optional<Vector> Lattice::coordinates(std::span<const Integer> x) const {
  if (x.size() != dim_) throw ValidationError("lattice membership: dimension mismatch");
  Vector y = reducer_.apply(x);
  Vector c(rank());
  for (std::size_t j = 0; j < rank(); ++j) {
    if (!mpz_divisible_p(y[j].get_mpz_t(), pivots_[j].get_mpz_t())) return std::nullopt;
    mpz_divexact(c[j].get_mpz_t(), y[j].get_mpz_t(), pivots_[j].get_mpz_t());
  }
  for (std::size_t j = rank(); j < dim_; ++j)
    if (sgn(y[j]) != 0) return std::nullopt;
  return c;
}

bool Lattice::contains(const Lattice& other) const {
  if (other.dim_ != dim_) return false;
  for (std::size_t j = 0; j < other.rank(); ++j)
    if (!contains(other.basis_.column(j))) return false;
  return true;
}

Lattice Lattice::operator+(const Lattice& other) const {
  if (other.dim_ != dim_) throw ValidationError("lattice sum: dimension mismatch");
  return from_generators(dim_, basis_.hconcat(other.basis_));
}

Lattice Lattice::intersect(const Lattice& other) const {
  if (other.dim_ != dim_) throw ValidationError("lattice intersection: dimension mismatch");
  Matrix B = other.basis_;
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = 0; j < B.cols(); ++j) B(i, j) = -B(i, j);
  Matrix K = integer_kernel(basis_.hconcat(B));
  return from_generators(dim_, basis_ * K.row_range(0, rank()));
}

Lattice Lattice::image(const Matrix& M) const {
  if (M.cols() != dim_) throw ValidationError("lattice image: dimension mismatch");
  return from_generators(M.rows(), M * basis_);
}

Subquotient::Subquotient(Lattice numerator, Lattice denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  const std::size_t rn = numerator_.rank();
  std::vector<Vector> cols;
  cols.reserve(denominator_.rank());
  for (std::size_t j = 0; j < denominator_.rank(); ++j) {
    auto c = numerator_.coordinates(denominator_.basis().column(j));
    if (!c) throw VerificationError("subquotient: denominator is not contained in numerator");
    cols.push_back(std::move(*c));
  }
  Matrix C = Matrix::from_columns(cols, rn);
  SmithForm snf = smith_normal_form(C, {.track_left = true, .track_right = false});
  const std::size_t rc = snf.rank();

  std::vector<std::size_t> order;  // SNF indices in output generator order
  for (std::size_t i = rc; i < rn; ++i) order.push_back(i);
  free_rank_ = rn - rc;
  for (std::size_t i = 0; i < rc; ++i)
    if (snf.diagonal[i] != 1) {
      order.push_back(i);
      torsion_.push_back(snf.diagonal[i]);
    }

  to_coords_ = Matrix(order.size(), rn);
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t j = 0; j < rn; ++j) to_coords_(k, j) = snf.U(order[k], j);
  for (std::size_t idx : order) representatives_.push_back(numerator_.basis().apply(snf.U_inv.column(idx)));
}

FgAbGroup Subquotient::group() const { return FgAbGroup(free_rank_, torsion_); }

std::optional<Vector> Subquotient::project(std::span<const Integer> x) const {
  auto c = numerator_.coordinates(x);
  if (!c) return std::nullopt;
  Vector q = to_coords_.apply(*c);
  for (std::size_t k = 0; k < torsion_.size(); ++k) q[free_rank_ + k] = mod_floor(q[free_rank_ + k], torsion_[k]);
  return q;
}

}  // namespace cech
