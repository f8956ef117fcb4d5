#pragma once

#include <optional>

#include "cech/matrix.hpp"

namespace cech {

/// A sublattice of Z^n, held by a column basis together with the left SNF
/// transform that makes membership and coordinate lookups a division check.
class Lattice {
 public:
  Lattice() = default;

  static Lattice from_generators(std::size_t dim, const Matrix& generators);
  static Lattice zero(std::size_t dim);
  static Lattice full(std::size_t dim);
  /// span(e_i) for the given coordinate indices.
  static Lattice coordinate(std::size_t dim, const std::vector<std::size_t>& indices);
  /// {x : M x in target}, a lattice in Z^{M.cols()}.
  static Lattice preimage(const Matrix& M, const Lattice& target);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return pivots_.size(); }
  const Matrix& basis() const noexcept { return basis_; }

  /// Coefficients c with basis()·c = x, or nullopt when x is not in the lattice.
  std::optional<Vector> coordinates(std::span<const Integer> x) const;
  bool contains(std::span<const Integer> x) const { return coordinates(x).has_value(); }
  bool contains(const Lattice& other) const;
  bool operator==(const Lattice& other) const { return contains(other) && other.contains(*this); }

  Lattice operator+(const Lattice& other) const;
  Lattice intersect(const Lattice& other) const;
  /// M·L as a lattice in Z^{M.rows()}.
  Lattice image(const Matrix& M) const;

 private:
  std::size_t dim_ = 0;
  Matrix basis_;    // dim x rank
  Matrix reducer_;  // U with U·basis = [diag(pivots); 0]
  std::vector<Integer> pivots_;
};

class FgAbGroup;

/// The quotient N / D of two nested lattices, presented in invariant-factor form.
/// Generators are ordered free first, then torsion with ascending orders.
class Subquotient {
 public:
  Subquotient(Lattice numerator, Lattice denominator);

  const Lattice& numerator() const noexcept { return numerator_; }
  const Lattice& denominator() const noexcept { return denominator_; }

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }
  FgAbGroup group() const;

  /// Ambient representative of generator k (a vector of N).
  const Vector& representative(std::size_t k) const { return representatives_[k]; }
  const std::vector<Vector>& representatives() const noexcept { return representatives_; }

  /// Normalized quotient coordinates of x, or nullopt when x is not in N.
  std::optional<Vector> project(std::span<const Integer> x) const;

 private:
  Lattice numerator_, denominator_;
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
  Matrix to_coords_;  // generators x rank(N)
  std::vector<Vector> representatives_;
};

}  // namespace cech
