#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cech/lattice.hpp"
#include "cech/matrix.hpp"

namespace cech {

class CyclicSum;

/// A finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_t in invariant-factor
/// form (d_i >= 2, d_i | d_{i+1}).
class FgAbGroup {
 public:
  FgAbGroup() = default;
  FgAbGroup(std::size_t free_rank, std::vector<Integer> torsion);

  static FgAbGroup integers() { return FgAbGroup(1, {}); }
  static FgAbGroup cyclic(long n) { return n == 0 ? integers() : FgAbGroup(0, {Integer(n)}); }

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }
  std::size_t generator_count() const noexcept { return free_rank_ + torsion_.size(); }
  bool is_trivial() const noexcept { return generator_count() == 0; }
  bool is_finite() const noexcept { return free_rank_ == 0; }
  /// |G| for finite groups.
  std::optional<Integer> order() const;

  /// Generator layout: free generators first, then the torsion generators.
  CyclicSum layout() const;
  /// e.g. "0", "Z", "Z^2 + Z/2 + Z/4".
  std::string to_string() const;

  bool operator==(const FgAbGroup&) const = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

/// An ordered direct sum of cyclic groups; order 0 means Z. This is the generator
/// layout homomorphism matrices and cochain coordinates are indexed by.
class CyclicSum {
 public:
  CyclicSum() = default;
  explicit CyclicSum(std::vector<Integer> orders);
  CyclicSum(const FgAbGroup& g) : CyclicSum(g.layout()) {}  // NOLINT(google-explicit-constructor)

  static CyclicSum power(const CyclicSum& base, std::size_t copies);
  static CyclicSum direct_sum(const std::vector<CyclicSum>& parts);

  std::size_t size() const noexcept { return orders_.size(); }
  const Integer& order(std::size_t i) const { return orders_[i]; }
  const std::vector<Integer>& orders() const noexcept { return orders_; }
  bool is_free(std::size_t i) const { return sgn(orders_[i]) == 0; }
  /// Number of elements, or nullopt when infinite.
  std::optional<Integer> cardinality() const;

  void normalize(Vector& v) const;
  Vector normalized(Vector v) const {
    normalize(v);
    return v;
  }
  bool is_zero(std::span<const Integer> v) const;
  bool equal(std::span<const Integer> a, std::span<const Integer> b) const;

  /// The relation lattice: span of d_i e_i over the torsion generators.
  Lattice relations() const;
  /// The isomorphism class.
  FgAbGroup invariants() const;
  std::string to_string() const;

  bool operator==(const CyclicSum&) const = default;

 private:
  std::vector<Integer> orders_;
};

class GroupElement {
 public:
  GroupElement(CyclicSum group, Vector coords);
  static GroupElement zero(const CyclicSum& group) { return GroupElement(group, Vector(group.size())); }

  const CyclicSum& group() const noexcept { return group_; }
  const Vector& coords() const noexcept { return coords_; }
  bool is_zero() const { return cech::is_zero(coords_); }

  GroupElement operator+(const GroupElement& rhs) const;
  GroupElement operator-(const GroupElement& rhs) const;
  GroupElement operator-() const;
  bool operator==(const GroupElement& rhs) const { return group_ == rhs.group_ && coords_ == rhs.coords_; }

 private:
  CyclicSum group_;
  Vector coords_;
};

/// First source column j whose relation d_j·column_j leaves the target's relation lattice.
struct HomViolation {
  std::size_t column;
  std::string message;
};

/// Checks well-definedness of a matrix (target generators x source generators).
/// Throws ValidationError on a dimension mismatch.
std::optional<HomViolation> hom_validate(const CyclicSum& source, const CyclicSum& target, const Matrix& matrix);

class Homomorphism {
 public:
  Homomorphism() = default;
  /// Validates (throws ValidationError naming the offending column) and normalizes torsion rows.
  Homomorphism(CyclicSum source, CyclicSum target, Matrix matrix);

  static Homomorphism zero(const CyclicSum& source, const CyclicSum& target);
  static Homomorphism identity(const CyclicSum& group);

  const CyclicSum& source() const noexcept { return source_; }
  const CyclicSum& target() const noexcept { return target_; }
  const Matrix& matrix() const noexcept { return matrix_; }

  Vector apply(std::span<const Integer> x) const { return target_.normalized(matrix_.apply(x)); }
  GroupElement operator()(const GroupElement& x) const;
  /// this ∘ first
  Homomorphism after(const Homomorphism& first) const;
  bool is_zero() const { return matrix_.is_zero(); }
  bool operator==(const Homomorphism&) const = default;

 private:
  CyclicSum source_, target_;
  Matrix matrix_;
};

struct HomInvariants {
  FgAbGroup kernel;
  Homomorphism kernel_inclusion;  // kernel -> source
  FgAbGroup image;
  Homomorphism image_inclusion;  // image -> target
  FgAbGroup cokernel;
  Homomorphism cokernel_projection;  // target -> cokernel
};

HomInvariants hom_invariants(const Homomorphism& h);

/// Reusable solver for h(x) = y; the SNF of [M | relations(target)] is computed once.
class HomSolver {
 public:
  explicit HomSolver(Homomorphism h);
  /// Canonical solution: SNF back-substitution with zero homogeneous part,
  /// torsion coordinates reduced into [0, d_i).
  std::optional<Vector> solve(std::span<const Integer> y) const;
  const Homomorphism& map() const noexcept { return h_; }

 private:
  Homomorphism h_;
  SmithForm snf_;
};

std::optional<GroupElement> solve_in_group(const Homomorphism& h, const GroupElement& y);

struct ExactnessReport {
  bool exact = true;
  /// An element of the middle group lying in exactly one of image(f), kernel(g).
  std::optional<GroupElement> witness;
  std::string reason;
};

/// Exactness of A -f-> B -g-> C at B. Throws ValidationError when f and g do not compose.
ExactnessReport is_exact_at(const Homomorphism& f, const Homomorphism& g);

}  // namespace cech
