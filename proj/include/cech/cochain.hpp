#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cech/abelian.hpp"
#include "cech/finite_group.hpp"

namespace cech {

/// Strictly increasing vertex tuple.
using Simplex = std::vector<std::size_t>;

/// "0,1,2"
std::string simplex_key(const Simplex& s);

/// A finite abstract simplicial complex: the nerve of a finite covering family.
/// Simplices are stored per dimension in lexicographic order; that order fixes
/// every cochain coordinate.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Downward closure of the facets. Every vertex 0..vertex_count-1 becomes a 0-simplex.
  /// Throws ValidationError for empty facets, repeated vertices, or out-of-range vertices.
  static SimplicialComplex from_facets(std::size_t vertex_count, const std::vector<Simplex>& facets);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  int dimension() const noexcept { return static_cast<int>(simplices_.size()) - 1; }
  const std::vector<Simplex>& simplices(int p) const;
  std::size_t count(int p) const { return simplices(p).size(); }
  std::optional<std::size_t> index_of(const Simplex& s) const;
  /// Maximal simplices, ordered by dimension then lexicographically.
  std::vector<Simplex> facets() const;
  long euler_characteristic() const;

  bool operator==(const SimplicialComplex& other) const {
    return vertex_count_ == other.vertex_count_ && simplices_ == other.simplices_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::map<Simplex, std::size_t>> index_;
};

inline SimplicialComplex build_complex_from_facets(std::size_t vertex_count, const std::vector<Simplex>& facets) {
  return SimplicialComplex::from_facets(vertex_count, facets);
}

/// ΣX: two apexes (indices n and n+1) coned over X.
SimplicialComplex suspension(const SimplicialComplex& X);

/// Cochain groups that are a direct sum of copies of one coefficient group, one
/// copy per cell (simplex, or bar tuple). Generator index = cell * |coeff gens| + k.
struct CellStructure {
  CyclicSum coefficients;
  std::vector<std::vector<std::string>> labels;  // labels[p][cell]
  std::shared_ptr<const SimplicialComplex> nerve;  // set for Čech complexes
};

class Cohomology;

/// C^0 -> C^1 -> ... -> C^{max_degree+1}. Cohomology is available in degrees
/// 0..max_degree; the extra top group makes H^{max_degree} exact even for truncated complexes.
class CochainComplex {
 public:
  /// groups.size() == differentials.size() + 1. Checks every differential is well defined
  /// and that consecutive differentials compose to zero (ValidationError otherwise).
  CochainComplex(std::vector<CyclicSum> groups, std::vector<Matrix> differentials,
                 std::optional<CellStructure> cells = std::nullopt);

  CochainComplex(const CochainComplex&) = delete;
  CochainComplex& operator=(const CochainComplex&) = delete;

  int max_degree() const noexcept { return static_cast<int>(differentials_.size()) - 1; }
  const CyclicSum& group(int p) const;
  const Homomorphism& differential(int p) const;
  const std::optional<CellStructure>& cells() const noexcept { return cells_; }
  std::string generator_label(int p, std::size_t generator) const;

  /// Memoized H^p, 0 <= p <= max_degree.
  std::shared_ptr<const Cohomology> cohomology(int p) const;

 private:
  std::vector<CyclicSum> groups_;
  std::vector<Homomorphism> differentials_;
  std::optional<CellStructure> cells_;
  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::shared_ptr<const Cohomology>> cache_;
};

using ComplexPtr = std::shared_ptr<const CochainComplex>;

/// H^p = Z^p / B^p with the projection Z^p -> H^p fixed once per complex and degree.
class Cohomology {
 public:
  Cohomology(int degree, Subquotient quotient) : degree_(degree), quotient_(std::move(quotient)) {}

  int degree() const noexcept { return degree_; }
  FgAbGroup group() const { return quotient_.group(); }
  /// Normalized class coordinates of a cochain vector; nullopt if it is not a cocycle.
  std::optional<Vector> project(std::span<const Integer> cochain) const { return quotient_.project(cochain); }
  /// Cocycle representatives of the standard generators (not yet normalized).
  const std::vector<Vector>& representatives() const noexcept { return quotient_.representatives(); }
  const Subquotient& subquotient() const noexcept { return quotient_; }

 private:
  int degree_;
  Subquotient quotient_;
};

class Cochain {
 public:
  Cochain(ComplexPtr complex, int degree, Vector values);
  static Cochain zero(ComplexPtr complex, int degree);

  const ComplexPtr& complex() const noexcept { return complex_; }
  int degree() const noexcept { return degree_; }
  const Vector& values() const noexcept { return values_; }
  bool is_zero() const { return cech::is_zero(values_); }

  /// Coefficient block of one cell (requires a cell structure).
  Vector value_at(std::size_t cell) const;

  Cochain operator+(const Cochain& rhs) const;
  Cochain operator-(const Cochain& rhs) const;
  Cochain operator-() const;
  bool operator==(const Cochain& rhs) const {
    return complex_ == rhs.complex_ && degree_ == rhs.degree_ && values_ == rhs.values_;
  }

 private:
  ComplexPtr complex_;
  int degree_;
  Vector values_;
};

/// δc, degree p+1. Requires p <= max_degree.
Cochain coboundary(const Cochain& c);

/// Label of the first generator where δc is nonzero, or nullopt for cocycles.
std::optional<std::string> cocycle_violation(const Cochain& c);
inline bool is_cocycle(const Cochain& c) { return !cocycle_violation(c).has_value(); }

struct CohomologyGroup {
  FgAbGroup group;
  std::vector<Cochain> basis;  // cocycles mapping to the standard generators
  std::shared_ptr<const Cohomology> projection;
};

CohomologyGroup cohomology(const ComplexPtr& complex, int p);

struct CohomologyClass {
  int degree = 0;
  FgAbGroup ambient;
  Vector coords;
  std::optional<Cochain> representative;

  bool is_zero() const { return cech::is_zero(coords); }
  bool same_class(const CohomologyClass& other) const {
    return degree == other.degree && ambient == other.ambient && coords == other.coords;
  }
};

/// Throws ValidationError naming a violated cell when c is not a cocycle.
CohomologyClass class_of(const Cochain& c);

/// Constant-coefficient Čech complex on the nerve X: C^p = L^(#p-simplices),
/// alternating-sum coboundary. max_degree < 0 means dim X; larger values pad with zero groups.
ComplexPtr cech_complex(const SimplicialComplex& X, const CyclicSum& L, int max_degree = -1);

inline constexpr std::size_t kDefaultBarBudget = 1024;

/// Unnormalized inhomogeneous bar complex C^p = Maps(H^p, M) with the ρ-twisted first face.
/// Throws BudgetExceeded when |H|^(max_degree+1) * gens(M) exceeds `budget`.
ComplexPtr bar_complex(const GroupAction& action, int max_degree, std::size_t budget = kDefaultBarBudget);

}  // namespace cech
