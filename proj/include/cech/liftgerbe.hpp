#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cech/cochain.hpp"
#include "cech/finite_group.hpp"

namespace cech {

/// 1 -> L -> G -pi-> Q -> 1 with L central in G. L is given as a set of element indices of G.
class CentralExtension {
 public:
  const FiniteGroup& G() const noexcept { return G_; }
  const FiniteGroup& Q() const noexcept { return Q_; }
  const std::vector<std::size_t>& L_elements() const noexcept { return L_elements_; }
  const std::vector<std::size_t>& pi() const noexcept { return pi_; }

  /// L in invariant-factor form.
  const CyclicSum& L() const noexcept { return L_; }
  /// Coordinates of an element of L; ValidationError when g is not in L.
  Vector coords(std::size_t g) const;
  /// The element of L with the given coordinates.
  std::size_t element(std::span<const Integer> coords) const;
  /// Lowest G-index in each fiber of pi.
  const std::vector<std::size_t>& canonical_section() const noexcept { return section_; }

 private:
  CentralExtension(FiniteGroup G, std::vector<std::size_t> L, std::vector<std::size_t> pi, FiniteGroup Q);
  friend CentralExtension validate_extension(FiniteGroup, std::vector<std::size_t>, std::vector<std::size_t>,
                                             FiniteGroup);

  FiniteGroup G_, Q_;
  std::vector<std::size_t> L_elements_, pi_, section_;
  CyclicSum L_;
  std::map<std::size_t, Vector> to_coords_;
  std::map<Vector, std::size_t> to_element_;
};

/// Exhaustive checks; the ValidationError path names the failing field ("L_elements", "pi").
CentralExtension validate_extension(FiniteGroup G, std::vector<std::size_t> L_elements, std::vector<std::size_t> pi,
                                    FiniteGroup Q);

/// Q-valued transition data g_ij on the edges of X (i < j), with g_ji = g_ij^-1.
class TransitionCocycle {
 public:
  /// `values[e]` belongs to the e-th edge in lexicographic order. Throws ValidationError naming
  /// the first triangle i<j<k with g_ij g_jk != g_ik.
  TransitionCocycle(SimplicialComplex X, FiniteGroup Q, std::vector<std::size_t> values);

  const SimplicialComplex& nerve() const noexcept { return X_; }
  const FiniteGroup& Q() const noexcept { return Q_; }
  const std::vector<std::size_t>& values() const noexcept { return values_; }
  std::size_t operator()(std::size_t i, std::size_t j) const;

 private:
  SimplicialComplex X_;
  FiniteGroup Q_;
  std::vector<std::size_t> values_;
};

struct LiftingObstruction {
  Cochain cochain;  // c_ijk = s(g_ik)^-1 s(g_ij) s(g_jk), L-valued
  CohomologyClass cls;
};

/// With `section` empty the canonical section is used; otherwise section[q] must lie over q.
LiftingObstruction lifting_obstruction(const TransitionCocycle& t, const CentralExtension& ext,
                                       const std::vector<std::size_t>& section = {});

inline constexpr std::uint64_t kDefaultLiftBudget = std::uint64_t{1} << 20;

struct LiftSearch {
  std::optional<std::vector<std::size_t>> lift;  // G-valued transition cocycle over t
  std::uint64_t search_space = 0;                // |L|^#edges
  std::uint64_t visited = 0;                     // partial assignments examined
};

/// Backtracking over per-edge L-twists of the canonical lift. BudgetExceeded when |L|^#edges > budget.
LiftSearch brute_force_lift(const TransitionCocycle& t, const CentralExtension& ext,
                            std::uint64_t budget = kDefaultLiftBudget);

}  // namespace cech
