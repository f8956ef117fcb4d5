#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "cech/abelian.hpp"

namespace cech {

inline constexpr std::uint64_t kDefaultAssociativityBudget = std::uint64_t{1} << 24;

/// A finite group given by its Cayley table on element indices 0..m-1.
class FiniteGroup {
 public:
  using Table = std::vector<std::vector<std::size_t>>;

  /// Checks closure, identity, inverses and associativity (m^3 products, budget-guarded).
  FiniteGroup(Table table, std::size_t identity, std::uint64_t budget = kDefaultAssociativityBudget);

  static FiniteGroup trivial() { return cyclic(1); }
  static FiniteGroup cyclic(std::size_t n);
  /// Element (a, b) has index a * |second| + b.
  static FiniteGroup direct_product(const FiniteGroup& first, const FiniteGroup& second);
  /// Order 2n; r^k s^e has index k + n*e.
  static FiniteGroup dihedral(std::size_t n);
  static FiniteGroup from_function(std::size_t order, std::size_t identity,
                                   const std::function<std::size_t(std::size_t, std::size_t)>& mul);

  std::size_t order() const noexcept { return table_.size(); }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const Table& table() const noexcept { return table_; }
  bool is_abelian() const;

  bool operator==(const FiniteGroup& other) const { return table_ == other.table_ && identity_ == other.identity_; }

 private:
  Table table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

/// ρ : H -> Aut(M), one automorphism matrix per element of H.
class GroupAction {
 public:
  /// Each matrix must be a bijective endomorphism of `module`, ρ(gh) = ρ(g)ρ(h) on the whole table.
  GroupAction(FiniteGroup group, CyclicSum module, std::vector<Matrix> matrices);
  static GroupAction trivial(FiniteGroup group, CyclicSum module);

  const FiniteGroup& group() const noexcept { return group_; }
  const CyclicSum& module() const noexcept { return module_; }
  const Homomorphism& operator()(std::size_t g) const { return action_[g]; }

 private:
  FiniteGroup group_;
  CyclicSum module_;
  std::vector<Homomorphism> action_;
};

}  // namespace cech
