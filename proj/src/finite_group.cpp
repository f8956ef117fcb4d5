#include "cech/finite_group.hpp"

#include <string>

#include "cech/errors.hpp"

namespace cech {

namespace {
std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}
}  // namespace

FiniteGroup::FiniteGroup(Table table, std::size_t identity, std::uint64_t budget)
    : table_(std::move(table)), identity_(identity) {
  const std::size_t m = table_.size();
  if (m == 0) throw ValidationError("group table is empty", "table");
  if (identity_ >= m) throw ValidationError("identity index out of range", "identity");
  for (std::size_t a = 0; a < m; ++a) {
    if (table_[a].size() != m)
      throw ValidationError("row has " + std::to_string(table_[a].size()) + " entries, expected " + std::to_string(m),
                            "table[" + std::to_string(a) + "]");
    for (std::size_t b = 0; b < m; ++b)
      if (table_[a][b] >= m)
        throw ValidationError("entry out of range", "table[" + std::to_string(a) + "][" + std::to_string(b) + "]");
  }
  for (std::size_t a = 0; a < m; ++a)
    if (table_[identity_][a] != a || table_[a][identity_] != a)
      throw ValidationError("identity law fails for element " + std::to_string(a), "identity");

  inverse_.assign(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] == m) throw ValidationError("element " + std::to_string(a) + " has no inverse", "table");
  }

  const std::uint64_t checks = static_cast<std::uint64_t>(m) * m * m;
  if (checks > budget)
    throw BudgetExceeded("associativity check needs " + std::to_string(checks) + " products, budget is " +
                         std::to_string(budget));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw ValidationError("associativity fails on " + triple(a, b, c), "table");
}

FiniteGroup FiniteGroup::from_function(std::size_t order, std::size_t identity,
                                       const std::function<std::size_t(std::size_t, std::size_t)>& mul) {
  Table t(order, std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) t[a][b] = mul(a, b);
  return FiniteGroup(std::move(t), identity);
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw ValidationError("cyclic group order must be positive");
  return from_function(n, 0, [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& first, const FiniteGroup& second) {
  const std::size_t k = second.order();
  return from_function(first.order() * k, first.identity() * k + second.identity(),
                       [&](std::size_t x, std::size_t y) {
                         return first.multiply(x / k, y / k) * k + second.multiply(x % k, y % k);
                       });
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
  if (n == 0) throw ValidationError("dihedral group parameter must be positive");
  return from_function(2 * n, 0, [n](std::size_t x, std::size_t y) {
    const std::size_t a = x % n, e = x / n, b = y % n, f = y / n;
    const std::size_t k = e == 0 ? (a + b) % n : (a + n - b) % n;
    return k + n * ((e + f) % 2);
  });
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

GroupAction::GroupAction(FiniteGroup group, CyclicSum module, std::vector<Matrix> matrices)
    : group_(std::move(group)), module_(std::move(module)) {
  if (matrices.size() != group_.order())
    throw ValidationError("action needs one matrix per group element, got " + std::to_string(matrices.size()));
  for (std::size_t g = 0; g < matrices.size(); ++g) {
    try {
      action_.emplace_back(module_, module_, std::move(matrices[g]));
    } catch (const ValidationError& e) {
      throw e.at("action[" + std::to_string(g) + "]");
    }
    HomInvariants inv = hom_invariants(action_.back());
    if (!inv.kernel.is_trivial() || !inv.cokernel.is_trivial())
      throw ValidationError("matrix is not an automorphism", "action[" + std::to_string(g) + "]");
  }
  if (!(action_[group_.identity()] == Homomorphism::identity(module_)))
    throw ValidationError("identity element must act trivially", "action");
  for (std::size_t a = 0; a < group_.order(); ++a)
    for (std::size_t b = 0; b < group_.order(); ++b)
      if (!(action_[group_.multiply(a, b)] == action_[a].after(action_[b])))
        throw ValidationError("rho(" + std::to_string(a) + "*" + std::to_string(b) + ") != rho(" + std::to_string(a) +
                                  ") rho(" + std::to_string(b) + ")",
                              "action");
}

GroupAction GroupAction::trivial(FiniteGroup group, CyclicSum module) {
  const std::size_t n = module.size();
  std::vector<Matrix> mats(group.order(), Matrix::identity(n));
  return GroupAction(std::move(group), std::move(module), std::move(mats));
}

}  // namespace cech
