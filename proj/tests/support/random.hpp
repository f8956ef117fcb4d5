#pragma once

#include <numeric>
#include <random>

#include "cech/abelian.hpp"

namespace cech::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed'cec4ULL);
  return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Matrix random_matrix(std::size_t rows, std::size_t cols, long bound) {
  Matrix M(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) M(i, j) = uniform(-bound, bound);
  return M;
}

/// Random finite cyclic sum with orders drawn from `choices`.
inline CyclicSum random_finite_sum(std::size_t max_gens, const std::vector<long>& choices = {2, 3, 4, 6, 8, 9}) {
  const auto n = static_cast<std::size_t>(uniform(0, static_cast<long>(max_gens)));
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < n; ++i) orders.emplace_back(choices[static_cast<std::size_t>(uniform(0, static_cast<long>(choices.size()) - 1))]);
  return CyclicSum(std::move(orders));
}

/// Random well-defined homomorphism matrix: entry (i, j) is a multiple of t_i / gcd(t_i, d_j).
inline Matrix random_hom_matrix(const CyclicSum& source, const CyclicSum& target, long bound = 12) {
  Matrix M(target.size(), source.size());
  for (std::size_t i = 0; i < target.size(); ++i)
    for (std::size_t j = 0; j < source.size(); ++j) {
      const long t = target.order(i).get_si(), d = source.order(j).get_si();
      if (d == 0) {
        M(i, j) = uniform(-bound, bound);
      } else if (t == 0) {
        M(i, j) = 0;
      } else {
        M(i, j) = uniform(0, bound) * (t / std::gcd(t, d));
      }
    }
  return M;
}

/// Every element of a finite cyclic sum, in mixed-radix order.
inline std::vector<Vector> enumerate(const CyclicSum& G) {
  std::vector<Vector> out{Vector(G.size())};
  for (std::size_t i = 0; i < G.size(); ++i) {
    std::vector<Vector> next;
    for (const auto& v : out)
      for (long k = 0; k < G.order(i).get_si(); ++k) {
        Vector w = v;
        w[i] = k;
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace cech::testing
