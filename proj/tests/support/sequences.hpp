#pragma once

#include <set>
#include <string>
#include <vector>

#include "cech/exactseq.hpp"
#include "support/fixtures.hpp"
#include "support/random.hpp"

namespace cech::testing {

struct NamedSequence {
  std::string name;
  ShortExactSequence ses;
};

inline std::vector<NamedSequence> sequences() {
  using fixtures::Zmod;
  return {{"bockstein2", bockstein_sequence(2)},
          {"bockstein3", bockstein_sequence(3)},
          {"integral2", integral_bockstein_sequence(2)},
          {"split", split_sequence(Zmod(2), Zmod(4))},
          {"z2_z8_z4", validate_ses(Zmod(2), Zmod(8), Zmod(4), Matrix{{4}}, Matrix{{1}})}};
}

/// Image of a map between finite groups, as printed coordinate vectors.
inline std::set<std::string> image_set(const Homomorphism& f) {
  std::set<std::string> out;
  for (const auto& x : enumerate(f.source())) out.insert(to_string(std::span<const Integer>(f.apply(x))));
  return out;
}

inline std::set<std::string> kernel_set(const Homomorphism& g) {
  std::set<std::string> out;
  for (const auto& x : enumerate(g.source()))
    if (g.target().is_zero(g.apply(x))) out.insert(to_string(std::span<const Integer>(x)));
  return out;
}

}  // namespace cech::testing
