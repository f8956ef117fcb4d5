#include <doctest.h>

#include "cech/errors.hpp"
#include "cech/tower.hpp"
#include "support/cochains.hpp"
#include "support/fixtures.hpp"
#include "support/printing.hpp"
#include "support/random.hpp"

using namespace cech;
using namespace cech::fixtures;
using cech::testing::random_cochain;

namespace {

Cochain h2_generator(const SimplicialComplex& X, const CyclicSum& L) {
  auto C = cech_complex(X, L, 2);
  auto H2 = cohomology(C, 2);
  REQUIRE(!H2.basis.empty());
  return H2.basis[0];
}

// Sum of a top-degree Z/2 cochain over all top simplices: on a mod-2 pseudomanifold
// (every codimension-one face in exactly two top simplices) it kills coboundaries.
long top_pairing(const Cochain& c) {
  Integer s = 0;
  for (const auto& v : c.values()) s += v;
  return mpz_class(s % 2).get_si();
}

}  // namespace

TEST_CASE("TowerSpec validation") {
  auto X = rp2();
  auto c2 = h2_generator(X, Zmod(2));
  CHECK_NOTHROW(TowerSpec(X, c2, {bockstein_sequence(2), bockstein_sequence(2)}));

  auto path = [&](const std::function<void()>& f) {
    try {
      f();
    } catch (const ValidationError& e) {
      return e.path();
    }
    return std::string("<no error>");
  };
  CHECK(path([&] { TowerSpec(X, c2, {bockstein_sequence(3)}); }) == "sequences[0]");
  CHECK_NOTHROW(TowerSpec(X, c2, {bockstein_sequence(2), integral_bockstein_sequence(2)}));
  CHECK(path([&] { TowerSpec(X, c2, {bockstein_sequence(2), bockstein_sequence(3)}); }) == "sequences[1]");
  auto C = cech_complex(X, Zmod(2));
  CHECK(path([&] { TowerSpec(X, Cochain(C, 1, Vector(15)), {}); }) == "c2");
  CHECK_NOTHROW(TowerSpec(X, Cochain(C, 2, unit_vector(10, 0)), {}));
  CHECK(path([&] { TowerSpec(circle(), c2, {}); }) == "c2");

  auto full = SimplicialComplex::from_facets(4, {{0, 1, 2, 3}});
  auto F = cech_complex(full, Zmod(2));
  CHECK(path([&] { TowerSpec(full, Cochain(F, 2, unit_vector(4, 0)), {}); }) == "c2");
}

TEST_CASE("zero base cocycle gives zero classes") {
  for (const auto& [name, X] : catalog()) {
    auto C = cech_complex(X, Zmod(2), 2);
    TowerSpec spec(X, Cochain::zero(C, 2), {bockstein_sequence(2), bockstein_sequence(2), bockstein_sequence(2)});
    auto t = tower_classes(spec);
    REQUIRE(t.stages.size() == 4);
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(t.stages[k].degree == static_cast<int>(k) + 2);
      CHECK(t.stages[k].cls.is_zero());
    }
  }
}

TEST_CASE("suspended RP^2 double Bockstein tower") {
  auto X = suspension(rp2());
  auto c2 = h2_generator(X, Zmod(2));
  REQUIRE(cohomology(cech_complex(X, Zmod(2)), 2).group == FgAbGroup::cyclic(2));

  auto single = tower_classes(TowerSpec(X, c2, {bockstein_sequence(2)}));
  REQUIRE(single.stages.size() == 2);
  CHECK_FALSE(single.stages[1].cls.is_zero());
  CHECK(single.stages[1].cls.ambient == FgAbGroup::cyclic(2));

  auto t = tower_classes(TowerSpec(X, c2, {bockstein_sequence(2), bockstein_sequence(2)}));
  REQUIRE(t.stages.size() == 3);
  CHECK_FALSE(t.stages[0].cls.is_zero());
  CHECK_FALSE(t.stages[1].cls.is_zero());
  CHECK(t.stages[2].cls.is_zero());
  CHECK(t.stages[1].cls.representative->degree() == 3);

  // Independent detection of the stage-3 class: ΣRP^2 is a mod-2 pseudomanifold.
  CHECK(top_pairing(*t.stages[1].cls.representative) == 1);
  CHECK(t.stages[2].cls.representative->values().empty());  // no 4-simplices

  auto report = verify_tower(TowerSpec(X, c2, {bockstein_sequence(2), bockstein_sequence(2)}));
  CHECK(report.ok());
  CHECK(report.trivial_from() == 4);
}

TEST_CASE("perturbing c2 by a coboundary leaves every stage unchanged") {
  for (const auto& [name, X] : catalog())
    for (const CyclicSum& L : {Zmod(2), Zmod(3)}) {
      auto C = cech_complex(X, L, 2);
      auto H2 = cohomology(C, 2);
      std::vector<ShortExactSequence> chain(3, bockstein_sequence(L.order(0).get_si()));
      std::vector<Cochain> bases{Cochain::zero(C, 2)};
      for (const auto& b : H2.basis) bases.push_back(b);
      for (const auto& c2 : bases) {
        TowerSpec spec(X, c2, chain);
        auto t = tower_classes(spec);
        CHECK(compare_towers(t, t) == std::nullopt);
        for (int k = 0; k < 3; ++k) {
          Cochain shifted = c2 + coboundary(random_cochain(C, 1));
          auto u = tower_classes(TowerSpec(X, shifted, chain));
          CHECK_MESSAGE(compare_towers(t, u) == std::nullopt, name);
        }
      }
    }
}

TEST_CASE("compare_towers reports the first differing stage") {
  auto X = suspension(rp2());
  auto c2 = h2_generator(X, Zmod(2));
  std::vector<ShortExactSequence> chain{bockstein_sequence(2), bockstein_sequence(2)};
  auto zero = tower_classes(TowerSpec(X, Cochain::zero(c2.complex(), 2), chain));
  auto gen = tower_classes(TowerSpec(X, c2, chain));
  CHECK(compare_towers(zero, gen) == 2);

  auto other = tower_classes(TowerSpec(rp2(), h2_generator(rp2(), Zmod(2)), chain));
  CHECK_THROWS_AS(compare_towers(gen, other), ValidationError);
  auto fewer = tower_classes(TowerSpec(X, c2, {bockstein_sequence(2)}));
  CHECK_THROWS_AS(compare_towers(gen, fewer), ValidationError);
}

TEST_CASE("vanishing propagation and cocycle checks on every fixture") {
  for (const auto& [name, X] : catalog())
    for (const auto& chain : std::vector<std::vector<ShortExactSequence>>{
             {bockstein_sequence(2), bockstein_sequence(2), bockstein_sequence(2)},
             {validate_ses(Zmod(4), Zmod(8), Zmod(2), Matrix{{2}}, Matrix{{1}}), bockstein_sequence(4)},
         }) {
      auto C = cech_complex(X, chain[0].C(), 2);
      for (int k = 0; k < 4; ++k) {
        Cochain c2 = Cochain::zero(C, 2);
        for (const auto& b : cohomology(C, 2).basis)
          if (testing::uniform(0, 1)) c2 = c2 + b;
        c2 = c2 + coboundary(random_cochain(C, 1));
        auto report = verify_tower(TowerSpec(X, c2, chain));
        CHECK_MESSAGE(report.ok(), name);
        for (const auto& st : report.classes.stages) {
          CHECK(is_cocycle(*st.cls.representative));
          if (st.degree > X.dimension()) CHECK(st.cls.is_zero());
        }
      }
    }
}

TEST_CASE("RP^2 base: everything past c3 vanishes") {
  auto X = rp2();
  auto C = cech_complex(X, Zmod(2), 2);
  for (const auto& c2 : cohomology(C, 2).basis) {
    auto report = verify_tower(TowerSpec(X, c2, std::vector<ShortExactSequence>(4, bockstein_sequence(2))));
    CHECK(report.ok());
    for (std::size_t k = 1; k < report.classes.stages.size(); ++k) CHECK(report.classes.stages[k].cls.is_zero());
    CHECK(report.trivial_from() == 3);
  }
}

TEST_CASE("Bockstein nilpotence along a constant chain") {
  auto chain = std::vector<ShortExactSequence>(3, bockstein_sequence(2));
  for (const auto& [name, X] : catalog()) {
    auto C = cech_complex(X, Zmod(2), 2);
    for (const auto& c2 : cohomology(C, 2).basis) {
      auto t = tower_classes(TowerSpec(X, c2, chain));
      // c4 and later come from a Bockstein of a Bockstein.
      for (std::size_t k = 2; k < t.stages.size(); ++k) CHECK_MESSAGE(t.stages[k].cls.is_zero(), name);
    }
  }
}

TEST_CASE("randomized octahedron towers agree with the report") {
  auto X = octahedron();
  auto C = cech_complex(X, Zmod(2), 2);
  auto H2 = cohomology(C, 2);
  REQUIRE(H2.group == FgAbGroup::cyclic(2));
  for (int trial = 0; trial < 10; ++trial) {
    Cochain c2 = coboundary(random_cochain(C, 1));
    if (trial % 2) c2 = c2 + H2.basis[0];
    TowerSpec spec(X, c2, {bockstein_sequence(2)});
    auto t = tower_classes(spec);
    auto report = verify_tower(spec);
    CHECK(report.ok());
    CHECK(compare_towers(t, report.classes) == std::nullopt);
    CHECK(t.stages[0].cls.is_zero() == (trial % 2 == 0));
    CHECK(top_pairing(*t.stages[0].cls.representative) == trial % 2);
    CHECK(t.stages[1].cls.is_zero());  // degree 3 exceeds the dimension
  }
}
