#include <doctest.h>

#include "cech/errors.hpp"
#include "cech/exactseq.hpp"
#include "cech/liftgerbe.hpp"
#include "support/extensions.hpp"
#include "support/fixtures.hpp"
#include "support/printing.hpp"
#include "support/random.hpp"

using namespace cech;
using namespace cech::fixtures;
using namespace cech::testing;

namespace {

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

std::string error_path(const std::function<void()>& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e.path();
  }
  return "<no error>";
}

void check_lift(const TransitionCocycle& t, const CentralExtension& ext, const std::vector<std::size_t>& lift) {
  CHECK(testing::is_lift(t, ext, lift));
}

}  // namespace

TEST_CASE("validate_extension") {
  CHECK(cyclic4().L() == CyclicSum({Integer(2)}));
  CHECK(cyclic4().coords(2) == Vector{Integer(1)});
  CHECK(cyclic4().canonical_section() == std::vector<std::size_t>{0, 1});
  CHECK(dihedral4().L() == CyclicSum({Integer(2)}));
  CHECK(dicyclic_over_s3().L() == CyclicSum({Integer(2)}));

  auto S3 = FiniteGroup::dihedral(3);
  CHECK(error_path([&] { validate_extension(S3, {0, 1, 2}, {0, 0, 0, 1, 1, 1}, FiniteGroup::cyclic(2)); }) ==
        "L_elements");
  try {
    validate_extension(S3, {0, 1, 2}, {0, 0, 0, 1, 1, 1}, FiniteGroup::cyclic(2));
  } catch (const ValidationError& e) {
    CHECK(e.message().find("not central") != std::string::npos);
  }
  auto Z4 = FiniteGroup::cyclic(4);
  CHECK(error_path([&] { validate_extension(Z4, {0, 2}, {0, 0, 0, 0}, FiniteGroup::cyclic(2)); }) == "pi");
  CHECK(error_path([&] { validate_extension(Z4, {0, 1}, {0, 1, 0, 1}, FiniteGroup::cyclic(2)); }) == "L_elements");
  CHECK(error_path([&] { validate_extension(Z4, {0, 2}, {0, 1, 1, 0}, FiniteGroup::cyclic(2)); }) == "pi");
  CHECK(error_path([&] { validate_extension(Z4, {0}, {0, 1, 0, 1}, FiniteGroup::cyclic(2)); }) == "pi");
  CHECK(error_path([&] { validate_extension(Z4, {0, 2}, {0, 1, 0}, FiniteGroup::cyclic(2)); }) == "pi");
  CHECK(error_path([&] { validate_extension(Z4, {2}, {0, 1, 0, 1}, FiniteGroup::cyclic(2)); }) == "L_elements");

  // L = Z/2 x Z/2 inside Z/2 x Z/4 x ... : a rank-two band.
  auto G = FiniteGroup::direct_product(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)),
                                       FiniteGroup::cyclic(2));
  std::vector<std::size_t> pi(8);
  for (std::size_t i = 0; i < 8; ++i) pi[i] = i % 2;
  auto ext = validate_extension(G, {0, 2, 4, 6}, pi, FiniteGroup::cyclic(2));
  CHECK(ext.L() == CyclicSum({Integer(2), Integer(2)}));
  for (std::size_t l : {0, 2, 4, 6}) CHECK(ext.element(ext.coords(l)) == l);
}

TEST_CASE("TransitionCocycle validation") {
  auto X = full_triangle();
  auto Q = FiniteGroup::cyclic(2);
  CHECK_NOTHROW(TransitionCocycle(X, Q, {1, 1, 0}));
  CHECK(error_path([&] { TransitionCocycle(X, Q, {1, 0, 0}); }) == "0,1,2");
  CHECK(error_path([&] { TransitionCocycle(X, Q, {1, 5, 0}); }) == "0,2");
  CHECK_THROWS_AS(TransitionCocycle(X, Q, {1, 1}), ValidationError);
  TransitionCocycle t(X, FiniteGroup::dihedral(3), {3, 1, 5});  // s · r^2 s = r
  CHECK(t(1, 0) == FiniteGroup::dihedral(3).inverse(3));
}

TEST_CASE("lifting_obstruction examples") {
  SUBCASE("identity transitions") {
    for (const auto& ext : {cyclic4(), dihedral4(), dicyclic_over_s3()}) {
      TransitionCocycle t(rp2(), ext.Q(), std::vector<std::size_t>(15, ext.Q().identity()));
      auto ob = lifting_obstruction(t, ext);
      CHECK(ob.cochain.is_zero());
      CHECK(ob.cls.is_zero());
    }
  }
  SUBCASE("no 2-simplices") {
    TransitionCocycle t(circle(), FiniteGroup::dihedral(3), {3, 4, 1});
    auto ob = lifting_obstruction(t, dicyclic_over_s3());
    CHECK(ob.cochain.values().empty());
    CHECK(ob.cls.is_zero());
  }
  SUBCASE("RP^2 with Z/4 -> Z/2 agrees with the Bockstein") {
    auto X = rp2();
    auto z = z2_cocycles(X)[1];
    TransitionCocycle t(X, FiniteGroup::cyclic(2), z);
    auto ob = lifting_obstruction(t, cyclic4());
    CHECK(is_cocycle(ob.cochain));
    CHECK_FALSE(ob.cls.is_zero());

    CechSequence family(X, bockstein_sequence(2), 2);
    Vector zv(z.begin(), z.end());
    auto delta = class_of(family.connecting(Cochain(family.quotient(), 1, zv)));
    CHECK(delta.same_class(ob.cls));
    CHECK(Cochain(family.sub(), 2, ob.cochain.values()) == family.connecting(Cochain(family.quotient(), 1, zv)));
  }
  SUBCASE("RP^2 with Dic3 -> S3 through a transposition") {
    auto X = rp2();
    auto ext = dicyclic_over_s3();
    auto t = twisted(X, ext.Q(), z2_cocycles(X)[1], 3, std::vector<std::size_t>(6, 0));
    CHECK_FALSE(lifting_obstruction(t, ext).cls.is_zero());
    auto search = brute_force_lift(t, ext);
    CHECK_FALSE(search.lift.has_value());
    CHECK(search.search_space == (1u << 15));

    auto split = split_z2_s3();
    CHECK(lifting_obstruction(t, split).cls.is_zero());
    auto found = brute_force_lift(t, split);
    REQUIRE(found.lift.has_value());
    check_lift(t, split, *found.lift);
  }
  CHECK_THROWS_AS(lifting_obstruction(TransitionCocycle(circle(), FiniteGroup::cyclic(3), {0, 0, 0}), cyclic4()),
                  ValidationError);
  CHECK_THROWS_AS(lifting_obstruction(TransitionCocycle(circle(), FiniteGroup::cyclic(2), {0, 0, 0}), cyclic4(), {0, 2}),
                  ValidationError);
}

TEST_CASE("brute_force_lift budget") {
  TransitionCocycle t(torus(), FiniteGroup::cyclic(2), std::vector<std::size_t>(21, 0));
  CHECK_THROWS_AS(brute_force_lift(t, cyclic4()), BudgetExceeded);
  CHECK(brute_force_lift(t, cyclic4(), std::uint64_t{1} << 21).lift.has_value());
}

TEST_CASE("obstruction is a cocycle and independent of the section") {
  for (const auto& [name, X] : catalog()) {
    if (X.dimension() < 1) continue;
    for (const auto& [ename, ext] : extensions()) {
      const auto& Q = ext.Q();
      for (const auto& z : z2_cocycles(X))
        for (std::size_t twist : involutions(Q)) {
          auto t = twisted(X, Q, z, twist, random_vertex_values(X, Q));
          auto ob = lifting_obstruction(t, ext);
          CHECK(is_cocycle(ob.cochain));
          for (int k = 0; k < 5; ++k)
            CHECK_MESSAGE(lifting_obstruction(t, ext, random_section(ext)).cls.same_class(ob.cls), name << " " << ename);
        }
    }
  }
}

TEST_CASE("obstruction class vanishes exactly when a lift exists") {
  std::size_t compared = 0, obstructed = 0;
  for (const auto& [name, X] : catalog()) {
    if (X.dimension() < 1 || X.count(1) > 20) continue;
    for (const auto& [ename, ext] : extensions()) {
      const auto& Q = ext.Q();
      for (const auto& z : z2_cocycles(X))
        for (std::size_t twist : involutions(Q)) {
          auto t = twisted(X, Q, z, twist, random_vertex_values(X, Q));
          auto ob = lifting_obstruction(t, ext);
          auto search = brute_force_lift(t, ext);
          CHECK_MESSAGE(ob.cls.is_zero() == search.lift.has_value(), name << " " << ename);
          if (search.lift) check_lift(t, ext, *search.lift);
          obstructed += ob.cls.is_zero() ? 0 : 1;
          ++compared;
        }
    }
  }
  CHECK(compared >= 50);
  CHECK(obstructed >= 5);
}

TEST_CASE("abelian extensions agree with the connecting map") {
  auto ext9 = validate_extension(FiniteGroup::cyclic(9), {0, 3, 6}, {0, 1, 2, 0, 1, 2, 0, 1, 2}, FiniteGroup::cyclic(3));
  for (const auto& [name, X] : catalog()) {
    if (X.dimension() < 1) continue;
    auto C = cech_complex(X, Zmod(3));
    CechSequence family(X, bockstein_sequence(3), std::max(X.dimension(), 2));
    for (const auto& b : cohomology(C, 1).basis) {
      std::vector<std::size_t> z;
      for (const auto& v : b.values()) z.push_back(v.get_ui());
      TransitionCocycle t(X, FiniteGroup::cyclic(3), z);
      auto ob = lifting_obstruction(t, ext9);
      Vector zv(z.begin(), z.end());
      auto delta = class_of(family.connecting(Cochain(family.quotient(), 1, zv)));
      CHECK_MESSAGE(delta.same_class(ob.cls), name);
    }
  }
}
