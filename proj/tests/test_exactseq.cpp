#include <doctest.h>

#include <set>

#include "cech/errors.hpp"
#include "cech/exactseq.hpp"
#include "support/cochains.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/printing.hpp"
#include "support/random.hpp"
#include "support/sequences.hpp"

using namespace cech;
using namespace cech::fixtures;
using namespace cech::testing;

namespace {

std::string error_path(const std::function<void()>& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e.path();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("validate_ses accepts the standard sequences") {
  CHECK_NOTHROW(bockstein_sequence(2));
  for (long m = 2; m <= 7; ++m) CHECK_NOTHROW(integral_bockstein_sequence(m));
  auto split = validate_ses(Zmod(2), CyclicSum({Integer(2), Integer(2)}), Zmod(2), Matrix{{1}, {0}}, Matrix{{0, 1}});
  CHECK(split.B().size() == 2);
}

TEST_CASE("validate_ses names the failed position") {
  CHECK(error_path([] { validate_ses(Zmod(2), Zmod(4), Zmod(2), Matrix{{0}}, Matrix{{1}}); }) == "iota");
  CHECK(error_path([] { validate_ses(Zmod(2), Zmod(4), Zmod(2), Matrix{{2}}, Matrix{{0}}); }) == "pi");
  CHECK(error_path([] { validate_ses(Z(), Z(), Zmod(2), Matrix{{4}}, Matrix{{1}}); }) == "B");
  CHECK(error_path([] { validate_ses(Z(), Z(), Zmod(2), Matrix{{1}}, Matrix{{1}}); }) == "B");
  // Z/2 -> Z is not a homomorphism at all.
  CHECK(error_path([] { validate_ses(Zmod(2), Z(), Zmod(2), Matrix{{1}}, Matrix{{1}}); }) == "iota");

  try {
    validate_ses(Z(), Z(), Zmod(2), Matrix{{4}}, Matrix{{1}});
  } catch (const ValidationError& e) {
    CHECK(e.message().find("[2]") != std::string::npos);
  }
}

TEST_CASE("connecting examples") {
  auto S = bockstein_sequence(2);
  SUBCASE("zero maps to zero") {
    auto X = rp2();
    CechSequence family(X, S);
    CHECK(family.connecting(Cochain::zero(family.quotient(), 1)).is_zero());
  }
  SUBCASE("circle has no 2-simplices") {
    auto X = circle();
    auto C = cech_complex(X, Zmod(2));
    for (const auto& rep : cohomology(C, 1).basis) {
      Cochain out = connecting(X, S, rep);
      CHECK(out.degree() == 2);
      CHECK(out.is_zero());
    }
  }
  SUBCASE("non-cocycles are rejected") {
    CechSequence family(circle(), S);
    Cochain bad(family.quotient(), 0, Vector{Integer(1), Integer(0), Integer(0)});
    CHECK_THROWS_AS(family.connecting(bad), ValidationError);
  }
}

TEST_CASE("Bockstein on RP^2 is nonzero for every lift (brute force)") {
  auto X = rp2();
  auto S = bockstein_sequence(2);
  CechSequence family(X, S);
  auto H1 = cohomology(family.quotient(), 1);
  REQUIRE(H1.group == FgAbGroup::cyclic(2));
  const Cochain& c = H1.basis[0];

  Cochain image = family.connecting(c);
  CHECK(is_cocycle(image));
  CHECK_FALSE(class_of(image).is_zero());

  const auto& edges = X.simplices(1);
  const auto& triangles = X.simplices(2);
  auto coboundaries = oracle::coboundary_table(X, 2, {2});
  std::vector<long> base(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) base[e] = mpz_class(c.values()[e] % 2).get_si();

  std::size_t nonzero = 0;
  const std::uint64_t lifts = std::uint64_t{1} << edges.size();
  for (std::uint64_t mask = 0; mask < lifts; ++mask) {
    std::vector<long> b(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) b[e] = base[e] + 2 * static_cast<long>((mask >> e) & 1);
    std::uint64_t code = 0;
    bool even = true;
    for (std::size_t t = 0; t < triangles.size(); ++t) {
      const auto& s = triangles[t];
      auto at = [&](std::size_t u, std::size_t v) { return b[*X.index_of({u, v})]; };
      long v = ((at(s[1], s[2]) - at(s[0], s[2]) + at(s[0], s[1])) % 4 + 4) % 4;
      if (v % 2 != 0) even = false;
      code |= static_cast<std::uint64_t>(v / 2) << t;
    }
    REQUIRE(even);
    if (!coboundaries[code]) ++nonzero;
  }
  CHECK(nonzero == lifts);

  // The engine's output agrees with the brute-force class.
  std::uint64_t engine_code = 0;
  for (std::size_t t = 0; t < triangles.size(); ++t) engine_code |= image.values()[t].get_ui() << t;
  CHECK(coboundaries[engine_code] == 0);
}

TEST_CASE("connecting is independent of the lift") {
  std::size_t fixtures_checked = 0;
  for (const auto& [name, X] : catalog())
    for (const auto& [sname, S] : sequences()) {
      CechSequence family(X, S);
      for (int p = 0; p <= X.dimension(); ++p) {
        auto Hp = cohomology(family.quotient(), p);
        std::vector<Cochain> inputs = Hp.basis;
        if (!inputs.empty()) {
          Cochain combo = Cochain::zero(family.quotient(), p);
          for (const auto& r : inputs) combo = combo + r;
          if (p > 0) combo = combo + coboundary(random_cochain(family.quotient(), p - 1));
          inputs.push_back(combo);
        }
        for (const auto& c : inputs) {
          auto canonical = class_of(family.connecting(c));
          for (int k = 0; k < 20; ++k) {
            Cochain relift = family.lift(c) + family.include(random_cochain(family.sub(), p));
            auto other = class_of(family.connecting_from_lift(c, relift));
            CHECK_MESSAGE(other.same_class(canonical), name << " " << sname << " degree " << p);
          }
        }
      }
      ++fixtures_checked;
    }
  CHECK(fixtures_checked >= 20);
}

TEST_CASE("connecting sends coboundaries to coboundaries") {
  for (const auto& [name, X] : catalog())
    for (const auto& [sname, S] : sequences()) {
      CechSequence family(X, S);
      for (int p = 1; p <= X.dimension(); ++p)
        for (int k = 0; k < 5; ++k) {
          Cochain c = coboundary(random_cochain(family.quotient(), p - 1));
          CHECK_MESSAGE(class_of(family.connecting(c)).is_zero(), name << " " << sname);
        }
    }
}

TEST_CASE("connecting is additive on classes") {
  auto X = torus();
  auto S = bockstein_sequence(3);
  CechSequence family(X, S);
  auto H1 = cohomology(family.quotient(), 1);
  REQUIRE(H1.basis.size() == 2);
  const Cochain &a = H1.basis[0], &b = H1.basis[1];
  auto sum = class_of(family.connecting(a + b));
  auto parts = class_of(family.connecting(a) + family.connecting(b));
  CHECK(sum.same_class(parts));
}

TEST_CASE("applying the Z/2 Bockstein twice gives a coboundary") {
  auto S = bockstein_sequence(2);
  for (const auto& [name, X] : catalog()) {
    auto C = cech_complex(X, Zmod(2), X.dimension());
    for (int p = 0; p <= X.dimension(); ++p) {
      std::vector<Cochain> inputs = cohomology(C, p).basis;
      for (int k = 0; k < 3 && p > 0; ++k) inputs.push_back(coboundary(random_cochain(C, p - 1)));
      for (const auto& c : inputs) {
        Cochain once = connecting(X, S, c);
        Cochain twice = connecting(X, S, once);
        CHECK(twice.degree() == p + 2);
        CHECK_MESSAGE(class_of(twice).is_zero(), name << " degree " << p);
      }
    }
  }
}

TEST_CASE("long exact sequence: circle with the integral Bockstein") {
  auto les = long_exact_sequence(circle(), integral_bockstein_sequence(2), 1);
  std::vector<FgAbGroup> groups;
  for (const auto& t : les.terms) groups.push_back(t.group);
  const auto Zg = FgAbGroup::integers(), Z2 = FgAbGroup::cyclic(2);
  CHECK(groups == std::vector<FgAbGroup>{Zg, Zg, Z2, Zg, Zg, Z2, FgAbGroup()});
  CHECK(les.terms[3].label() == "H1(A)");
  CHECK(les.exact());
  CHECK(les.positions.size() == les.terms.size() - 1);
  // H^0(Z) -> H^0(Z) is multiplication by 2; reduction onto H^0(Z/2) leaves nothing for δ.
  CHECK(abs(les.maps[0].matrix()(0, 0)) == 2);
  CHECK(hom_invariants(les.maps[1]).cokernel.is_trivial());
  CHECK(les.maps[2].is_zero());
  CHECK(abs(les.maps[3].matrix()(0, 0)) == 2);
}

TEST_CASE("long exact sequence: contractible complex") {
  for (const auto& [sname, S] : sequences()) {
    auto les = long_exact_sequence(full_triangle(), S, 2);
    CHECK(les.exact());
    CHECK(les.terms[0].group == S.A().invariants());
    CHECK(les.terms[1].group == S.B().invariants());
    CHECK(les.terms[2].group == S.C().invariants());
    for (std::size_t i = 3; i < les.terms.size(); ++i) CHECK(les.terms[i].group.is_trivial());
  }
}

TEST_CASE("long exact sequence: RP^2 Bockstein connecting map is an isomorphism") {
  auto les = long_exact_sequence(rp2(), bockstein_sequence(2), 2);
  CHECK(les.exact());
  const auto& delta = les.maps[5];  // H^1(C) -> H^2(A)
  CHECK(les.terms[5].label() == "H1(C)");
  CHECK(les.terms[6].label() == "H2(A)");
  auto inv = hom_invariants(delta);
  CHECK(inv.kernel.is_trivial());
  CHECK(inv.cokernel.is_trivial());
}

TEST_CASE("long exact sequence is exact on every fixture (brute-force kernel/image)") {
  std::size_t pairs = 0, brute_positions = 0;
  for (const auto& [name, X] : catalog())
    for (const auto& [sname, S] : sequences()) {
      const int top = X.dimension();
      auto les = long_exact_sequence(X, S, top);
      CHECK_MESSAGE(les.exact(), name << " " << sname);
      ++pairs;

      bool finite = testing::is_finite(S.B());
      if (finite && oracle::largest_cochain_group(X, finite_orders(S.B())) > (1u << 16)) finite = false;
      if (!finite) continue;
      for (std::size_t i = 0; i < les.terms.size(); ++i) {
        const auto& term = les.terms[i];
        const CyclicSum& coeff = term.slot == 'A' ? S.A() : term.slot == 'B' ? S.B() : S.C();
        if (term.degree <= X.dimension())
          CHECK_MESSAGE(term.group == oracle::as_group(oracle::brute_force_cech(X, term.degree, finite_orders(coeff))),
                        name << " " << term.label());
      }
      for (std::size_t i = 0; i + 1 < les.terms.size(); ++i) {
        std::set<std::string> image =
            i == 0 ? std::set<std::string>{to_string(std::span<const Integer>(Vector(les.maps[0].source().size())))}
                   : image_set(les.maps[i - 1]);
        CHECK_MESSAGE(image == kernel_set(les.maps[i]), name << " " << sname << " at " << les.terms[i].label());
        ++brute_positions;
      }
    }
  CHECK(pairs >= 5);
  CHECK(brute_positions >= 50);
}
