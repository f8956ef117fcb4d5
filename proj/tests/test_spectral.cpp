#include <doctest.h>

#include "cech/errors.hpp"
#include "cech/spectral.hpp"
#include "support/fixtures.hpp"
#include "support/printing.hpp"

using namespace cech;
using namespace cech::fixtures;

namespace {

const FgAbGroup Zg = FgAbGroup::integers();
FgAbGroup Zn(long n) { return FgAbGroup::cyclic(n); }

std::string failures(const std::vector<Check>& checks) {
  std::string out;
  for (const auto& c : checks)
    if (!c.passed) out += c.name + " " + c.detail + "; ";
  return out;
}

}  // namespace

TEST_CASE("filtration shape") {
  FilteredComplex F(circle(), {Zn(2), Zn(3), Zg});
  CHECK(F.length() == 3);
  CHECK(F.max_degree() == 1);
  for (int n = 0; n <= 1; ++n) {
    CHECK(F.filtration(1, n) == Lattice::full(F.total()->group(n).size()));
    CHECK(F.filtration(4, n) == F.relations(n));
    for (int p = 1; p <= 3; ++p) CHECK(F.filtration(p, n).contains(F.filtration(p + 1, n)));
    // d maps V_p into V_p.
    for (int p = 1; p <= 4; ++p)
      CHECK(F.filtration(p, n + 1).contains(F.filtration(p, n).image(F.total()->differential(n).matrix())));
  }
  CHECK_THROWS_AS(FilteredComplex(circle(), {}), ValidationError);
}

TEST_CASE("filtered_terms examples") {
  FilteredComplex T(circle(), {Zn(2), Zn(3)});
  CHECK(filtered_terms(T, 1, 1, 0).E == Zn(2));
  for (int r = 1; r <= 3; ++r) CHECK(filtered_terms(T, r, 2, -1).E == Zn(3));
  for (int r = 1; r <= 3; ++r)
    for (int q = -3; q <= 1; ++q)
      if (3 + q >= 0 && 3 + q <= 1) {
        auto t = filtered_terms(T, r, 3, q);
        CHECK(t.E.is_trivial());
        CHECK(t.Z_group.is_trivial());
        CHECK(t.B_group.is_trivial());
      }

  FilteredComplex P(rp2(), {Zn(2), Zg});
  CHECK(filtered_terms(P, 2, 2, 0).E == Zn(2));
  CHECK(filtered_terms(P, 1, 1, 1).E == Zn(2));
  CHECK(filtered_terms(P, 1, 2, -1).E.is_trivial());

  CHECK_THROWS_AS(filtered_terms(T, 0, 1, 0), ValidationError);
  CHECK_THROWS_AS(filtered_terms(T, 1, 0, 0), ValidationError);
  CHECK_THROWS_AS(filtered_terms(T, 1, 4, -3), ValidationError);
  CHECK_THROWS_AS(filtered_terms(T, 1, 1, 1), ValidationError);
  CHECK_THROWS_AS(filtered_terms(T, 1, 1, -2), ValidationError);
}

TEST_CASE("single summand recovers the unfiltered cohomology") {
  for (const auto& [name, X] : catalog()) {
    if (X.count(2) > 30) continue;
    FilteredComplex F(X, {Zn(4)});
    auto C = cech_complex(X, CyclicSum(Zn(4)));
    for (int n = 0; n <= F.max_degree(); ++n)
      for (int r = 1; r <= 2; ++r) CHECK_MESSAGE(filtered_terms(F, r, 1, n - 1).E == C->cohomology(n)->group(), name);
  }
}

TEST_CASE("definitional terms match the closed forms") {
  struct Case {
    std::string name;
    SimplicialComplex X;
    std::vector<FgAbGroup> summands;
  };
  const std::vector<Case> cases = {
      {"circle Z/2 Z/3", circle(), {Zn(2), Zn(3)}},
      {"rp2 Z/2 Z/4 Z", rp2(), {Zn(2), Zn(4), Zg}},
      {"torus Z Z/2", torus(), {Zg, Zn(2)}},
      {"mobius Z/3 Z Z/2", mobius(), {Zn(3), Zg, Zn(2)}},
      {"octahedron Z/2+Z/2 Z", octahedron(), {FgAbGroup(0, {Integer(2), Integer(2)}), Zg}},
      {"figure eight with a trivial summand", figure_eight(), {Zg, FgAbGroup(), Zn(6)}},
  };
  for (const auto& c : cases) {
    FilteredComplex F(c.X, c.summands);
    auto report = check_degeneration(F, 3);
    CHECK_MESSAGE(report.ok(), c.name << ": " << failures(report.checks));
    const std::size_t s = c.summands.size();
    CHECK(report.grid.size() == 3 * (s + 1) * static_cast<std::size_t>(F.max_degree() + 1));
  }
}

TEST_CASE("RP^2 (Z/2, Z/4, Z) grid values") {
  FilteredComplex F(rp2(), {Zn(2), Zn(4), Zg});
  auto report = check_degeneration(F, 2);
  REQUIRE(report.ok());
  auto find = [&](int r, int p, int q) {
    for (const auto& t : report.grid)
      if (t.r == r && t.p == p && t.q == q) return t.E;
    FAIL("missing term");
    return FgAbGroup();
  };
  CHECK(find(1, 1, 1) == Zn(2));
  CHECK(find(2, 2, 0) == Zn(2));   // H^2(RP^2, Z/4)
  CHECK(find(2, 2, -1) == Zn(2));  // H^1(RP^2, Z/4)
  CHECK(find(1, 3, -1) == Zn(2));  // H^2(RP^2, Z)
  CHECK(find(1, 3, -2) == FgAbGroup());
  CHECK(find(1, 3, -3) == Zg);
  CHECK(infinity_term(F, 3, 2) == Zn(2));
}

TEST_CASE("direct-sum long exact sequence") {
  SUBCASE("circle") {
    auto report = les_direct_sum(circle(), Zn(2), Zn(3), 2, 1);
    CHECK_MESSAGE(report.ok(), failures(report.checks));
    CHECK(report.les.terms[1].group == Zn(6));
  }
  SUBCASE("contractible") {
    auto report = les_direct_sum(full_triangle(), Zg, Zn(2), 3, 2);
    CHECK(report.ok());
    CHECK(report.les.terms[0].group == Zn(2));
    CHECK(report.les.terms[1].group == FgAbGroup(1, {Integer(2)}));
    CHECK(report.les.terms[2].group == Zg);
    for (std::size_t i = 3; i < report.les.terms.size(); ++i) CHECK(report.les.terms[i].group.is_trivial());
  }
  SUBCASE("RP^2") {
    auto report = les_direct_sum(rp2(), Zg, Zn(2), 2, 2);
    CHECK(report.ok());
    CHECK(report.les.terms[7].label() == "H2(B)");
    CHECK(report.les.terms[7].group == FgAbGroup(0, {Integer(2), Integer(2)}));
  }
  SUBCASE("every fixture") {
    for (const auto& [name, X] : catalog())
      for (const auto& [a, b] : std::vector<std::pair<FgAbGroup, FgAbGroup>>{{Zn(2), Zn(3)}, {Zg, Zn(4)}, {Zn(2), Zg}}) {
        auto report = les_direct_sum(X, a, b, 4, X.dimension());
        CHECK_MESSAGE(report.ok(), name << ": " << failures(report.checks));
      }
  }
  CHECK_THROWS_AS(les_direct_sum(circle(), Zg, Zg, 1, 1), ValidationError);
}
