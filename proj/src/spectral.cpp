#include "cech/spectral.hpp"

#include "cech/errors.hpp"

namespace cech {

namespace {

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  return CyclicSum::direct_sum({a.layout(), b.layout()}).invariants();
}

}  // namespace

FilteredComplex::FilteredComplex(SimplicialComplex X, std::vector<FgAbGroup> summands)
    : X_(std::move(X)), summands_(std::move(summands)) {
  if (summands_.empty()) throw ValidationError("at least one summand is required", "summands");
  std::vector<CyclicSum> layouts;
  offsets_.push_back(0);
  for (const auto& g : summands_) {
    layouts.push_back(g.layout());
    offsets_.push_back(offsets_.back() + g.generator_count());
  }
  total_ = cech_complex(X_, CyclicSum::direct_sum(layouts));
  for (const auto& l : layouts) graded_.push_back(cech_complex(X_, l));
  for (int n = 0; n <= total_->max_degree() + 1; ++n) relations_.push_back(total_->group(n).relations());
}

const ComplexPtr& FilteredComplex::graded(int p) const {
  if (p < 1 || p > static_cast<int>(length())) throw ValidationError("summand index out of range");
  return graded_[static_cast<std::size_t>(p) - 1];
}

const Lattice& FilteredComplex::relations(int n) const {
  if (n < 0 || n > max_degree() + 1) throw ValidationError("degree out of range");
  return relations_[static_cast<std::size_t>(n)];
}

Lattice FilteredComplex::band(int a, int b, int n) const {
  const int s = static_cast<int>(length());
  a = std::max(a, 1);
  b = std::min(b, s);
  const std::size_t g = offsets_.back();
  const std::size_t dim = total_->group(n).size();
  std::vector<std::size_t> indices;
  if (a <= b && g > 0)
    for (std::size_t cell = 0; cell < dim / g; ++cell)
      for (std::size_t k = offsets_[static_cast<std::size_t>(a) - 1]; k < offsets_[static_cast<std::size_t>(b)]; ++k)
        indices.push_back(cell * g + k);
  return Lattice::coordinate(dim, indices) + relations(n);
}

Lattice FilteredComplex::filtration(int p, int n) const { return band(p, static_cast<int>(length()), n); }

namespace {

// {x in V_p ∩ C^n : dx in V_{p+r}}; r = 0 gives V_p itself since d preserves the filtration.
Lattice cycles(const FilteredComplex& F, int r, int p, int n) {
  Lattice Vp = F.filtration(p, n);
  if (r == 0) return Vp;
  return Vp.intersect(Lattice::preimage(F.total()->differential(n).matrix(), F.filtration(p + r, n + 1)));
}

// d(V_{p-r} ∩ C^{n-1}) ∩ V_p, plus relations.
Lattice boundaries(const FilteredComplex& F, int r, int p, int n) {
  if (n == 0) return F.relations(0);
  Lattice image = F.filtration(p - r, n - 1).image(F.total()->differential(n - 1).matrix()) + F.relations(n);
  return image.intersect(F.filtration(p, n));
}

FgAbGroup modulo_relations(const FilteredComplex& F, const Lattice& L, int n) {
  return Subquotient(L, F.relations(n)).group();
}

}  // namespace

SpectralTerms filtered_terms(const FilteredComplex& F, int r, int p, int q) {
  const int s = static_cast<int>(F.length());
  const int n = p + q;
  if (r < 1) throw ValidationError("r must be at least 1, got " + std::to_string(r), "r");
  if (p < 1 || p > s + 1)
    throw ValidationError("p must lie in 1.." + std::to_string(s + 1) + ", got " + std::to_string(p), "p");
  if (n < 0 || n > F.max_degree())
    throw ValidationError("p+q must lie in 0.." + std::to_string(F.max_degree()) + ", got " + std::to_string(n), "q");

  Lattice Z = cycles(F, r, p, n);
  Lattice B = boundaries(F, r, p, n);
  Lattice denominator = boundaries(F, r - 1, p, n) + cycles(F, r - 1, p + 1, n);
  FgAbGroup E = Subquotient(Z, denominator).group();
  return {r, p, q, Z, B, denominator, modulo_relations(F, Z, n), modulo_relations(F, B, n), std::move(E)};
}

FgAbGroup infinity_term(const FilteredComplex& F, int p, int n) {
  const Matrix& d = F.total()->differential(n).matrix();
  const Lattice cocycles = Lattice::preimage(d, F.relations(n + 1));
  Lattice all_boundaries =
      n == 0 ? F.relations(0) : Lattice::full(F.total()->group(n - 1).size()).image(F.total()->differential(n - 1).matrix()) + F.relations(n);
  Lattice Zp = cocycles.intersect(F.filtration(p, n));
  Lattice Zp1 = cocycles.intersect(F.filtration(p + 1, n));
  Lattice Bp = all_boundaries.intersect(F.filtration(p, n));
  return Subquotient(Zp, Zp1 + Bp).group();
}

DegenerationReport check_degeneration(const FilteredComplex& F, int r_max) {
  DegenerationReport report;
  const int s = static_cast<int>(F.length());
  auto expected = [&](int p, int n) {
    return p > s ? FgAbGroup() : F.graded(p)->cohomology(n)->group();
  };
  auto tag = [](int r, int p, int q) {
    return std::to_string(r) + "/" + std::to_string(p) + "/" + std::to_string(q);
  };

  for (int r = 1; r <= r_max; ++r)
    for (int p = 1; p <= s + 1; ++p)
      for (int n = 0; n <= F.max_degree(); ++n) {
        const int q = n - p;
        SpectralTerms t = filtered_terms(F, r, p, q);
        const std::string where = tag(r, p, q);

        const Matrix& d = F.total()->differential(n).matrix();
        Lattice band_cycles = F.band(p, p + r - 1, n).intersect(Lattice::preimage(d, F.relations(n + 1)));
        Lattice Z_closed = F.filtration(p + r, n) + band_cycles;
        report.checks.push_back({"Z closed form " + where, t.Z == Z_closed, ""});

        Lattice B_closed = n == 0 ? F.relations(0)
                                  : F.filtration(p, n - 1).image(F.total()->differential(n - 1).matrix()) +
                                        F.relations(n);
        report.checks.push_back({"B closed form " + where, t.B == B_closed, ""});
        report.checks.push_back({"B inside Z " + where, t.Z.contains(t.B), ""});

        FgAbGroup want = expected(p, n);
        report.checks.push_back({"E closed form " + where, t.E == want,
                                 t.E == want ? "" : "got " + t.E.to_string() + ", expected " + want.to_string()});
        if (r > 1) {
          const auto& first = report.grid[static_cast<std::size_t>((p - 1) * (F.max_degree() + 1) + n)];
          report.checks.push_back({"page stability " + where, first.E == t.E, ""});
        }
        report.grid.push_back(std::move(t));
      }

  for (int p = 1; p <= s + 1; ++p)
    for (int n = 0; n <= F.max_degree(); ++n) {
      FgAbGroup got = infinity_term(F, p, n), want = expected(p, n);
      report.checks.push_back({"E_inf " + std::to_string(p) + "/" + std::to_string(n), got == want,
                               got == want ? "" : "got " + got.to_string() + ", expected " + want.to_string()});
    }
  return report;
}

DirectSumReport les_direct_sum(const SimplicialComplex& X, const FgAbGroup& L_first, const FgAbGroup& L_last, int n,
                               int max_degree) {
  if (n < 2) throw ValidationError("the last summand index must be at least 2", "n");
  const CyclicSum first = L_first.layout(), last = L_last.layout();
  const std::size_t a = first.size(), b = last.size();
  Matrix iota(a + b, b), pi(a, a + b);
  for (std::size_t k = 0; k < b; ++k) iota(a + k, k) = 1;
  for (std::size_t k = 0; k < a; ++k) pi(k, k) = 1;
  ShortExactSequence ses = validate_ses(last, CyclicSum::direct_sum({first, last}), first, iota, pi);

  DirectSumReport report{ses, long_exact_sequence(X, ses, max_degree), {}};
  const auto& les = report.les;
  for (std::size_t i = 0; i < les.positions.size(); ++i) {
    const auto& pos = les.positions[i];
    report.checks.push_back({"exact at " + les.terms[pos.term].label(), pos.exact, pos.reason});
  }
  const std::string last_name = "L" + std::to_string(n);
  for (int p = 0; p <= max_degree; ++p) {
    const auto& delta = les.maps[static_cast<std::size_t>(3 * p + 2)];
    report.checks.push_back({"connecting H" + std::to_string(p) + "(L1) -> H" + std::to_string(p + 1) + "(" +
                                 last_name + ") is zero",
                             delta.is_zero(), ""});
    const auto& sum = les.terms[static_cast<std::size_t>(3 * p + 1)].group;
    FgAbGroup want = direct_sum(les.terms[static_cast<std::size_t>(3 * p + 2)].group,
                                les.terms[static_cast<std::size_t>(3 * p)].group);
    report.checks.push_back({"H" + std::to_string(p) + "(L) splits", sum == want,
                             sum == want ? "" : "got " + sum.to_string() + ", expected " + want.to_string()});
  }
  return report;
}

}  // namespace cech
