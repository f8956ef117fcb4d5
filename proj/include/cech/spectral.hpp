#pragma once

#include <optional>
#include <vector>

#include "cech/cochain.hpp"
#include "cech/exactseq.hpp"
#include "cech/lattice.hpp"
#include "cech/report.hpp"

namespace cech {

/// C^*(X, L) for L = L_1 + ... + L_s, filtered by V_p = C^*(X, L_p + ... + L_s).
/// Filtration indices run 1..s+1 (V_1 everything, V_{s+1} = 0); indices below 1 mean V_1.
class FilteredComplex {
 public:
  FilteredComplex(SimplicialComplex X, std::vector<FgAbGroup> summands);

  const SimplicialComplex& nerve() const noexcept { return X_; }
  const std::vector<FgAbGroup>& summands() const noexcept { return summands_; }
  std::size_t length() const noexcept { return summands_.size(); }
  /// Cohomological degrees 0..dim X.
  int max_degree() const noexcept { return total_->max_degree(); }
  const ComplexPtr& total() const noexcept { return total_; }
  /// C^*(X, L_p), 1 <= p <= s.
  const ComplexPtr& graded(int p) const;

  /// Relation lattice of C^n(X, L) (torsion of the coefficients, every cell).
  const Lattice& relations(int n) const;
  /// V_p ∩ C^n as a lattice of integer coordinate vectors, containing relations(n).
  Lattice filtration(int p, int n) const;
  /// C^n(X, L_a + ... + L_b) plus relations (empty range gives the relations).
  Lattice band(int a, int b, int n) const;

 private:
  SimplicialComplex X_;
  std::vector<FgAbGroup> summands_;
  std::vector<std::size_t> offsets_;  // summand p starts at offsets_[p-1] within a cell block
  ComplexPtr total_;
  std::vector<ComplexPtr> graded_;
  std::vector<Lattice> relations_;
};

/// Z_r^{pq}, B_r^{pq}, E_r^{pq} inside C^{p+q}(X, L), all lattices containing the relations.
struct SpectralTerms {
  int r, p, q;
  Lattice Z, B, E_denominator;
  FgAbGroup Z_group, B_group, E;
};

/// Terms from the membership definitions:
///   Z_r = {x in V_p : dx in V_{p+r}},  B_r = d(V_{p-r}) ∩ V_p,
///   E_r = Z_r / (B_{r-1} + Z_{r-1}^{p+1, q-1}).
/// Throws ValidationError unless r >= 1, 1 <= p <= s+1 and 0 <= p+q <= max_degree.
SpectralTerms filtered_terms(const FilteredComplex& F, int r, int p, int q);

/// Z_∞^p / (Z_∞^{p+1} + B_∞^p) in degree n, with Z_∞ the cocycles and B_∞ the coboundaries inside V_p.
FgAbGroup infinity_term(const FilteredComplex& F, int p, int n);

struct DegenerationReport {
  std::vector<SpectralTerms> grid;  // r = 1..r_max, p = 1..s+1, p+q = 0..max_degree
  std::vector<Check> checks;
  bool ok() const { return all_passed(checks); }
};

/// Compares every term against the closed forms
///   Z_r = C(V_{p+r}) + Z(L_p + ... + L_{p+r-1}),  B_r = d(C(V_p)),  E_r ≅ H^{p+q}(X, L_p),
/// checks B ⊆ Z, page stability, and E_∞^p ≅ H(X, L_p).
DegenerationReport check_degeneration(const FilteredComplex& F, int r_max);

struct DirectSumReport {
  ShortExactSequence ses;  // 0 -> L_n -> L_1 + L_n -> L_1 -> 0
  LongExactSequence les;
  std::vector<Check> checks;
  bool ok() const { return all_passed(checks); }
};

/// The long exact sequence ... -> H^i(X,L_n) -> H^i(X,L) -> H^i(X,L_1) -> H^{i+1}(X,L_n) -> ...
/// for L = L_1 + L_n. `n` only labels the last summand (n >= 2).
DirectSumReport les_direct_sum(const SimplicialComplex& X, const FgAbGroup& L_first, const FgAbGroup& L_last, int n,
                               int max_degree);

}  // namespace cech
