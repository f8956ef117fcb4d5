#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cech/abelian.hpp"
#include "cech/cochain.hpp"

namespace cech {

/// 0 -> A -iota-> B -pi-> C -> 0, exact (checked on construction through validate_ses).
class ShortExactSequence {
 public:
  const CyclicSum& A() const noexcept { return iota_.source(); }
  const CyclicSum& B() const noexcept { return iota_.target(); }
  const CyclicSum& C() const noexcept { return pi_.target(); }
  const Homomorphism& iota() const noexcept { return iota_; }
  const Homomorphism& pi() const noexcept { return pi_; }

  bool operator==(const ShortExactSequence&) const = default;

 private:
  ShortExactSequence(Homomorphism iota, Homomorphism pi) : iota_(std::move(iota)), pi_(std::move(pi)) {}
  friend ShortExactSequence validate_ses(const CyclicSum&, const CyclicSum&, const CyclicSum&, const Matrix&,
                                         const Matrix&);
  Homomorphism iota_, pi_;
};

/// Throws ValidationError naming the failed position ("iota", "pi", or "B") with a witness element.
ShortExactSequence validate_ses(const CyclicSum& A, const CyclicSum& B, const CyclicSum& C, const Matrix& iota,
                                const Matrix& pi);

/// 0 -> Z/m -xm-> Z/m^2 -> Z/m -> 0
ShortExactSequence bockstein_sequence(long m);
/// 0 -> Z -xm-> Z -> Z/m -> 0
ShortExactSequence integral_bockstein_sequence(long m);
/// 0 -> A -> A + C -> C -> 0 (A block first).
ShortExactSequence split_sequence(const CyclicSum& A, const CyclicSum& C);

/// The degreewise exact sequence 0 -> C^*(X,A) -> C^*(X,B) -> C^*(X,C) -> 0 of Čech
/// complexes, all built to the same max_degree.
class CechSequence {
 public:
  /// max_degree < 0 means dim X + 1, so connecting images out of the top degree still have classes.
  CechSequence(const SimplicialComplex& X, ShortExactSequence S, int max_degree = -1);

  const ShortExactSequence& ses() const noexcept { return ses_; }
  int max_degree() const noexcept { return sub_->max_degree(); }
  const ComplexPtr& sub() const noexcept { return sub_; }
  const ComplexPtr& middle() const noexcept { return middle_; }
  const ComplexPtr& quotient() const noexcept { return quotient_; }

  Cochain include(const Cochain& a) const;
  Cochain project(const Cochain& b) const;
  /// Simplexwise canonical section: each generator of C is lifted once by solve, then extended linearly.
  Cochain lift(const Cochain& c) const;
  /// Simplexwise preimage under iota; VerificationError when b is not in the image.
  Cochain pull_back(const Cochain& b) const;

  /// δ: H^p(X, C) -> H^{p+1}(X, A) at cochain level, with the canonical lift.
  Cochain connecting(const Cochain& c) const;
  /// Same construction from a caller-chosen lift (pi(lifted) must equal c).
  Cochain connecting_from_lift(const Cochain& c, const Cochain& lifted) const;

 private:
  Cochain map_blocks(const Cochain& x, const ComplexPtr& into, const Homomorphism& h) const;

  ShortExactSequence ses_;
  ComplexPtr sub_, middle_, quotient_;
  std::vector<Vector> section_;  // lift of each generator of C
  HomSolver iota_solver_;
};

/// Convenience form: c lives in any Čech complex on X with coefficients S.C(); the result
/// lives in the A-complex of a fresh CechSequence.
Cochain connecting(const SimplicialComplex& X, const ShortExactSequence& S, const Cochain& c);

struct LesTerm {
  int degree;
  char slot;  // 'A', 'B' or 'C'
  FgAbGroup group;
  std::string label() const { return "H" + std::to_string(degree) + "(" + slot + ")"; }
};

struct LesPosition {
  std::size_t term;  // exactness at terms[term]; term 0 means injectivity of maps[0]
  bool exact = true;
  std::optional<GroupElement> witness;
  std::string reason;
};

struct LongExactSequence {
  std::vector<LesTerm> terms;       // H^0(A), H^0(B), H^0(C), H^1(A), ..., H^max(C), H^{max+1}(A)
  std::vector<Homomorphism> maps;   // maps[i] : terms[i] -> terms[i+1]
  std::vector<LesPosition> positions;

  bool exact() const;
};

/// Homomorphism H^p(from) -> H^q(to) induced by a cochain-level map.
Homomorphism induced_map(const ComplexPtr& from, int p, const ComplexPtr& to, int q,
                         const std::function<Cochain(const Cochain&)>& f);

LongExactSequence long_exact_sequence(const CechSequence& family, int max_degree);
LongExactSequence long_exact_sequence(const SimplicialComplex& X, const ShortExactSequence& S, int max_degree);

}  // namespace cech
