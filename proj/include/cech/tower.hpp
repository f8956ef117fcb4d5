#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cech/cochain.hpp"
#include "cech/exactseq.hpp"
#include "cech/report.hpp"

namespace cech {

/// Base 2-cocycle c2 with values in L_1 and the band chain S_1, ..., S_n with
/// S_k : 0 -> L_{k+1} -> L'_{k+1} -> L_k -> 0.
class TowerSpec {
 public:
  /// Throws ValidationError ("c2" or "sequences[k]" paths) on chain incompatibility or a non-cocycle c2.
  TowerSpec(SimplicialComplex X, const Cochain& c2, std::vector<ShortExactSequence> sequences);

  const SimplicialComplex& complex() const noexcept { return X_; }
  const Cochain& c2() const noexcept { return c2_; }
  const std::vector<ShortExactSequence>& sequences() const noexcept { return sequences_; }
  /// L_1, ..., L_{n+1}
  std::vector<CyclicSum> bands() const;

 private:
  SimplicialComplex X_;
  Cochain c2_;
  std::vector<ShortExactSequence> sequences_;
};

struct TowerStage {
  int degree;
  CyclicSum band;
  CohomologyClass cls;  // cls.representative is the produced cocycle
};

struct TowerClasses {
  SimplicialComplex X;
  std::vector<CyclicSum> bands;
  std::vector<TowerStage> stages;  // degrees 2, 3, ..., n+2
};

TowerClasses tower_classes(const TowerSpec& spec);

struct TowerReport {
  TowerClasses classes;
  std::vector<Check> checks;
  bool ok() const { return all_passed(checks); }
  /// Degree from which every class vanishes (computational triviality), if any.
  std::optional<int> trivial_from() const;
};

TowerReport verify_tower(const TowerSpec& spec);

/// nullopt when every stage agrees, otherwise the degree of the first differing stage.
/// Throws ValidationError when the towers live over different complexes or band chains.
std::optional<int> compare_towers(const TowerClasses& a, const TowerClasses& b);

}  // namespace cech
