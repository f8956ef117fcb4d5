#include "cech/tower.hpp"

#include "cech/errors.hpp"

namespace cech {

namespace {

// Same Čech layout on the same nerve, so the values carry over verbatim.
Cochain rehome(const Cochain& c, const ComplexPtr& into) { return Cochain(into, c.degree(), c.values()); }

}  // namespace

TowerSpec::TowerSpec(SimplicialComplex X, const Cochain& c2, std::vector<ShortExactSequence> sequences)
    : X_(std::move(X)), c2_(c2), sequences_(std::move(sequences)) {
  const auto& cells = c2_.complex()->cells();
  if (!cells || !cells->nerve || !(*cells->nerve == X_))
    throw ValidationError("cochain is not a Čech cochain on the given complex", "c2");
  if (c2_.degree() != 2) throw ValidationError("expected degree 2, got " + std::to_string(c2_.degree()), "c2");
  if (!sequences_.empty() && !(sequences_[0].C() == cells->coefficients))
    throw ValidationError("C-term " + sequences_[0].C().to_string() + " differs from the coefficients " +
                              cells->coefficients.to_string() + " of c2",
                          "sequences[0]");
  for (std::size_t k = 1; k < sequences_.size(); ++k)
    if (!(sequences_[k].C() == sequences_[k - 1].A()))
      throw ValidationError("C-term " + sequences_[k].C().to_string() + " differs from the previous A-term " +
                                sequences_[k - 1].A().to_string(),
                            "sequences[" + std::to_string(k) + "]");
  if (c2_.complex()->max_degree() >= 2) {
    if (auto bad = cocycle_violation(c2_)) throw ValidationError("not a cocycle: δc is nonzero on " + *bad, "c2");
  } else {
    auto padded = cech_complex(X_, cells->coefficients, 2);
    if (auto bad = cocycle_violation(rehome(c2_, padded)))
      throw ValidationError("not a cocycle: δc is nonzero on " + *bad, "c2");
  }
}

std::vector<CyclicSum> TowerSpec::bands() const {
  std::vector<CyclicSum> out{c2_.complex()->cells()->coefficients};
  for (const auto& s : sequences_) out.push_back(s.A());
  return out;
}

TowerClasses tower_classes(const TowerSpec& spec) {
  const int top = static_cast<int>(spec.sequences().size()) + 2;
  TowerClasses out{spec.complex(), spec.bands(), {}};

  Cochain current = rehome(spec.c2(), cech_complex(spec.complex(), out.bands[0], top));
  out.stages.push_back({2, out.bands[0], class_of(current)});
  for (std::size_t k = 0; k < spec.sequences().size(); ++k) {
    CechSequence family(spec.complex(), spec.sequences()[k], top);
    current = family.connecting(rehome(current, family.quotient()));
    out.stages.push_back({current.degree(), out.bands[k + 1], class_of(current)});
  }
  return out;
}

std::optional<int> TowerReport::trivial_from() const {
  std::optional<int> from;
  for (auto it = classes.stages.rbegin(); it != classes.stages.rend() && it->cls.is_zero(); ++it) from = it->degree;
  return from;
}

TowerReport verify_tower(const TowerSpec& spec) {
  TowerReport report{tower_classes(spec), {}};
  const auto& stages = report.classes.stages;
  for (std::size_t k = 0; k < stages.size(); ++k) {
    const auto& st = stages[k];
    const std::string tag = "c" + std::to_string(st.degree);
    auto bad = cocycle_violation(*st.cls.representative);
    report.checks.push_back({tag + " is a cocycle", !bad, bad ? "δ" + tag + " is nonzero on " + *bad : ""});
    const bool shape = st.degree == static_cast<int>(k) + 2 &&
                       st.cls.representative->complex()->cells()->coefficients == report.classes.bands[k];
    report.checks.push_back({tag + " degree and band", shape, shape ? "" : "stage does not match the band chain"});
  }
  for (std::size_t k = 0; k < stages.size(); ++k) {
    if (!stages[k].cls.is_zero()) continue;
    bool propagates = true;
    std::string detail;
    for (std::size_t j = k + 1; j < stages.size(); ++j)
      if (!stages[j].cls.is_zero()) {
        propagates = false;
        detail = "[c" + std::to_string(stages[j].degree) + "] is nonzero";
        break;
      }
    report.checks.push_back({"vanishing propagates from c" + std::to_string(stages[k].degree), propagates, detail});
  }
  return report;
}

std::optional<int> compare_towers(const TowerClasses& a, const TowerClasses& b) {
  if (!(a.X == b.X)) throw ValidationError("towers live over different complexes");
  if (a.bands != b.bands) throw ValidationError("towers have different band chains");
  for (std::size_t k = 0; k < a.stages.size(); ++k)
    if (!a.stages[k].cls.same_class(b.stages[k].cls)) return a.stages[k].degree;
  return std::nullopt;
}

}  // namespace cech
