#include "cech/exactseq.hpp"

#include <algorithm>

#include "cech/errors.hpp"

namespace cech {

namespace {

std::string element_string(const Vector& v) { return to_string(std::span<const Integer>(v)); }

// Block-diagonal copy of h, one block per cell.
Homomorphism blockwise(const Homomorphism& h, std::size_t cells) {
  const std::size_t r = h.target().size(), c = h.source().size();
  Matrix m(cells * r, cells * c);
  for (std::size_t t = 0; t < cells; ++t)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(t * r + i, t * c + j) = h.matrix()(i, j);
  return Homomorphism(CyclicSum::power(h.source(), cells), CyclicSum::power(h.target(), cells), std::move(m));
}

}  // namespace

ShortExactSequence validate_ses(const CyclicSum& A, const CyclicSum& B, const CyclicSum& C, const Matrix& iota,
                                const Matrix& pi) {
  Homomorphism i, p;
  try {
    i = Homomorphism(A, B, iota);
  } catch (const ValidationError& e) {
    throw e.at("iota");
  }
  try {
    p = Homomorphism(B, C, pi);
  } catch (const ValidationError& e) {
    throw e.at("pi");
  }

  auto injective = is_exact_at(Homomorphism::zero(CyclicSum(), A), i);
  if (!injective.exact)
    throw ValidationError("not injective: nonzero element " + element_string(injective.witness->coords()) +
                              " of A maps to 0",
                          "iota");

  HomSolver onto(p);
  for (std::size_t j = 0; j < C.size(); ++j) {
    Vector e = C.normalized(unit_vector(C.size(), j));
    if (!onto.solve(e))
      throw ValidationError("not surjective: " + element_string(e) + " of C has no preimage", "pi");
  }

  auto middle = is_exact_at(i, p);
  if (!middle.exact)
    throw ValidationError("not exact at B: " + element_string(middle.witness->coords()) + " " + middle.reason, "B");
  return ShortExactSequence(std::move(i), std::move(p));
}

ShortExactSequence bockstein_sequence(long m) {
  const CyclicSum Zm({Integer(m)}), Zm2({Integer(m) * m});
  return validate_ses(Zm, Zm2, Zm, Matrix{{m}}, Matrix{{1}});
}

ShortExactSequence integral_bockstein_sequence(long m) {
  const CyclicSum Z({Integer(0)});
  return validate_ses(Z, Z, CyclicSum({Integer(m)}), Matrix{{m}}, Matrix{{1}});
}

ShortExactSequence split_sequence(const CyclicSum& A, const CyclicSum& C) {
  const std::size_t a = A.size(), c = C.size();
  Matrix iota(a + c, a), pi(c, a + c);
  for (std::size_t k = 0; k < a; ++k) iota(k, k) = 1;
  for (std::size_t k = 0; k < c; ++k) pi(k, a + k) = 1;
  return validate_ses(A, CyclicSum::direct_sum({A, C}), C, iota, pi);
}

CechSequence::CechSequence(const SimplicialComplex& X, ShortExactSequence S, int max_degree)
    : ses_(std::move(S)), iota_solver_(ses_.iota()) {
  if (max_degree < 0) max_degree = X.dimension() + 1;
  sub_ = cech_complex(X, ses_.A(), max_degree);
  middle_ = cech_complex(X, ses_.B(), max_degree);
  quotient_ = cech_complex(X, ses_.C(), max_degree);

  HomSolver onto(ses_.pi());
  for (std::size_t j = 0; j < ses_.C().size(); ++j) {
    auto s = onto.solve(ses_.C().normalized(unit_vector(ses_.C().size(), j)));
    if (!s) throw VerificationError("pi is not surjective on generator " + std::to_string(j));
    section_.push_back(std::move(*s));
  }

  // Degreewise exactness of the cochain groups.
  for (int p = 0; p <= std::min(max_degree + 1, X.dimension()); ++p) {
    const std::size_t cells = X.count(p);
    Homomorphism i = blockwise(ses_.iota(), cells), q = blockwise(ses_.pi(), cells);
    if (!is_exact_at(Homomorphism::zero(CyclicSum(), i.source()), i).exact ||
        !is_exact_at(i, q).exact || !is_exact_at(q, Homomorphism::zero(q.target(), CyclicSum())).exact)
      throw VerificationError("cochain sequence is not exact in degree " + std::to_string(p));
  }
}

Cochain CechSequence::map_blocks(const Cochain& x, const ComplexPtr& into, const Homomorphism& h) const {
  const std::size_t gs = h.source().size(), gt = h.target().size();
  const std::size_t cells = gs == 0 ? x.complex()->cells()->labels[static_cast<std::size_t>(x.degree())].size()
                                    : x.values().size() / gs;
  Vector out(cells * gt);
  for (std::size_t t = 0; t < cells; ++t) {
    Vector y = h.apply(std::span<const Integer>(x.values()).subspan(t * gs, gs));
    std::copy(y.begin(), y.end(), out.begin() + static_cast<std::ptrdiff_t>(t * gt));
  }
  return Cochain(into, x.degree(), std::move(out));
}

Cochain CechSequence::include(const Cochain& a) const {
  if (a.complex() != sub_) throw ValidationError("cochain does not belong to the A-complex");
  return map_blocks(a, middle_, ses_.iota());
}

Cochain CechSequence::project(const Cochain& b) const {
  if (b.complex() != middle_) throw ValidationError("cochain does not belong to the B-complex");
  return map_blocks(b, quotient_, ses_.pi());
}

Cochain CechSequence::lift(const Cochain& c) const {
  if (c.complex() != quotient_) throw ValidationError("cochain does not belong to the C-complex");
  const std::size_t gc = ses_.C().size(), gb = ses_.B().size();
  const std::size_t cells = quotient_->cells()->labels[static_cast<std::size_t>(c.degree())].size();
  Vector out(cells * gb);
  for (std::size_t t = 0; t < cells; ++t)
    for (std::size_t j = 0; j < gc; ++j) {
      const Integer& coeff = c.values()[t * gc + j];
      if (sgn(coeff) == 0) continue;
      for (std::size_t k = 0; k < gb; ++k) out[t * gb + k] += coeff * section_[j][k];
    }
  return Cochain(middle_, c.degree(), std::move(out));
}

Cochain CechSequence::pull_back(const Cochain& b) const {
  if (b.complex() != middle_) throw ValidationError("cochain does not belong to the B-complex");
  const std::size_t ga = ses_.A().size(), gb = ses_.B().size();
  const std::size_t cells = middle_->cells()->labels[static_cast<std::size_t>(b.degree())].size();
  Vector out(cells * ga);
  for (std::size_t t = 0; t < cells; ++t) {
    auto a = iota_solver_.solve(std::span<const Integer>(b.values()).subspan(t * gb, gb));
    if (!a)
      throw VerificationError("value on simplex [" + middle_->cells()->labels[static_cast<std::size_t>(b.degree())][t] +
                              "] is not in the image of iota");
    std::copy(a->begin(), a->end(), out.begin() + static_cast<std::ptrdiff_t>(t * ga));
  }
  return Cochain(sub_, b.degree(), std::move(out));
}

Cochain CechSequence::connecting(const Cochain& c) const { return connecting_from_lift(c, lift(c)); }

Cochain CechSequence::connecting_from_lift(const Cochain& c, const Cochain& lifted) const {
  if (c.complex() != quotient_) throw ValidationError("cochain does not belong to the C-complex");
  if (c.degree() >= max_degree())
    throw ValidationError("degree " + std::to_string(c.degree()) + " has no connecting map below max_degree " +
                          std::to_string(max_degree()));
  if (auto bad = cocycle_violation(c)) throw ValidationError("not a cocycle: δc is nonzero on " + *bad);
  if (!(project(lifted) == c)) throw ValidationError("pi(lift) differs from the cochain");
  Cochain db = coboundary(lifted);
  if (!is_zero(project(db).values()))
    throw VerificationError("δ(lift) does not vanish under pi");
  return pull_back(db);
}

Cochain connecting(const SimplicialComplex& X, const ShortExactSequence& S, const Cochain& c) {
  const auto& cells = c.complex()->cells();
  if (!cells || !cells->nerve || !(*cells->nerve == X)) throw ValidationError("cochain is not a Čech cochain on X");
  if (!(cells->coefficients == S.C())) throw ValidationError("cochain coefficients differ from C");
  CechSequence family(X, S, std::max(X.dimension(), c.degree() + 1));
  return family.connecting(Cochain(family.quotient(), c.degree(), c.values()));
}

bool LongExactSequence::exact() const {
  return std::all_of(positions.begin(), positions.end(), [](const LesPosition& p) { return p.exact; });
}

Homomorphism induced_map(const ComplexPtr& from, int p, const ComplexPtr& to, int q,
                         const std::function<Cochain(const Cochain&)>& f) {
  auto source = from->cohomology(p);
  auto target = to->cohomology(q);
  const CyclicSum src = source->group(), dst = target->group();
  Matrix m(dst.size(), src.size());
  for (std::size_t k = 0; k < src.size(); ++k) {
    Cochain image = f(Cochain(from, p, source->representatives()[k]));
    auto coords = target->project(image.values());
    if (!coords) throw VerificationError("induced map sends a cocycle to a non-cocycle");
    for (std::size_t i = 0; i < dst.size(); ++i) m(i, k) = (*coords)[i];
  }
  try {
    return Homomorphism(src, dst, std::move(m));
  } catch (const ValidationError& e) {
    throw VerificationError(std::string("induced map is not well defined: ") + e.what());
  }
}

LongExactSequence long_exact_sequence(const CechSequence& family, int max_degree) {
  if (max_degree < 0) throw ValidationError("max_degree must be non-negative");
  if (max_degree + 1 > family.max_degree())
    throw ValidationError("the Čech sequence must reach degree " + std::to_string(max_degree + 1));
  LongExactSequence les;
  const ComplexPtr* slots[3] = {&family.sub(), &family.middle(), &family.quotient()};
  for (int p = 0; p <= max_degree; ++p)
    for (int s = 0; s < 3; ++s) les.terms.push_back({p, static_cast<char>('A' + s), (*slots[s])->cohomology(p)->group()});
  les.terms.push_back({max_degree + 1, 'A', family.sub()->cohomology(max_degree + 1)->group()});

  for (int p = 0; p <= max_degree; ++p) {
    les.maps.push_back(induced_map(family.sub(), p, family.middle(), p,
                                   [&](const Cochain& a) { return family.include(a); }));
    les.maps.push_back(induced_map(family.middle(), p, family.quotient(), p,
                                   [&](const Cochain& b) { return family.project(b); }));
    les.maps.push_back(induced_map(family.quotient(), p, family.sub(), p + 1,
                                   [&](const Cochain& c) { return family.connecting(c); }));
  }

  for (std::size_t i = 0; i + 1 < les.terms.size(); ++i) {
    Homomorphism before = i == 0 ? Homomorphism::zero(CyclicSum(), les.maps[0].source()) : les.maps[i - 1];
    auto report = is_exact_at(before, les.maps[i]);
    les.positions.push_back({i, report.exact, report.witness, report.reason});
  }
  return les;
}

LongExactSequence long_exact_sequence(const SimplicialComplex& X, const ShortExactSequence& S, int max_degree) {
  return long_exact_sequence(CechSequence(X, S, max_degree + 1), max_degree);
}

}  // namespace cech
