#include "cech/liftgerbe.hpp"

#include <algorithm>
#include <set>

#include "cech/errors.hpp"

namespace cech {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

}  // namespace

CentralExtension validate_extension(FiniteGroup G, std::vector<std::size_t> L, std::vector<std::size_t> pi,
                                    FiniteGroup Q) {
  const std::size_t m = G.order();
  std::set<std::size_t> members;
  for (std::size_t k = 0; k < L.size(); ++k) {
    if (L[k] >= m) throw ValidationError("element " + idx(L[k]) + " is not in G", "L_elements[" + idx(k) + "]");
    if (!members.insert(L[k]).second)
      throw ValidationError("element " + idx(L[k]) + " listed twice", "L_elements[" + idx(k) + "]");
  }
  if (!members.count(G.identity())) throw ValidationError("does not contain the identity", "L_elements");
  for (std::size_t a : L)
    for (std::size_t b : L)
      if (!members.count(G.multiply(a, b)))
        throw ValidationError("not closed: " + idx(a) + "·" + idx(b) + " = " + idx(G.multiply(a, b)), "L_elements");
  for (std::size_t l : L)
    for (std::size_t g = 0; g < m; ++g)
      if (G.multiply(l, g) != G.multiply(g, l))
        throw ValidationError("not central: " + idx(l) + " does not commute with " + idx(g), "L_elements");

  if (pi.size() != m) throw ValidationError("expected " + idx(m) + " entries, got " + idx(pi.size()), "pi");
  for (std::size_t g = 0; g < m; ++g)
    if (pi[g] >= Q.order()) throw ValidationError("value " + idx(pi[g]) + " is not in Q", "pi[" + idx(g) + "]");
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (pi[G.multiply(a, b)] != Q.multiply(pi[a], pi[b]))
        throw ValidationError("not a homomorphism at (" + idx(a) + ", " + idx(b) + ", " + idx(G.multiply(a, b)) + ")",
                              "pi");
  std::vector<bool> hit(Q.order());
  for (std::size_t g = 0; g < m; ++g) hit[pi[g]] = true;
  for (std::size_t q = 0; q < Q.order(); ++q)
    if (!hit[q]) throw ValidationError("not surjective: " + idx(q) + " has no preimage", "pi");
  for (std::size_t g = 0; g < m; ++g)
    if ((pi[g] == Q.identity()) != (members.count(g) == 1))
      throw ValidationError("kernel differs from L at element " + idx(g), "pi");

  return CentralExtension(std::move(G), std::move(L), std::move(pi), std::move(Q));
}

CentralExtension::CentralExtension(FiniteGroup G, std::vector<std::size_t> L, std::vector<std::size_t> pi,
                                   FiniteGroup Q)
    : G_(std::move(G)), Q_(std::move(Q)), L_elements_(std::move(L)), pi_(std::move(pi)) {
  // L ≅ Z^k / <e_a + e_b - e_{ab}>, with k = |L|.
  const std::size_t k = L_elements_.size();
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t i = 0; i < k; ++i) pos[L_elements_[i]] = i;
  std::vector<Vector> rels;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      Vector r(k);
      r[a] += 1;
      r[b] += 1;
      r[pos[G_.multiply(L_elements_[a], L_elements_[b])]] -= 1;
      rels.push_back(std::move(r));
    }
  Subquotient quotient(Lattice::full(k), Lattice::from_generators(k, Matrix::from_columns(rels, k)));
  L_ = CyclicSum(quotient.group());
  for (std::size_t i = 0; i < k; ++i) {
    Vector c = *quotient.project(unit_vector(k, i));
    to_coords_[L_elements_[i]] = c;
    to_element_[c] = L_elements_[i];
  }

  section_.assign(Q_.order(), G_.order());
  for (std::size_t g = 0; g < G_.order(); ++g)
    if (section_[pi_[g]] == G_.order()) section_[pi_[g]] = g;
}

Vector CentralExtension::coords(std::size_t g) const {
  auto it = to_coords_.find(g);
  if (it == to_coords_.end()) throw ValidationError("element " + idx(g) + " is not in L");
  return it->second;
}

std::size_t CentralExtension::element(std::span<const Integer> c) const {
  auto it = to_element_.find(L_.normalized(Vector(c.begin(), c.end())));
  if (it == to_element_.end()) throw ValidationError("coordinates do not name an element of L");
  return it->second;
}

TransitionCocycle::TransitionCocycle(SimplicialComplex X, FiniteGroup Q, std::vector<std::size_t> values)
    : X_(std::move(X)), Q_(std::move(Q)), values_(std::move(values)) {
  if (values_.size() != X_.count(1))
    throw ValidationError("expected " + idx(X_.count(1)) + " edge values, got " + idx(values_.size()));
  for (std::size_t e = 0; e < values_.size(); ++e)
    if (values_[e] >= Q_.order())
      throw ValidationError("value " + idx(values_[e]) + " is not in Q", simplex_key(X_.simplices(1)[e]));
  if (X_.dimension() < 2) return;
  for (const auto& s : X_.simplices(2)) {
    const std::size_t i = s[0], j = s[1], k = s[2];
    if (Q_.multiply((*this)(i, j), (*this)(j, k)) != (*this)(i, k))
      throw ValidationError("cocycle law fails on triangle [" + simplex_key(s) + "]: g_ij·g_jk != g_ik",
                            simplex_key(s));
  }
}

std::size_t TransitionCocycle::operator()(std::size_t i, std::size_t j) const {
  if (i == j) return Q_.identity();
  auto e = X_.index_of(i < j ? Simplex{i, j} : Simplex{j, i});
  if (!e) throw ValidationError("no edge " + idx(i) + "," + idx(j));
  return i < j ? values_[*e] : Q_.inverse(values_[*e]);
}

LiftingObstruction lifting_obstruction(const TransitionCocycle& t, const CentralExtension& ext,
                                       const std::vector<std::size_t>& section) {
  if (!(t.Q() == ext.Q())) throw ValidationError("transition cocycle and extension have different quotients");
  const FiniteGroup& G = ext.G();
  std::vector<std::size_t> s = section.empty() ? ext.canonical_section() : section;
  if (s.size() != ext.Q().order()) throw ValidationError("section must have one entry per element of Q", "section");
  for (std::size_t q = 0; q < s.size(); ++q)
    if (s[q] >= G.order() || ext.pi()[s[q]] != q)
      throw ValidationError("entry does not lie over " + idx(q), "section[" + idx(q) + "]");

  const SimplicialComplex& X = t.nerve();
  auto C = cech_complex(X, ext.L(), std::max(X.dimension(), 2));
  const std::size_t g = ext.L().size();
  Vector values(C->group(2).size());
  const auto& triangles = X.dimension() >= 2 ? X.simplices(2) : std::vector<Simplex>{};
  for (std::size_t c = 0; c < triangles.size(); ++c) {
    const std::size_t i = triangles[c][0], j = triangles[c][1], k = triangles[c][2];
    const std::size_t defect = G.multiply(G.inverse(s[t(i, k)]), G.multiply(s[t(i, j)], s[t(j, k)]));
    Vector v;
    try {
      v = ext.coords(defect);
    } catch (const ValidationError&) {
      throw VerificationError("lift defect on [" + simplex_key(triangles[c]) + "] is outside L");
    }
    std::copy(v.begin(), v.end(), values.begin() + static_cast<std::ptrdiff_t>(c * g));
  }
  Cochain cochain(C, 2, std::move(values));
  if (auto bad = cocycle_violation(cochain)) throw VerificationError("obstruction is not a cocycle on " + *bad);
  return {cochain, class_of(cochain)};
}

LiftSearch brute_force_lift(const TransitionCocycle& t, const CentralExtension& ext, std::uint64_t budget) {
  const SimplicialComplex& X = t.nerve();
  const FiniteGroup& G = ext.G();
  const auto& L = ext.L_elements();
  const auto& edges = X.simplices(1);

  LiftSearch out;
  out.search_space = 1;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (out.search_space > budget / L.size())
      throw BudgetExceeded("lift search space |L|^" + idx(edges.size()) + " exceeds the budget of " +
                           std::to_string(budget));
    out.search_space *= L.size();
  }

  // Triangles i<j<k become checkable once their last edge (j,k) is assigned.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> closing(edges.size());
  if (X.dimension() >= 2)
    for (const auto& s : X.simplices(2))
      closing[*X.index_of({s[1], s[2]})].push_back({*X.index_of({s[0], s[1]}), *X.index_of({s[0], s[2]})});

  std::vector<std::size_t> lift(edges.size());
  std::vector<std::size_t> base(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) base[e] = ext.canonical_section()[t.values()[e]];

  std::function<bool(std::size_t)> search = [&](std::size_t e) {
    if (e == edges.size()) return true;
    for (std::size_t l : L) {
      ++out.visited;
      lift[e] = G.multiply(base[e], l);
      bool ok = true;
      for (const auto& [ij, ik] : closing[e])
        if (G.multiply(lift[ij], lift[e]) != lift[ik]) {
          ok = false;
          break;
        }
      if (ok && search(e + 1)) return true;
    }
    return false;
  };
  if (search(0)) out.lift = lift;
  return out;
}

}  // namespace cech
