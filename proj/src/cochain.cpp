#include "cech/cochain.hpp"

#include <algorithm>
#include <set>

#include "cech/errors.hpp"

namespace cech {

std::string simplex_key(const Simplex& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

// ---------------------------------------------------------------- SimplicialComplex

namespace {
constexpr std::size_t kMaxFacetSize = 20;
const std::vector<Simplex> kNoSimplices;
}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertex_count, const std::vector<Simplex>& facets) {
  if (vertex_count == 0) throw ValidationError("vertex_count must be positive", "vertex_count");
  std::vector<std::set<Simplex>> levels(1);
  for (std::size_t v = 0; v < vertex_count; ++v) levels[0].insert({v});

  for (std::size_t f = 0; f < facets.size(); ++f) {
    const std::string path = "facets[" + std::to_string(f) + "]";
    Simplex s = facets[f];
    if (s.empty()) throw ValidationError("empty facet", path);
    for (std::size_t v : s)
      if (v >= vertex_count)
        throw ValidationError("vertex " + std::to_string(v) + " out of range (vertex_count " +
                                  std::to_string(vertex_count) + ")",
                              path);
    std::sort(s.begin(), s.end());
    if (auto it = std::adjacent_find(s.begin(), s.end()); it != s.end())
      throw ValidationError("repeated vertex " + std::to_string(*it), path);
    if (s.size() > kMaxFacetSize)
      throw BudgetExceeded("facet with " + std::to_string(s.size()) + " vertices exceeds the closure limit of " +
                           std::to_string(kMaxFacetSize));
    if (levels.size() < s.size()) levels.resize(s.size());
    const std::size_t k = s.size();
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::uint32_t{1} << i)) face.push_back(s[i]);
      levels[face.size() - 1].insert(std::move(face));
    }
  }

  SimplicialComplex X;
  X.vertex_count_ = vertex_count;
  for (auto& level : levels) {
    X.simplices_.emplace_back(level.begin(), level.end());
    auto& idx = X.index_.emplace_back();
    for (std::size_t i = 0; i < X.simplices_.back().size(); ++i) idx.emplace(X.simplices_.back()[i], i);
  }
  return X;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int p) const {
  if (p < 0 || p > dimension()) return kNoSimplices;
  return simplices_[static_cast<std::size_t>(p)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > simplices_.size()) return std::nullopt;
  const auto& idx = index_[s.size() - 1];
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (int p = 0; p <= dimension(); ++p) {
    std::set<Simplex> covered;
    for (const auto& t : simplices(p + 1))
      for (std::size_t j = 0; j < t.size(); ++j) {
        Simplex face = t;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
        covered.insert(std::move(face));
      }
    for (const auto& s : simplices(p))
      if (!covered.count(s)) out.push_back(s);
  }
  return out;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (int p = 0; p <= dimension(); ++p) chi += (p % 2 == 0 ? 1 : -1) * static_cast<long>(count(p));
  return chi;
}

SimplicialComplex suspension(const SimplicialComplex& X) {
  const std::size_t a = X.vertex_count(), b = a + 1;
  std::vector<Simplex> facets;
  for (const auto& f : X.facets()) {
    Simplex fa = f, fb = f;
    fa.push_back(a);
    fb.push_back(b);
    facets.push_back(std::move(fa));
    facets.push_back(std::move(fb));
  }
  return SimplicialComplex::from_facets(X.vertex_count() + 2, facets);
}

// ---------------------------------------------------------------- CochainComplex

CochainComplex::CochainComplex(std::vector<CyclicSum> groups, std::vector<Matrix> differentials,
                               std::optional<CellStructure> cells)
    : groups_(std::move(groups)), cells_(std::move(cells)) {
  if (differentials.empty() || groups_.size() != differentials.size() + 1)
    throw ValidationError("a cochain complex needs n+1 groups for n >= 1 differentials");
  for (std::size_t p = 0; p < differentials.size(); ++p) {
    try {
      differentials_.emplace_back(groups_[p], groups_[p + 1], std::move(differentials[p]));
    } catch (const ValidationError& e) {
      throw e.at("differentials[" + std::to_string(p) + "]");
    }
  }
  for (std::size_t p = 0; p + 1 < differentials_.size(); ++p) {
    Matrix dd = differentials_[p + 1].matrix() * differentials_[p].matrix();
    for (std::size_t j = 0; j < dd.cols(); ++j)
      if (!groups_[p + 2].is_zero(dd.column(j)))
        throw ValidationError("d" + std::to_string(p + 1) + " o d" + std::to_string(p) + " is nonzero on generator " +
                                  std::to_string(j),
                              "differentials[" + std::to_string(p + 1) + "]");
  }
  if (cells_) {
    const std::size_t g = cells_->coefficients.size();
    if (cells_->labels.size() != groups_.size())
      throw ValidationError("cell labels must cover every degree");
    for (std::size_t p = 0; p < groups_.size(); ++p)
      if (cells_->labels[p].size() * g != groups_[p].size())
        throw ValidationError("cell count disagrees with group size in degree " + std::to_string(p));
  }
}

const CyclicSum& CochainComplex::group(int p) const {
  if (p < 0 || p >= static_cast<int>(groups_.size()))
    throw ValidationError("degree " + std::to_string(p) + " outside 0.." + std::to_string(groups_.size() - 1));
  return groups_[static_cast<std::size_t>(p)];
}

const Homomorphism& CochainComplex::differential(int p) const {
  if (p < 0 || p > max_degree())
    throw ValidationError("no differential in degree " + std::to_string(p) + " (max_degree " +
                          std::to_string(max_degree()) + ")");
  return differentials_[static_cast<std::size_t>(p)];
}

std::string CochainComplex::generator_label(int p, std::size_t generator) const {
  if (!cells_) return "generator " + std::to_string(generator) + " of C^" + std::to_string(p);
  const std::size_t g = cells_->coefficients.size();
  const std::size_t cell = generator / g;
  std::string out = (cells_->nerve ? "simplex " : "cell ") + std::string("[") +
                    cells_->labels[static_cast<std::size_t>(p)][cell] + "]";
  if (g > 1) out += " component " + std::to_string(generator % g);
  return out;
}

std::shared_ptr<const Cohomology> CochainComplex::cohomology(int p) const {
  if (p < 0 || p > max_degree())
    throw ValidationError("cohomology degree " + std::to_string(p) + " outside 0.." + std::to_string(max_degree()));
  std::lock_guard lock(cache_mutex_);
  if (auto it = cache_.find(p); it != cache_.end()) return it->second;

  const CyclicSum& Cp = group(p);
  Lattice cocycles = Lattice::preimage(differential(p).matrix(), group(p + 1).relations());
  Lattice boundaries = Cp.relations();
  if (p > 0) boundaries = boundaries + Lattice::full(group(p - 1).size()).image(differential(p - 1).matrix());
  auto h = std::make_shared<const Cohomology>(p, Subquotient(std::move(cocycles), std::move(boundaries)));
  cache_.emplace(p, h);
  return h;
}

// ---------------------------------------------------------------- Cochain

Cochain::Cochain(ComplexPtr complex, int degree, Vector values)
    : complex_(std::move(complex)), degree_(degree), values_(std::move(values)) {
  if (!complex_) throw ValidationError("cochain without a complex");
  complex_->group(degree_).normalize(values_);
}

Cochain Cochain::zero(ComplexPtr complex, int degree) {
  const std::size_t n = complex->group(degree).size();
  return Cochain(std::move(complex), degree, Vector(n));
}

Vector Cochain::value_at(std::size_t cell) const {
  if (!complex_->cells()) throw ValidationError("complex has no cell structure");
  const std::size_t g = complex_->cells()->coefficients.size();
  return Vector(values_.begin() + static_cast<std::ptrdiff_t>(cell * g),
                values_.begin() + static_cast<std::ptrdiff_t>((cell + 1) * g));
}

Cochain Cochain::operator+(const Cochain& rhs) const {
  if (complex_ != rhs.complex_ || degree_ != rhs.degree_) throw ValidationError("adding incompatible cochains");
  Vector v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] + rhs.values_[i];
  return Cochain(complex_, degree_, std::move(v));
}

Cochain Cochain::operator-() const {
  Vector v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -values_[i];
  return Cochain(complex_, degree_, std::move(v));
}

Cochain Cochain::operator-(const Cochain& rhs) const { return *this + (-rhs); }

Cochain coboundary(const Cochain& c) {
  const auto& d = c.complex()->differential(c.degree());
  return Cochain(c.complex(), c.degree() + 1, d.apply(c.values()));
}

std::optional<std::string> cocycle_violation(const Cochain& c) {
  if (c.degree() > c.complex()->max_degree()) return std::nullopt;  // top group: d = 0
  Cochain dc = coboundary(c);
  for (std::size_t i = 0; i < dc.values().size(); ++i)
    if (sgn(dc.values()[i]) != 0)
      return "coboundary is " + dc.values()[i].get_str() + " on " + c.complex()->generator_label(dc.degree(), i);
  return std::nullopt;
}

CohomologyGroup cohomology(const ComplexPtr& complex, int p) {
  CohomologyGroup out;
  out.projection = complex->cohomology(p);
  out.group = out.projection->group();
  for (const auto& rep : out.projection->representatives()) out.basis.emplace_back(complex, p, rep);
  return out;
}

CohomologyClass class_of(const Cochain& c) {
  if (auto violation = cocycle_violation(c)) throw ValidationError("not a cocycle: " + *violation);
  auto h = c.complex()->cohomology(c.degree());
  auto coords = h->project(c.values());
  if (!coords) throw VerificationError("cocycle failed to project into H^" + std::to_string(c.degree()));
  return CohomologyClass{c.degree(), h->group(), std::move(*coords), c};
}

// ---------------------------------------------------------------- builders

ComplexPtr cech_complex(const SimplicialComplex& X, const CyclicSum& L, int max_degree) {
  if (max_degree < 0) max_degree = X.dimension();
  const std::size_t g = L.size();
  CellStructure cells{L, {}, std::make_shared<const SimplicialComplex>(X)};
  std::vector<CyclicSum> groups;
  for (int p = 0; p <= max_degree + 1; ++p) {
    groups.push_back(CyclicSum::power(L, X.count(p)));
    auto& labels = cells.labels.emplace_back();
    for (const auto& s : X.simplices(p)) labels.push_back(simplex_key(s));
  }

  std::vector<Matrix> differentials;
  for (int p = 0; p <= max_degree; ++p) {
    Matrix d(groups[static_cast<std::size_t>(p) + 1].size(), groups[static_cast<std::size_t>(p)].size());
    const auto& upper = X.simplices(p + 1);
    for (std::size_t t = 0; t < upper.size(); ++t) {
      const Simplex& tau = upper[t];
      for (std::size_t j = 0; j < tau.size(); ++j) {
        Simplex face = tau;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
        const std::size_t f = *X.index_of(face);
        const long sign = j % 2 == 0 ? 1 : -1;
        for (std::size_t k = 0; k < g; ++k) d(t * g + k, f * g + k) += sign;
      }
    }
    differentials.push_back(std::move(d));
  }
  try {
    return std::make_shared<const CochainComplex>(std::move(groups), std::move(differentials), std::move(cells));
  } catch (const ValidationError& e) {
    throw VerificationError(std::string("generated Čech complex is inconsistent: ") + e.what());
  }
}

ComplexPtr bar_complex(const GroupAction& action, int max_degree, std::size_t budget) {
  if (max_degree < 0) throw ValidationError("max_degree must be non-negative");
  const FiniteGroup& H = action.group();
  const CyclicSum& M = action.module();
  const std::size_t m = H.order(), g = M.size();

  std::vector<std::size_t> cells(static_cast<std::size_t>(max_degree) + 2, 1);
  for (std::size_t p = 1; p < cells.size(); ++p) {
    cells[p] = cells[p - 1] * m;
    if (cells[p] * g > budget)
      throw BudgetExceeded("bar complex degree " + std::to_string(p) + " needs " + std::to_string(cells[p] * g) +
                           " generators, budget is " + std::to_string(budget));
  }

  // Tuples (h_1..h_p) are indexed in mixed radix with h_1 most significant.
  auto decode = [m](std::size_t index, std::size_t p) {
    std::vector<std::size_t> t(p);
    for (std::size_t i = p; i-- > 0;) {
      t[i] = index % m;
      index /= m;
    }
    return t;
  };
  auto encode = [m](const std::vector<std::size_t>& t) {
    std::size_t index = 0;
    for (std::size_t h : t) index = index * m + h;
    return index;
  };

  CellStructure structure{M, {}, nullptr};
  std::vector<CyclicSum> groups;
  for (std::size_t p = 0; p < cells.size(); ++p) {
    groups.push_back(CyclicSum::power(M, cells[p]));
    auto& labels = structure.labels.emplace_back();
    for (std::size_t c = 0; c < cells[p]; ++c) labels.push_back(simplex_key(decode(c, p)));
  }

  std::vector<Matrix> differentials;
  for (std::size_t p = 0; p <= static_cast<std::size_t>(max_degree); ++p) {
    Matrix d(cells[p + 1] * g, cells[p] * g);
    for (std::size_t c = 0; c < cells[p + 1]; ++c) {
      const auto h = decode(c, p + 1);
      auto add_block = [&](std::size_t source_cell, const Matrix& block, long sign) {
        for (std::size_t i = 0; i < g; ++i)
          for (std::size_t j = 0; j < g; ++j)
            if (sgn(block(i, j)) != 0) d(c * g + i, source_cell * g + j) += sign * block(i, j);
      };
      // h_1 · f(h_2, ..., h_{p+1})
      add_block(encode({h.begin() + 1, h.end()}), action(h[0]).matrix(), 1);
      const Matrix I = Matrix::identity(g);
      for (std::size_t i = 0; i < p; ++i) {
        std::vector<std::size_t> merged;
        for (std::size_t k = 0; k < i; ++k) merged.push_back(h[k]);
        merged.push_back(H.multiply(h[i], h[i + 1]));
        for (std::size_t k = i + 2; k <= p; ++k) merged.push_back(h[k]);
        add_block(encode(merged), I, (i + 1) % 2 == 0 ? 1 : -1);
      }
      add_block(encode({h.begin(), h.end() - 1}), I, (p + 1) % 2 == 0 ? 1 : -1);
    }
    differentials.push_back(std::move(d));
  }
  try {
    return std::make_shared<const CochainComplex>(std::move(groups), std::move(differentials), std::move(structure));
  } catch (const ValidationError& e) {
    throw VerificationError(std::string("generated bar complex is inconsistent: ") + e.what());
  }
}

}  // namespace cech
