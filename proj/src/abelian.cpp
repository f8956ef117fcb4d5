#include "cech/abelian.hpp"

#include <sstream>

#include "cech/errors.hpp"

namespace cech {

// ---------------------------------------------------------------- FgAbGroup

FgAbGroup::FgAbGroup(std::size_t free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2)
      throw ValidationError("torsion coefficient " + torsion_[i].get_str() + " must be at least 2",
                            "torsion[" + std::to_string(i) + "]");
    if (i > 0 && !mpz_divisible_p(torsion_[i].get_mpz_t(), torsion_[i - 1].get_mpz_t()))
      throw ValidationError("torsion coefficients must form a divisibility chain (" + torsion_[i - 1].get_str() +
                                " does not divide " + torsion_[i].get_str() + ")",
                            "torsion[" + std::to_string(i) + "]");
  }
}

std::optional<Integer> FgAbGroup::order() const {
  if (free_rank_ > 0) return std::nullopt;
  Integer n = 1;
  for (const auto& d : torsion_) n *= d;
  return n;
}

CyclicSum FgAbGroup::layout() const {
  std::vector<Integer> orders(free_rank_, Integer(0));
  orders.insert(orders.end(), torsion_.begin(), torsion_.end());
  return CyclicSum(std::move(orders));
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ == 1) {
    os << "Z";
    first = false;
  } else if (free_rank_ > 1) {
    os << "Z^" << free_rank_;
    first = false;
  }
  // Runs of equal invariant factors print as (Z/d)^k.
  for (std::size_t i = 0; i < torsion_.size();) {
    std::size_t j = i;
    while (j < torsion_.size() && torsion_[j] == torsion_[i]) ++j;
    if (!first) os << " + ";
    first = false;
    if (j - i == 1)
      os << "Z/" << torsion_[i].get_str();
    else
      os << "(Z/" << torsion_[i].get_str() << ")^" << (j - i);
    i = j;
  }
  return os.str();
}

// ---------------------------------------------------------------- CyclicSum

CyclicSum::CyclicSum(std::vector<Integer> orders) : orders_(std::move(orders)) {
  for (std::size_t i = 0; i < orders_.size(); ++i)
    if (sgn(orders_[i]) < 0 || orders_[i] == 1)
      throw ValidationError("cyclic order must be 0 (free) or at least 2, got " + orders_[i].get_str());
}

CyclicSum CyclicSum::power(const CyclicSum& base, std::size_t copies) {
  std::vector<Integer> orders;
  orders.reserve(base.size() * copies);
  for (std::size_t c = 0; c < copies; ++c) orders.insert(orders.end(), base.orders_.begin(), base.orders_.end());
  return CyclicSum(std::move(orders));
}

CyclicSum CyclicSum::direct_sum(const std::vector<CyclicSum>& parts) {
  std::vector<Integer> orders;
  for (const auto& p : parts) orders.insert(orders.end(), p.orders_.begin(), p.orders_.end());
  return CyclicSum(std::move(orders));
}

std::optional<Integer> CyclicSum::cardinality() const {
  Integer n = 1;
  for (const auto& d : orders_) {
    if (sgn(d) == 0) return std::nullopt;
    n *= d;
  }
  return n;
}

void CyclicSum::normalize(Vector& v) const {
  if (v.size() != orders_.size())
    throw ValidationError("element has " + std::to_string(v.size()) + " coordinates, group has " +
                          std::to_string(orders_.size()) + " generators");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(orders_[i]) != 0) v[i] = mod_floor(v[i], orders_[i]);
}

bool CyclicSum::is_zero(std::span<const Integer> v) const {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(orders_[i]) == 0) {
      if (sgn(v[i]) != 0) return false;
    } else if (!mpz_divisible_p(v[i].get_mpz_t(), orders_[i].get_mpz_t())) {
      return false;
    }
  }
  return true;
}

bool CyclicSum::equal(std::span<const Integer> a, std::span<const Integer> b) const {
  Vector diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  return is_zero(diff);
}

Lattice CyclicSum::relations() const {
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    if (sgn(orders_[i]) != 0) {
      Vector c(orders_.size());
      c[i] = orders_[i];
      cols.push_back(std::move(c));
    }
  return Lattice::from_generators(orders_.size(), Matrix::from_columns(cols, orders_.size()));
}

FgAbGroup CyclicSum::invariants() const {
  Matrix D(orders_.size(), orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) D(i, i) = orders_[i];
  SmithForm snf = smith_normal_form(D, {.track_left = false, .track_right = false});
  std::vector<Integer> torsion;
  for (const auto& d : snf.diagonal)
    if (d != 1) torsion.push_back(d);
  return FgAbGroup(orders_.size() - snf.rank(), std::move(torsion));
}

std::string CyclicSum::to_string() const {
  if (orders_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) os << " + ";
    if (sgn(orders_[i]) == 0)
      os << "Z";
    else
      os << "Z/" << orders_[i].get_str();
  }
  return os.str();
}

// ---------------------------------------------------------------- GroupElement

GroupElement::GroupElement(CyclicSum group, Vector coords) : group_(std::move(group)), coords_(std::move(coords)) {
  group_.normalize(coords_);
}

GroupElement GroupElement::operator+(const GroupElement& rhs) const {
  if (!(group_ == rhs.group_)) throw ValidationError("adding elements of different groups");
  Vector v(coords_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coords_[i] + rhs.coords_[i];
  return GroupElement(group_, std::move(v));
}

GroupElement GroupElement::operator-() const {
  Vector v(coords_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coords_[i];
  return GroupElement(group_, std::move(v));
}

GroupElement GroupElement::operator-(const GroupElement& rhs) const { return *this + (-rhs); }

// ---------------------------------------------------------------- Homomorphism

std::optional<HomViolation> hom_validate(const CyclicSum& source, const CyclicSum& target, const Matrix& matrix) {
  if (matrix.rows() != target.size() || matrix.cols() != source.size())
    throw ValidationError("homomorphism matrix is " + std::to_string(matrix.rows()) + "x" +
                          std::to_string(matrix.cols()) + ", expected " + std::to_string(target.size()) + "x" +
                          std::to_string(source.size()) + " (target generators x source generators)");
  for (std::size_t j = 0; j < source.size(); ++j) {
    const Integer& d = source.order(j);
    if (sgn(d) == 0) continue;
    for (std::size_t i = 0; i < target.size(); ++i) {
      Integer v = d * matrix(i, j);
      bool ok = target.is_free(i) ? sgn(v) == 0 : mpz_divisible_p(v.get_mpz_t(), target.order(i).get_mpz_t());
      if (!ok) {
        std::string rel = target.is_free(i) ? std::string("0") : target.order(i).get_str() + "Z";
        return HomViolation{j, "column " + std::to_string(j) + ": " + d.get_str() + " * " + matrix(i, j).get_str() +
                                   " is not in " + rel + " (target generator " + std::to_string(i) +
                                   "), so the map is not well defined"};
      }
    }
  }
  return std::nullopt;
}

Homomorphism::Homomorphism(CyclicSum source, CyclicSum target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (auto v = hom_validate(source_, target_, matrix_)) throw ValidationError(v->message);
  for (std::size_t i = 0; i < target_.size(); ++i)
    if (!target_.is_free(i))
      for (auto& x : matrix_.row(i)) x = mod_floor(x, target_.order(i));
}

Homomorphism Homomorphism::zero(const CyclicSum& source, const CyclicSum& target) {
  return Homomorphism(source, target, Matrix(target.size(), source.size()));
}

Homomorphism Homomorphism::identity(const CyclicSum& group) {
  return Homomorphism(group, group, Matrix::identity(group.size()));
}

GroupElement Homomorphism::operator()(const GroupElement& x) const {
  if (!(x.group() == source_)) throw ValidationError("element is not in the homomorphism's source");
  return GroupElement(target_, matrix_.apply(x.coords()));
}

Homomorphism Homomorphism::after(const Homomorphism& first) const {
  if (!(first.target_ == source_)) throw ValidationError("homomorphisms do not compose");
  return Homomorphism(first.source_, target_, matrix_ * first.matrix_);
}

namespace {

Matrix columns_normalized(const std::vector<Vector>& cols, const CyclicSum& group) {
  std::vector<Vector> normalized;
  normalized.reserve(cols.size());
  for (const auto& c : cols) normalized.push_back(group.normalized(c));
  return Matrix::from_columns(normalized, group.size());
}

Subquotient kernel_subquotient(const Homomorphism& h) {
  return Subquotient(Lattice::preimage(h.matrix(), h.target().relations()), h.source().relations());
}

}  // namespace

HomInvariants hom_invariants(const Homomorphism& h) {
  const CyclicSum& src = h.source();
  const CyclicSum& tgt = h.target();
  const Lattice rel_target = tgt.relations();
  const Lattice image_lattice = Lattice::full(src.size()).image(h.matrix()) + rel_target;

  Subquotient ker = kernel_subquotient(h);
  Subquotient img(image_lattice, rel_target);
  Subquotient cok(Lattice::full(tgt.size()), image_lattice);

  HomInvariants out;
  out.kernel = ker.group();
  out.kernel_inclusion = Homomorphism(out.kernel, src, columns_normalized(ker.representatives(), src));
  out.image = img.group();
  out.image_inclusion = Homomorphism(out.image, tgt, columns_normalized(img.representatives(), tgt));
  out.cokernel = cok.group();
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < tgt.size(); ++j) cols.push_back(*cok.project(unit_vector(tgt.size(), j)));
  out.cokernel_projection = Homomorphism(tgt, out.cokernel, Matrix::from_columns(cols, out.cokernel.generator_count()));
  return out;
}

// ---------------------------------------------------------------- solving

HomSolver::HomSolver(Homomorphism h) : h_(std::move(h)) {
  const CyclicSum& tgt = h_.target();
  std::vector<Vector> rel;
  for (std::size_t i = 0; i < tgt.size(); ++i)
    if (!tgt.is_free(i)) {
      Vector c(tgt.size());
      c[i] = tgt.order(i);
      rel.push_back(std::move(c));
    }
  snf_ = smith_normal_form(h_.matrix().hconcat(Matrix::from_columns(rel, tgt.size())));
}

std::optional<Vector> HomSolver::solve(std::span<const Integer> y) const {
  const std::size_t b = h_.target().size();
  if (y.size() != b) throw ValidationError("solve: right-hand side has wrong length");
  Vector z = snf_.U.apply(y);
  const std::size_t r = snf_.rank();
  Vector w(snf_.V.rows());
  for (std::size_t j = 0; j < r; ++j) {
    if (!mpz_divisible_p(z[j].get_mpz_t(), snf_.diagonal[j].get_mpz_t())) return std::nullopt;
    mpz_divexact(w[j].get_mpz_t(), z[j].get_mpz_t(), snf_.diagonal[j].get_mpz_t());
  }
  for (std::size_t j = r; j < b; ++j)
    if (sgn(z[j]) != 0) return std::nullopt;
  Vector full = snf_.V.apply(w);
  Vector x(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(h_.source().size()));
  h_.source().normalize(x);
  return x;
}

std::optional<GroupElement> solve_in_group(const Homomorphism& h, const GroupElement& y) {
  if (!(y.group() == h.target())) throw ValidationError("right-hand side is not in the homomorphism's target");
  auto x = HomSolver(h).solve(y.coords());
  if (!x) return std::nullopt;
  return GroupElement(h.source(), std::move(*x));
}

ExactnessReport is_exact_at(const Homomorphism& f, const Homomorphism& g) {
  if (!(f.target() == g.source()))
    throw ValidationError("is_exact_at: target of f (" + f.target().to_string() + ") differs from source of g (" +
                          g.source().to_string() + ")");
  const CyclicSum& mid = f.target();
  for (std::size_t j = 0; j < f.source().size(); ++j) {
    Vector b = f.apply(unit_vector(f.source().size(), j));
    if (!g.target().is_zero(g.apply(b)))
      return {false, GroupElement(mid, b), "element lies in image(f) but not in kernel(g)"};
  }
  Subquotient ker = kernel_subquotient(g);
  HomSolver solver(f);
  for (const auto& k : ker.representatives()) {
    Vector kn = mid.normalized(k);
    if (!solver.solve(kn)) return {false, GroupElement(mid, kn), "element lies in kernel(g) but not in image(f)"};
  }
  return {};
}

}  // namespace cech
