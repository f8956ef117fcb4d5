#include "cech/json_io.hpp"

#include <algorithm>
#include <limits>
#include <regex>

#include "cech/errors.hpp"

namespace cech::io {

namespace {

std::string at(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ValidationError("expected an object", path);
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError("missing field \"" + key + "\"", path);
  return *it;
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ValidationError("expected an array", path);
  return j;
}

template <class F>
auto rethrow_at(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ValidationError& e) {
    throw e.at(path);
  }
}

std::vector<std::size_t> parse_indices(const Json& j, const std::string& path, std::size_t bound) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i)
    out.push_back(static_cast<std::size_t>(parse_int(j[i], at(path, i), 0, static_cast<long>(bound) - 1)));
  return out;
}

Simplex parse_key(const std::string& key, const std::string& path) {
  static const std::regex shape(R"(\d+(,\d+)*)");
  if (!std::regex_match(key, shape)) throw ValidationError("malformed simplex key \"" + key + "\"", path);
  Simplex s;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    std::size_t comma = key.find(',', pos);
    if (comma == std::string::npos) comma = key.size();
    s.push_back(std::stoul(key.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return s;
}

}  // namespace

Integer parse_integer(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                                           : Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    static const std::regex digits(R"(-?\d+)");
    const auto& s = j.get_ref<const std::string&>();
    if (std::regex_match(s, digits)) return Integer(s);
  }
  throw ValidationError("expected an integer", path);
}

long parse_int(const Json& j, const std::string& path, long lo, long hi) {
  Integer x = parse_integer(j, path);
  if (x < lo || x > hi)
    throw ValidationError("value " + x.get_str() + " outside " + std::to_string(lo) + ".." + std::to_string(hi), path);
  return x.get_si();
}

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

FgAbGroup parse_group(const Json& j, const std::string& path) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s == "0") return FgAbGroup();
    static const std::regex term(R"(Z(\^(\d+))?|Z/(\d+)|\(Z/(\d+)\)\^(\d+))");
    std::vector<Integer> orders;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t plus = s.find('+', pos);
      if (plus == std::string::npos) plus = s.size();
      const std::string t = s.substr(pos, plus - pos);
      std::smatch m;
      if (!std::regex_match(t, m, term)) throw ValidationError("cannot read group term \"" + t + "\"", path);
      if (m[3].matched) {
        orders.emplace_back(m[3].str());
      } else if (m[4].matched) {
        for (unsigned long k = 0; k < std::stoul(m[5].str()); ++k) orders.emplace_back(m[4].str());
      } else {
        const unsigned long r = m[2].matched ? std::stoul(m[2].str()) : 1;
        for (unsigned long k = 0; k < r; ++k) orders.emplace_back(0);
      }
      pos = plus + 1;
    }
    return rethrow_at(path, [&] {
      // Z/1 terms are trivial.
      std::erase_if(orders, [](const Integer& d) { return d == 1; });
      return CyclicSum(orders).invariants();
    });
  }
  const long r = parse_int(field(j, "free_rank", path), at(path, "free_rank"), 0, 1 << 20);
  const Json& tj = array(field(j, "torsion", path), at(path, "torsion"));
  std::vector<Integer> torsion;
  for (std::size_t i = 0; i < tj.size(); ++i) torsion.push_back(parse_integer(tj[i], at(at(path, "torsion"), i)));
  return rethrow_at(path, [&] { return FgAbGroup(static_cast<std::size_t>(r), torsion); });
}

Json group_json(const FgAbGroup& g) {
  Json t = Json::array();
  for (const auto& d : g.torsion()) t.push_back(integer_json(d));
  return {{"free_rank", g.free_rank()}, {"torsion", t}};
}

Matrix parse_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  array(j, path);
  if (j.size() != rows)
    throw ValidationError("expected " + std::to_string(rows) + " rows (one per target generator), got " +
                              std::to_string(j.size()),
                          path);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rp = at(path, i);
    array(j[i], rp);
    if (j[i].size() != cols)
      throw ValidationError("expected " + std::to_string(cols) + " entries, got " + std::to_string(j[i].size()), rp);
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = parse_integer(j[i][k], at(rp, k));
  }
  return m;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(integer_json(m(i, k)));
    out.push_back(row);
  }
  return out;
}

Homomorphism parse_homomorphism(const Json& j, const std::string& path) {
  FgAbGroup src = parse_group(field(j, "source", path), at(path, "source"));
  FgAbGroup dst = parse_group(field(j, "target", path), at(path, "target"));
  Matrix m = parse_matrix(field(j, "matrix", path), dst.generator_count(), src.generator_count(), at(path, "matrix"));
  return rethrow_at(at(path, "matrix"), [&] { return Homomorphism(src, dst, m); });
}

Json homomorphism_json(const Homomorphism& h) {
  return {{"source", group_json(h.source().invariants())},
          {"target", group_json(h.target().invariants())},
          {"matrix", matrix_json(h.matrix())}};
}

SimplicialComplex parse_complex(const Json& j, const std::string& path) {
  const long n = parse_int(field(j, "vertex_count", path), at(path, "vertex_count"), 0, 1 << 20);
  const std::string fp = at(path, "facets");
  const Json& fj = array(field(j, "facets", path), fp);
  std::vector<Simplex> facets;
  for (std::size_t i = 0; i < fj.size(); ++i) {
    const std::string ip = at(fp, i);
    Simplex f;
    for (std::size_t k = 0; k < array(fj[i], ip).size(); ++k)
      f.push_back(static_cast<std::size_t>(parse_int(fj[i][k], at(ip, k), 0, std::numeric_limits<int>::max())));
    facets.push_back(std::move(f));
  }
  return rethrow_at(path, [&] { return SimplicialComplex::from_facets(static_cast<std::size_t>(n), facets); });
}

Json complex_json(const SimplicialComplex& X) {
  Json facets = Json::array();
  for (const auto& f : X.facets()) facets.push_back(f);
  return {{"vertex_count", X.vertex_count()}, {"facets", facets}};
}

Cochain parse_cochain(const Json& j, const ComplexPtr& complex, const std::string& path) {
  const auto& cells = complex->cells();
  const int p = static_cast<int>(parse_int(field(j, "degree", path), at(path, "degree"), 0, complex->max_degree()));
  const SimplicialComplex& X = *cells->nerve;
  const std::size_t g = cells->coefficients.size();
  Vector values(complex->group(p).size());
  const std::string vp = at(path, "values");
  const Json& vj = field(j, "values", path);
  if (!vj.is_object()) throw ValidationError("expected an object keyed by simplices", vp);
  for (const auto& [key, value] : vj.items()) {
    const std::string kp = at(vp, key);
    Simplex s = parse_key(key, kp);
    auto idx = X.index_of(s);
    if (static_cast<int>(s.size()) != p + 1 || !idx)
      throw ValidationError("[" + key + "] is not a " + std::to_string(p) + "-simplex of the complex", kp);
    array(value, kp);
    if (value.size() != g)
      throw ValidationError("expected " + std::to_string(g) + " coefficients, got " + std::to_string(value.size()), kp);
    for (std::size_t k = 0; k < g; ++k) values[*idx * g + k] = parse_integer(value[k], at(kp, k));
  }
  return Cochain(complex, p, std::move(values));
}

Json cochain_json(const Cochain& c) {
  const auto& cells = c.complex()->cells();
  Json values = Json::object();
  const auto& labels = cells->labels[static_cast<std::size_t>(c.degree())];
  for (std::size_t t = 0; t < labels.size(); ++t) values[labels[t]] = vector_json(c.value_at(t));
  return {{"degree", c.degree()}, {"values", values}};
}

ShortExactSequence parse_ses(const Json& j, const std::string& path) {
  FgAbGroup A = parse_group(field(j, "A", path), at(path, "A"));
  FgAbGroup B = parse_group(field(j, "B", path), at(path, "B"));
  FgAbGroup C = parse_group(field(j, "C", path), at(path, "C"));
  Matrix iota = parse_matrix(field(j, "iota", path), B.generator_count(), A.generator_count(), at(path, "iota"));
  Matrix pi = parse_matrix(field(j, "pi", path), C.generator_count(), B.generator_count(), at(path, "pi"));
  return rethrow_at(path, [&] { return validate_ses(A, B, C, iota, pi); });
}

Json ses_json(const ShortExactSequence& s) {
  return {{"A", group_json(s.A().invariants())},
          {"B", group_json(s.B().invariants())},
          {"C", group_json(s.C().invariants())},
          {"iota", matrix_json(s.iota().matrix())},
          {"pi", matrix_json(s.pi().matrix())}};
}

FiniteGroup parse_finite_group(const Json& j, const std::string& path, std::uint64_t budget) {
  const long m = parse_int(field(j, "order", path), at(path, "order"), 1, 1 << 16);
  const std::string tp = at(path, "table");
  const Json& tj = array(field(j, "table", path), tp);
  if (tj.size() != static_cast<std::size_t>(m))
    throw ValidationError("expected " + std::to_string(m) + " rows, got " + std::to_string(tj.size()), tp);
  FiniteGroup::Table table;
  for (std::size_t i = 0; i < tj.size(); ++i) {
    auto row = parse_indices(tj[i], at(tp, i), static_cast<std::size_t>(m));
    if (row.size() != static_cast<std::size_t>(m))
      throw ValidationError("expected " + std::to_string(m) + " entries", at(tp, i));
    table.push_back(std::move(row));
  }
  const long e = parse_int(field(j, "identity", path), at(path, "identity"), 0, m - 1);
  return rethrow_at(path, [&] { return FiniteGroup(table, static_cast<std::size_t>(e), budget); });
}

Json finite_group_json(const FiniteGroup& g) {
  return {{"order", g.order()}, {"table", g.table()}, {"identity", g.identity()}};
}

CentralExtension parse_extension(const Json& j, const std::string& path, std::uint64_t budget) {
  FiniteGroup G = parse_finite_group(field(j, "G", path), at(path, "G"), budget);
  FiniteGroup Q = parse_finite_group(field(j, "Q", path), at(path, "Q"), budget);
  auto L = parse_indices(field(j, "L_elements", path), at(path, "L_elements"), G.order());
  auto pi = parse_indices(field(j, "pi", path), at(path, "pi"), Q.order());
  return rethrow_at(path, [&] { return validate_extension(std::move(G), std::move(L), std::move(pi), std::move(Q)); });
}

TransitionCocycle parse_transition(const Json& j, const SimplicialComplex& X, const FiniteGroup& Q,
                                   const std::string& path) {
  if (!j.is_object()) throw ValidationError("expected an object keyed by edges", path);
  std::vector<std::size_t> values(X.count(1), Q.identity());
  for (const auto& [key, value] : j.items()) {
    const std::string kp = at(path, key);
    Simplex s = parse_key(key, kp);
    auto idx = X.index_of(s);
    if (s.size() != 2 || !idx) throw ValidationError("[" + key + "] is not an edge of the complex", kp);
    values[*idx] = static_cast<std::size_t>(parse_int(value, kp, 0, static_cast<long>(Q.order()) - 1));
  }
  return rethrow_at(path, [&] { return TransitionCocycle(X, Q, values); });
}

Json transition_json(const TransitionCocycle& t) {
  Json out = Json::object();
  const auto& edges = t.nerve().simplices(1);
  for (std::size_t e = 0; e < edges.size(); ++e) out[simplex_key(edges[e])] = t.values()[e];
  return out;
}

TowerSpec parse_tower_spec(const Json& j, const std::string& path) {
  SimplicialComplex X = parse_complex(field(j, "complex", path), at(path, "complex"));
  const std::string sp = at(path, "sequences");
  const Json& sj = array(field(j, "sequences", path), sp);
  std::vector<ShortExactSequence> seqs;
  for (std::size_t i = 0; i < sj.size(); ++i) seqs.push_back(parse_ses(sj[i], at(sp, i)));
  CyclicSum band;
  if (j.contains("band")) {
    band = parse_group(j["band"], at(path, "band"));
  } else if (!seqs.empty()) {
    band = seqs[0].C();
  } else {
    throw ValidationError("missing field \"band\" (required when there are no sequences)", path);
  }
  auto C = cech_complex(X, band, std::max(X.dimension(), 2));
  Cochain c2 = parse_cochain(field(j, "c2", path), C, at(path, "c2"));
  return rethrow_at(path, [&] { return TowerSpec(X, c2, seqs); });
}

Json class_json(const CohomologyClass& c) {
  return {{"degree", c.degree}, {"group", c.ambient.to_string()}, {"coords", vector_json(c.coords)}, {"zero", c.is_zero()}};
}

}  // namespace cech::io
