#include "cech/service.hpp"

#include <random>

#include "cech/errors.hpp"
#include "cech/spectral.hpp"

namespace cech::service {

using io::Json;

namespace {

constexpr std::uint64_t kVerifySeed = 0x5eedcec4;

const Json& need(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ValidationError("expected an object", path);
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError("missing field \"" + key + "\"", path);
  return *it;
}

std::uint64_t group_budget(const Options& o) { return o.budget.value_or(kDefaultAssociativityBudget); }
std::uint64_t lift_budget(const Options& o) { return o.budget.value_or(kDefaultLiftBudget); }

int top_degree(const Options& o, const SimplicialComplex& X) { return o.max_degree >= 0 ? o.max_degree : X.dimension(); }

Cochain random_cochain(const ComplexPtr& C, int p, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coin(-6, 6);
  Vector v(C->group(p).size());
  for (auto& x : v) x = coin(rng);
  return Cochain(C, p, std::move(v));
}

Json cohomology_command(const Json& payload, const Options& o) {
  SimplicialComplex X = io::parse_complex(need(payload, "complex", "payload"), "payload.complex");
  FgAbGroup L = io::parse_group(need(payload, "group", "payload"), "payload.group");
  int lo = 0, hi = top_degree(o, X);
  if (payload.contains("degree") && !(payload["degree"].is_string() && payload["degree"] == "all")) {
    lo = hi = static_cast<int>(io::parse_int(payload["degree"], "payload.degree", 0, 1 << 16));
  }
  auto C = cech_complex(X, L, std::max(hi, 0));
  Json out = Json::object();
  for (int p = lo; p <= hi; ++p) out["H" + std::to_string(p)] = C->cohomology(p)->group().to_string();
  if (payload.contains("representatives")) {
    if (!payload["representatives"].is_boolean()) throw ValidationError("expected a boolean", "payload.representatives");
    if (payload["representatives"].get<bool>()) {
      Json basis = Json::object();
      for (int p = lo; p <= hi; ++p) {
        Json reps = Json::array();
        for (const auto& b : cohomology(C, p).basis) reps.push_back(io::cochain_json(b));
        basis["H" + std::to_string(p)] = reps;
      }
      out["representatives"] = basis;
    }
  }
  if (o.verify) {
    // Each basis cocycle must project to its own standard generator.
    for (int p = lo; p <= hi; ++p) {
      auto H = cohomology(C, p);
      for (std::size_t k = 0; k < H.basis.size(); ++k) {
        auto cls = class_of(H.basis[k]);
        if (cls.coords != H.group.layout().normalized(unit_vector(H.group.generator_count(), k)))
          throw VerificationError("basis cocycle " + std::to_string(k) + " of H" + std::to_string(p) +
                                  " does not project to its generator");
      }
    }
    out["verified"] = true;
  }
  return out;
}

Json connecting_command(const Json& payload, const Options& o) {
  SimplicialComplex X = io::parse_complex(need(payload, "complex", "payload"), "payload.complex");
  ShortExactSequence S = io::parse_ses(need(payload, "ses", "payload"), "payload.ses");
  const Json& cj = need(payload, "cochain", "payload");
  const int p = static_cast<int>(io::parse_int(need(cj, "degree", "payload.cochain"), "payload.cochain.degree", 0, 1 << 16));
  CechSequence family(X, S, std::max({X.dimension(), p + 1, o.max_degree}));
  Cochain c = io::parse_cochain(cj, family.quotient(), "payload.cochain");
  if (auto bad = cocycle_violation(c)) throw ValidationError("not a cocycle: δc is nonzero on " + *bad, "payload.cochain");
  Cochain image = family.connecting(c);
  auto cls = class_of(image);
  Json out = {{"degree", image.degree()}, {"representative", io::cochain_json(image)}, {"class", io::class_json(cls)}};
  if (o.verify) {
    std::mt19937_64 rng(kVerifySeed);
    const int relifts = 20;
    for (int k = 0; k < relifts; ++k) {
      Cochain relift = family.lift(c) + family.include(random_cochain(family.sub(), p, rng));
      if (!class_of(family.connecting_from_lift(c, relift)).same_class(cls))
        throw VerificationError("connecting class depends on the lift (re-lift " + std::to_string(k) + ")");
    }
    out["verified"] = {{"section_independence", true}, {"relifts", relifts}};
  }
  return out;
}

Json les_json(const LongExactSequence& les) {
  Json terms = Json::array(), maps = Json::array(), positions = Json::array();
  for (const auto& t : les.terms) terms.push_back({{"label", t.label()}, {"group", io::group_json(t.group)}});
  for (const auto& m : les.maps) maps.push_back(io::homomorphism_json(m));
  for (const auto& pos : les.positions)
    positions.push_back({{"at", les.terms[pos.term].label()},
                         {"exact", pos.exact},
                         {"witness", pos.witness ? io::vector_json(pos.witness->coords()) : Json(nullptr)},
                         {"reason", pos.reason}});
  return {{"terms", terms}, {"maps", maps}, {"positions", positions}, {"exact", les.exact()}};
}

Json les_command(const Json& payload, const Options& o) {
  SimplicialComplex X = io::parse_complex(need(payload, "complex", "payload"), "payload.complex");
  ShortExactSequence S = io::parse_ses(need(payload, "ses", "payload"), "payload.ses");
  auto les = long_exact_sequence(X, S, top_degree(o, X));
  Json out = les_json(les);
  if (o.verify) {
    if (!les.exact()) throw VerificationError("long exact sequence fails exactness");
    out["verified"] = true;
  }
  return out;
}

Json tower_command(const Json& payload, const Options& o) {
  TowerSpec spec = io::parse_tower_spec(payload, "payload");
  TowerReport report = verify_tower(spec);
  Json stages = Json::array();
  for (const auto& st : report.classes.stages)
    stages.push_back({{"degree", st.degree},
                      {"band", st.band.invariants().to_string()},
                      {"group", st.cls.ambient.to_string()},
                      {"coords", io::vector_json(st.cls.coords)},
                      {"representative", io::cochain_json(*st.cls.representative)},
                      {"zero", st.cls.is_zero()}});
  auto from = report.trivial_from();
  Json out = {{"stages", stages}, {"trivial_from", from ? Json(*from) : Json(nullptr)}};
  if (o.verify) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      if (!c.passed) throw VerificationError("tower check failed: " + c.name + " " + c.detail);
      checks.push_back(c.name);
    }
    out["verified"] = checks;
  }
  return out;
}

Json spectral_command(const Json& payload, const Options& o) {
  SimplicialComplex X = io::parse_complex(need(payload, "complex", "payload"), "payload.complex");
  const Json& sj = need(payload, "summands", "payload");
  if (!sj.is_array()) throw ValidationError("expected an array", "payload.summands");
  std::vector<FgAbGroup> summands;
  for (std::size_t i = 0; i < sj.size(); ++i)
    summands.push_back(io::parse_group(sj[i], "payload.summands[" + std::to_string(i) + "]"));
  const int r_max = payload.contains("r_max") ? static_cast<int>(io::parse_int(payload["r_max"], "payload.r_max", 1, 64)) : 3;
  FilteredComplex F(X, summands);
  DegenerationReport report = check_degeneration(F, r_max);

  Json grid = Json::object();
  for (const auto& t : report.grid)
    grid[std::to_string(t.r) + "/" + std::to_string(t.p) + "/" + std::to_string(t.q)] = {
        {"Z", t.Z_group.to_string()}, {"B", t.B_group.to_string()}, {"E", t.E.to_string()}};
  Json out = {{"grid", grid}, {"closed_forms_hold", report.ok()}};

  if (payload.contains("direct_sum")) {
    const Json& dj = payload["direct_sum"];
    FgAbGroup first = io::parse_group(need(dj, "first", "payload.direct_sum"), "payload.direct_sum.first");
    FgAbGroup last = io::parse_group(need(dj, "last", "payload.direct_sum"), "payload.direct_sum.last");
    const int n = static_cast<int>(io::parse_int(need(dj, "n", "payload.direct_sum"), "payload.direct_sum.n", 2, 1 << 16));
    auto ds = les_direct_sum(X, first, last, n, top_degree(o, X));
    Json d = les_json(ds.les);
    d["checks_hold"] = ds.ok();
    out["direct_sum"] = d;
  }
  if (o.verify) {
    for (const auto& c : report.checks)
      if (!c.passed) throw VerificationError("spectral check failed: " + c.name + " " + c.detail);
    out["verified"] = report.checks.size();
  }
  return out;
}

Json gerbe_command(const Json& payload, const Options& o) {
  SimplicialComplex X = io::parse_complex(need(payload, "complex", "payload"), "payload.complex");
  CentralExtension ext = io::parse_extension(need(payload, "extension", "payload"), "payload.extension", group_budget(o));
  TransitionCocycle t = io::parse_transition(need(payload, "transition", "payload"), X, ext.Q(), "payload.transition");
  std::vector<std::size_t> section;
  if (payload.contains("section")) {
    const Json& s = payload["section"];
    if (!s.is_array()) throw ValidationError("expected an array", "payload.section");
    for (std::size_t i = 0; i < s.size(); ++i)
      section.push_back(static_cast<std::size_t>(io::parse_int(s[i], "payload.section[" + std::to_string(i) + "]", 0,
                                                                static_cast<long>(ext.G().order()) - 1)));
  }
  LiftingObstruction ob = [&] {
    try {
      return lifting_obstruction(t, ext, section);
    } catch (const ValidationError& e) {
      throw e.at("payload");
    }
  }();
  Json out = {{"band", ext.L().invariants().to_string()},
              {"obstruction", io::cochain_json(ob.cochain)},
              {"class", io::class_json(ob.cls)}};
  if (o.verify) {
    LiftSearch search = brute_force_lift(t, ext, lift_budget(o));
    if (search.lift.has_value() != ob.cls.is_zero())
      throw VerificationError("obstruction class disagrees with the exhaustive lift search");
    Json v = {{"lift_found", search.lift.has_value()}, {"search_space", search.search_space}, {"visited", search.visited}};
    if (search.lift) {
      Json lift = Json::object();
      const auto& edges = X.simplices(1);
      for (std::size_t e = 0; e < edges.size(); ++e) lift[simplex_key(edges[e])] = (*search.lift)[e];
      v["lift"] = lift;
    }
    out["verified"] = v;
  }
  return out;
}

Json validate_command(const Json& payload, const Options& o) {
  const Json& kj = need(payload, "kind", "payload");
  if (!kj.is_string()) throw ValidationError("expected a string", "payload.kind");
  const std::string kind = kj.get<std::string>();
  const Json& v = need(payload, "value", "payload");
  const std::string path = "payload.value";
  Json summary;
  if (kind == "group") {
    summary = io::parse_group(v, path).to_string();
  } else if (kind == "homomorphism") {
    auto inv = hom_invariants(io::parse_homomorphism(v, path));
    summary = {{"kernel", inv.kernel.to_string()}, {"image", inv.image.to_string()}, {"cokernel", inv.cokernel.to_string()}};
  } else if (kind == "complex") {
    auto X = io::parse_complex(v, path);
    Json f = Json::array();
    for (int p = 0; p <= X.dimension(); ++p) f.push_back(X.count(p));
    summary = {{"dimension", X.dimension()}, {"f_vector", f}, {"euler_characteristic", X.euler_characteristic()}};
  } else if (kind == "ses") {
    summary = io::ses_json(io::parse_ses(v, path));
  } else if (kind == "finite_group") {
    auto G = io::parse_finite_group(v, path, group_budget(o));
    summary = {{"order", G.order()}, {"abelian", G.is_abelian()}};
  } else if (kind == "extension") {
    auto ext = io::parse_extension(v, path, group_budget(o));
    summary = {{"band", ext.L().invariants().to_string()}, {"section", ext.canonical_section()}};
  } else if (kind == "tower") {
    auto spec = io::parse_tower_spec(v, path);
    summary = {{"stages", spec.sequences().size() + 1}};
  } else if (kind == "filtered") {
    auto X = io::parse_complex(need(v, "complex", path), path + ".complex");
    const Json& sj = need(v, "summands", path);
    if (!sj.is_array() || sj.empty()) throw ValidationError("expected a non-empty array", path + ".summands");
    for (std::size_t i = 0; i < sj.size(); ++i) io::parse_group(sj[i], path + ".summands[" + std::to_string(i) + "]");
    summary = {{"length", sj.size()}, {"dimension", X.dimension()}};
  } else {
    throw ValidationError("unknown kind \"" + kind +
                              "\" (expected group, homomorphism, complex, ses, finite_group, extension, tower, filtered)",
                          "payload.kind");
  }
  return {{"valid", true}, {"kind", kind}, {"summary", summary}};
}

Response failure(Status s, const std::string& message) { return {s, "", message}; }

template <class F>
Response guarded(F&& f) {
  try {
    return {Status::ok, f().dump(2), ""};
  } catch (const Json::parse_error& e) {
    return failure(Status::invalid, std::string("invalid JSON: ") + e.what());
  } catch (const Json::exception& e) {
    return failure(Status::invalid, std::string("malformed document: ") + e.what());
  } catch (const ValidationError& e) {
    return failure(Status::invalid, e.what());
  } catch (const BudgetExceeded& e) {
    return failure(Status::budget_exceeded, std::string("budget exceeded: ") + e.what());
  } catch (const VerificationError& e) {
    return failure(Status::verification_failed, std::string("verification failed: ") + e.what());
  } catch (const std::bad_alloc&) {
    return failure(Status::budget_exceeded, "budget exceeded: out of memory");
  } catch (const std::exception& e) {
    return failure(Status::verification_failed, std::string("internal error: ") + e.what());
  }
}

Options parse_options(const Json& j, Options base) {
  if (j.is_null()) return base;
  if (!j.is_object()) throw ValidationError("expected an object", "options");
  for (const auto& [key, value] : j.items()) {
    if (key == "max_degree") {
      base.max_degree = static_cast<int>(io::parse_int(value, "options.max_degree", -1, 1 << 16));
    } else if (key == "budget") {
      base.budget = static_cast<std::uint64_t>(io::parse_int(value, "options.budget", 1, std::numeric_limits<long>::max()));
    } else if (key == "verify") {
      if (!value.is_boolean()) throw ValidationError("expected a boolean", "options.verify");
      base.verify = value.get<bool>();
    } else {
      throw ValidationError("unknown option \"" + key + "\"", "options");
    }
  }
  return base;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {"cohomology", "connecting", "les",     "tower",
                                                 "spectral",   "gerbe-lift", "validate"};
  return names;
}

Json run(const std::string& command, const Json& payload, const Options& options) {
  if (command == "cohomology") return cohomology_command(payload, options);
  if (command == "connecting") return connecting_command(payload, options);
  if (command == "les") return les_command(payload, options);
  if (command == "tower") return tower_command(payload, options);
  if (command == "spectral") return spectral_command(payload, options);
  if (command == "gerbe-lift") return gerbe_command(payload, options);
  if (command == "validate") return validate_command(payload, options);
  throw ValidationError("unknown command \"" + command + "\"", "command");
}

Response execute(const std::string& command, const std::string& payload, const Options& options) {
  return guarded([&] { return run(command, Json::parse(payload), options); });
}

Response execute_request(const std::string& request) {
  return guarded([&] {
    Json r = Json::parse(request);
    if (!r.is_object()) throw ValidationError("expected an object", "");
    const Json& c = need(r, "command", "");
    if (!c.is_string()) throw ValidationError("expected a string", "command");
    Options o = parse_options(r.contains("options") ? r["options"] : Json(), Options{});
    return run(c.get<std::string>(), need(r, "payload", ""), o);
  });
}

}  // namespace cech::service
