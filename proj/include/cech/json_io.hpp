#pragma once

// JSON schemas for every engine type. Parsers throw ValidationError whose path is the
// JSON location of the offending value (e.g. "payload.complex.facets[2]").

#include <json.hpp>
#include <string>

#include "cech/cochain.hpp"
#include "cech/exactseq.hpp"
#include "cech/liftgerbe.hpp"
#include "cech/tower.hpp"

namespace cech::io {

using Json = nlohmann::json;

Integer parse_integer(const Json& j, const std::string& path);
long parse_int(const Json& j, const std::string& path, long lo, long hi);
Json integer_json(const Integer& x);
Json vector_json(const Vector& v);

/// {"free_rank": r, "torsion": [...]} or the printed form, e.g. "Z^2 + Z/2 + (Z/4)^3".
FgAbGroup parse_group(const Json& j, const std::string& path);
Json group_json(const FgAbGroup& g);

/// Rows per target generator.
Matrix parse_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& path);
Json matrix_json(const Matrix& m);

Homomorphism parse_homomorphism(const Json& j, const std::string& path);
Json homomorphism_json(const Homomorphism& h);

/// {"vertex_count": n, "facets": [[...], ...]}
SimplicialComplex parse_complex(const Json& j, const std::string& path);
Json complex_json(const SimplicialComplex& X);

/// {"degree": p, "values": {"i0,i1,...": [...]}}; simplices left out are zero. `complex` must be a Čech complex.
Cochain parse_cochain(const Json& j, const ComplexPtr& complex, const std::string& path);
Json cochain_json(const Cochain& c);

/// {"A", "B", "C", "iota", "pi"}
ShortExactSequence parse_ses(const Json& j, const std::string& path);
Json ses_json(const ShortExactSequence& s);

/// {"order": m, "table": [[...]], "identity": e}
FiniteGroup parse_finite_group(const Json& j, const std::string& path, std::uint64_t budget);
Json finite_group_json(const FiniteGroup& g);

/// {"G", "L_elements", "pi", "Q"}
CentralExtension parse_extension(const Json& j, const std::string& path, std::uint64_t budget);

/// {"i,j": q, ...}; edges left out carry the identity.
TransitionCocycle parse_transition(const Json& j, const SimplicialComplex& X, const FiniteGroup& Q,
                                   const std::string& path);
Json transition_json(const TransitionCocycle& t);

/// {"complex", "c2", "sequences", "band"?}; "band" is needed only when there are no sequences.
TowerSpec parse_tower_spec(const Json& j, const std::string& path);

Json class_json(const CohomologyClass& c);

}  // namespace cech::io
