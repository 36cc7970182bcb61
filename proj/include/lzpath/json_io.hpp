#pragma once

#include <json.hpp>

#include "lzpath/ls.hpp"
#include "lzpath/path.hpp"
#include "lzpath/rootsys.hpp"

namespace lzp {

using json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings; integers without a denominator.
json to_json(const Rational& q);
Rational rational_from_json(const json& j);

/// {"pairings": ["p/q", ...], "delta": "p/q"}
json to_json(const Weight& w);
Weight weight_from_json(const json& j, std::size_t rank);

/// {"segments": [{"direction": weight, "duration": "p/q"}, ...]}; canonicalised on load.
json to_json(const Path& p);
Path path_from_json(const json& j, std::size_t rank);

/// {"directions": [weight, ...], "cuts": ["0", ..., "1"]}
json to_json(const LSPath& ls);
LSPath ls_from_json(const json& j, std::size_t rank);

/// {"cartan": [[...]], "special_vertex": 0}
AffineData algebra_from_json(const json& j);
/// Marks, comarks, symmetrizers, δ, ϖ_i and the Gram matrix of the simple roots.
json algebra_summary(const AffineData& data);

/// Either a weight object or {"Lambda": [c_0, ..., c_n], "varpi": [..], "delta": "p/q"}
/// meaning Σ c_j Λ_j + Σ v_i ϖ_i + dδ (each part optional).
Weight weight_spec_from_json(const AffineData& data, const json& j);

}  // namespace lzp
