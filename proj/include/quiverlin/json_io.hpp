#pragma once

// JSON encodings of the library's value types.

#include <json.hpp>

#include "quiverlin/ar_slices.hpp"
#include "quiverlin/cones.hpp"
#include "quiverlin/crystal_pbw.hpp"
#include "quiverlin/monomial_maps.hpp"

namespace quiverlin {

using Json = nlohmann::ordered_json;

/// [2,1,2]
Json word_to_json(const ReducedWord& word);
ReducedWord word_from_json(int n, const Json& j);

/// {"i,j": z}
Json slices_to_json(const SlicePartition& p);

/// {"a_2": {"c_1_1": 1, ...}, ...}; zero coefficients are omitted.
Json map_to_json(const IntLinearMap& map);

/// {"c_i_j": value}
Json triangle_to_json(const Triangle& t);
/// Accepts the object form, or an array in triangle order. Throws std::invalid_argument.
Triangle triangle_from_json(int n, const Json& j);

/// {"word": [...], "a": [...]}
Json string_to_json(const ReducedWord& word, std::span<const int64_t> a);

/// {"dim": N, "rows": [{"coeffs": {"label": k}, "label": "..."}]}
Json cone_to_json(const ConeSpec& cone);
ConeSpec cone_from_json(const Json& j);

}  // namespace quiverlin
