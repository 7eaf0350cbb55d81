#pragma once

#include <json.hpp>

#include "edgewise/poly.hpp"
#include "edgewise/simplicial_complex.hpp"
#include "edgewise/triangulation.hpp"

namespace edgewise {

/// JSON array of decimal integer strings, ascending degree.
nlohmann::json poly_to_json(const IntPolynomial& p);
IntPolynomial poly_from_json(const nlohmann::json& j);

/// {"n": ..., "xi": ["...", ...]}
nlohmann::json gamma_to_json(const GammaVector& g);
GammaVector gamma_from_json(const nlohmann::json& j);

/// {"vertices": [label, ...], "facets": [[index, ...], ...]} where facet
/// entries index into the vertices array. Serialization renumbers vertex
/// ids to positions; the complex is reconstructed up to that relabeling.
nlohmann::json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const nlohmann::json& j);

/// The complex format plus {"base": [...], "carrier": {"index": [...]}}:
/// carrier keys are vertex indices, values are lists of positions into the
/// base array.
nlohmann::json triangulation_to_json(const TriangulatedSimplex& t);
TriangulatedSimplex triangulation_from_json(const nlohmann::json& j);

}  // namespace edgewise
