#include "edgewise/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace edgewise {

using nlohmann::json;

json poly_to_json(const IntPolynomial& p) {
  json arr = json::array();
  for (const mpz_class& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

IntPolynomial poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<mpz_class> coeffs;
  for (const auto& el : j) coeffs.emplace_back(el.get<std::string>());
  return IntPolynomial(std::move(coeffs));
}

json gamma_to_json(const GammaVector& g) {
  json xi = json::array();
  for (const mpz_class& x : g.xi) xi.push_back(x.get_str());
  return json{{"n", g.n}, {"xi", xi}};
}

GammaVector gamma_from_json(const json& j) {
  GammaVector g;
  g.n = j.at("n").get<int>();
  for (const auto& el : j.at("xi")) g.xi.emplace_back(el.get<std::string>());
  return g;
}

json complex_to_json(const SimplicialComplex& c) {
  const Face& verts = c.vertices();
  json labels = json::array();
  for (int v : verts) labels.push_back(c.label(v));

  json facets = json::array();
  for (const Face& f : c.facets()) {
    json jf = json::array();
    for (int v : f) {
      auto it = std::lower_bound(verts.begin(), verts.end(), v);
      jf.push_back(static_cast<int>(it - verts.begin()));
    }
    facets.push_back(std::move(jf));
  }
  return json{{"vertices", labels}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const json& j) {
  const json& labels = j.at("vertices");
  std::map<int, std::string> label_map;
  for (size_t i = 0; i < labels.size(); ++i) label_map[static_cast<int>(i)] = labels[i].get<std::string>();

  std::vector<Face> facets;
  for (const auto& jf : j.at("facets")) {
    Face f;
    for (const auto& v : jf) {
      int idx = v.get<int>();
      if (idx < 0 || idx >= static_cast<int>(labels.size()))
        throw std::invalid_argument("facet index out of range");
      f.push_back(idx);
    }
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(std::move(facets), std::move(label_map));
}

json triangulation_to_json(const TriangulatedSimplex& t) {
  json j = complex_to_json(t.complex());
  const Face& verts = t.complex().vertices();
  const Face& base = t.base();
  j["base"] = base;
  json carrier = json::object();
  for (size_t i = 0; i < verts.size(); ++i) {
    json entry = json::array();
    for (int u : t.carrier(verts[i])) {
      auto it = std::lower_bound(base.begin(), base.end(), u);
      entry.push_back(static_cast<int>(it - base.begin()));
    }
    carrier[std::to_string(i)] = std::move(entry);
  }
  j["carrier"] = std::move(carrier);
  return j;
}

TriangulatedSimplex triangulation_from_json(const json& j) {
  SimplicialComplex cx = complex_from_json(j);
  Face base = j.at("base").get<Face>();
  std::map<int, Face> carriers;
  for (const auto& [key, val] : j.at("carrier").items()) {
    Face c;
    for (const auto& pos : val) {
      int idx = pos.get<int>();
      if (idx < 0 || idx >= static_cast<int>(base.size()))
        throw std::invalid_argument("carrier index out of range");
      c.push_back(base[idx]);
    }
    carriers[std::stoi(key)] = std::move(c);
  }
  return TriangulatedSimplex(std::move(base), std::move(cx), std::move(carriers));
}

}  // namespace edgewise
