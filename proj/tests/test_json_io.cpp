#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edgewise/json_io.hpp"
#include "edgewise/subdivision.hpp"

using namespace edgewise;

TEST_CASE("polynomial round trip") {
  IntPolynomial p{1, 12, 3};
  nlohmann::json j = poly_to_json(p);
  CHECK(j == nlohmann::json::array({"1", "12", "3"}));
  CHECK(poly_from_json(j) == p);

  // big coefficients survive as decimal strings
  IntPolynomial big(std::vector<mpz_class>{mpz_class("123456789012345678901234567890")});
  CHECK(poly_from_json(poly_to_json(big)) == big);
  CHECK(poly_to_json(IntPolynomial{}) == nlohmann::json::array());
}

TEST_CASE("gamma round trip") {
  GammaVector g{4, {0, 0, 1}};
  nlohmann::json j = gamma_to_json(g);
  CHECK(j["n"] == 4);
  CHECK(gamma_from_json(j) == g);
}

TEST_CASE("complex round trip") {
  SimplicialComplex c = SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}},
                                                       {{0, "a"}, {1, "b"}, {2, "c"}});
  nlohmann::json j = complex_to_json(c);
  CHECK(j["vertices"] == nlohmann::json::array({"a", "b", "c"}));
  SimplicialComplex back = complex_from_json(j);
  CHECK(back == c);
  CHECK(back.label(1) == "b");

  // non-contiguous ids are renumbered to positions
  SimplicialComplex gappy = SimplicialComplex::from_facets({{5, 9}});
  CHECK(complex_from_json(complex_to_json(gappy)).facets() == std::vector<Face>{{0, 1}});
}

TEST_CASE("triangulation round trip") {
  TriangulatedSimplex t = esd_simplex(3, 2);
  nlohmann::json j = triangulation_to_json(t);
  TriangulatedSimplex back = triangulation_from_json(j);
  CHECK(back.complex() == t.complex());
  CHECK(back.base() == t.base());
  CHECK(back.carriers() == t.carriers());
  CHECK(back.local_h() == t.local_h());
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS(poly_from_json(nlohmann::json{{"not", "an array"}}));
  CHECK_THROWS(complex_from_json(nlohmann::json{{"vertices", {"a"}}, {"facets", {{2}}}}));
}
