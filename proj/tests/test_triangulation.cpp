#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edgewise/triangulation.hpp"

using namespace edgewise;

TEST_CASE("trivial triangulation") {
  TriangulatedSimplex point = TriangulatedSimplex::trivial({0});
  CHECK(point.complex().facets() == std::vector<Face>{{0}});
  CHECK(point.local_h().is_zero());

  TriangulatedSimplex t = TriangulatedSimplex::trivial({1, 2, 3});
  CHECK(t.complex() == SimplicialComplex::full_simplex({1, 2, 3}));
  CHECK(t.carrier(2) == Face{2});
  CHECK(t.complex().h_polynomial() == IntPolynomial{1});

  for (int n = 1; n <= 5; ++n) {
    Face base(n);
    for (int i = 0; i < n; ++i) base[i] = i;
    CHECK(TriangulatedSimplex::trivial(base).local_h().is_zero());
  }
  CHECK_THROWS_AS(TriangulatedSimplex::trivial({}), std::invalid_argument);
}

TEST_CASE("construction validates carriers") {
  SimplicialComplex edge = SimplicialComplex::from_facets({{0, 1}});
  CHECK_THROWS_AS(TriangulatedSimplex({5, 6}, edge, {{0, {5}}}), std::invalid_argument);
  CHECK_THROWS_AS(TriangulatedSimplex({5, 6}, edge, {{0, {5}}, {1, {}}}), std::invalid_argument);
  CHECK_THROWS_AS(TriangulatedSimplex({5, 6}, edge, {{0, {5}}, {1, {7}}}), std::invalid_argument);
  // both endpoints carrying the same base vertex
  CHECK_THROWS_AS(TriangulatedSimplex({5, 6}, edge, {{0, {5}}, {1, {5}}}), std::invalid_argument);
}

TEST_CASE("restriction") {
  TriangulatedSimplex t = TriangulatedSimplex::trivial({0, 1, 2});
  CHECK(t.restrict_to({0, 1, 2}) == t);
  CHECK(t.restrict_to({0, 1}) == TriangulatedSimplex::trivial({0, 1}));

  TriangulatedSimplex empty = t.restrict_to({});
  CHECK(empty.base().empty());
  CHECK(empty.complex() == SimplicialComplex::empty_complex());
  CHECK(empty.complex().h_polynomial() == IntPolynomial{1});
  CHECK(empty.local_h() == IntPolynomial{1});  // the one-face base case

  CHECK_THROWS_AS(t.restrict_to({0, 9}), std::invalid_argument);
}

TEST_CASE("cone annihilates the local h-polynomial") {
  TriangulatedSimplex t = TriangulatedSimplex::trivial({0, 1});
  TriangulatedSimplex coned = t.cone_over(2);
  CHECK(coned.base() == Face{0, 1, 2});
  CHECK(coned == TriangulatedSimplex::trivial({0, 1, 2}));

  // repeated cones and a stellar lift in between all vanish
  TriangulatedSimplex lifted = t.stellar_lift({0, 1}, 9);
  for (const TriangulatedSimplex& s :
       {t, coned, lifted, lifted.cone_over(7), coned.cone_over(7)}) {
    TriangulatedSimplex c = s.cone_over(100);
    CHECK(c.local_h().is_zero());
    CHECK(c.carrier(c.complex().vertices().back()) == Face{100});
  }
  CHECK_THROWS_AS(t.cone_over(1), std::invalid_argument);
}

TEST_CASE("stellar lift") {
  TriangulatedSimplex t = TriangulatedSimplex::trivial({0, 1});
  TriangulatedSimplex lifted = t.stellar_lift({0, 1}, 2);
  CHECK(lifted.complex() == SimplicialComplex::from_facets({{0, 2}, {1, 2}}));
  CHECK(lifted.carrier(2) == Face{0, 1});  // union of the endpoint carriers
  CHECK(lifted.local_h() == IntPolynomial{0, 1});
  CHECK_THROWS_AS(t.stellar_lift({0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(t.stellar_lift({0, 2}, 3), std::invalid_argument);
}

TEST_CASE("interior vertices") {
  CHECK(TriangulatedSimplex::trivial({0, 1}).interior_vertices().empty());
  CHECK(TriangulatedSimplex::trivial({0, 1, 2, 3}).interior_vertices().empty());

  // subdividing the edge of a segment creates one interior vertex
  TriangulatedSimplex lifted = TriangulatedSimplex::trivial({0, 1}).stellar_lift({0, 1}, 2);
  CHECK(lifted.interior_vertices() == std::vector<int>{2});
}

TEST_CASE("interior-vertex lift on the subdivided segment") {
  TriangulatedSimplex t = TriangulatedSimplex::trivial({0, 1}).stellar_lift({0, 1}, 2);
  TriangulatedSimplex lifted = t.lift_interior_vertex(2);
  CHECK(lifted.base_size() == 3);
  CHECK(lifted.complex().dimension() == t.complex().dimension() + 1);
  IntPolynomial expected = IntPolynomial{0, 1} * t.complex().link({2}).h_polynomial();
  CHECK(lifted.local_h() == expected);
  CHECK_THROWS_AS(t.lift_interior_vertex(0), std::invalid_argument);
}
