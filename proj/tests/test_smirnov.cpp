#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "edgewise/smirnov.hpp"
#include "edgewise/subdivision.hpp"

using namespace edgewise;

namespace {

SmirnovWord word(std::vector<int> entries, int r) { return SmirnovWord(std::move(entries), r); }

}  // namespace

TEST_CASE("word validation") {
  CHECK_THROWS_AS(word({0, 0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(word({0, 1, 1, 0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(word({0, 2, 0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(word({1, 0, 1}, 2), std::invalid_argument);
  CHECK(word({0, 1, 0}, 2).n() == 2);
  CHECK(word({0, 2, 1, 0}, 3).str() == "0,2,1,0");
}

TEST_CASE("enumeration") {
  CHECK(enumerate_words(1, 5).empty());
  CHECK(enumerate_words(2, 4) ==
        std::vector<SmirnovWord>{word({0, 1, 0}, 4), word({0, 2, 0}, 4), word({0, 3, 0}, 4)});

  auto s34 = enumerate_words(3, 4);
  CHECK(s34.size() == 6);
  std::map<int, int> by_ascents;
  for (const SmirnovWord& w : s34) ++by_ascents[ascent_count(w)];
  CHECK(by_ascents == std::map<int, int>{{1, 3}, {2, 3}});

  CHECK(std::is_sorted(s34.begin(), s34.end()));
  CHECK(enumerate_words(4, 1).empty());
}

TEST_CASE("word statistics") {
  WordStats s = word_stats(word({0, 2, 1, 2, 1, 0, 1, 2, 1, 0}, 3));
  CHECK(s.ascents == 4);
  CHECK(s.descents == 5);
  CHECK(s.double_ascents == std::vector<int>{6});
  CHECK(s.double_descents == std::vector<int>{4, 8});

  // adjacent entries always differ, so asc + des = n, and both ends force
  // at least one of each
  for (const SmirnovWord& w : enumerate_words(5, 3)) {
    WordStats st = word_stats(w);
    CHECK(st.ascents + st.descents == w.n());
    CHECK(st.ascents >= 1);
    CHECK(st.descents >= 1);
  }
}

TEST_CASE("three routes to the local h-polynomial agree") {
  for (int n = 1; n <= 6; ++n) {
    for (int r = 1; r <= 4; ++r) {
      IntPolynomial by_words = local_h_via_words(n, r);
      CHECK(by_words == local_h_via_operator(n, r));
      CHECK(by_words == local_h_via_transfer_matrix(n, r));
    }
  }
  CHECK(local_h_via_words(2, 5) == IntPolynomial{0, 4});        // (r-1) x
  CHECK(local_h_via_words(4, 2) == IntPolynomial{0, 0, 1});     // only (0,1,0,1,0)
  CHECK(local_h_via_operator(5, 1).is_zero());
  CHECK(local_h_via_operator(5, 3) == IntPolynomial{0, 0, 5, 5});
}

TEST_CASE("h-polynomial from unrestricted words") {
  CHECK(h_via_words(3, 4) == IntPolynomial{1, 12, 3});
  CHECK(h_via_words(1, 7) == IntPolynomial{1});
  CHECK(h_via_words(2, 3) == IntPolynomial{1, 2});
  for (int n = 1; n <= 5; ++n)
    for (int r = 1; r <= 4; ++r)
      CHECK(h_via_words(n, r) == esd_simplex(n, r).complex().h_polynomial());
}

TEST_CASE("binomial series identity") {
  CHECK(savage_check(1, 2, 5));
  CHECK(savage_check(2, 3, 6));
  CHECK(savage_check(3, 2, 6));
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 4; ++r) CHECK(savage_check(n, r, 8));
}

TEST_CASE("left match") {
  SmirnovWord w = word({0, 2, 1, 2, 1, 0, 1, 2, 1, 0}, 3);
  auto matched = left_match(w, 4);
  REQUIRE(matched);
  CHECK(*matched == word({0, 1, 2, 1, 2, 0, 1, 2, 1, 0}, 3));
  CHECK(ascent_count(*matched) == ascent_count(w) + 1);

  // the inverse right match restores the original
  auto restored = right_match(*matched, 1);
  REQUIRE(restored);
  CHECK(*restored == w);

  auto simple = left_match(word({0, 2, 1, 0}, 3), 2);
  REQUIRE(simple);
  CHECK(*simple == word({0, 1, 2, 0}, 3));

  CHECK_THROWS_AS(left_match(word({0, 1, 0}, 2), 1), std::invalid_argument);
}

TEST_CASE("right match") {
  auto m = right_match(word({0, 1, 2, 3, 0}, 4), 1);
  REQUIRE(m);
  CHECK(*m == word({0, 2, 3, 1, 0}, 4));

  // no double ascents, no right matches
  CHECK_FALSE(has_right_match(word({0, 2, 1, 0}, 3)));
  CHECK_THROWS_AS(right_match(word({0, 2, 1, 0}, 3), 1), std::invalid_argument);
}

TEST_CASE("matches are mutually inverse") {
  for (int n = 2; n <= 6; ++n) {
    for (int r = 2; r <= 4; ++r) {
      for (const SmirnovWord& w : enumerate_words(n, r)) {
        WordStats s = word_stats(w);
        for (int k : s.double_descents) {
          auto m = left_match(w, k);
          if (!m) continue;
          CHECK(ascent_count(*m) == ascent_count(w) + 1);
          bool inverse_found = false;
          for (int k2 : word_stats(*m).double_ascents) {
            auto back = right_match(*m, k2);
            if (back && *back == w) inverse_found = true;
          }
          CHECK(inverse_found);
        }
        for (int k : s.double_ascents) {
          auto m = right_match(w, k);
          if (!m) continue;
          CHECK(ascent_count(*m) == ascent_count(w) - 1);
          bool inverse_found = false;
          for (int k2 : word_stats(*m).double_descents) {
            auto back = left_match(*m, k2);
            if (back && *back == w) inverse_found = true;
          }
          CHECK(inverse_found);
        }
      }
    }
  }
}

TEST_CASE("canonical words") {
  CHECK(is_canonical(word({0, 2, 1, 0}, 3)));
  CHECK(is_canonical(word({0, 1, 2, 1, 0}, 3)));
  CHECK_FALSE(is_canonical(word({0, 1, 2, 0}, 3)));

  // the structural condition is the no-right-match condition
  for (int n = 2; n <= 6; ++n)
    for (int r = 2; r <= 4; ++r)
      for (const SmirnovWord& w : enumerate_words(n, r))
        CHECK(is_canonical(w) == !has_right_match(w));
}

TEST_CASE("match counts") {
  CHECK(match_count(word({0, 1, 0}, 2)) == 0);
  CHECK(match_count(word({0, 2, 1, 2, 1, 0, 1, 2, 1, 0}, 3)) == 1);

  // m = des - asc = n - 2 asc on canonical words
  for (int n = 2; n <= 6; ++n) {
    for (int r = 2; r <= 4; ++r) {
      for (const SmirnovWord& w : enumerate_words(n, r)) {
        if (!is_canonical(w)) continue;
        WordStats s = word_stats(w);
        CHECK(match_count(w) == s.descents - s.ascents);
        CHECK(match_count(w) == n - 2 * s.ascents);
      }
    }
  }
}

TEST_CASE("hop classes") {
  HopClass cls = hop_class(word({0, 2, 1, 2, 1, 0, 1, 2, 1, 0}, 3));
  CHECK(cls.members.size() == 2);
  CHECK(cls.canonical == word({0, 2, 1, 2, 1, 0, 1, 2, 1, 0}, 3));
  CHECK(cls.ascent_polynomial() == IntPolynomial{0, 0, 0, 0, 1, 1});  // x^4 (1+x)

  HopClass singleton = hop_class(word({0, 1, 0}, 2));
  CHECK(singleton.members.size() == 1);
  CHECK(singleton.ascent_polynomial() == IntPolynomial{0, 1});
}

TEST_CASE("hop classes partition the words") {
  for (int n = 2; n <= 6; ++n) {
    for (int r = 2; r <= 4; ++r) {
      auto words = enumerate_words(n, r);
      auto classes = hop_classes(n, r);
      std::set<SmirnovWord> seen;
      IntPolynomial total;
      for (const HopClass& cls : classes) {
        int m = match_count(cls.canonical);
        CHECK(cls.members.size() == (size_t{1} << m));
        CHECK(is_canonical(cls.canonical));
        CHECK(cls.ascent_polynomial() ==
              IntPolynomial::monomial(1, ascent_count(cls.canonical)) *
                  pow(IntPolynomial{1, 1}, m));
        for (const SmirnovWord& w : cls.members) CHECK(seen.insert(w).second);
        total += cls.ascent_polynomial();
      }
      CHECK(seen.size() == words.size());
      CHECK(total == local_h_via_operator(n, r));
    }
  }
  // the class polynomials of S(5,3) sum to 5x^2 + 5x^3
  IntPolynomial total;
  for (const HopClass& cls : hop_classes(5, 3)) total += cls.ascent_polynomial();
  CHECK(total == IntPolynomial{0, 0, 5, 5});
}

TEST_CASE("gamma coefficients") {
  CHECK(xi_by_words(3, 4).xi == std::vector<mpz_class>{0, 3});
  CHECK(xi_by_words(4, 2).xi == std::vector<mpz_class>{0, 0, 1});
  CHECK(xi_by_words(5, 1).xi == std::vector<mpz_class>{0, 0, 0});

  for (int n = 1; n <= 7; ++n) {
    for (int r = 1; r <= 4; ++r) {
      GammaVector by_words = xi_by_words(n, r);
      CHECK(by_words == xi_by_gamma_expand(n, r));
      CHECK(by_words.reconstruct() == local_h_via_operator(n, r));
    }
  }
}

TEST_CASE("evaluation at -1 counts middle-ascent canonical words") {
  for (int n = 1; n <= 10; ++n) {
    for (int r = 1; r <= 4; ++r) {
      mpq_class value = local_h_via_operator(n, r)(mpq_class(-1));
      if (n % 2 == 1) {
        CHECK(value == 0);
      } else {
        mpz_class count = 0;
        for (const SmirnovWord& w : enumerate_words(n, r))
          if (is_canonical(w) && ascent_count(w) == n / 2) ++count;
        mpq_class expected = (n / 2) % 2 ? -count : count;
        CHECK(value == expected);
      }
    }
  }
}
