#pragma once

#include <map>
#include <string>
#include <vector>

namespace edgewise::checks {

/// One grid cell of a check: the parameters, whether it passed, and a
/// concrete witness (word, subset, polynomial, ...) when it failed.
struct CheckCell {
  std::map<std::string, long> params;
  bool pass = true;
  std::string witness;  // nonempty iff !pass
};

struct CheckReport {
  std::string name;
  std::vector<CheckCell> cells;

  bool all_pass() const;
  std::string first_witness() const;
};

/// Golden values for the 4-fold subdivision of the 2-simplex: f-vector
/// (1,15,30,16), h = 1 + 12x + 3x^2 and local h = 3x + 3x^2 computed by the
/// definitional signed sum over restrictions.
CheckReport golden(void);

/// Triple agreement of the local h-polynomial of the subdivided simplex:
/// definitional signed sum = closed formula = ascent polynomial over the
/// words, for all 1 <= n <= n_max, 1 <= r <= r_max.
CheckReport theorem1(int n_max, int r_max);

/// h-polynomial of the subdivided simplex: face enumeration = closed
/// formula = ascent polynomial over unrestricted words, on the same grid.
CheckReport h_formulas(int n_max, int r_max);

/// The h-polynomial identity for subdivisions of general complexes, on a
/// fixed suite of small complexes and the given subdivision depths.
CheckReport general_complexes(const std::vector<int>& rs);

/// Gamma coefficients by canonical-word counting agree with the basis
/// expansion, are nonnegative, and re-sum to the local h-polynomial.
CheckReport gamma_agreement(int n_max, int r_max);

/// Hop classes partition the words; class sizes are 2^m with m the match
/// count of the unique canonical member, and m = n - 2 asc on canonicals.
CheckReport hop_structure(int n_max, int r_max);

/// The binomial/ascent truncated-series identity through the given order.
CheckReport savage(int n_max, int r_max, int order);

/// For every interior vertex p of the subdivided simplex, the cone-plus-
/// stellar lift satisfies local_h = x * h(link(p)); cells without interior
/// vertices pass vacuously.
CheckReport interior_lift(int n_max, int r_max);

/// Structural properties of every triangulation constructed in the suite
/// (subdivided simplices, cones, stellar lifts, interior-vertex lifts):
/// local h palindromic with nonnegative coefficients and degree <= n-1,
/// vanishing on cones, flagness preserved. Stellar-lift edges are drawn
/// from a seeded generator.
CheckReport structural(int n_max, int r_max, unsigned seed);

/// Real-rootedness of the local h-polynomials for 2 <= n <= n_max,
/// 2 <= r <= r_max, plus a sanity cell: 1 + x + x^2 is not real-rooted.
CheckReport real_rootedness(int n_max, int r_max);

}  // namespace edgewise::checks
