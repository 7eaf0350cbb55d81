#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edgewise/poly.hpp"

namespace edgewise {

/// A word (w_0,...,w_n) over the alphabet {0,...,r-1} with no two adjacent
/// entries equal and w_0 = w_n = 0. Indices are zero-based throughout, so
/// positions match the defining formulas with no offset.
struct SmirnovWord {
  std::vector<int> entries;
  int r = 0;

  SmirnovWord() = default;
  /// Validates the boundary zeros, the adjacency condition and the range.
  SmirnovWord(std::vector<int> entries, int r);

  int n() const { return static_cast<int>(entries.size()) - 1; }
  int operator[](int i) const { return entries[i]; }
  std::string str() const;  // "0,2,1,0"

  auto operator<=>(const SmirnovWord&) const = default;
};

/// Ascent/descent statistics. An ascent is an index i in {0,...,n-1} with
/// w_i < w_{i+1}; a double ascent is an index i in {1,...,n-1} with
/// w_{i-1} < w_i < w_{i+1}. Descents and double descents are dual.
struct WordStats {
  int ascents = 0;
  int descents = 0;
  std::vector<int> double_ascents;
  std::vector<int> double_descents;
};

WordStats word_stats(const SmirnovWord& w);
int ascent_count(const SmirnovWord& w);

/// All such words for the given n and r, in lexicographic order, by
/// backtracking. Empty for n = 1 (the boundary zeros would be adjacent).
std::vector<SmirnovWord> enumerate_words(int n, int r);

/// Ascent generating polynomial over all words: sum of x^asc(w).
IntPolynomial local_h_via_words(int n, int r);

/// The same polynomial by the closed formula: keep exponents divisible by
/// r in (x + x^2 + ... + x^(r-1))^n and contract.
IntPolynomial local_h_via_operator(int n, int r);

/// The same coefficients by a transfer-matrix recurrence over (last letter,
/// accumulated ascents); an enumeration-free counting route.
IntPolynomial local_h_via_transfer_matrix(int n, int r);

/// Ascent polynomial over all r^(n-1) unrestricted words (w_1,...,w_(n-1))
/// in {0,...,r-1}, with the convention w_0 = 0; equals the h-polynomial of
/// the r-fold edgewise subdivision of the (n-1)-simplex.
IntPolynomial h_via_words(int n, int r);

/// The two sides of the truncated-series identity: sum of
/// binomial(n+rm, n) x^m, and the ascent polynomial over {0,...,r-1}^n
/// (w_0 = 0 convention) divided by (1-x)^(n+1), both through order M.
std::pair<TruncatedSeries, TruncatedSeries> savage_sides(int n, int r, int order);

/// Coefficientwise equality of the two sides through order M.
bool savage_check(int n, int r, int order);

/// Left match at a double descent k: w_k is deleted and reinserted just
/// before position l, the largest index in [1, k) with w_(l-1) < w_k.
/// Defined only when w_l > w_k; the result has one more ascent. Rejects k
/// that is not a double descent.
std::optional<SmirnovWord> left_match(const SmirnovWord& w, int k);

/// Right match at a double ascent k: w_k is deleted and reinserted just
/// after position l, the smallest index in (k, n) with w_(l+1) < w_k.
/// Defined only when w_k < w_l; the result has one less ascent. Rejects k
/// that is not a double ascent.
std::optional<SmirnovWord> right_match(const SmirnovWord& w, int k);

/// Number of positions at which a left or right match is defined.
int match_count(const SmirnovWord& w);

/// True iff every double ascent k has a later double descent l with
/// w_k = w_l and w_k <= w_j for all k < j < l. These are exactly the words
/// with no right match, one per hop class.
bool is_canonical(const SmirnovWord& w);

/// True iff some double ascent of w admits a right match.
bool has_right_match(const SmirnovWord& w);

/// Equivalence class of a word under left/right matches. The class has
/// 2^m elements, where m is the match count of its canonical member, and
/// ascent polynomial x^asc(c) (1+x)^m.
struct HopClass {
  std::vector<SmirnovWord> members;  // sorted
  SmirnovWord canonical;

  IntPolynomial ascent_polynomial() const;
};

HopClass hop_class(const SmirnovWord& w);

/// All hop classes of the words for (n, r), ordered by canonical member.
std::vector<HopClass> hop_classes(int n, int r);

/// Coefficients of the local h-polynomial in the basis x^i (1+x)^(n-2i):
/// xi[i] counts the canonical words with exactly i ascents.
GammaVector xi_by_words(int n, int r);

/// The same coefficients by expanding the closed-formula polynomial.
GammaVector xi_by_gamma_expand(int n, int r);

}  // namespace edgewise
