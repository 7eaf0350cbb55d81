#include "edgewise/smirnov.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace edgewise {

SmirnovWord::SmirnovWord(std::vector<int> e, int alphabet) : entries(std::move(e)), r(alphabet) {
  if (entries.size() < 2) throw std::invalid_argument("SmirnovWord: need n >= 1");
  if (entries.front() != 0 || entries.back() != 0)
    throw std::invalid_argument("SmirnovWord: first and last entry must be 0");
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0 || entries[i] >= r) throw std::invalid_argument("SmirnovWord: entry out of range");
    if (i && entries[i] == entries[i - 1])
      throw std::invalid_argument("SmirnovWord: adjacent entries equal");
  }
}

std::string SmirnovWord::str() const {
  std::ostringstream out;
  for (size_t i = 0; i < entries.size(); ++i) out << (i ? "," : "") << entries[i];
  return out.str();
}

WordStats word_stats(const SmirnovWord& w) {
  WordStats s;
  int n = w.n();
  for (int i = 0; i < n; ++i)
    (w[i] < w[i + 1] ? s.ascents : s.descents)++;
  for (int i = 1; i < n; ++i) {
    if (w[i - 1] < w[i] && w[i] < w[i + 1]) s.double_ascents.push_back(i);
    if (w[i - 1] > w[i] && w[i] > w[i + 1]) s.double_descents.push_back(i);
  }
  return s;
}

int ascent_count(const SmirnovWord& w) {
  int asc = 0;
  for (int i = 0; i < w.n(); ++i)
    if (w[i] < w[i + 1]) ++asc;
  return asc;
}

std::vector<SmirnovWord> enumerate_words(int n, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("enumerate_words: n and r must be >= 1");
  std::vector<SmirnovWord> out;
  std::vector<int> entries(n + 1, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      if (entries[n - 1] != 0) out.push_back(SmirnovWord(entries, r));
      return;
    }
    for (int v = 0; v < r; ++v) {
      if (v == entries[pos - 1]) continue;
      entries[pos] = v;
      self(self, pos + 1);
    }
  };
  if (n == 1) return out;  // (0,0) violates adjacency
  rec(rec, 1);
  return out;
}

IntPolynomial local_h_via_words(int n, int r) {
  IntPolynomial acc;
  for (const SmirnovWord& w : enumerate_words(n, r))
    acc += IntPolynomial::monomial(1, ascent_count(w));
  return acc;
}

IntPolynomial local_h_via_operator(int n, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("local_h_via_operator: n and r must be >= 1");
  IntPolynomial inner;  // x + x^2 + ... + x^(r-1)
  for (int k = 1; k <= r - 1; ++k) inner += IntPolynomial::monomial(1, k);
  return e_operator(pow(inner, n), r);
}

IntPolynomial local_h_via_transfer_matrix(int n, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("local_h_via_transfer_matrix: n and r must be >= 1");
  // state[c] = ascent polynomial over valid prefixes (w_0,...,w_i) ending
  // in letter c; step appends one letter, weighting ascents by x.
  std::vector<IntPolynomial> state(r);
  state[0] = IntPolynomial{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<IntPolynomial> next(r);
    for (int c = 0; c < r; ++c) {
      IntPolynomial acc;
      for (int b = 0; b < r; ++b) {
        if (b == c || state[b].is_zero()) continue;
        acc += b < c ? state[b] * IntPolynomial{0, 1} : state[b];
      }
      next[c] = std::move(acc);
    }
    state = std::move(next);
  }
  return state[0];
}

IntPolynomial h_via_words(int n, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("h_via_words: n and r must be >= 1");
  IntPolynomial acc;
  std::vector<int> w(n);  // w[0] is the conventional leading zero
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      int asc = 0;
      for (int i = 0; i + 1 < n; ++i)
        if (w[i] < w[i + 1]) ++asc;
      acc += IntPolynomial::monomial(1, asc);
      return;
    }
    for (int v = 0; v < r; ++v) {
      w[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 1);
  return acc;
}

std::pair<TruncatedSeries, TruncatedSeries> savage_sides(int n, int r, int order) {
  if (n < 1 || r < 1 || order < 0) throw std::invalid_argument("savage_sides: bad parameters");
  std::vector<mpz_class> lhs(order + 1);
  for (int m = 0; m <= order; ++m)
    lhs[m] = binomial(static_cast<unsigned long>(n) + static_cast<unsigned long>(r) * m, n);

  // Ascent polynomial over {0,...,r-1}^n with the w_0 = 0 convention.
  IntPolynomial asc_poly;
  std::vector<int> w(n + 1, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n + 1) {
      int asc = 0;
      for (int i = 0; i < n; ++i)
        if (w[i] < w[i + 1]) ++asc;
      asc_poly += IntPolynomial::monomial(1, asc);
      return;
    }
    for (int v = 0; v < r; ++v) {
      w[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 1);

  TruncatedSeries rhs = TruncatedSeries::of(asc_poly, order) *
                        TruncatedSeries::of(pow(IntPolynomial{1, -1}, n + 1), order).inverse();
  return {TruncatedSeries(std::move(lhs)), std::move(rhs)};
}

bool savage_check(int n, int r, int order) {
  auto [lhs, rhs] = savage_sides(n, r, order);
  return series_equal(lhs, rhs);
}

std::optional<SmirnovWord> left_match(const SmirnovWord& w, int k) {
  WordStats s = word_stats(w);
  if (std::find(s.double_descents.begin(), s.double_descents.end(), k) == s.double_descents.end())
    throw std::invalid_argument("left_match: k is not a double descent");
  int l = -1;
  for (int i = k - 1; i >= 1; --i) {
    if (w[i - 1] < w[k]) {
      l = i;
      break;
    }
  }
  // l exists because w_0 = 0 < w_k, and w_l >= w_k by choice of l.
  if (w[l] == w[k]) return std::nullopt;
  std::vector<int> e = w.entries;
  for (int i = k; i > l; --i) e[i] = e[i - 1];
  e[l] = w[k];
  return SmirnovWord(std::move(e), w.r);
}

std::optional<SmirnovWord> right_match(const SmirnovWord& w, int k) {
  WordStats s = word_stats(w);
  if (std::find(s.double_ascents.begin(), s.double_ascents.end(), k) == s.double_ascents.end())
    throw std::invalid_argument("right_match: k is not a double ascent");
  int n = w.n();
  int l = -1;
  for (int i = k + 1; i < n; ++i) {
    if (w[i + 1] < w[k]) {
      l = i;
      break;
    }
  }
  // l exists because w_n = 0 < w_k, and w_l >= w_k by choice of l.
  if (w[l] == w[k]) return std::nullopt;
  std::vector<int> e = w.entries;
  for (int i = k; i < l; ++i) e[i] = e[i + 1];
  e[l] = w[k];
  return SmirnovWord(std::move(e), w.r);
}

int match_count(const SmirnovWord& w) {
  WordStats s = word_stats(w);
  int m = 0;
  for (int k : s.double_descents)
    if (left_match(w, k)) ++m;
  for (int k : s.double_ascents)
    if (right_match(w, k)) ++m;
  return m;
}

bool is_canonical(const SmirnovWord& w) {
  WordStats s = word_stats(w);
  for (int k : s.double_ascents) {
    bool matched = false;
    for (int l : s.double_descents) {
      if (l <= k || w[l] != w[k]) continue;
      bool floor_ok = true;
      for (int j = k + 1; j < l; ++j)
        if (w[j] < w[k]) {
          floor_ok = false;
          break;
        }
      if (floor_ok) {
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

bool has_right_match(const SmirnovWord& w) {
  for (int k : word_stats(w).double_ascents)
    if (right_match(w, k)) return true;
  return false;
}

IntPolynomial HopClass::ascent_polynomial() const {
  IntPolynomial acc;
  for (const SmirnovWord& w : members) acc += IntPolynomial::monomial(1, ascent_count(w));
  return acc;
}

HopClass hop_class(const SmirnovWord& w) {
  std::set<SmirnovWord> seen{w};
  std::vector<SmirnovWord> queue{w};
  while (!queue.empty()) {
    SmirnovWord cur = std::move(queue.back());
    queue.pop_back();
    WordStats s = word_stats(cur);
    auto visit = [&](std::optional<SmirnovWord> next) {
      if (next && seen.insert(*next).second) queue.push_back(std::move(*next));
    };
    for (int k : s.double_descents) visit(left_match(cur, k));
    for (int k : s.double_ascents) visit(right_match(cur, k));
  }
  HopClass cls;
  cls.members.assign(seen.begin(), seen.end());
  std::vector<const SmirnovWord*> without_right_match;
  for (const SmirnovWord& m : cls.members)
    if (!has_right_match(m)) without_right_match.push_back(&m);
  if (without_right_match.size() != 1)
    throw std::logic_error("hop_class: expected exactly one member with no right match");
  cls.canonical = *without_right_match.front();
  return cls;
}

std::vector<HopClass> hop_classes(int n, int r) {
  std::vector<HopClass> classes;
  std::set<SmirnovWord> assigned;
  for (const SmirnovWord& w : enumerate_words(n, r)) {
    if (assigned.count(w)) continue;
    HopClass cls = hop_class(w);
    assigned.insert(cls.members.begin(), cls.members.end());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const HopClass& a, const HopClass& b) { return a.canonical < b.canonical; });
  return classes;
}

GammaVector xi_by_words(int n, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("xi_by_words: n and r must be >= 1");
  GammaVector g;
  g.n = n;
  g.xi.assign(n / 2 + 1, 0);
  for (const SmirnovWord& w : enumerate_words(n, r)) {
    if (!is_canonical(w)) continue;
    int asc = ascent_count(w);
    if (2 * asc > n) throw std::logic_error("xi_by_words: canonical word with too many ascents");
    ++g.xi[asc];
  }
  return g;
}

GammaVector xi_by_gamma_expand(int n, int r) {
  return gamma_expand(local_h_via_operator(n, r), n);
}

}  // namespace edgewise
