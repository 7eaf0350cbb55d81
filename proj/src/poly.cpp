#include "edgewise/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace edgewise {

namespace {
const mpz_class kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.assign(coeffs.begin(), coeffs.end());
  trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) {
  IntPolynomial p;
  if (c != 0) p.coeffs_.push_back(c);
  return p;
}

IntPolynomial IntPolynomial::monomial(const mpz_class& c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  IntPolynomial p;
  if (c != 0) {
    p.coeffs_.assign(degree + 1, 0);
    p.coeffs_[degree] = c;
  }
  return p;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[i];
}

mpq_class IntPolynomial::operator()(const mpq_class& t) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

mpz_class IntPolynomial::operator()(const mpz_class& t) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntPolynomial r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  r.trim();
  return r;
}

IntPolynomial operator*(const mpz_class& c, const IntPolynomial& p) {
  IntPolynomial r = p;
  for (auto& x : r.coeffs_) x *= c;
  r.trim();
  return r;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) { return *this = *this * o; }

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || i == 0) out << a.get_str();
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

IntPolynomial pow(const IntPolynomial& p, int e) {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  IntPolynomial r{1};
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

IntPolynomial derivative(const IntPolynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<mpz_class> c(p.degree());
  for (int i = 1; i <= p.degree(); ++i) c[i - 1] = i * p.coeff(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial ones(int k) {
  if (k < 0) throw std::invalid_argument("ones: negative length");
  return IntPolynomial(std::vector<mpz_class>(k, 1));
}

IntPolynomial e_operator(const IntPolynomial& p, int r) {
  if (r < 1) throw std::invalid_argument("e_operator: r must be >= 1");
  std::vector<mpz_class> c;
  for (int k = 0; r * k <= p.degree(); ++k) c.push_back(p.coeff(r * k));
  return IntPolynomial(std::move(c));
}

bool is_palindromic(const IntPolynomial& p, int n) {
  if (n < 0) throw std::invalid_argument("is_palindromic: n must be >= 0");
  if (p.degree() > n) return false;
  for (int i = 0; 2 * i <= n; ++i)
    if (p.coeff(i) != p.coeff(n - i)) return false;
  return true;
}

IntPolynomial GammaVector::reconstruct() const {
  IntPolynomial acc;
  for (size_t i = 0; i < xi.size(); ++i)
    acc += xi[i] * (IntPolynomial::monomial(1, static_cast<int>(i)) *
                    pow(IntPolynomial{1, 1}, n - 2 * static_cast<int>(i)));
  return acc;
}

GammaVector gamma_expand(const IntPolynomial& p, int n) {
  if (!is_palindromic(p, n))
    throw std::domain_error("gamma_expand: polynomial is not palindromic for n = " + std::to_string(n));
  GammaVector g;
  g.n = n;
  g.xi.assign(n / 2 + 1, 0);
  IntPolynomial rest = p;
  for (int i = 0; 2 * i <= n; ++i) {
    g.xi[i] = rest.coeff(i);
    if (g.xi[i] != 0)
      rest -= g.xi[i] * (IntPolynomial::monomial(1, i) * pow(IntPolynomial{1, 1}, n - 2 * i));
  }
  if (!rest.is_zero()) throw std::domain_error("gamma_expand: expansion did not terminate");
  return g;
}

// ---------------------------------------------------------------------------
// Exact real-root counting (Sturm chains over rational coefficients).

namespace {

using RatPoly = std::vector<mpq_class>;  // ascending degree, trailing entry nonzero

void rat_trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPolynomial& p) {
  RatPoly r(p.coeffs().begin(), p.coeffs().end());
  return r;
}

int rat_deg(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly rat_derivative(const RatPoly& p) {
  if (rat_deg(p) < 1) return {};
  RatPoly d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = static_cast<long>(i) * p[i];
  return d;
}

// Remainder of a by b; b nonzero.
RatPoly rat_rem(RatPoly a, const RatPoly& b) {
  while (rat_deg(a) >= rat_deg(b)) {
    mpq_class q = a.back() / b.back();
    int shift = rat_deg(a) - rat_deg(b);
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
    a.pop_back();
    rat_trim(a);
    if (a.empty()) break;
  }
  return a;
}

// Exact quotient of a by b (remainder known to vanish).
RatPoly rat_div_exact(RatPoly a, const RatPoly& b) {
  RatPoly q(std::max<size_t>(1, a.size() - b.size() + 1), 0);
  while (rat_deg(a) >= rat_deg(b)) {
    mpq_class c = a.back() / b.back();
    int shift = rat_deg(a) - rat_deg(b);
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    rat_trim(a);
    if (a.empty()) break;
  }
  rat_trim(q);
  return q;
}

RatPoly rat_monic(RatPoly p) {
  if (p.empty()) return p;
  mpq_class lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    RatPoly r = rat_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return rat_monic(std::move(a));
}

RatPoly squarefree_part(const RatPoly& p) {
  RatPoly d = rat_derivative(p);
  if (d.empty()) return rat_monic(p);  // constants
  RatPoly g = rat_gcd(p, d);
  if (rat_deg(g) == 0) return rat_monic(p);
  return rat_monic(rat_div_exact(p, g));
}

// Number of distinct real roots of a square-free polynomial: sign
// variations of the Sturm chain at -infinity minus at +infinity.
int sturm_distinct_roots(const RatPoly& q) {
  if (rat_deg(q) <= 0) return 0;
  std::vector<RatPoly> chain{q, rat_derivative(q)};
  while (!chain.back().empty() && rat_deg(chain.back()) > 0) {
    RatPoly r = rat_rem(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  auto variations = [&](bool at_plus_infinity) {
    int var = 0, prev = 0;
    for (const RatPoly& f : chain) {
      int s = sgn(f.back());
      if (!at_plus_infinity && rat_deg(f) % 2 == 1) s = -s;
      if (prev != 0 && s != 0 && s != prev) ++var;
      if (s != 0) prev = s;
    }
    return var;
  };
  return variations(false) - variations(true);
}

}  // namespace

int real_root_count(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("real_root_count: zero polynomial");
  return sturm_distinct_roots(squarefree_part(to_rat(p)));
}

bool is_real_rooted(const IntPolynomial& p) {
  if (p.is_zero()) return true;  // vacuous: no non-real roots
  // A polynomial has only real roots iff its square-free part does, and a
  // square-free polynomial has only real roots iff the distinct-real-root
  // count reaches its degree.
  RatPoly q = squarefree_part(to_rat(p));
  return sturm_distinct_roots(q) == rat_deg(q);
}

// ---------------------------------------------------------------------------

TruncatedSeries::TruncatedSeries(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient list");
}

TruncatedSeries TruncatedSeries::of(const IntPolynomial& p, int order) {
  if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
  std::vector<mpz_class> c(order + 1);
  for (int i = 0; i <= order; ++i) c[i] = p.coeff(i);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coeffs_[0] != 1 && coeffs_[0] != -1)
    throw std::domain_error("TruncatedSeries::inverse: constant term must be +-1");
  std::vector<mpz_class> b(coeffs_.size());
  b[0] = coeffs_[0];  // 1/(+-1)
  for (size_t k = 1; k < coeffs_.size(); ++k) {
    mpz_class acc = 0;
    for (size_t j = 1; j <= k; ++j) acc += coeffs_[j] * b[k - j];
    b[k] = -coeffs_[0] * acc;
  }
  return TruncatedSeries(std::move(b));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  int order = std::min(a.order(), b.order());
  std::vector<mpz_class> c(order + 1, 0);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order && j <= b.order(); ++j) c[i + j] += a.coeff(i) * b.coeff(j);
  return TruncatedSeries(std::move(c));
}

bool series_equal(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("series_equal: mismatched truncation orders");
  return a.coeffs() == b.coeffs();
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace edgewise
