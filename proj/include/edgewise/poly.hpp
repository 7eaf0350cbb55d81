#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace edgewise {

/// Univariate polynomial with exact arbitrary-precision integer
/// coefficients, stored by ascending degree. Canonical form: the trailing
/// coefficient is nonzero, and the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const mpz_class& c);
  static IntPolynomial monomial(const mpz_class& c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^i; zero outside the stored range.
  const mpz_class& coeff(int i) const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  /// Exact evaluation at a rational point.
  mpq_class operator()(const mpq_class& t) const;
  mpz_class operator()(const mpz_class& t) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const mpz_class& c, const IntPolynomial& p);
  bool operator==(const IntPolynomial&) const = default;

  /// Human-readable form, e.g. "1 + 12x + 3x^2"; "0" for the zero polynomial.
  std::string str() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

IntPolynomial pow(const IntPolynomial& p, int e);
IntPolynomial derivative(const IntPolynomial& p);

/// 1 + x + ... + x^(k-1); the zero polynomial for k = 0.
IntPolynomial ones(int k);

/// Keeps only the coefficients of exponents divisible by r, contracting
/// x^(rk) to x^k. Linear; the identity for r = 1. Requires r >= 1.
IntPolynomial e_operator(const IntPolynomial& p, int r);

/// True iff coeff(i) == coeff(n-i) for all 0 <= i <= n, with coefficients
/// beyond the degree read as zero. The zero polynomial is palindromic for
/// every n.
bool is_palindromic(const IntPolynomial& p, int n);

/// Coefficients of a palindromic polynomial in the basis x^i (1+x)^(n-2i).
struct GammaVector {
  int n = 0;
  std::vector<mpz_class> xi;  // xi[i] for 0 <= i <= n/2

  /// Sum of xi[i] x^i (1+x)^(n-2i); reconstructs the expanded polynomial.
  IntPolynomial reconstruct() const;

  bool operator==(const GammaVector&) const = default;
};

/// Expands p in the basis x^i (1+x)^(n-2i) by peeling coefficients from the
/// low-degree end; the basis is triangular in this order, so the expansion
/// is exact and unique. Rejects non-palindromic input (the basis does not
/// span such polynomials). Entries may be negative for general input.
GammaVector gamma_expand(const IntPolynomial& p, int n);

/// Number of distinct real roots, computed exactly by Sturm sign-variation
/// counting on the square-free part over rational arithmetic. Rejects the
/// zero polynomial.
int real_root_count(const IntPolynomial& p);

/// True iff all complex roots of p are real, i.e. the number of real roots
/// counted with multiplicity equals the degree. The zero polynomial counts
/// as real-rooted (it has no non-real roots); local h-polynomials vanish
/// identically in degenerate cases, and those must stay inside the class.
bool is_real_rooted(const IntPolynomial& p);

/// Formal power series with exact integer coefficients, truncated at a
/// fixed order M (coefficients of x^0 .. x^M are stored, zeros included).
class TruncatedSeries {
 public:
  /// coeffs must be nonempty; order = coeffs.size() - 1.
  explicit TruncatedSeries(std::vector<mpz_class> coeffs);
  static TruncatedSeries of(const IntPolynomial& p, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const mpz_class& coeff(int i) const { return coeffs_[i]; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  /// Multiplicative inverse as a truncated series. The constant term must
  /// be +1 or -1 so that all coefficients stay integral.
  TruncatedSeries inverse() const;

  /// Product truncated at the smaller of the two orders.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  std::vector<mpz_class> coeffs_;
};

/// Coefficientwise equality through the common order; rejects mismatched
/// truncation orders.
bool series_equal(const TruncatedSeries& a, const TruncatedSeries& b);

mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace edgewise
