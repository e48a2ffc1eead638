#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace penney {

/// Exact unbounded rational; GMP keeps it canonical (den > 0, gcd 1).
using Rational = mpq_class;
using BigInt = mpz_class;

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& x);
Rational parse_rational(const std::string& text);
/// Twelve significant digits, for labelled approximate output only.
std::string to_decimal(const Rational& x, int digits = 12);

/// Polynomial in z over Q, ascending coefficients, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coefficients);
  explicit Polynomial(std::vector<Rational> coefficients);
  /// Constant polynomial.
  static Polynomial constant(const Rational& c);
  /// c * z^k
  static Polynomial monomial(std::size_t k, const Rational& c = 1);
  static Polynomial from_integers(const std::vector<long long>& coefficients);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t k) const;
  const Rational& leading() const { return coeffs_.back(); }
  /// Lowest-degree nonzero coefficient.
  const Rational& lowest() const;

  Rational evaluate(const Rational& x) const;
  Polynomial derivative() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial shifted(std::size_t k) const;  // * z^k
  Polynomial monic() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& quotient,
                     Polynomial& remainder);
  /// Monic gcd (zero only if both inputs are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);

  std::string to_string(char var = 'z') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// num/den reduced to lowest terms. The denominator's lowest-degree nonzero
/// coefficient is normalized to 1, so generating functions print as
/// (1 + z)/(1 - z - z^2). Equality is structural on the canonical form.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  RationalFunction(const Polynomial& num);  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction constant(const Rational& c) { return {Polynomial::constant(c)}; }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Throws PoleAtPoint when den(x) = 0.
  Rational evaluate(const Rational& x) const;
  RationalFunction derivative() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws SingularSystem on division by zero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(char var = 'z') const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

/// First n+1 Taylor coefficients at 0 via the recurrence induced by den.
/// Throws PoleAtZero if den(0) = 0.
std::vector<Rational> series_coefficients(const RationalFunction& f, std::size_t n);

using RFMatrix = std::vector<std::vector<RationalFunction>>;

/// Gaussian elimination over Q(z). Throws SingularSystem.
std::vector<RationalFunction> solve_linear_system(RFMatrix matrix,
                                                  std::vector<RationalFunction> rhs);

}  // namespace penney
