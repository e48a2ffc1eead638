#include "penney/rational_series.hpp"

#include <sstream>
#include <utility>

#include "penney/errors.hpp"

namespace penney {

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational x;
  if (x.set_str(text, 10) != 0) throw InvalidArgument("not a rational: '" + text + "'");
  if (x.get_den() == 0) throw InvalidArgument("zero denominator in '" + text + "'");
  x.canonicalize();
  return x;
}

std::string to_decimal(const Rational& x, int digits) {
  mpf_class f(x, 256);
  mp_exp_t exponent = 0;
  std::string mantissa = f.get_str(exponent, 10, static_cast<std::size_t>(digits));
  if (mantissa.empty() || mantissa == "0") return "0";
  bool negative = mantissa.front() == '-';
  if (negative) mantissa.erase(0, 1);
  std::string out;
  if (exponent <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-exponent), '0') + mantissa;
  } else if (static_cast<std::size_t>(exponent) >= mantissa.size()) {
    out = mantissa + std::string(static_cast<std::size_t>(exponent) - mantissa.size(), '0');
  } else {
    out = mantissa.substr(0, static_cast<std::size_t>(exponent)) + "." +
          mantissa.substr(static_cast<std::size_t>(exponent));
  }
  return negative ? "-" + out : out;
}

// --- Polynomial ------------------------------------------------------------

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  trim();
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(std::size_t k, const Rational& c) {
  std::vector<Rational> coeffs(k + 1);
  coeffs[k] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::from_integers(const std::vector<long long>& coefficients) {
  std::vector<Rational> coeffs;
  coeffs.reserve(coefficients.size());
  for (long long c : coefficients) coeffs.emplace_back(mpz_class(std::to_string(c)));
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const Rational& Polynomial::lowest() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return c;
  }
  throw InvalidArgument("zero polynomial has no lowest coefficient");
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return {};
  std::vector<Rational> out(coeffs_);
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Rational> out(k);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return scaled(1 / leading());
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& quotient,
                        Polynomial& remainder) {
  if (b.is_zero()) throw SingularSystem("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs_;
  if (rem.size() < b.coeffs_.size()) {
    quotient = {};
    remainder = a;
    return;
  }
  std::vector<Rational> quot(rem.size() - b.coeffs_.size() + 1);
  const Rational& lead = b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational factor = rem[k + b.coeffs_.size() - 1] / lead;
    quot[k] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) rem[k + j] -= factor * b.coeffs_[j];
  }
  quotient = Polynomial(std::move(quot));
  remainder = Polynomial(std::move(rem));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial quotient, remainder;
    divmod(a, b, quotient, remainder);
    a = std::move(b);
    b = remainder.monic();
  }
  return a.monic();
}

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || magnitude != 1) out << penney::to_string(magnitude);
    if (k > 0) {
      if (magnitude != 1) out << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

// --- RationalFunction ------------------------------------------------------

RationalFunction::RationalFunction(const Polynomial& num)
    : num_(num), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw SingularSystem("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  Polynomial g = Polynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    Polynomial quotient, remainder;
    Polynomial::divmod(num_, g, quotient, remainder);
    num_ = std::move(quotient);
    Polynomial::divmod(den_, g, quotient, remainder);
    den_ = std::move(quotient);
  }
  Rational scale = 1 / den_.lowest();
  num_ = num_.scaled(scale);
  den_ = den_.scaled(scale);
}

Rational RationalFunction::evaluate(const Rational& x) const {
  Rational d = den_.evaluate(x);
  if (d == 0) throw PoleAtPoint("pole at z = " + penney::to_string(x));
  return num_.evaluate(x) / d;
}

RationalFunction RationalFunction::derivative() const {
  return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw SingularSystem("division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

std::string RationalFunction::to_string(char var) const {
  if (den_ == Polynomial::constant(1)) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

// --- series and linear systems --------------------------------------------

std::vector<Rational> series_coefficients(const RationalFunction& f, std::size_t n) {
  const Polynomial& den = f.den();
  const Rational d0 = den.coefficient(0);
  if (d0 == 0) throw PoleAtZero("denominator vanishes at z = 0");
  std::vector<Rational> out(n + 1);
  const auto& dc = den.coefficients();
  for (std::size_t k = 0; k <= n; ++k) {
    Rational acc = f.num().coefficient(k);
    for (std::size_t j = 1; j < dc.size() && j <= k; ++j) acc -= dc[j] * out[k - j];
    out[k] = acc / d0;
  }
  return out;
}

std::vector<RationalFunction> solve_linear_system(RFMatrix matrix,
                                                  std::vector<RationalFunction> rhs) {
  const std::size_t n = matrix.size();
  if (rhs.size() != n) throw InvalidArgument("right-hand side size mismatch");
  for (const auto& row : matrix) {
    if (row.size() != n) throw InvalidArgument("matrix must be square");
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && matrix[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw SingularSystem("matrix is singular over Q(z)");
    std::swap(matrix[pivot], matrix[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      if (matrix[row][col].is_zero()) continue;
      RationalFunction factor = matrix[row][col] / matrix[col][col];
      for (std::size_t k = col; k < n; ++k) matrix[row][k] = matrix[row][k] - factor * matrix[col][k];
      rhs[row] = rhs[row] - factor * rhs[col];
    }
  }
  std::vector<RationalFunction> x(n);
  for (std::size_t row = n; row-- > 0;) {
    RationalFunction acc = rhs[row];
    for (std::size_t k = row + 1; k < n; ++k) acc = acc - matrix[row][k] * x[k];
    x[row] = acc / matrix[row][row];
  }
  return x;
}

}  // namespace penney
