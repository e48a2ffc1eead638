#include <doctest.h>

#include <random>

#include "penney/errors.hpp"
#include "penney/genfunc.hpp"
#include "penney/rational_series.hpp"
#include "support.hpp"

using namespace penney;
using namespace penney::test;

namespace {

Polynomial P(std::vector<long long> c) { return Polynomial::from_integers(c); }
RationalFunction F(std::vector<long long> num, std::vector<long long> den) {
  return RationalFunction(P(num), P(den));
}
std::vector<Rational> ints(std::vector<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("rational printing and parsing") {
  CHECK(to_string(rat("35/3")) == "35/3");
  CHECK(to_string(rat("40/2")) == "20");
  CHECK(to_string(rat("-2/4")) == "-1/2");
  CHECK(to_decimal(rat("9/14")) == "0.642857142857");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("x"), InvalidArgument);
}

TEST_CASE("polynomial arithmetic") {
  auto a = P({1, 1});
  auto b = P({1, -1});
  CHECK(a * b == P({1, 0, -1}));
  CHECK(a - a == Polynomial());
  CHECK(P({0, 0, 3}).derivative() == P({0, 6}));
  CHECK(Polynomial::constant(5).derivative().is_zero());
  CHECK(Polynomial::gcd(P({-1, 0, 1}), P({1, 2, 1})) == P({1, 1}));
  Polynomial q, r;
  Polynomial::divmod(P({1, 0, 0, 1}), P({1, 1}), q, r);
  CHECK(q == P({1, -1, 1}));
  CHECK(r.is_zero());
  CHECK(P({1, 0, 1}).to_string() == "1 + z^2");
}

TEST_CASE("rational functions normalize") {
  CHECK(F({2, 2}, {2, -2, -2}) == F({1, 1}, {1, -1, -1}));
  // (1+z)(1-z) / (1-z)^2 reduces.
  CHECK(F({1, 0, -1}, {1, -2, 1}) == F({1, 1}, {1, -1}));
  CHECK(F({0, 0, 2}, {0, 1}) == F({0, 2}, {1}));
  CHECK(F({1, 1}, {1, -1, -1}).to_string() == "(1 + z)/(1 - z - z^2)");
  CHECK_THROWS_AS(F({1}, {}), SingularSystem);
}

TEST_CASE("evaluation") {
  CHECK(F({1, 1}, {1, -1, -1}).evaluate(0) == 1);
  // z^4 / (z^4 + (1-2z)(1+z^2))
  auto first = F({0, 0, 0, 0, 1}, {1, -2, 1, -2, 1});
  CHECK(first.evaluate(rat("1/2")) == 1);
  CHECK_THROWS_AS(F({1}, {1, -1}).evaluate(1), PoleAtPoint);
  // Expected wait of HTHT through the derivative.
  auto g = closed_form_single(word("HTHT", 2), 2).first_occurrence[0];
  CHECK(g.derivative().evaluate(rat("1/2")) * rat("1/2") == 20);
}

TEST_CASE("differentiation") {
  CHECK(RationalFunction::constant(3).derivative().is_zero());
  CHECK(RationalFunction(Polynomial::monomial(5)).derivative() ==
        RationalFunction(Polynomial::monomial(4, 5)));
  // d/dz 1/(1-z) = 1/(1-z)^2
  CHECK(F({1}, {1, -1}).derivative() == F({1}, {1, -2, 1}));
}

TEST_CASE("series coefficients") {
  CHECK(series_coefficients(F({1, 1, 2}, {1, -2, -1}), 6) ==
        ints({1, 3, 9, 21, 51, 123, 297}));
  CHECK(series_coefficients(F({0, 0, 0, 6}, {1, -2, -1}), 8) ==
        ints({0, 0, 0, 6, 12, 30, 72, 174, 420}));
  auto fib = series_coefficients(F({0, 0, 1}, {1, -1, -1}), 20);
  for (std::size_t n = 4; n <= 20; ++n) CHECK(fib[n] == fib[n - 1] + fib[n - 2]);
  CHECK_THROWS_AS(series_coefficients(F({1}, {0, 1}), 3), PoleAtZero);
}

TEST_CASE("series matches long division") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<long long> num(4), den(4);
    for (auto& c : num) c = coef(rng);
    for (auto& c : den) c = coef(rng);
    den[0] = trial % 2 ? 1 : 3;
    auto f = RationalFunction(P(num), P(den));
    auto s = series_coefficients(f, 10);
    // den * series == num up to z^10
    Polynomial approx(s);
    auto prod = P(den) * approx;
    for (std::size_t k = 0; k <= 10; ++k) CHECK(prod.coefficient(k) == P(num).coefficient(k));
  }
}

TEST_CASE("exact field arithmetic") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_rf = [&] {
    std::vector<long long> num(3), den(3);
    for (auto& c : num) c = coef(rng);
    for (auto& c : den) c = coef(rng);
    den[0] = 1 + (coef(rng) + 3);
    return RationalFunction(P(num), P(den));
  };
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_rf();
    auto g = random_rf();
    CHECK((f + g) - g == f);
    if (!g.is_zero()) CHECK((f * g) / g == f);
  }
}

TEST_CASE("linear systems") {
  RFMatrix id{{RationalFunction::constant(1), RationalFunction()},
              {RationalFunction(), RationalFunction::constant(1)}};
  std::vector<RationalFunction> rhs{F({1, 2}, {1}), F({3}, {1, 1})};
  CHECK(solve_linear_system(id, rhs) == rhs);

  RFMatrix one{{F({1, -1}, {1})}};
  CHECK(solve_linear_system(one, {F({1}, {1})})[0] == F({1}, {1, -1}));

  RFMatrix singular{{F({1}, {1}), F({0, 1}, {1})}, {F({2}, {1}), F({0, 2}, {1})}};
  CHECK_THROWS_AS(solve_linear_system(singular, {F({1}, {1}), F({1}, {1})}), SingularSystem);

  // Substituting back reproduces the right-hand side.
  RFMatrix m{{F({1, -2}, {1}), F({1}, {1}), F({1}, {1})},
             {F({0, 0, 0, 0, 1}, {1}), F({-1, 0, -1}, {1}), F({0, 0, 0, -1}, {1})},
             {F({0, 0, 0, 0, 1}, {1}), F({0}, {1}), F({-1}, {1})}};
  std::vector<RationalFunction> b{F({1}, {1}), F({0}, {1}), F({0}, {1})};
  auto x = solve_linear_system(m, b);
  for (std::size_t i = 0; i < 3; ++i) {
    RationalFunction row;
    for (std::size_t j = 0; j < 3; ++j) row = row + m[i][j] * x[j];
    CHECK(row == b[i]);
  }
}
