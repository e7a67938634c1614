#include <svq/combinatorics.hpp>
#include <svq/pi_value.hpp>

#include "doctest.h"

#include <cmath>
#include <functional>
#include <random>

using namespace svq;

namespace {

PiValue random_pi_value(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 3), exps(-4, 4), nums(-9, 9), dens(1, 7);
  PiValue v;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    v += PiValue::monomial(Rational(nums(rng), dens(rng)), exps(rng));
  }
  return v;
}

// Independent quadrature oracle: 64-point Gauss-Legendre on [0,1], exact to
// machine precision for the polynomial integrands below.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre_64() {
  const int n = 64;
  std::vector<double> x(n), w(n);
  for (int i = 0; i < n / 2; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double p0 = 0, p1 = 0;
    for (int iter = 0; iter < 100; ++iter) {
      p0 = 1.0;
      p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) * t * p1 - j * p2) / (j + 1);
      }
      double dp = n * (t * p0 - p1) / (t * t - 1.0);
      double t_next = t - p0 / dp;
      if (std::abs(t_next - t) < 1e-15) {
        t = t_next;
        break;
      }
      t = t_next;
    }
    double dp = n * (t * p0 - p1) / (t * t - 1.0);
    x[i] = (1.0 - t) / 2.0;
    x[n - 1 - i] = (1.0 + t) / 2.0;
    w[i] = w[n - 1 - i] = 1.0 / ((1.0 - t * t) * dp * dp);
  }
  return {x, w};
}

double integrate01(double upper, const std::function<double(double)>& f) {
  static const auto [x, w] = gauss_legendre_64();
  double acc = 0;
  for (size_t i = 0; i < x.size(); ++i) acc += w[i] * f(upper * x[i]);
  return acc * upper;
}

}  // namespace

TEST_CASE("factorial and double factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  BigInt prod = 1;
  for (int i = 1; i <= 20; ++i) prod *= i;
  CHECK(factorial(20) == prod);

  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(7) == 105);
  CHECK(double_factorial(8) == 384);
  CHECK_THROWS_AS(double_factorial(-2), std::invalid_argument);
}

TEST_CASE("multinomial") {
  CHECK(multinomial(2, {2, 0, 0}) == 1);
  CHECK(multinomial(2, {0, 1, 1}) == 2);
  CHECK(multinomial(7, {3, 4}) == 35);
  CHECK_THROWS_AS(multinomial(5, {2, 2}), std::invalid_argument);

  // Equals the product of successive binomials.
  for (int top = 0; top <= 10; ++top) {
    for (int a = 0; a <= top; ++a)
      for (int b = 0; a + b <= top; ++b) {
        int c = top - a - b;
        BigInt via_binomials = binomial(top, a) * binomial(top - a, b) * binomial(c, c);
        CHECK(multinomial(top, {a, b, c}) == via_binomials);
      }
  }
}

TEST_CASE("beta_J against quadrature and its recurrence") {
  CHECK(beta_J(0, 0) == Rational(1, 2));
  CHECK(beta_J(1, 1) == Rational(1, 12));
  // Direct integration: int_0^1 r^7 (1-r^2)^2 dr = 1/8 - 1/5 + 1/12 = 1/120.
  CHECK(beta_J(3, 2) == Rational(1, 120));

  for (int a = 0; a <= 12; ++a) {
    for (int q = 0; q <= 12; ++q) {
      double oracle = integrate01(1.0, [&](double r) {
        return std::pow(r, 2 * a + 1) * std::pow(1.0 - r * r, q);
      });
      CHECK(std::abs(to_double(beta_J(a, q)) - oracle) < 1e-12);
      if (q >= 1) {
        // Integration by parts: J(a,q) = q/(a+1) J(a+1, q-1).
        CHECK(beta_J(a, q) == Rational(q, a + 1) * beta_J(a + 1, q - 1));
      }
    }
  }
}

TEST_CASE("incomplete beta ratio") {
  CHECK(incomplete_beta_ratio(Rational(0), 3, 4) == 1);
  CHECK(incomplete_beta_ratio(Rational(1), 3, 4) == 0);
  CHECK(incomplete_beta_ratio(Rational(1, 2), 2, 2) == Rational(1, 2));
  CHECK_THROWS_AS(incomplete_beta_ratio(Rational(3, 2), 2, 2), std::invalid_argument);

  for (int n = 1; n <= 6; ++n) {
    for (int q = 1; q <= 6; ++q) {
      // Strictly decreasing in p, and matching the quadrature oracle.
      Rational prev = 2;
      for (int i = 0; i <= 10; ++i) {
        Rational p(i, 10);
        Rational val = incomplete_beta_ratio(p, n, q);
        if (i > 0) CHECK(val < prev);
        prev = val;
        auto integrand = [&](double u) { return std::pow(u, n - 1) * std::pow(1.0 - u, q - 1); };
        double numer = integrate01(1.0 - to_double(p), integrand);
        double denom = integrate01(1.0, integrand);
        CHECK(std::abs(to_double(val) - numer / denom) < 1e-12);
      }
    }
  }
}

TEST_CASE("zeta at even integers") {
  CHECK(zeta_even(2) == PiValue::monomial(Rational(1, 6), 2));
  CHECK(zeta_even(4) == PiValue::monomial(Rational(1, 90), 4));
  CHECK(zeta_even(6) == PiValue::monomial(Rational(1, 945), 6));
  // 30 zeta(4) = pi^4/3 and 63 zeta(6) = pi^6/15, 8 zeta(2) = 4 pi^2/3.
  CHECK(PiValue(Rational(30)) * zeta_even(4) == PiValue::monomial(Rational(1, 3), 4));
  CHECK(PiValue(Rational(63)) * zeta_even(6) == PiValue::monomial(Rational(1, 15), 6));
  CHECK(PiValue(Rational(8)) * zeta_even(2) == PiValue::monomial(Rational(4, 3), 2));
  CHECK_THROWS_AS(zeta_even(3), std::invalid_argument);
  CHECK_THROWS_AS(zeta_even(0), std::invalid_argument);
}

TEST_CASE("PiValue ring axioms on random values") {
  std::mt19937 rng(20140599);
  for (int i = 0; i < 300; ++i) {
    PiValue a = random_pi_value(rng), b = random_pi_value(rng), c = random_pi_value(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + PiValue() == a);
    CHECK(a * PiValue(Rational(1)) == a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("monomial division round-trips") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    PiValue v = random_pi_value(rng);
    std::uniform_int_distribution<int> exps(-3, 3), nums(1, 9);
    PiValue m = PiValue::monomial(Rational(nums(rng), nums(rng)), exps(rng));
    CHECK((v / m) * m == v);
  }
  CHECK_THROWS_AS(PiValue(Rational(1)) / PiValue(), std::domain_error);
  PiValue two_terms = PiValue::pi_power(2) + PiValue(Rational(1));
  CHECK_THROWS_AS(PiValue(Rational(1)) / two_terms, std::domain_error);
}

TEST_CASE("canonical text form") {
  PiValue v = PiValue::monomial(Rational(47, 22), -2);
  CHECK(v.text() == "47/22*pi^-2");
  CHECK(PiValue::parse("47/22*pi^-2") == v);
  CHECK(PiValue::monomial(Rational(11, 60), 6).text() == "11/60*pi^6");
  CHECK(PiValue::monomial(Rational(1), 1).text() == "1/1*pi");
  CHECK(PiValue(Rational(5, 2)).text() == "5/2");
  CHECK(PiValue().text() == "0");
  CHECK(PiValue::parse("0").is_zero());

  // Round-trip through text on random values.
  std::mt19937 rng(99);
  for (int i = 0; i < 200; ++i) {
    PiValue v2 = random_pi_value(rng);
    CHECK(PiValue::parse(v2.text()) == v2);
  }
  CHECK_THROWS_AS(PiValue::parse("1/2*pi^"), std::invalid_argument);
  CHECK_THROWS_AS(PiValue::parse("1/2*pi^2junk"), std::invalid_argument);
  CHECK_THROWS_AS(PiValue::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}
