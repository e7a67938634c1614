#include <svq/combinatorics.hpp>

#include <numeric>
#include <stdexcept>

namespace svq {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  BigInt acc = 1;
  for (int i = 2; i <= n; ++i) acc *= i;
  return acc;
}

BigInt double_factorial(int n) {
  if (n < -1) throw std::invalid_argument("double factorial defined only for n >= -1");
  BigInt acc = 1;
  for (int i = n; i > 1; i -= 2) acc *= i;
  return acc;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt acc = 1;
  for (int i = 0; i < k; ++i) {
    acc *= (n - i);
    acc /= (i + 1);  // exact: product of i+1 consecutive integers is divisible by (i+1)!
  }
  return acc;
}

BigInt multinomial(int top, const std::vector<int>& parts) {
  int sum = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial parts must be nonnegative");
    sum += p;
  }
  if (sum != top) throw std::invalid_argument("multinomial parts must sum to top");
  BigInt acc = factorial(top);
  for (int p : parts) acc /= factorial(p);
  return acc;
}

Rational beta_J(int a, int q) {
  if (a < 0 || q < 0) throw std::invalid_argument("beta_J requires a, q >= 0");
  return Rational(factorial(q) * factorial(a), 2 * factorial(a + q + 1));
}

Rational incomplete_beta_ratio(const Rational& p, int n, int q) {
  if (n <= 0 || q <= 0) throw std::invalid_argument("incomplete_beta_ratio requires n, q >= 1");
  if (p < 0 || p > 1) throw std::invalid_argument("incomplete_beta_ratio requires p in [0,1]");
  const Rational x = Rational(1) - p;
  Rational sum = 0;
  for (int k = n; k <= n + q - 1; ++k) {
    sum += Rational(binomial(n + q - 1, k)) * pow_rational(x, k) * pow_rational(p, n + q - 1 - k);
  }
  return sum;
}

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli index must be nonnegative");
  // B_m = -1/(m+1) * sum_{j<m} C(m+1,j) B_j
  std::vector<Rational> b(n + 1);
  for (int m = 0; m <= n; ++m) {
    if (m == 0) {
      b[0] = 1;
      continue;
    }
    Rational sum = 0;
    for (int j = 0; j < m; ++j) sum += Rational(binomial(m + 1, j)) * b[j];
    b[m] = -sum / Rational(m + 1);
  }
  return b[n];
}

PiValue zeta_even(int two_k) {
  if (two_k <= 0 || two_k % 2 != 0) throw std::invalid_argument("zeta_even requires a positive even argument");
  const int k = two_k / 2;
  // zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!)
  Rational coeff = bernoulli(two_k) * pow_rational(2, two_k) / (2 * Rational(factorial(two_k)));
  if (k % 2 == 0) coeff = -coeff;
  return PiValue::monomial(coeff, two_k);
}

}  // namespace svq
