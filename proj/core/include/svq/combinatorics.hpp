#pragma once

#include <svq/pi_value.hpp>
#include <svq/rational.hpp>

#include <vector>

namespace svq {

BigInt factorial(int n);

/// n!! with the conventions (-1)!! = 1 and 0!! = 1.
BigInt double_factorial(int n);

BigInt binomial(int n, int k);

/// top! / prod(parts_i!); requires sum(parts) == top.
BigInt multinomial(int top, const std::vector<int>& parts);

/// J(a,q) = int_0^1 r^{2a+1} (1-r^2)^q dr = q! a! / (2 (a+q+1)!).
Rational beta_J(int a, int q);

/// B(1-p; n, q) / B(n, q), evaluated exactly through the binomial-sum
/// identity B(x;n,q) = B(n,q) * sum_{k=n}^{n+q-1} C(n+q-1,k) x^k (1-x)^{n+q-1-k}
/// at x = 1-p. Requires 0 <= p <= 1.
Rational incomplete_beta_ratio(const Rational& p, int n, int q);

/// Bernoulli number B_n ("first" convention, B_1 = -1/2).
Rational bernoulli(int n);

/// zeta(2k) as a rational multiple of pi^{2k}; argument must be positive even.
PiValue zeta_even(int two_k);

}  // namespace svq
