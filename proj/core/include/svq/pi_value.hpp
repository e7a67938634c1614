#pragma once

#include <svq/rational.hpp>

#include <functional>
#include <map>
#include <string>
#include <string_view>

namespace svq {

/// Laurent polynomial in pi with exact rational coefficients. This is the
/// universal carrier for volumes and Siegel-Veech constants: every quantity
/// handled by the library has the form sum_k q_k * pi^k with q_k rational.
///
/// No zero coefficient is ever stored; the zero value is the empty map.
/// Division is defined only when the divisor is a single-term value.
class PiValue {
 public:
  PiValue() = default;
  PiValue(const Rational& r) { set_term(0, r); }  // NOLINT(google-explicit-constructor)
  PiValue(long n) { set_term(0, Rational(n)); }   // NOLINT(google-explicit-constructor)

  static PiValue monomial(const Rational& coeff, int pi_exp) {
    PiValue v;
    v.set_term(pi_exp, coeff);
    return v;
  }
  static PiValue pi_power(int pi_exp) { return monomial(1, pi_exp); }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

  /// Coefficient of pi^exp (zero when the term is absent).
  Rational coefficient(int pi_exp) const {
    auto it = terms_.find(pi_exp);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Exponent of a monomial; throws on anything else.
  int monomial_exp() const;
  /// Coefficient of a monomial; throws on anything else.
  Rational monomial_coeff() const;

  PiValue operator-() const;
  PiValue& operator+=(const PiValue& other);
  PiValue& operator-=(const PiValue& other);
  PiValue& operator*=(const PiValue& other);
  /// Divides by a monomial; throws std::domain_error for any other divisor.
  PiValue& operator/=(const PiValue& divisor);

  friend PiValue operator+(PiValue a, const PiValue& b) { return a += b; }
  friend PiValue operator-(PiValue a, const PiValue& b) { return a -= b; }
  friend PiValue operator*(PiValue a, const PiValue& b) { return a *= b; }
  friend PiValue operator/(PiValue a, const PiValue& b) { return a /= b; }
  friend bool operator==(const PiValue& a, const PiValue& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const PiValue& a, const PiValue& b) { return !(a == b); }

  /// Canonical interchange form: terms by descending exponent, each rendered
  /// `<num>/<den>*pi^<exp>`, with `pi^0` elided and `pi^1` rendered `pi`.
  /// Examples: `47/22*pi^-2`, `11/60*pi^6`, `5/2`. Zero renders as `0`.
  std::string text() const;
  static PiValue parse(std::string_view text);

  double approx() const;

  const std::map<int, Rational, std::greater<int>>& terms() const { return terms_; }

 private:
  void set_term(int pi_exp, const Rational& coeff) {
    if (coeff == 0)
      terms_.erase(pi_exp);
    else
      terms_[pi_exp] = coeff;
  }

  std::map<int, Rational, std::greater<int>> terms_;
};

/// 12-significant-digit decimal rendering used wherever the CLI marks
/// approximate output.
std::string approx_text(double value);

}  // namespace svq
