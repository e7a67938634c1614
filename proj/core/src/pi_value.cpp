#include <svq/pi_value.hpp>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace svq {

Rational parse_rational(std::string_view text) {
  auto bad = [&] { throw std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
  if (text.empty()) bad();
  std::string num, den = "1";
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    num = std::string(text);
  } else {
    num = std::string(text.substr(0, slash));
    den = std::string(text.substr(slash + 1));
  }
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!is_int(num) || !is_int(den)) bad();
  BigInt d(den);
  if (d == 0) bad();
  return Rational(BigInt(num), d);
}

int PiValue::monomial_exp() const {
  if (!is_monomial()) throw std::domain_error("PiValue is not a monomial: " + text());
  return terms_.begin()->first;
}

Rational PiValue::monomial_coeff() const {
  if (!is_monomial()) throw std::domain_error("PiValue is not a monomial: " + text());
  return terms_.begin()->second;
}

PiValue PiValue::operator-() const {
  PiValue out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

PiValue& PiValue::operator+=(const PiValue& other) {
  for (const auto& [e, c] : other.terms_) set_term(e, coefficient(e) + c);
  return *this;
}

PiValue& PiValue::operator-=(const PiValue& other) {
  for (const auto& [e, c] : other.terms_) set_term(e, coefficient(e) - c);
  return *this;
}

PiValue& PiValue::operator*=(const PiValue& other) {
  std::map<int, Rational, std::greater<int>> out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) {
      Rational& slot = out[ea + eb];
      slot += ca * cb;
    }
  terms_.clear();
  for (const auto& [e, c] : out)
    if (c != 0) terms_[e] = c;
  return *this;
}

PiValue& PiValue::operator/=(const PiValue& divisor) {
  if (divisor.is_zero()) throw std::domain_error("PiValue division by zero");
  if (!divisor.is_monomial())
    throw std::domain_error("PiValue division requires a monomial divisor, got " + divisor.text());
  const int de = divisor.monomial_exp();
  const Rational dc = divisor.monomial_coeff();
  std::map<int, Rational, std::greater<int>> out;
  for (const auto& [e, c] : terms_) out[e - de] = c / dc;
  terms_ = std::move(out);
  return *this;
}

std::string PiValue::text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += rational_text(c);
    if (e == 1)
      out += "*pi";
    else if (e != 0)
      out += "*pi^" + std::to_string(e);
  }
  return out;
}

PiValue PiValue::parse(std::string_view text) {
  auto bad = [&] { throw std::invalid_argument("malformed PiValue: '" + std::string(text) + "'"); };
  // Strip whitespace, then split on '+' term separators.
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) bad();
  if (s == "0") return PiValue();
  PiValue out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t next = s.find('+', pos);
    std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (term.empty()) bad();
    std::string coeff = term;
    int exp = 0;
    if (auto star = term.find('*'); star != std::string::npos) {
      coeff = term.substr(0, star);
      std::string tail = term.substr(star + 1);
      if (tail == "pi")
        exp = 1;
      else if (tail.rfind("pi^", 0) == 0) {
        try {
          size_t used = 0;
          exp = std::stoi(tail.substr(3), &used);
          if (used != tail.size() - 3) bad();
        } catch (const std::exception&) {
          bad();
        }
      } else
        bad();
    }
    Rational c = parse_rational(coeff);
    out.set_term(exp, out.coefficient(exp) + c);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

double PiValue::approx() const {
  double acc = 0.0;
  for (const auto& [e, c] : terms_) acc += to_double(c) * std::pow(M_PI, e);
  return acc;
}

std::string approx_text(double value) {
  std::ostringstream os;
  os.precision(12);
  os << value;
  return os.str();
}

}  // namespace svq
