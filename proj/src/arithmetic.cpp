#include "besicovitch/arithmetic.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace besicovitch {

std::string_view to_string(Arithmetic mode) {
  return mode == Arithmetic::exact ? "exact" : "float";
}

Arithmetic arithmetic_from_string(std::string_view text) {
  if (text == "exact") return Arithmetic::exact;
  if (text == "float") return Arithmetic::floating;
  throw std::invalid_argument("unknown arithmetic mode '" + std::string(text) + "'");
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite scalar");
  return Rational(x);
}

namespace {

// Leading zeros are dropped: the GMP string constructor reads them as octal.
BigInt parse_digits(std::string_view digits) {
  while (!digits.empty() && digits.front() == '0') digits.remove_prefix(1);
  if (digits.empty()) return BigInt(0);
  return BigInt(std::string(digits));
}

bool all_digits(std::string_view s) {
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  };
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) return fail();

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num = parse_rational(s.substr(0, slash));
    Rational den = parse_rational(s.substr(slash + 1));
    if (den == 0) return fail();
    return num / den;
  }

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (exp_text.empty() || exp_text.size() > 6 || !all_digits(exp_text)) return fail();
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if ((int_part.empty() && frac_part.empty()) || !all_digits(int_part) || !all_digits(frac_part)) {
    return fail();
  }
  BigInt mantissa = parse_digits(int_part) * boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size())) +
                    parse_digits(frac_part);
  exponent -= static_cast<long>(frac_part.size());
  Rational value(mantissa);
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::labs(exponent)));
  if (exponent >= 0) {
    value *= Rational(scale);
  } else {
    value /= Rational(scale);
  }
  return negative ? Rational(-value) : value;
}

std::string format_scalar(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

std::string format_scalar(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

bool is_integer(const Rational& x) { return denominator(x) == 1; }

}  // namespace besicovitch
