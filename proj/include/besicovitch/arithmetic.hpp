#ifndef BESICOVITCH_ARITHMETIC_HPP
#define BESICOVITCH_ARITHMETIC_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace besicovitch {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Every computation runs in one of two modes: exact rationals, or doubles
// with an explicit certificate margin.
enum class Arithmetic { exact, floating };

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

template <class T>
constexpr Arithmetic arithmetic_of() {
  static_assert(std::is_same_v<T, Rational> || std::is_same_v<T, double>,
                "scalars are Rational or double");
  return is_exact_v<T> ? Arithmetic::exact : Arithmetic::floating;
}

// A point of d-dimensional coordinate space.
template <class T>
using Vector = std::vector<T>;

std::string_view to_string(Arithmetic mode);
Arithmetic arithmetic_from_string(std::string_view text);

inline double to_double(double x) { return x; }
double to_double(const Rational& x);

template <class T>
Vector<double> to_double(const Vector<T>& v) {
  Vector<double> out;
  out.reserve(v.size());
  for (const T& x : v) out.push_back(to_double(x));
  return out;
}

// Exact conversion: every finite double is a dyadic rational.
Rational to_rational(double x);

template <class T>
T from_rational(const Rational& x) {
  if constexpr (is_exact_v<T>) {
    return x;
  } else {
    return to_double(x);
  }
}

// Accepts "3", "-3/2", "0.125", "1e-3". Decimal forms are read exactly.
Rational parse_rational(std::string_view text);

// Rational as "p" or "p/q"; double with 17 significant digits.
std::string format_scalar(const Rational& x);
std::string format_scalar(double x);

template <class T>
T abs_value(const T& x) {
  return x < T(0) ? T(-x) : x;
}

bool is_integer(const Rational& x);

// Thrown when an operation has no exact realization, e.g. a euclidean length
// of a rational vector or a non-integer power.
class ExactnessError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace besicovitch

#endif  // BESICOVITCH_ARITHMETIC_HPP
