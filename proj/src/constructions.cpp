#include "besicovitch/constructions.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cmath>
#include <limits>
#include <string>

namespace besicovitch {

namespace {

using Decimal50 = boost::multiprecision::cpp_dec_float_50;

template <class T>
BallFamily<T> checked_family(const BallFamily<T>& family) {
  auto v = validate_family(family, T(0));
  if (!v) throw std::invalid_argument("adversarial construction needs a valid family: " +
                                      v.violation->message);
  if (family.size() > 0 && !family.has_equal_radii()) {
    throw std::invalid_argument("adversarial construction needs equal radii");
  }
  for (const auto& x : family.centers) {
    if (x == family.witness) {
      throw std::invalid_argument("adversarial construction needs the witness off the centres");
    }
  }
  return family;
}

template <class T>
DiscreteMeasure<T> adversarial_measure(const BallFamily<T>& family, const T& c) {
  std::vector<Vector<T>> atoms{family.witness};
  std::vector<T> weights{c};
  for (const auto& x : family.centers) {
    atoms.push_back(x);
    weights.push_back(T(1));
  }
  return DiscreteMeasure<T>(family.norm, std::move(atoms), std::move(weights));
}

BigInt pow_int(const BigInt& base, unsigned long e) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

std::uint64_t to_u64(const BigInt& value) {
  if (value > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    throw std::overflow_error("extrapolation constant exceeds 64 bits");
  }
  return value.convert_to<std::uint64_t>();
}

Decimal50 high_precision_value(const Rational& p, std::uint64_t n_bound) {
  Decimal50 pd = Decimal50(numerator(p).str()) / Decimal50(denominator(p).str());
  Decimal50 n(n_bound);
  return boost::multiprecision::pow(pd, pd) * boost::multiprecision::pow(pd - 1, 1 - pd) *
         boost::multiprecision::pow(n, pd);
}

BigInt floor_to_int(const Decimal50& x) {
  const Decimal50 f = boost::multiprecision::floor(x);
  std::string digits = f.str(0, std::ios_base::fixed);
  digits = digits.substr(0, digits.find('.'));
  return BigInt(digits);
}

}  // namespace

template <class T>
AdversarialInstance<T> build_adversarial(const BallFamily<T>& family, const T& c) {
  if (!(c > 0)) throw std::invalid_argument("c must be positive");
  if (family.size() == 0) throw std::invalid_argument("adversarial construction needs balls");
  const BallFamily<T> checked = checked_family(family);
  auto measure = adversarial_measure(checked, c);
  SupportFunction<T> f(measure.size(), T(0));
  f[0] = T(1) / c;
  return {std::move(measure), std::move(f), c, family.size(), family.radius(), family.kind};
}

template <class T>
StrongBound<T> strong_lower_bound_eval(const AdversarialInstance<T>& inst) {
  const AveragingOperator<T> op(inst.measure, inst.radius, inst.kind);
  const T value = l1_norm(inst.measure, op.apply(inst.function));
  const T threshold = T(inst.family_size) / (T(1) + inst.c);
  return {value, threshold, value > threshold};
}

std::uint64_t extrapolation_constant(double p, std::uint64_t n_bound) {
  if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("extrapolation needs p > 1");
  if (n_bound == 0) throw std::invalid_argument("extrapolation needs N >= 1");
  const Rational pr = to_rational(p);
  const BigInt a = numerator(pr);
  const BigInt b = denominator(pr);

  // With p = a / b the b-th power of the value is the rational
  // p^a (p - 1)^{b - a} N^a, so floor(value) is an exact integer root.
  if (b <= 64 && a <= 4096) {
    const unsigned long au = a.convert_to<unsigned long>();
    const unsigned long bu = b.convert_to<unsigned long>();
    const Rational pm1 = pr - 1;
    Rational target = Rational(pow_int(numerator(pr), au), pow_int(denominator(pr), au)) *
                      Rational(pow_int(BigInt(n_bound), au));
    // (p - 1)^{b - a} with b - a < 0
    target /= Rational(pow_int(numerator(pm1), au - bu), pow_int(denominator(pm1), au - bu));
    Decimal50 estimate = high_precision_value(pr, n_bound);
    BigInt m = floor_to_int(estimate);
    if (m < 0) m = 0;
    auto root_le = [&](const BigInt& k) { return Rational(pow_int(k, bu)) <= target; };
    while (m > 0 && !root_le(m)) --m;
    while (root_le(m + 1)) ++m;
    return to_u64(m);
  }
  Decimal50 value = high_precision_value(pr, n_bound);
  return to_u64(floor_to_int(value));
}

template <class T>
WeakWitness<T> weak_pp_witness(double p, std::uint64_t n_bound, const BallFamily<T>& family) {
  const std::uint64_t required = extrapolation_constant(p, n_bound) + 1;
  if (family.size() < required) {
    throw std::invalid_argument("weak (p,p) witness needs " + std::to_string(required) +
                                " balls, family has " + std::to_string(family.size()));
  }
  BallFamily<T> sub = family;
  sub.centers.resize(required);
  sub.radii.resize(required);
  sub = checked_family(sub);

  const T c = from_rational<T>(to_rational(p) - 1);
  const auto measure = adversarial_measure(sub, c);
  SupportFunction<T> indicator(measure.size(), T(0));
  indicator[0] = T(1);
  const AveragingOperator<T> op(measure, sub.radius(), sub.kind);
  const T alpha = c / (T(1) + c);
  const T level = level_set_measure(measure, op.apply(indicator), alpha);
  const double ratio = weak_type_ratio(op, indicator, alpha, p);
  const double cd = to_double(c);
  const double bound = std::pow(static_cast<double>(required), 1.0 / p) *
                       std::pow(cd, (p - 1.0) / p) / (1.0 + cd);
  return {required, c, alpha, level, ratio, bound, ratio > static_cast<double>(n_bound)};
}

#define BESICOVITCH_INSTANTIATE(T)                                                              \
  template AdversarialInstance<T> build_adversarial<T>(const BallFamily<T>&, const T&);         \
  template StrongBound<T> strong_lower_bound_eval<T>(const AdversarialInstance<T>&);            \
  template WeakWitness<T> weak_pp_witness<T>(double, std::uint64_t, const BallFamily<T>&);

BESICOVITCH_INSTANTIATE(double)
BESICOVITCH_INSTANTIATE(Rational)

#undef BESICOVITCH_INSTANTIATE

}  // namespace besicovitch
