#include "besicovitch/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace besicovitch {

template <class T>
DiscreteMeasure<T>::DiscreteMeasure(NormSpec norm, std::vector<Vector<T>> atoms,
                                    std::vector<T> weights)
    : norm_(std::move(norm)), atoms_(std::move(atoms)), weights_(std::move(weights)) {
  if (atoms_.empty()) throw std::invalid_argument("a measure needs at least one atom");
  if (atoms_.size() != weights_.size()) {
    throw std::invalid_argument("atom and weight counts differ");
  }
  const std::size_t d = atoms_.front().size();
  for (const auto& x : atoms_) check_dimension(norm_, x.size(), d);
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] > 0)) {
      throw std::invalid_argument("weight of atom " + std::to_string(i) + " is not positive");
    }
  }
  std::vector<std::size_t> order(atoms_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return atoms_[a] < atoms_[b]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (atoms_[order[k - 1]] == atoms_[order[k]]) {
      throw std::invalid_argument("atoms " + std::to_string(order[k - 1]) + " and " +
                                  std::to_string(order[k]) + " coincide");
    }
  }
}

template <class T>
T DiscreteMeasure<T>::total_mass() const {
  T s(0);
  for (const T& w : weights_) s += w;
  return s;
}

template <class T>
std::size_t DiscreteMeasure<T>::find(const Vector<T>& point) const {
  auto it = std::find(atoms_.begin(), atoms_.end(), point);
  return it == atoms_.end() ? static_cast<std::size_t>(-1)
                            : static_cast<std::size_t>(it - atoms_.begin());
}

template <class T>
T ball_measure(const DiscreteMeasure<T>& mu, const Vector<T>& center, const T& r, BallKind kind) {
  if (!(r > 0)) throw std::invalid_argument("radius must be positive");
  const BallSpec<T> ball{center, r, kind};
  T mass(0);
  for (std::size_t j = 0; j < mu.size(); ++j) {
    if (ball_contains(mu.norm(), ball, mu.atom(j))) mass += mu.weight(j);
  }
  return mass;
}

template <class T>
AveragingOperator<T>::AveragingOperator(DiscreteMeasure<T> mu, T radius, BallKind kind)
    : mu_(std::move(mu)), radius_(std::move(radius)), kind_(kind) {
  if (!(radius_ > 0)) throw std::invalid_argument("radius must be positive");
  const std::size_t n = mu_.size();
  balls_.resize(n);
  masses_.assign(n, T(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      int c = compare_distance(mu_.norm(), mu_.atom(i), mu_.atom(j), radius_);
      if (kind_ == BallKind::closed ? c <= 0 : c < 0) {
        balls_[i].push_back(j);
        masses_[i] += mu_.weight(j);
      }
    }
    if (!(masses_[i] > 0)) {
      throw EmptyBallError("ball around atom " + std::to_string(i) + " has zero measure");
    }
  }
}

template <class T>
std::size_t AveragingOperator<T>::nonzeros() const {
  std::size_t total = 0;
  for (const auto& b : balls_) total += b.size();
  return total;
}

template <class T>
SupportFunction<T> AveragingOperator<T>::apply(const SupportFunction<T>& f) const {
  if (f.size() != mu_.size()) throw DimensionError("function length differs from atom count");
  SupportFunction<T> out(f.size(), T(0));
  for (std::size_t i = 0; i < balls_.size(); ++i) {
    T sum(0);
    for (std::size_t j : balls_[i]) {
      if (f[j] != 0) sum += f[j] * mu_.weight(j);
    }
    if (sum != 0) out[i] = sum / masses_[i];
  }
  return out;
}

template <class T>
SupportFunction<T> AveragingOperator<T>::conjugate() const {
  SupportFunction<T> a(mu_.size(), T(0));
  for (std::size_t x = 0; x < balls_.size(); ++x) {
    const T share = mu_.weight(x) / masses_[x];
    for (std::size_t y : balls_[x]) a[y] += share;
  }
  return a;
}

template <class T>
OperatorNorm<T> AveragingOperator<T>::l1_norm() const {
  const auto a = conjugate();
  std::size_t best = 0;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] > a[best]) best = i;
  }
  return {a[best], best};
}

template <class T>
SupportFunction<T> averaging_apply(const DiscreteMeasure<T>& mu, const T& r, BallKind kind,
                                   const SupportFunction<T>& f) {
  return AveragingOperator<T>(mu, r, kind).apply(f);
}

template <class T>
SupportFunction<T> conjugate_function(const DiscreteMeasure<T>& mu, const T& r, BallKind kind) {
  return AveragingOperator<T>(mu, r, kind).conjugate();
}

template <class T>
OperatorNorm<T> l1_operator_norm(const DiscreteMeasure<T>& mu, const T& r, BallKind kind) {
  return AveragingOperator<T>(mu, r, kind).l1_norm();
}

template <class T>
T l1_norm(const DiscreteMeasure<T>& mu, const SupportFunction<T>& f) {
  if (f.size() != mu.size()) throw DimensionError("function length differs from atom count");
  T s(0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != 0) s += mu.weight(i) * abs_value(f[i]);
  }
  return s;
}

template <class T>
double lp_norm(const DiscreteMeasure<T>& mu, const SupportFunction<T>& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm needs p >= 1");
  if (p == 1.0) return to_double(l1_norm(mu, f));
  if (f.size() != mu.size()) throw DimensionError("function length differs from atom count");
  double s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    s += to_double(mu.weight(i)) * std::pow(std::abs(to_double(f[i])), p);
  }
  return std::pow(s, 1.0 / p);
}

template <class T>
T level_set_measure(const DiscreteMeasure<T>& mu, const SupportFunction<T>& g, const T& alpha) {
  if (g.size() != mu.size()) throw DimensionError("function length differs from atom count");
  T threshold = alpha;
  if constexpr (!is_exact_v<T>) {
    threshold = alpha - level_set_tolerance * std::max(1.0, std::abs(alpha));
  }
  T s(0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] >= threshold) s += mu.weight(i);
  }
  return s;
}

template <class T>
double weak_type_ratio(const AveragingOperator<T>& op, const SupportFunction<T>& f,
                       const T& alpha, double p) {
  if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
  if (!(p >= 1.0)) throw std::invalid_argument("weak type ratio needs p >= 1");
  const double f_norm = lp_norm(op.measure(), f, p);
  if (!(f_norm > 0)) throw std::invalid_argument("f is identically zero");
  const T level = level_set_measure(op.measure(), op.apply(f), alpha);
  if (level == 0) return 0.0;
  return to_double(alpha) * std::pow(to_double(level), 1.0 / p) / f_norm;
}

template <class T>
SupportFunction<T> maximal_apply(const DiscreteMeasure<T>& mu, const std::vector<T>& radii,
                                 BallKind kind, const SupportFunction<T>& f) {
  if (radii.empty()) throw std::invalid_argument("maximal_apply needs at least one radius");
  SupportFunction<T> magnitude(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) magnitude[i] = abs_value(f[i]);
  SupportFunction<T> out;
  for (const T& r : radii) {
    auto averaged = AveragingOperator<T>(mu, r, kind).apply(magnitude);
    if (out.empty()) {
      out = std::move(averaged);
    } else {
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], averaged[i]);
    }
  }
  return out;
}

#define BESICOVITCH_INSTANTIATE(T)                                                              \
  template class DiscreteMeasure<T>;                                                            \
  template class AveragingOperator<T>;                                                          \
  template T ball_measure<T>(const DiscreteMeasure<T>&, const Vector<T>&, const T&, BallKind);  \
  template SupportFunction<T> averaging_apply<T>(const DiscreteMeasure<T>&, const T&, BallKind, \
                                                 const SupportFunction<T>&);                    \
  template SupportFunction<T> conjugate_function<T>(const DiscreteMeasure<T>&, const T&,        \
                                                    BallKind);                                  \
  template OperatorNorm<T> l1_operator_norm<T>(const DiscreteMeasure<T>&, const T&, BallKind);  \
  template T l1_norm<T>(const DiscreteMeasure<T>&, const SupportFunction<T>&);                  \
  template double lp_norm<T>(const DiscreteMeasure<T>&, const SupportFunction<T>&, double);     \
  template T level_set_measure<T>(const DiscreteMeasure<T>&, const SupportFunction<T>&,         \
                                  const T&);                                                    \
  template double weak_type_ratio<T>(const AveragingOperator<T>&, const SupportFunction<T>&,    \
                                     const T&, double);                                         \
  template SupportFunction<T> maximal_apply<T>(const DiscreteMeasure<T>&, const std::vector<T>&, \
                                               BallKind, const SupportFunction<T>&);

BESICOVITCH_INSTANTIATE(double)
BESICOVITCH_INSTANTIATE(Rational)

#undef BESICOVITCH_INSTANTIATE

}  // namespace besicovitch
