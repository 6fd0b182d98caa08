#ifndef BESICOVITCH_MEASURE_HPP
#define BESICOVITCH_MEASURE_HPP

#include "besicovitch/geometry.hpp"

#include <cstddef>
#include <vector>

namespace besicovitch {

// mu = sum_i w_i delta_{x_i} with w_i > 0 and pairwise distinct atoms, so the
// support is exactly the atom set.
template <class T>
class DiscreteMeasure {
 public:
  DiscreteMeasure(NormSpec norm, std::vector<Vector<T>> atoms, std::vector<T> weights);

  const NormSpec& norm() const { return norm_; }
  const std::vector<Vector<T>>& atoms() const { return atoms_; }
  const std::vector<T>& weights() const { return weights_; }
  const Vector<T>& atom(std::size_t i) const { return atoms_[i]; }
  const T& weight(std::size_t i) const { return weights_[i]; }
  std::size_t size() const { return atoms_.size(); }
  std::size_t dimension() const { return atoms_.front().size(); }
  T total_mass() const;

  // Index of an atom with exactly these coordinates, or npos.
  std::size_t find(const Vector<T>& point) const;

 private:
  NormSpec norm_;
  std::vector<Vector<T>> atoms_;
  std::vector<T> weights_;
};

// Values of a function at the atoms, in atom order.
template <class T>
using SupportFunction = std::vector<T>;

class EmptyBallError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class T>
T ball_measure(const DiscreteMeasure<T>& mu, const Vector<T>& center, const T& r, BallKind kind);

template <class T>
struct OperatorNorm {
  T value;
  std::size_t argmax;
};

// A_{r,mu} for one (mu, r, kind). The ball incidence lists and ball masses are
// computed once; evaluations are const and may run concurrently.
template <class T>
class AveragingOperator {
 public:
  AveragingOperator(DiscreteMeasure<T> mu, T radius, BallKind kind);

  const DiscreteMeasure<T>& measure() const { return mu_; }
  const T& radius() const { return radius_; }
  BallKind kind() const { return kind_; }

  // Atom indices inside B(x_i, r), ascending.
  const std::vector<std::size_t>& ball(std::size_t i) const { return balls_[i]; }
  const T& ball_mass(std::size_t i) const { return masses_[i]; }
  std::size_t nonzeros() const;

  // (A f)(x) = mu(B(x, r))^{-1} sum_{y in B(x, r)} f(y) w(y)
  SupportFunction<T> apply(const SupportFunction<T>& f) const;
  // a_r(y) = sum_{x : y in B(x, r)} w(x) / mu(B(x, r))
  SupportFunction<T> conjugate() const;
  // ||A||_{L1 -> L1} = max_y a_r(y); ties resolve to the lowest atom index.
  OperatorNorm<T> l1_norm() const;

 private:
  DiscreteMeasure<T> mu_;
  T radius_;
  BallKind kind_;
  std::vector<std::vector<std::size_t>> balls_;
  std::vector<T> masses_;
};

template <class T>
SupportFunction<T> averaging_apply(const DiscreteMeasure<T>& mu, const T& r, BallKind kind,
                                   const SupportFunction<T>& f);

template <class T>
SupportFunction<T> conjugate_function(const DiscreteMeasure<T>& mu, const T& r, BallKind kind);

template <class T>
OperatorNorm<T> l1_operator_norm(const DiscreteMeasure<T>& mu, const T& r, BallKind kind);

// sum_i w_i |f_i|, exact in rational mode.
template <class T>
T l1_norm(const DiscreteMeasure<T>& mu, const SupportFunction<T>& f);

// (sum_i w_i |f_i|^p)^{1/p}
template <class T>
double lp_norm(const DiscreteMeasure<T>& mu, const SupportFunction<T>& f, double p);

// Relative tolerance for level sets {g >= alpha} in float mode.
inline constexpr double level_set_tolerance = 1e-12;

// mu{g >= alpha}; exact comparison in rational mode.
template <class T>
T level_set_measure(const DiscreteMeasure<T>& mu, const SupportFunction<T>& g, const T& alpha);

// alpha * mu{A f >= alpha}^{1/p} / ||f||_p, a lower bound for ||A||_{L^p -> L^{p,inf}}.
template <class T>
double weak_type_ratio(const AveragingOperator<T>& op, const SupportFunction<T>& f,
                       const T& alpha, double p);

// Pointwise maximum over the listed radii of A_r |f|.
template <class T>
SupportFunction<T> maximal_apply(const DiscreteMeasure<T>& mu, const std::vector<T>& radii,
                                 BallKind kind, const SupportFunction<T>& f);

}  // namespace besicovitch

#endif  // BESICOVITCH_MEASURE_HPP
