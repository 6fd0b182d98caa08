#ifndef BESICOVITCH_CONSTRUCTIONS_HPP
#define BESICOVITCH_CONSTRUCTIONS_HPP

#include "besicovitch/family.hpp"
#include "besicovitch/measure.hpp"

#include <cstdint>

namespace besicovitch {

template <class T>
T default_c() {
  if constexpr (is_exact_v<T>) {
    return Rational(1, 1000);
  } else {
    return 1e-3;
  }
}

// mu_c = c delta_y + sum_i delta_{x_i} over an intersecting equal-radius
// family, with f_c = c^{-1} 1_{y}. Atom 0 is the witness y; atom i + 1 is
// centre i.
template <class T>
struct AdversarialInstance {
  DiscreteMeasure<T> measure;
  SupportFunction<T> function;
  T c;
  std::size_t family_size;
  T radius;
  BallKind kind;
};

template <class T>
AdversarialInstance<T> build_adversarial(const BallFamily<T>& family, const T& c);

template <class T>
struct StrongBound {
  T value;      // ||A_{r, mu_c} f_c||_1
  T threshold;  // n / (1 + c)
  bool pass;    // value > threshold
};

template <class T>
StrongBound<T> strong_lower_bound_eval(const AdversarialInstance<T>& inst);

// floor(p^p (p - 1)^{1 - p} N^p). Integer p is evaluated exactly, other p
// with 50 significant digits.
std::uint64_t extrapolation_constant(double p, std::uint64_t n_bound);

template <class T>
struct WeakWitness {
  std::uint64_t required_size;  // J = extrapolation_constant + 1
  T c;                          // p - 1, the maximizer of c^{1/q} / (1 + c)
  T alpha;                      // c / (1 + c)
  T level_set;                  // mu_c{A 1_y >= alpha}
  double ratio;                 // measured alpha mu_c{...}^{1/p} / ||1_y||_p
  double bound;                 // J^{1/p} c^{1/q} / (1 + c)
  bool pass;                    // ratio > N
};

// Runs the weak (p, p) witness on the first J balls of the family.
template <class T>
WeakWitness<T> weak_pp_witness(double p, std::uint64_t n_bound, const BallFamily<T>& family);

}  // namespace besicovitch

#endif  // BESICOVITCH_CONSTRUCTIONS_HPP
