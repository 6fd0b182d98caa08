#ifndef BESICOVITCH_GEOMETRY_HPP
#define BESICOVITCH_GEOMETRY_HPP

#include "besicovitch/arithmetic.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace besicovitch {

enum class NormKind { l1, l2, linf, lp, polytope };
enum class BallKind { open, closed };

std::string_view to_string(NormKind kind);
std::string_view to_string(BallKind kind);
BallKind ball_kind_from_string(std::string_view text);

// A norm on coordinate space. Polytope norms are gauges of an
// origin-symmetric, full-dimensional polytope given by its vertices; the
// facet inequalities <a, x> <= 1 are derived once at construction and shared
// between copies.
class NormSpec {
 public:
  static NormSpec l1();
  static NormSpec l2();
  static NormSpec linf();
  static NormSpec lp(double p);
  static NormSpec polytope(std::vector<Vector<Rational>> vertices);

  NormKind kind() const { return kind_; }
  // Exponent for lp; 1, 2 or +inf for the fixed kinds; 0 for polytope.
  double p() const { return p_; }

  // Fixed dimension of a polytope norm; nullopt for coordinate norms.
  std::optional<std::size_t> dimension() const;
  const std::vector<Vector<Rational>>& vertices() const;
  const std::vector<Vector<Rational>>& facets() const;
  const std::vector<Vector<double>>& facets_double() const;

  // L1, Linf and polytope distances of rational points are rational.
  bool exact_distance() const;
  // Additionally L2 and integer lp, by comparing p-th powers.
  bool exact_comparison() const;
  // The power k such that comparisons use sum |x_i|^k; nullopt otherwise.
  std::optional<unsigned> integer_power() const;

  std::string name() const;

  friend bool operator==(const NormSpec& a, const NormSpec& b);

 private:
  struct PolytopeData;
  NormSpec(NormKind kind, double p) : kind_(kind), p_(p) {}

  NormKind kind_;
  double p_;
  std::shared_ptr<const PolytopeData> polytope_;
};

template <class T>
struct BallSpec {
  Vector<T> center;
  T radius;
  BallKind kind;
};

void check_dimension(const NormSpec& norm, std::size_t a, std::size_t b);

// ||v||. For Rational requires norm.exact_distance(), else ExactnessError.
template <class T>
T norm_value(const NormSpec& norm, const Vector<T>& v);

template <class T>
T distance(const NormSpec& norm, const Vector<T>& a, const Vector<T>& b);

// Sign of d(a, b) - threshold: -1, 0 or +1. Exact whenever
// norm.exact_comparison() holds in rational mode.
template <class T>
int compare_distance(const NormSpec& norm, const Vector<T>& a, const Vector<T>& b,
                     const T& threshold);

// closed: d(center, p) <= radius - margin; open: d(center, p) < radius - margin.
// Rational mode requires margin == 0.
template <class T>
bool ball_contains(const NormSpec& norm, const BallSpec<T>& ball, const Vector<T>& p,
                   const T& margin = T(0));

// closed: d(a, b) > r + margin; open: d(a, b) >= r + margin.
template <class T>
bool separated(const NormSpec& norm, const Vector<T>& a, const Vector<T>& b, const T& r,
               BallKind kind, const T& margin = T(0));

// Moves the witness to the origin, rescales by the smallest distance to the
// witness, and projects every point onto the unit sphere.
template <class T>
std::vector<Vector<T>> normalize_to_sphere(const NormSpec& norm,
                                           const std::vector<Vector<T>>& points,
                                           const Vector<T>& witness);

// (||a - b|| - | ||a|| - ||b|| |) / min(||a||, ||b||), a lower bound for
// ||a/||a|| - b/||b|| ||.
template <class T>
T angular_separation_bound(const NormSpec& norm, const Vector<T>& a, const Vector<T>& b);

}  // namespace besicovitch

#endif  // BESICOVITCH_GEOMETRY_HPP
