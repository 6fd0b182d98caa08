#include "besicovitch/candidates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace besicovitch {

namespace {

CandidateSet<double> circle_from_angles(std::vector<double> angles) {
  std::sort(angles.begin(), angles.end());
  CandidateSet<double> cands{NormSpec::l2(), {0.0, 0.0}, 1.0, {}};
  cands.points.reserve(angles.size());
  for (double a : angles) cands.points.push_back({std::cos(a), std::sin(a)});
  return cands;
}

}  // namespace

double unit_interval(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

CandidateSet<Rational> corner_candidates(const NormSpec& norm, std::size_t dim) {
  if (dim == 0 || dim > 20) throw std::invalid_argument("corner candidates need 1 <= dim <= 20");
  CandidateSet<Rational> cands{norm, Vector<Rational>(dim, Rational(0)), Rational(1), {}};
  for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
    Vector<Rational> p(dim);
    for (std::size_t i = 0; i < dim; ++i) p[i] = (mask >> i) & 1u ? Rational(1) : Rational(-1);
    cands.points.push_back(std::move(p));
  }
  cands.points.push_back(Vector<Rational>(dim, Rational(0)));
  return cands;
}

CandidateSet<Rational> cross_candidates(const NormSpec& norm, std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("cross candidates need dim >= 1");
  CandidateSet<Rational> cands{norm, Vector<Rational>(dim, Rational(0)), Rational(1), {}};
  for (std::size_t i = 0; i < dim; ++i) {
    for (int sign : {1, -1}) {
      Vector<Rational> p(dim, Rational(0));
      p[i] = Rational(sign);
      cands.points.push_back(std::move(p));
    }
  }
  cands.points.push_back(Vector<Rational>(dim, Rational(0)));
  return cands;
}

template <class T>
CandidateSet<T> lattice_candidates(const NormSpec& norm, std::size_t dim, const T& radius,
                                   unsigned steps) {
  if (dim == 0 || steps == 0) throw std::invalid_argument("lattice needs dim >= 1 and steps >= 1");
  if (!(radius > 0)) throw std::invalid_argument("lattice radius must be positive");
  // The unit ball lies in the cube [-extent, extent]^d.
  Rational extent(1);
  for (const auto& v : norm.vertices()) {
    for (const auto& x : v) extent = std::max(extent, abs_value(x));
  }
  const long half = static_cast<long>(std::ceil(to_double(extent))) * static_cast<long>(steps);
  const std::size_t width = static_cast<std::size_t>(2 * half + 1);
  double total = std::pow(static_cast<double>(width), static_cast<double>(dim));
  if (total > 5e7) throw std::invalid_argument("lattice too large");

  const T spacing = radius / T(steps);
  const Vector<T> origin(dim, T(0));
  CandidateSet<T> cands{norm, origin, radius, {}};
  std::vector<long> k(dim, -half);
  while (true) {
    Vector<T> p(dim);
    for (std::size_t i = 0; i < dim; ++i) p[i] = T(k[i]) * spacing;
    if (compare_distance(norm, p, origin, radius) <= 0) cands.points.push_back(std::move(p));
    std::size_t i = dim;
    while (i > 0 && k[i - 1] == half) {
      k[i - 1] = -half;
      --i;
    }
    if (i == 0) break;
    ++k[i - 1];
  }
  return cands;
}

CandidateSet<double> fibonacci_circle(std::size_t n) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  std::vector<double> angles;
  angles.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    double frac = std::fmod(static_cast<double>(k) * inv_phi, 1.0);
    angles.push_back(2.0 * std::numbers::pi * frac);
  }
  return circle_from_angles(std::move(angles));
}

CandidateSet<double> fibonacci_sphere(std::size_t n) {
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  CandidateSet<double> cands{NormSpec::l2(), {0.0, 0.0, 0.0}, 1.0, {}};
  for (std::size_t k = 0; k < n; ++k) {
    double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(n);
    double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    double theta = golden_angle * static_cast<double>(k);
    cands.points.push_back({rho * std::cos(theta), rho * std::sin(theta), z});
  }
  return cands;
}

CandidateSet<double> regular_polygon(std::size_t k, double phase) {
  if (k == 0) throw std::invalid_argument("polygon needs at least one vertex");
  CandidateSet<double> cands{NormSpec::l2(), {0.0, 0.0}, 1.0, {}};
  for (std::size_t i = 0; i < k; ++i) {
    double a = phase + 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(k);
    cands.points.push_back({std::cos(a), std::sin(a)});
  }
  return cands;
}

CandidateSet<double> random_circle(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> angles;
  angles.reserve(n);
  for (std::size_t k = 0; k < n; ++k) angles.push_back(2.0 * std::numbers::pi * unit_interval(rng()));
  return circle_from_angles(std::move(angles));
}

CandidateSet<double> icosahedron() {
  const double phi = std::numbers::phi;
  const double scale = 1.0 / std::sqrt(1.0 + phi * phi);
  CandidateSet<double> cands{NormSpec::l2(), {0.0, 0.0, 0.0}, 1.0, {}};
  for (double s1 : {1.0, -1.0}) {
    for (double s2 : {1.0, -1.0}) {
      const double a = s1 * scale;
      const double b = s2 * phi * scale;
      cands.points.push_back({0.0, a, b});
      cands.points.push_back({a, b, 0.0});
      cands.points.push_back({b, 0.0, a});
    }
  }
  return cands;
}

template <class T>
CandidateSet<T> with_norm(CandidateSet<T> cands, NormSpec norm) {
  cands.norm = std::move(norm);
  return cands;
}

CandidateSet<double> to_double(const CandidateSet<Rational>& cands) {
  CandidateSet<double> out{cands.norm, to_double(cands.anchor), to_double(cands.radius), {}};
  out.points.reserve(cands.points.size());
  for (const auto& p : cands.points) out.points.push_back(to_double(p));
  return out;
}

template CandidateSet<double> lattice_candidates<double>(const NormSpec&, std::size_t,
                                                         const double&, unsigned);
template CandidateSet<Rational> lattice_candidates<Rational>(const NormSpec&, std::size_t,
                                                             const Rational&, unsigned);
template CandidateSet<double> with_norm<double>(CandidateSet<double>, NormSpec);
template CandidateSet<Rational> with_norm<Rational>(CandidateSet<Rational>, NormSpec);

}  // namespace besicovitch
