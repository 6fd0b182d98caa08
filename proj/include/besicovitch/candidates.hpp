#ifndef BESICOVITCH_CANDIDATES_HPP
#define BESICOVITCH_CANDIDATES_HPP

#include "besicovitch/family.hpp"

#include <cstdint>

namespace besicovitch {

// Search universes. Sphere generators emit points in angular order, which
// keeps the greedy colouring bound of the exact search tight.

// {-1, 0, 1}^d corners {+-1}^d plus the origin; anchor 0, radius 1.
CandidateSet<Rational> corner_candidates(const NormSpec& norm, std::size_t dim);

// +-e_i plus the origin; anchor 0, radius 1.
CandidateSet<Rational> cross_candidates(const NormSpec& norm, std::size_t dim);

// Grid (radius / steps) Z^d intersected with the closed ball B(0, radius),
// lexicographic order.
template <class T>
CandidateSet<T> lattice_candidates(const NormSpec& norm, std::size_t dim, const T& radius,
                                   unsigned steps);

// angle 2 pi frac(k / golden ratio), k < n, sorted by angle.
CandidateSet<double> fibonacci_circle(std::size_t n);

// Spiral points z_k = 1 - (2k + 1) / n on the unit sphere of R^3.
CandidateSet<double> fibonacci_sphere(std::size_t n);

// Vertices of a regular k-gon on the unit circle, starting at angle `phase`.
CandidateSet<double> regular_polygon(std::size_t k, double phase = 0.0);

// Seeded uniform points on the unit circle, sorted by angle.
CandidateSet<double> random_circle(std::size_t n, std::uint64_t seed);

// The 12 vertices (0, +-1, +-phi) and cyclic shifts, scaled to unit length.
CandidateSet<double> icosahedron();

// Changes the norm of a universe (points and anchor unchanged).
template <class T>
CandidateSet<T> with_norm(CandidateSet<T> cands, NormSpec norm);

CandidateSet<double> to_double(const CandidateSet<Rational>& cands);

// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw; portable
// across standard libraries, unlike std::uniform_real_distribution.
double unit_interval(std::uint64_t bits);

}  // namespace besicovitch

#endif  // BESICOVITCH_CANDIDATES_HPP
