// Independent reference implementations for the unit tests. Nothing here
// calls the library's distance, measure or clique code.
#ifndef BESICOVITCH_TESTS_ORACLES_HPP
#define BESICOVITCH_TESTS_ORACLES_HPP

#include "besicovitch/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using besicovitch::Rational;

// Coordinate norms on doubles by their textbook formulas.
inline double l1(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::fabs(a[i] - b[i]);
  return s;
}

inline double l2(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

inline double linf(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = std::max(s, std::fabs(a[i] - b[i]));
  return s;
}

inline Rational rat_linf(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational d = a[i] - b[i];
    if (d < 0) d = -d;
    if (d > s) s = d;
  }
  return s;
}

inline Rational rat_l1(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational d = a[i] - b[i];
    s += d < 0 ? Rational(-d) : d;
  }
  return s;
}

// Dense averaging matrix M[i][j] = w_j [j in B(x_i, r)] / mu B(x_i, r) for
// closed balls, from a membership predicate in(i, j).
template <class T, class In>
std::vector<std::vector<T>> dense_matrix(const std::vector<T>& w, In in) {
  const std::size_t n = w.size();
  std::vector<std::vector<T>> m(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i) {
    T mass = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (in(i, j)) mass += w[j];
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (in(i, j)) m[i][j] = w[j] / mass;
    }
  }
  return m;
}

template <class T>
std::vector<T> mat_apply(const std::vector<std::vector<T>>& m, const std::vector<T>& f) {
  std::vector<T> out(m.size(), T(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) out[i] += m[i][j] * f[j];
  }
  return out;
}

template <class T>
T weighted_l1(const std::vector<T>& w, const std::vector<T>& f) {
  T s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * (f[i] < 0 ? T(-f[i]) : f[i]);
  return s;
}

// max over atoms y of ||M 1_y||_1 / ||1_y||_1.
template <class T>
T indicator_norm(const std::vector<std::vector<T>>& m, const std::vector<T>& w) {
  T best = 0;
  for (std::size_t y = 0; y < w.size(); ++y) {
    std::vector<T> f(w.size(), T(0));
    f[y] = 1;
    T v = weighted_l1(w, mat_apply(m, f)) / w[y];
    if (v > best) best = v;
  }
  return best;
}

// Clique number by exhaustive search over subsets (n <= 20).
inline std::size_t brute_clique_number(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        if ((mask >> j & 1u) && !adj[i][j]) ok = false;
      }
    }
    if (ok) best = size;
  }
  return best;
}

// Random rational in [lo, hi] with denominator `den`.
inline Rational random_rational(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi,
                                std::int64_t den) {
  std::uniform_int_distribution<std::int64_t> dist(lo * den, hi * den);
  return Rational(dist(rng), den);
}

}  // namespace oracle

#endif  // BESICOVITCH_TESTS_ORACLES_HPP
