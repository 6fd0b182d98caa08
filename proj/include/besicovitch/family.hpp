#ifndef BESICOVITCH_FAMILY_HPP
#define BESICOVITCH_FAMILY_HPP

#include "besicovitch/clique.hpp"
#include "besicovitch/geometry.hpp"
#include "besicovitch/measure.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace besicovitch {

// Default certificate margin in float mode.
inline constexpr double default_float_margin = 1e-9;

template <class T>
T default_margin() {
  if constexpr (is_exact_v<T>) {
    return T(0);
  } else {
    return default_float_margin;
  }
}

// Balls B(centers[i], radii[i]) of one kind together with a point claimed to
// lie in all of them.
template <class T>
struct BallFamily {
  NormSpec norm = NormSpec::l2();
  std::vector<Vector<T>> centers;
  std::vector<T> radii;
  BallKind kind = BallKind::closed;
  Vector<T> witness;

  static BallFamily equal_radius(NormSpec norm, std::vector<Vector<T>> centers, T radius,
                                 BallKind kind, Vector<T> witness);

  std::size_t size() const { return centers.size(); }
  bool has_equal_radii() const;
  // The common radius; throws for mixed radii or an empty family.
  const T& radius() const;
};

struct Violation {
  // index_b == npos: centre index_a does not contain the witness.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t index_a = 0;
  std::size_t index_b = npos;
  double distance = 0;
  double bound = 0;
  std::string message;
};

template <class T>
struct Certificate {
  BallFamily<T> family;
  T margin;
  // Seed of the search that produced the family, when there was one.
  std::optional<std::uint64_t> seed;

  static constexpr Arithmetic mode() { return arithmetic_of<T>(); }
  std::size_t cardinality() const { return family.size(); }
  // Lower bound this family proves for E (equal radii) or L (mixed radii).
  std::size_t constant_claim() const { return family.size(); }
};

template <class T>
struct Validation {
  std::optional<Certificate<T>> certificate;
  std::optional<Violation> violation;

  explicit operator bool() const { return certificate.has_value(); }
};

// Checks witness membership in every ball and the pairwise condition
// x_i not in B(x_j, r_j), at the given margin.
template <class T>
Validation<T> validate_family(const BallFamily<T>& family, const T& margin);

// A finite search universe: points that may serve as centres of radius
// `radius` balls containing `anchor`.
template <class T>
struct CandidateSet {
  NormSpec norm = NormSpec::l2();
  Vector<T> anchor;
  T radius;
  std::vector<Vector<T>> points;
};

inline constexpr std::size_t default_candidate_cap = 2000;

class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct SearchOptions {
  std::size_t cap = default_candidate_cap;
  unsigned threads = 0;
  VertexOrder order = VertexOrder::input;
};

// Conflict graph of a candidate set. In exact mode vertices are the points
// whose ball contains the anchor and edges join separated pairs. In float
// mode admission is tolerant by `margin` while separation requires
// 3 * margin, which leaves room to re-centre the radius so that the final
// family holds every inequality with slack `margin`.
struct SearchGraph {
  std::vector<std::size_t> admissible;  // candidate indices, ascending
  Graph graph;
};

template <class T>
SearchGraph build_search_graph(const CandidateSet<T>& cands, BallKind kind, const T& margin);

// Family from candidate indices, certified at `margin`. Float families get
// the radius midway between the largest witness distance and the smallest
// centre gap.
template <class T>
Certificate<T> certify_selection(const CandidateSet<T>& cands, BallKind kind, const T& margin,
                                 const std::vector<std::size_t>& selection);

template <class T>
Certificate<T> clique_search_exact(const CandidateSet<T>& cands, BallKind kind, const T& margin,
                                   const SearchOptions& options = {});

template <class T>
Certificate<T> clique_search_heuristic(const CandidateSet<T>& cands, BallKind kind,
                                       const T& margin, std::uint64_t seed,
                                       std::uint64_t budget);

template <class T>
struct CoverResult {
  std::vector<std::size_t> selected;  // atom indices u_1, ..., u_m
  T partial_sum;                      // sum over B^o(y, s) of w(x) / mu B^o(x, r)
  BallFamily<T> family;               // open balls B^o(u_i, r), witness y

  std::size_t count() const { return selected.size(); }
};

// Greedy covering of B^o(y, s) by open r-balls of minimal measure, with ties
// broken by the lowest atom index.
template <class T>
CoverResult<T> greedy_cover(const DiscreteMeasure<T>& mu, const Vector<T>& y, const T& s,
                            const T& r);

// closed -> open with radius min pairwise centre distance (less `margin`);
// open -> closed with radius r - delta, delta half the witness slack left
// after `margin`.
template <class T>
BallFamily<T> open_closed_convert(const BallFamily<T>& family, const T& margin = T(0));

// Witness to the origin, centres projected to the unit sphere, closed balls of
// radius 1. Float results take the radius midway between the largest centre
// norm and the smallest centre gap instead, since computed unit vectors are
// only unit up to rounding.
template <class T>
BallFamily<T> equalize_family(const BallFamily<T>& family);

}  // namespace besicovitch

#endif  // BESICOVITCH_FAMILY_HPP
