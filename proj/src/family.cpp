#include "besicovitch/family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace besicovitch {

namespace {

template <class T>
double approx_distance(const NormSpec& norm, const Vector<T>& a, const Vector<T>& b) {
  if constexpr (is_exact_v<T>) {
    if (norm.exact_distance()) return to_double(distance(norm, a, b));
    return distance(norm, to_double(a), to_double(b));
  } else {
    return distance(norm, a, b);
  }
}

template <class T>
Vector<T> zero_vector(std::size_t d) {
  return Vector<T>(d, T(0));
}

template <class T>
void require_valid(const BallFamily<T>& family, const T& margin, const char* what) {
  auto v = validate_family(family, margin);
  if (!v) throw std::invalid_argument(std::string(what) + ": " + v.violation->message);
}

// Largest witness distance and smallest centre gap of a float family.
struct Spread {
  double reach = 0;
  double gap = std::numeric_limits<double>::infinity();
};

Spread spread(const NormSpec& norm, const std::vector<Vector<double>>& centers,
              const Vector<double>& witness) {
  Spread s;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    s.reach = std::max(s.reach, distance(norm, centers[i], witness));
    for (std::size_t j = i + 1; j < centers.size(); ++j) {
      s.gap = std::min(s.gap, distance(norm, centers[i], centers[j]));
    }
  }
  return s;
}

}  // namespace

template <class T>
BallFamily<T> BallFamily<T>::equal_radius(NormSpec norm, std::vector<Vector<T>> centers,
                                          T radius, BallKind kind, Vector<T> witness) {
  BallFamily<T> f{std::move(norm), std::move(centers), {}, kind, std::move(witness)};
  f.radii.assign(f.centers.size(), radius);
  return f;
}

template <class T>
bool BallFamily<T>::has_equal_radii() const {
  return std::all_of(radii.begin(), radii.end(), [&](const T& r) { return r == radii.front(); });
}

template <class T>
const T& BallFamily<T>::radius() const {
  if (radii.empty()) throw std::logic_error("empty family has no radius");
  if (!has_equal_radii()) throw std::logic_error("family has mixed radii");
  return radii.front();
}

template <class T>
Validation<T> validate_family(const BallFamily<T>& family, const T& margin) {
  if (family.centers.size() != family.radii.size()) {
    throw std::invalid_argument("centre and radius counts differ");
  }
  const NormSpec& norm = family.norm;
  auto fail = [](Violation v) {
    Validation<T> out;
    out.violation = std::move(v);
    return out;
  };
  for (std::size_t i = 0; i < family.size(); ++i) {
    check_dimension(norm, family.centers[i].size(), family.witness.size());
    if (!(family.radii[i] > 0)) {
      return fail({i, Violation::npos, 0.0, to_double(family.radii[i]),
                   "radius of ball " + std::to_string(i) + " is not positive"});
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    const BallSpec<T> ball{family.centers[i], family.radii[i], family.kind};
    if (!ball_contains(norm, ball, family.witness, margin)) {
      const double d = approx_distance(norm, family.centers[i], family.witness);
      const double bound = to_double(T(family.radii[i] - margin));
      return fail({i, Violation::npos, d, bound,
                   "witness not in ball " + std::to_string(i) + ": distance " + format_scalar(d) +
                       (family.kind == BallKind::closed ? " > " : " >= ") + format_scalar(bound)});
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const auto& a = family.centers[i];
      const auto& b = family.centers[j];
      const T& rmax = std::max(family.radii[i], family.radii[j]);
      if (!separated(norm, a, b, rmax, family.kind, margin)) {
        const double d = approx_distance(norm, a, b);
        const double bound = to_double(T(rmax + margin));
        return fail({i, j, d, bound,
                     "centres " + std::to_string(i) + " and " + std::to_string(j) +
                         " too close: distance " + format_scalar(d) +
                         (family.kind == BallKind::closed ? " <= " : " < ") +
                         format_scalar(bound)});
      }
    }
  }
  Validation<T> out;
  out.certificate = Certificate<T>{family, margin, std::nullopt};
  return out;
}

template <class T>
SearchGraph build_search_graph(const CandidateSet<T>& cands, BallKind kind, const T& margin) {
  if (!(cands.radius > 0)) throw std::invalid_argument("candidate radius must be positive");
  if constexpr (is_exact_v<T>) {
    if (margin != 0) throw std::invalid_argument("exact mode requires a zero margin");
  }
  const NormSpec& norm = cands.norm;
  SearchGraph sg{{}, Graph(0)};
  const T reach = cands.radius + margin;
  for (std::size_t i = 0; i < cands.points.size(); ++i) {
    int c = compare_distance(norm, cands.points[i], cands.anchor, reach);
    if (kind == BallKind::closed ? c <= 0 : c < 0) sg.admissible.push_back(i);
  }
  const std::size_t n = sg.admissible.size();
  sg.graph = Graph(n);
  const T gap = cands.radius + 3 * margin;
  for (std::size_t a = 0; a < n; ++a) {
    const auto& pa = cands.points[sg.admissible[a]];
    for (std::size_t b = a + 1; b < n; ++b) {
      int c = compare_distance(norm, pa, cands.points[sg.admissible[b]], gap);
      if (kind == BallKind::closed ? c > 0 : c >= 0) sg.graph.add_edge(a, b);
    }
  }
  return sg;
}

template <class T>
Certificate<T> certify_selection(const CandidateSet<T>& cands, BallKind kind, const T& margin,
                                 const std::vector<std::size_t>& selection) {
  std::vector<Vector<T>> centers;
  for (std::size_t i : selection) centers.push_back(cands.points.at(i));
  T radius = cands.radius;
  if constexpr (!is_exact_v<T>) {
    const Spread s = spread(cands.norm, centers, cands.anchor);
    if (centers.size() >= 2) {
      radius = 0.5 * (s.reach + s.gap);
    } else if (!centers.empty()) {
      radius = std::max(cands.radius, s.reach + 2 * margin);
    }
  }
  auto family = BallFamily<T>::equal_radius(cands.norm, std::move(centers), radius, kind,
                                            cands.anchor);
  auto v = validate_family(family, margin);
  if (!v) throw std::logic_error("selection does not certify: " + v.violation->message);
  return std::move(*v.certificate);
}

template <class T>
Certificate<T> clique_search_exact(const CandidateSet<T>& cands, BallKind kind, const T& margin,
                                   const SearchOptions& options) {
  SearchGraph sg = build_search_graph(cands, kind, margin);
  if (sg.admissible.size() > options.cap) {
    throw CapExceeded(std::to_string(sg.admissible.size()) +
                      " admissible candidates exceed the exact-search cap of " +
                      std::to_string(options.cap) + "; raise the cap or use the heuristic search");
  }
  CliqueOptions co;
  co.order = options.order;
  co.threads = options.threads;
  std::vector<std::size_t> selection;
  for (std::size_t v : maximum_clique(sg.graph, co)) selection.push_back(sg.admissible[v]);
  return certify_selection(cands, kind, margin, selection);
}

template <class T>
Certificate<T> clique_search_heuristic(const CandidateSet<T>& cands, BallKind kind,
                                       const T& margin, std::uint64_t seed,
                                       std::uint64_t budget) {
  SearchGraph sg = build_search_graph(cands, kind, margin);
  std::vector<std::size_t> selection;
  for (std::size_t v : heuristic_clique(sg.graph, seed, budget)) {
    selection.push_back(sg.admissible[v]);
  }
  auto cert = certify_selection(cands, kind, margin, selection);
  cert.seed = seed;
  return cert;
}

template <class T>
CoverResult<T> greedy_cover(const DiscreteMeasure<T>& mu, const Vector<T>& y, const T& s,
                            const T& r) {
  if (!(s > 0) || !(s < r)) throw std::invalid_argument("greedy_cover needs 0 < s < r");
  const std::size_t y_index = mu.find(y);
  if (y_index == static_cast<std::size_t>(-1)) {
    throw std::invalid_argument("greedy_cover needs y to be an atom");
  }
  const AveragingOperator<T> op(mu, r, BallKind::open);
  const BallSpec<T> inner{y, s, BallKind::open};

  std::vector<char> remaining(mu.size(), 0);
  CoverResult<T> out{{}, T(0), {}};
  for (std::size_t x = 0; x < mu.size(); ++x) {
    if (ball_contains(mu.norm(), inner, mu.atom(x))) {
      remaining[x] = 1;
      out.partial_sum += mu.weight(x) / op.ball_mass(x);
    }
  }
  while (true) {
    std::size_t pick = mu.size();
    for (std::size_t x = 0; x < mu.size(); ++x) {
      if (remaining[x] && (pick == mu.size() || op.ball_mass(x) < op.ball_mass(pick))) pick = x;
    }
    if (pick == mu.size()) break;
    out.selected.push_back(pick);
    for (std::size_t x : op.ball(pick)) remaining[x] = 0;
  }
  std::vector<Vector<T>> centers;
  for (std::size_t u : out.selected) centers.push_back(mu.atom(u));
  out.family = BallFamily<T>::equal_radius(mu.norm(), std::move(centers), r, BallKind::open, y);
  return out;
}

template <class T>
BallFamily<T> open_closed_convert(const BallFamily<T>& family, const T& margin) {
  require_valid(family, margin, "open_closed_convert needs a valid family");
  BallFamily<T> out = family;
  if (family.size() == 0) {
    out.kind = family.kind == BallKind::open ? BallKind::closed : BallKind::open;
    return out;
  }
  const T r = family.radius();
  const NormSpec& norm = family.norm;

  if (family.kind == BallKind::closed) {
    // Any radius in (r, t - margin] works, t the smallest centre gap.
    out.kind = BallKind::open;
    T radius = 2 * r;
    if (family.size() >= 2) {
      if constexpr (is_exact_v<T>) {
        if (norm.exact_distance()) {
          radius = distance(norm, family.centers[0], family.centers[1]);
          for (std::size_t i = 0; i < family.size(); ++i) {
            for (std::size_t j = i + 1; j < family.size(); ++j) {
              radius = std::min(radius, distance(norm, family.centers[i], family.centers[j]));
            }
          }
        } else {
          double t = std::numeric_limits<double>::infinity();
          for (std::size_t i = 0; i < family.size(); ++i) {
            for (std::size_t j = i + 1; j < family.size(); ++j) {
              t = std::min(t, approx_distance(norm, family.centers[i], family.centers[j]));
            }
          }
          radius = to_rational(t);
        }
      } else {
        radius = spread(norm, family.centers, family.witness).gap - margin;
      }
    }
    for (int attempt = 0; attempt < 200; ++attempt) {
      out.radii.assign(family.size(), radius);
      if (validate_family(out, margin)) return out;
      radius = (r + radius) / 2;
    }
    throw std::logic_error("closed to open conversion failed to certify");
  }

  // Any delta in (0, min slack - margin] works.
  out.kind = BallKind::closed;
  double slack = std::numeric_limits<double>::infinity();
  for (const auto& c : family.centers) {
    slack = std::min(slack, to_double(r) - approx_distance(norm, c, family.witness));
  }
  T delta;
  if constexpr (is_exact_v<T>) {
    if (norm.exact_distance()) {
      T exact_slack = r - distance(norm, family.centers[0], family.witness);
      for (const auto& c : family.centers) {
        exact_slack = std::min(exact_slack, T(r - distance(norm, c, family.witness)));
      }
      delta = exact_slack / 2;
    } else {
      delta = to_rational(slack / 2);
    }
  } else {
    delta = (slack - margin) / 2;
  }
  for (int attempt = 0; attempt < 200; ++attempt) {
    if (delta > 0) {
      out.radii.assign(family.size(), T(r - delta));
      if (validate_family(out, margin)) return out;
    }
    delta = delta / 2;
  }
  throw std::logic_error("open to closed conversion failed to certify");
}

template <class T>
BallFamily<T> equalize_family(const BallFamily<T>& family) {
  require_valid(family, T(0), "equalize_family needs a valid family");
  BallFamily<T> out;
  out.norm = family.norm;
  out.kind = BallKind::closed;
  out.witness = zero_vector<T>(family.witness.size());
  out.centers = normalize_to_sphere(family.norm, family.centers, family.witness);
  T radius(1);
  if constexpr (!is_exact_v<T>) {
    const Spread s = spread(out.norm, out.centers, out.witness);
    radius = out.centers.size() >= 2 ? 0.5 * (s.reach + s.gap) : std::max(1.0, s.reach);
  }
  out.radii.assign(out.centers.size(), radius);
  return out;
}

#define BESICOVITCH_INSTANTIATE(T)                                                               \
  template struct BallFamily<T>;                                                                 \
  template Validation<T> validate_family<T>(const BallFamily<T>&, const T&);                     \
  template SearchGraph build_search_graph<T>(const CandidateSet<T>&, BallKind, const T&);        \
  template Certificate<T> certify_selection<T>(const CandidateSet<T>&, BallKind, const T&,       \
                                               const std::vector<std::size_t>&);                 \
  template Certificate<T> clique_search_exact<T>(const CandidateSet<T>&, BallKind, const T&,     \
                                                 const SearchOptions&);                          \
  template Certificate<T> clique_search_heuristic<T>(const CandidateSet<T>&, BallKind, const T&, \
                                                     std::uint64_t, std::uint64_t);              \
  template CoverResult<T> greedy_cover<T>(const DiscreteMeasure<T>&, const Vector<T>&, const T&, \
                                          const T&);                                             \
  template BallFamily<T> open_closed_convert<T>(const BallFamily<T>&, const T&);                 \
  template BallFamily<T> equalize_family<T>(const BallFamily<T>&);

BESICOVITCH_INSTANTIATE(double)
BESICOVITCH_INSTANTIATE(Rational)

#undef BESICOVITCH_INSTANTIATE

}  // namespace besicovitch
