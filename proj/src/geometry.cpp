#include "besicovitch/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace besicovitch {

std::string_view to_string(NormKind kind) {
  switch (kind) {
    case NormKind::l1: return "l1";
    case NormKind::l2: return "l2";
    case NormKind::linf: return "linf";
    case NormKind::lp: return "lp";
    case NormKind::polytope: return "polytope";
  }
  return "?";
}

std::string_view to_string(BallKind kind) { return kind == BallKind::open ? "open" : "closed"; }

BallKind ball_kind_from_string(std::string_view text) {
  if (text == "open") return BallKind::open;
  if (text == "closed") return BallKind::closed;
  throw std::invalid_argument("unknown ball kind '" + std::string(text) + "'");
}

struct NormSpec::PolytopeData {
  std::size_t dim = 0;
  std::vector<Vector<Rational>> vertices;
  std::vector<Vector<Rational>> facets;
  std::vector<Vector<double>> facets_double;
};

namespace {

// Solves rows * a = (1, ..., 1) for square rows; nullopt when singular.
std::optional<Vector<Rational>> solve_unit_rhs(std::vector<Vector<Rational>> rows) {
  const std::size_t n = rows.size();
  for (auto& row : rows) row.push_back(Rational(1));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && rows[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(rows[col], rows[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || rows[r][col] == 0) continue;
      Rational factor = rows[r][col] / rows[col][col];
      for (std::size_t k = col; k <= n; ++k) rows[r][k] -= factor * rows[col][k];
    }
  }
  Vector<Rational> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = rows[i][n] / rows[i][i];
  return a;
}

Rational dot(const Vector<Rational>& a, const Vector<Rational>& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Every facet of a full-dimensional polytope with the origin in its interior
// passes through d linearly independent vertices, so enumerating d-subsets
// and keeping the hyperplanes that support all vertices finds all facets.
std::vector<Vector<Rational>> derive_facets(const std::vector<Vector<Rational>>& vertices,
                                            std::size_t dim) {
  std::vector<Vector<Rational>> facets;
  const std::size_t n = vertices.size();
  if (n < dim) return facets;
  std::vector<std::size_t> idx(dim);
  for (std::size_t i = 0; i < dim; ++i) idx[i] = i;
  while (true) {
    std::vector<Vector<Rational>> rows;
    rows.reserve(dim);
    for (std::size_t i : idx) rows.push_back(vertices[i]);
    if (auto a = solve_unit_rhs(std::move(rows))) {
      bool supporting = std::all_of(vertices.begin(), vertices.end(),
                                    [&](const Vector<Rational>& v) { return dot(*a, v) <= 1; });
      if (supporting && std::find(facets.begin(), facets.end(), *a) == facets.end()) {
        facets.push_back(std::move(*a));
      }
    }
    // next combination
    std::size_t k = dim;
    while (k > 0 && idx[k - 1] == n - dim + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < dim; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(facets.begin(), facets.end());
  return facets;
}

template <class T>
T power(const T& x, unsigned k) {
  T out(1);
  for (unsigned i = 0; i < k; ++i) out *= x;
  return out;
}

template <class T>
Vector<T> difference(const Vector<T>& a, const Vector<T>& b) {
  Vector<T> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

template <class T>
void require_zero_margin(const T& margin) {
  if constexpr (is_exact_v<T>) {
    if (margin != 0) throw std::invalid_argument("exact mode requires a zero margin");
  } else {
    if (!(margin >= 0)) throw std::invalid_argument("margin must be nonnegative");
  }
}

}  // namespace

NormSpec NormSpec::l1() { return NormSpec(NormKind::l1, 1.0); }
NormSpec NormSpec::l2() { return NormSpec(NormKind::l2, 2.0); }
NormSpec NormSpec::linf() {
  return NormSpec(NormKind::linf, std::numeric_limits<double>::infinity());
}

NormSpec NormSpec::lp(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("lp norm needs finite p > 1");
  return NormSpec(NormKind::lp, p);
}

NormSpec NormSpec::polytope(std::vector<Vector<Rational>> vertices) {
  if (vertices.empty()) throw std::invalid_argument("polytope norm needs vertices");
  const std::size_t dim = vertices.front().size();
  if (dim == 0) throw DimensionError("polytope vertices must have dimension >= 1");
  for (const auto& v : vertices) {
    if (v.size() != dim) throw DimensionError("polytope vertices have inconsistent dimensions");
  }
  for (const auto& v : vertices) {
    Vector<Rational> neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    if (std::find(vertices.begin(), vertices.end(), neg) == vertices.end()) {
      throw std::invalid_argument("polytope vertex set is not origin-symmetric");
    }
  }
  auto data = std::make_shared<PolytopeData>();
  data->dim = dim;
  data->facets = derive_facets(vertices, dim);
  if (data->facets.empty()) throw std::invalid_argument("polytope is not full-dimensional");
  for (const auto& a : data->facets) data->facets_double.push_back(to_double(a));
  data->vertices = std::move(vertices);
  NormSpec spec(NormKind::polytope, 0.0);
  spec.polytope_ = std::move(data);
  return spec;
}

std::optional<std::size_t> NormSpec::dimension() const {
  if (polytope_) return polytope_->dim;
  return std::nullopt;
}

const std::vector<Vector<Rational>>& NormSpec::vertices() const {
  static const std::vector<Vector<Rational>> none;
  return polytope_ ? polytope_->vertices : none;
}

const std::vector<Vector<Rational>>& NormSpec::facets() const {
  static const std::vector<Vector<Rational>> none;
  return polytope_ ? polytope_->facets : none;
}

const std::vector<Vector<double>>& NormSpec::facets_double() const {
  static const std::vector<Vector<double>> none;
  return polytope_ ? polytope_->facets_double : none;
}

bool NormSpec::exact_distance() const {
  return kind_ == NormKind::l1 || kind_ == NormKind::linf || kind_ == NormKind::polytope;
}

bool NormSpec::exact_comparison() const { return exact_distance() || integer_power().has_value(); }

std::optional<unsigned> NormSpec::integer_power() const {
  if (kind_ == NormKind::l2) return 2u;
  if (kind_ == NormKind::lp && p_ == std::floor(p_) && p_ <= 64) return static_cast<unsigned>(p_);
  return std::nullopt;
}

std::string NormSpec::name() const {
  if (kind_ == NormKind::lp) return "l" + format_scalar(p_);
  return std::string(to_string(kind_));
}

bool operator==(const NormSpec& a, const NormSpec& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == NormKind::lp) return a.p_ == b.p_;
  if (a.kind_ == NormKind::polytope) return a.polytope_->facets == b.polytope_->facets;
  return true;
}

void check_dimension(const NormSpec& norm, std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
  if (a == 0) throw DimensionError("vectors must have dimension >= 1");
  if (auto d = norm.dimension(); d && *d != a) {
    throw DimensionError("polytope norm of dimension " + std::to_string(*d) +
                         " applied to vectors of dimension " + std::to_string(a));
  }
}

template <class T>
T norm_value(const NormSpec& norm, const Vector<T>& v) {
  check_dimension(norm, v.size(), v.size());
  switch (norm.kind()) {
    case NormKind::l1: {
      T s(0);
      for (const T& x : v) s += abs_value(x);
      return s;
    }
    case NormKind::linf: {
      T m(0);
      for (const T& x : v) m = std::max(m, abs_value(x));
      return m;
    }
    case NormKind::polytope: {
      T best(0);
      const auto& facets = [&]() -> const auto& {
        if constexpr (is_exact_v<T>) {
          return norm.facets();
        } else {
          return norm.facets_double();
        }
      }();
      for (const auto& a : facets) {
        T s(0);
        for (std::size_t i = 0; i < v.size(); ++i) s += a[i] * v[i];
        best = std::max(best, s);
      }
      return best;
    }
    case NormKind::l2:
    case NormKind::lp:
      if constexpr (is_exact_v<T>) {
        throw ExactnessError(norm.name() + " length of a rational vector is not rational");
      } else {
        if (norm.kind() == NormKind::l2) {
          double s = 0;
          for (double x : v) s += x * x;
          return std::sqrt(s);
        }
        double s = 0;
        for (double x : v) s += std::pow(std::abs(x), norm.p());
        return std::pow(s, 1.0 / norm.p());
      }
  }
  return T(0);
}

template <class T>
T distance(const NormSpec& norm, const Vector<T>& a, const Vector<T>& b) {
  check_dimension(norm, a.size(), b.size());
  return norm_value(norm, difference(a, b));
}

template <class T>
int compare_distance(const NormSpec& norm, const Vector<T>& a, const Vector<T>& b,
                     const T& threshold) {
  check_dimension(norm, a.size(), b.size());
  if (threshold < 0) return 1;
  if constexpr (is_exact_v<T>) {
    if (!norm.exact_distance()) {
      auto k = norm.integer_power();
      if (!k) throw ExactnessError(norm.name() + " has no exact comparison");
      Rational s(0);
      for (std::size_t i = 0; i < a.size(); ++i) s += power(abs_value(Rational(a[i] - b[i])), *k);
      Rational t = power(threshold, *k);
      return s < t ? -1 : (s > t ? 1 : 0);
    }
  }
  T d = distance(norm, a, b);
  return d < threshold ? -1 : (d > threshold ? 1 : 0);
}

template <class T>
bool ball_contains(const NormSpec& norm, const BallSpec<T>& ball, const Vector<T>& p,
                   const T& margin) {
  require_zero_margin(margin);
  int c = compare_distance(norm, ball.center, p, T(ball.radius - margin));
  return ball.kind == BallKind::closed ? c <= 0 : c < 0;
}

template <class T>
bool separated(const NormSpec& norm, const Vector<T>& a, const Vector<T>& b, const T& r,
               BallKind kind, const T& margin) {
  require_zero_margin(margin);
  int c = compare_distance(norm, a, b, T(r + margin));
  return kind == BallKind::closed ? c > 0 : c >= 0;
}

template <class T>
std::vector<Vector<T>> normalize_to_sphere(const NormSpec& norm,
                                           const std::vector<Vector<T>>& points,
                                           const Vector<T>& witness) {
  std::vector<Vector<T>> translated;
  std::vector<T> lengths;
  translated.reserve(points.size());
  for (const auto& x : points) {
    check_dimension(norm, x.size(), witness.size());
    translated.push_back(difference(x, witness));
    lengths.push_back(norm_value(norm, translated.back()));
    if (lengths.back() == 0) throw std::invalid_argument("a point coincides with the witness");
  }
  if (translated.empty()) return translated;
  const T scale = *std::min_element(lengths.begin(), lengths.end());
  for (std::size_t i = 0; i < translated.size(); ++i) {
    // after rescaling by 1/r_y the length is lengths[i] / scale
    const T length = lengths[i] / scale;
    for (T& x : translated[i]) x = (x / scale) / length;
  }
  return translated;
}

template <class T>
T angular_separation_bound(const NormSpec& norm, const Vector<T>& a, const Vector<T>& b) {
  check_dimension(norm, a.size(), b.size());
  const T na = norm_value(norm, a);
  const T nb = norm_value(norm, b);
  if (na == 0 || nb == 0) throw std::invalid_argument("angular bound needs nonzero vectors");
  return (distance(norm, a, b) - abs_value(T(na - nb))) / std::min(na, nb);
}

#define BESICOVITCH_INSTANTIATE(T)                                                              \
  template T norm_value<T>(const NormSpec&, const Vector<T>&);                                  \
  template T distance<T>(const NormSpec&, const Vector<T>&, const Vector<T>&);                  \
  template int compare_distance<T>(const NormSpec&, const Vector<T>&, const Vector<T>&,         \
                                   const T&);                                                   \
  template bool ball_contains<T>(const NormSpec&, const BallSpec<T>&, const Vector<T>&,         \
                                 const T&);                                                     \
  template bool separated<T>(const NormSpec&, const Vector<T>&, const Vector<T>&, const T&,     \
                             BallKind, const T&);                                               \
  template std::vector<Vector<T>> normalize_to_sphere<T>(                                       \
      const NormSpec&, const std::vector<Vector<T>>&, const Vector<T>&);                        \
  template T angular_separation_bound<T>(const NormSpec&, const Vector<T>&, const Vector<T>&);

BESICOVITCH_INSTANTIATE(double)
BESICOVITCH_INSTANTIATE(Rational)

#undef BESICOVITCH_INSTANTIATE

}  // namespace besicovitch
