// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances and runtime limits are fixed constants below.
#include "besicovitch/candidates.hpp"
#include "besicovitch/constants.hpp"
#include "besicovitch/constructions.hpp"
#include "besicovitch/io.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>

using namespace besicovitch;

namespace {

constexpr double float_margin = 1e-9;
constexpr double relative_tolerance = 1e-12;
constexpr double absolute_tolerance = 1e-12;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = "failed: " + what;
      pass = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= limit_s) {
    if (out.pass) out.detail = "runtime limit exceeded";
    out.pass = false;
  }
  if (!out.pass) ++failures;
  std::printf("[%s] criterion %d: %s (%.2f s, limit %.0f s)%s%s\n", out.pass ? "PASS" : "FAIL", id,
              name.c_str(), elapsed, limit_s, out.detail.empty() ? "" : " - ",
              out.detail.c_str());
  std::fflush(stdout);
}

// Times one sub-check against its own limit.
template <class F>
void timed(Outcome& out, const std::string& what, double limit_s, F&& f) {
  const auto start = Clock::now();
  f();
  const double elapsed = seconds_since(start);
  out.require(elapsed < limit_s, what + " took " + std::to_string(elapsed) + " s");
}

std::string count_text(std::size_t got, std::size_t want) {
  return std::to_string(got) + " (expected " + std::to_string(want) + ")";
}

// ---- criterion 1 ----------------------------------------------------------

Outcome sharp_constants() {
  Outcome out;
  auto exact_case = [&](const std::string& what, const CandidateSet<Rational>& cands,
                        std::size_t want, std::size_t dim) {
    timed(out, what, 1.0, [&] {
      const auto cert = clique_search_exact(cands, BallKind::closed, Rational(0));
      out.require(cert.cardinality() == want, what + " cardinality " + count_text(cert.cardinality(), want));
      out.require(bool(validate_family(cert.family, Rational(0))), what + " does not validate");
      out.require(table_constant(cands.norm, dim) == want, what + " disagrees with the table");
    });
  };
  auto float_case = [&](const std::string& what, const CandidateSet<double>& cands, std::size_t want,
                        std::size_t dim) {
    timed(out, what, 1.0, [&] {
      const auto cert = clique_search_exact(cands, BallKind::closed, float_margin);
      out.require(cert.cardinality() == want, what + " cardinality " + count_text(cert.cardinality(), want));
      out.require(cert.margin >= float_margin, what + " margin below 1e-9");
      out.require(bool(validate_family(cert.family, cert.margin)), what + " does not validate");
      out.require(table_constant(cands.norm, dim) == want, what + " disagrees with the table");
    });
  };
  exact_case("1D", corner_candidates(NormSpec::l1(), 1), 2, 1);
  exact_case("l1 plane", cross_candidates(NormSpec::l1(), 2), 4, 2);
  float_case("euclidean pentagon", regular_polygon(5), 5, 2);
  for (std::size_t d = 1; d <= 5; ++d) {
    exact_case("l_inf d=" + std::to_string(d), corner_candidates(NormSpec::linf(), d),
               std::size_t{1} << d, d);
  }
  float_case("icosahedron", icosahedron(), 12, 3);
  if (out.pass) out.detail = "2, 4, 5, 2^d (d=1..5), 12";
  return out;
}

// ---- criterion 2 ----------------------------------------------------------

Outcome non_exceedance() {
  Outcome out;
  std::string summary;
  SearchOptions big;
  big.cap = 20000;
  auto planar = [&](const std::string& what, const CandidateSet<double>& cands) {
    out.require(cands.points.size() >= 10000, what + " has fewer than 10^4 points");
    timed(out, what, 60.0, [&] {
      const auto cert = clique_search_exact(cands, BallKind::closed, float_margin, big);
      out.require(cert.cardinality() <= 5, what + " returned " + std::to_string(cert.cardinality()));
      out.require(bool(validate_family(cert.family, float_margin)), what + " does not validate");
      summary += what + " " + std::to_string(cert.cardinality()) + ", ";
    });
  };
  planar("fibonacci circle 10^4", fibonacci_circle(10000));
  planar("random circle 10^4", random_circle(10000, 2024));

  const std::vector<std::pair<std::size_t, unsigned>> lattices{{1, 16}, {2, 8}, {3, 4}, {4, 3}};
  for (const auto& [d, steps] : lattices) {
    const auto cands = lattice_candidates<Rational>(NormSpec::linf(), d, Rational(1), steps);
    const std::string what = "l_inf lattice d=" + std::to_string(d) + " (" +
                             std::to_string(cands.points.size()) + " points)";
    SearchOptions opts;
    opts.cap = cands.points.size();
    timed(out, what, 60.0, [&] {
      const auto cert = clique_search_exact(cands, BallKind::closed, Rational(0), opts);
      const std::size_t bound = std::size_t{1} << d;
      out.require(cert.cardinality() <= bound, what + " returned " + std::to_string(cert.cardinality()));
      summary += "d=" + std::to_string(d) + " " + std::to_string(cert.cardinality()) + ", ";
    });
  }
  if (out.pass) out.detail = summary.substr(0, summary.size() - 2);
  return out;
}

// ---- criterion 3 ----------------------------------------------------------

DiscreteMeasure<Rational> random_measure(std::mt19937_64& rng, std::size_t n, std::size_t dim,
                                         const NormSpec& norm) {
  std::uniform_int_distribution<int> coord(-160, 160), weight(10, 1000);
  std::vector<Vector<Rational>> atoms;
  std::vector<Rational> weights;
  while (atoms.size() < n) {
    Vector<Rational> p(dim);
    for (auto& x : p) x = Rational(coord(rng), 16);
    if (std::find(atoms.begin(), atoms.end(), p) != atoms.end()) continue;
    atoms.push_back(std::move(p));
    weights.push_back(Rational(weight(rng), 100));
  }
  return DiscreteMeasure<Rational>(norm, std::move(atoms), std::move(weights));
}

Outcome duality() {
  Outcome out;
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> size(1, 200), dimension(1, 3);
  std::uniform_int_distribution<int> radius(4, 40);
  std::uniform_real_distribution<double> unit(0, 1);
  const std::vector<NormSpec> norms{NormSpec::l1(), NormSpec::l2(), NormSpec::linf()};
  double worst_float = 0;
  std::size_t functions = 0;
  for (int t = 0; t < 100; ++t) {
    const auto mu = random_measure(rng, size(rng), dimension(rng), norms[t % 3]);
    const Rational r(radius(rng), 8);
    const BallKind kind = t % 4 == 3 ? BallKind::open : BallKind::closed;
    const AveragingOperator<Rational> op(mu, r, kind);
    const auto norm = op.l1_norm();

    // max over atom indicators of ||A 1_y||_1 / ||1_y||_1, exactly
    Rational best = 0;
    SupportFunction<Rational> indicator(mu.size(), Rational(0));
    for (std::size_t y = 0; y < mu.size(); ++y) {
      indicator[y] = 1;
      const Rational ratio = l1_norm(mu, op.apply(indicator)) / mu.weight(y);
      indicator[y] = 0;
      if (ratio > best) best = ratio;
    }
    out.require(best == norm.value, "exact duality fails on measure " + std::to_string(t));

    // float mode on the same data
    const auto muf = convert_measure<double>(AnyMeasure(mu));
    const AveragingOperator<double> opf(muf, to_double(r), kind);
    const auto nf = opf.l1_norm();
    const double exact_value = to_double(norm.value);
    out.require(std::fabs(nf.value - exact_value) <= relative_tolerance * exact_value,
                "float norm disagrees with exact on measure " + std::to_string(t));
    SupportFunction<double> f(muf.size());
    for (int k = 0; k < 1000; ++k) {
      for (auto& x : f) x = unit(rng);
      const double lhs = l1_norm(muf, opf.apply(f));
      const double rhs = nf.value * l1_norm(muf, f);
      worst_float = std::max(worst_float, (lhs - rhs) / rhs);
      ++functions;
    }
    SupportFunction<double> ind(muf.size(), 0.0);
    ind[nf.argmax] = 1.0;
    const double attained = l1_norm(muf, opf.apply(ind)) / muf.weight(nf.argmax);
    out.require(std::fabs(attained - nf.value) <= relative_tolerance * nf.value,
                "argmax indicator misses the norm on measure " + std::to_string(t));
  }
  out.require(worst_float <= relative_tolerance,
              "float bound exceeded by relative " + std::to_string(worst_float));
  if (out.pass) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "100 measures exact; %zu random f, worst relative excess %.2e",
                  functions, worst_float);
    out.detail = buf;
  }
  return out;
}

// ---- criterion 4 ----------------------------------------------------------

Outcome adversarial_convergence() {
  Outcome out;
  const auto ico = clique_search_exact(icosahedron(), BallKind::closed, float_margin).family;
  out.require(ico.size() == 12, "icosahedron family has " + std::to_string(ico.size()) + " balls");
  double previous = 0;
  std::string values;
  for (double c : {1e-1, 1e-2, 1e-3}) {
    const auto s = strong_lower_bound_eval(build_adversarial(ico, c));
    out.require(s.value > 12 / (1 + c), "value not above 12/(1+c) at c=" + std::to_string(c));
    out.require(s.value <= 12.0, "value above 12 at c=" + std::to_string(c));
    out.require(s.value > previous, "values not increasing toward 12");
    previous = s.value;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f, ", s.value);
    values += buf;
  }
  const auto line = BallFamily<Rational>::equal_radius(NormSpec::l1(), {{Rational(-1)}, {Rational(1)}},
                                                        Rational(1), BallKind::closed, {Rational(0)});
  const auto s = strong_lower_bound_eval(build_adversarial(line, Rational(1, 100)));
  const double oracle = 0.01 / 2.01 + 2 / 1.01;
  out.require(std::fabs(to_double(s.value) - oracle) <= absolute_tolerance,
              "1D value differs from 0.01/2.01 + 2/1.01");
  out.require(s.pass, "1D value not above 2/1.01");
  if (out.pass) out.detail = "icosahedron " + values + "1D " + format_scalar(s.value);
  return out;
}

// ---- criterion 5 ----------------------------------------------------------

Outcome extrapolation() {
  Outcome out;
  out.require(extrapolation_constant(2, 1) == 4, "(2,1) != 4");
  out.require(extrapolation_constant(2, 2) == 16, "(2,2) != 16");
  out.require(extrapolation_constant(3, 1) == 6, "(3,1) != 6");

  auto corners = [](std::size_t d) {
    return clique_search_exact(corner_candidates(NormSpec::linf(), d), BallKind::closed, Rational(0))
        .family;
  };
  auto first = [](auto family, std::size_t j) {
    family.centers.resize(j);
    family.radii.resize(j);
    return family;
  };
  std::string ratios;
  auto check = [&](double p, std::uint64_t n, const auto& family) {
    const std::uint64_t j = extrapolation_constant(p, n) + 1;
    const auto w = weak_pp_witness(p, n, first(family, j));
    out.require(w.required_size == j && family.size() >= j, "family too small");
    out.require(w.ratio > static_cast<double>(n), "ratio does not exceed N");
    out.require(to_double(w.c) == p - 1, "c is not p - 1");
    char buf[96];
    std::snprintf(buf, sizeof buf, "(p=%g,N=%llu,J=%llu) %.6f, ", p, (unsigned long long)n,
                  (unsigned long long)j, w.ratio);
    ratios += buf;
  };
  check(1.5, 1, corners(2));
  check(2, 1, clique_search_exact(regular_polygon(5), BallKind::closed, float_margin).family);
  check(2, 2, corners(5));
  if (out.pass) out.detail = "4, 16, 6; ratios " + ratios.substr(0, ratios.size() - 2);
  return out;
}

// ---- criterion 6 ----------------------------------------------------------

Outcome properties() {
  Outcome out;
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> unit(0, 1);

  // A 1 = 1, positivity, linearity, identity below the minimal gap
  for (int t = 0; t < 50; ++t) {
    const NormSpec norm = t % 2 ? NormSpec::l2() : NormSpec::linf();
    const auto mu = random_measure(rng, 2 + t * 2, 2, norm);
    const Rational r(1 + t % 20, 4);
    for (BallKind kind : {BallKind::open, BallKind::closed}) {
      const AveragingOperator<Rational> op(mu, r, kind);
      const std::size_t n = mu.size();
      out.require(op.apply(SupportFunction<Rational>(n, Rational(1))) ==
                      SupportFunction<Rational>(n, Rational(1)),
                  "A 1 != 1");
      SupportFunction<Rational> f(n), g(n), h(n);
      for (std::size_t i = 0; i < n; ++i) {
        f[i] = Rational(static_cast<long>(unit(rng) * 100), 7);
        g[i] = Rational(static_cast<long>(unit(rng) * 100) - 50, 3);
      }
      const Rational a(-5, 2);
      for (std::size_t i = 0; i < n; ++i) h[i] = a * f[i] + g[i];
      const auto af = op.apply(f), ag = op.apply(g), ah = op.apply(h);
      for (std::size_t i = 0; i < n; ++i) {
        out.require(af[i] >= 0, "positivity");
        out.require(ah[i] == a * af[i] + ag[i], "linearity");
      }
    }
    double gap = -1;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      for (std::size_t j = i + 1; j < mu.size(); ++j) {
        const double d = distance(norm, to_double(mu.atom(i)), to_double(mu.atom(j)));
        if (gap < 0 || d < gap) gap = d;
      }
    }
    SupportFunction<Rational> f(mu.size());
    for (auto& x : f) x = Rational(static_cast<long>(unit(rng) * 1000) - 500, 9);
    out.require(averaging_apply(mu, to_rational(gap * 0.999), BallKind::closed, f) == f,
                "identity below gap");
  }

  // Lp bounds on table-listed norms
  struct Space {
    NormSpec norm;
    std::size_t dim;
  };
  const std::vector<Space> spaces{{NormSpec::l1(), 1},   {NormSpec::l1(), 2}, {NormSpec::l2(), 2},
                                  {NormSpec::linf(), 3}, {NormSpec::l2(), 3}};
  for (const auto& s : spaces) {
    const double e = static_cast<double>(*table_constant(s.norm, s.dim));
    const auto mu = convert_measure<double>(AnyMeasure(random_measure(rng, 120, s.dim, NormSpec::linf())));
    const DiscreteMeasure<double> mus(s.norm, mu.atoms(), mu.weights());
    const AveragingOperator<double> op(mus, 1.7, BallKind::closed);
    SupportFunction<double> f(mus.size());
    for (int k = 0; k < 200; ++k) {
      for (auto& x : f) x = unit(rng) * 4 - 2;
      const auto af = op.apply(f);
      for (double p : {1.5, 2.0, 4.0}) {
        out.require(lp_norm(mus, af, p) <= std::pow(e, 1 / p) * lp_norm(mus, f, p) * (1 + relative_tolerance),
                    "Lp bound on " + s.norm.name());
      }
    }
  }

  // conversions and equalization
  auto check_family = [&](const auto& family, const auto& margin, const std::string& what) {
    const auto open = open_closed_convert(family, margin);
    const auto closed = open_closed_convert(open, margin);
    out.require(open.size() == family.size() && closed.size() == family.size(), what + " conversion size");
    out.require(bool(validate_family(open, margin)) && bool(validate_family(closed, margin)),
                what + " conversion validity");
    const auto eq = equalize_family(family);
    out.require(eq.size() == family.size(), what + " equalize size");
    out.require(bool(validate_family(eq, margin)), what + " equalize validity");
  };
  for (std::size_t d = 1; d <= 4; ++d) {
    check_family(clique_search_exact(corner_candidates(NormSpec::linf(), d), BallKind::closed, Rational(0)).family,
                 Rational(0), "l_inf corners");
  }
  check_family(clique_search_exact(cross_candidates(NormSpec::l1(), 3), BallKind::closed, Rational(0)).family,
               Rational(0), "l1 cross");
  check_family(clique_search_exact(icosahedron(), BallKind::closed, float_margin).family, float_margin,
               "icosahedron");
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    check_family(clique_search_heuristic(random_circle(200, seed), BallKind::closed, float_margin, seed, 2000).family,
                 float_margin, "random circle");
  }

  // greedy cover on random 1D and 2D instances
  std::size_t covers = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t dim = 1 + t % 2;
    const NormSpec norm = dim == 1 ? NormSpec::l1() : (t % 4 == 1 ? NormSpec::l2() : NormSpec::linf());
    const auto mu = random_measure(rng, 5 + t, dim, norm);
    const Rational r(8 + t % 25, 8);
    const Rational s = r * Rational(3, 4);
    const auto c = greedy_cover(mu, mu.atom(t % mu.size()), s, r);
    const std::uint64_t e = *table_constant(norm, dim);
    out.require(c.partial_sum <= c.count(), "greedy cover partial sum above m");
    out.require(c.count() <= e, "greedy cover m above E");
    out.require(bool(validate_family(c.family, Rational(0))), "greedy cover family invalid");
    ++covers;
  }
  if (out.pass) out.detail = "averaging, Lp, conversion and " + std::to_string(covers) + " cover checks";
  return out;
}

// ---- criterion 7 ----------------------------------------------------------

std::string generate_certificate(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  switch (seed % 5) {
    case 0: {
      auto c = clique_search_heuristic(random_circle(150, seed), BallKind::closed, float_margin, seed, 2000);
      return dump(certificate_to_json(c));
    }
    case 1: {
      auto c = clique_search_exact(random_circle(200, seed), BallKind::closed, float_margin);
      c.seed = seed;
      return dump(certificate_to_json(c));
    }
    case 2: {
      auto cands = lattice_candidates<Rational>(NormSpec::linf(), 2, Rational(1), 4);
      std::shuffle(cands.points.begin(), cands.points.end(), rng);
      cands.points.resize(40);
      auto c = clique_search_exact(cands, BallKind::closed, Rational(0));
      c.seed = seed;
      return dump(certificate_to_json(c));
    }
    case 3: {
      auto c = clique_search_heuristic(fibonacci_sphere(120), BallKind::closed, float_margin, seed, 3000);
      return dump(certificate_to_json(c));
    }
    default: {
      auto cands = lattice_candidates<Rational>(NormSpec::l1(), 2, Rational(1), 3);
      std::shuffle(cands.points.begin(), cands.points.end(), rng);
      cands.points.resize(15);
      auto c = clique_search_heuristic(cands, BallKind::open, Rational(0), seed, 500);
      return dump(certificate_to_json(c));
    }
  }
}

Outcome certificate_round_trip() {
  Outcome out;
  const auto dir = std::filesystem::temp_directory_path() /
                   ("besicovitch_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::string text = generate_certificate(seed);
    out.require(generate_certificate(seed) == text, "seed " + std::to_string(seed) + " not reproducible");
    const auto path = (dir / ("cert_" + std::to_string(seed) + ".json")).string();
    write_text_file(path, text);
    const std::string disk = read_text_file(path);
    const auto cert = certificate_from_json(parse_json(disk));
    std::visit(
        [&](const auto& c) {
          out.require(bool(validate_family(c.family, c.margin)),
                      "seed " + std::to_string(seed) + " does not re-verify");
          out.require(dump(certificate_to_json(c)) == disk,
                      "seed " + std::to_string(seed) + " not byte identical");
        },
        cert);
  }
  std::filesystem::remove_all(dir);
  if (out.pass) out.detail = "50 certificates";
  return out;
}

}  // namespace

int main() {
  report(1, "sharp constants", 9.0, sharp_constants);
  report(2, "non-exceedance", 6 * 60.0, non_exceedance);
  report(3, "duality identity", 30.0, duality);
  report(4, "adversarial convergence", 1.0, adversarial_convergence);
  report(5, "extrapolation arithmetic", 5.0, extrapolation);
  report(6, "property suites", 60.0, properties);
  report(7, "certificate round trip", 60.0, certificate_round_trip);
  std::printf("%s: %d of 7 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
