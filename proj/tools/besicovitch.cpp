#include "besicovitch/candidates.hpp"
#include "besicovitch/constants.hpp"
#include "besicovitch/constructions.hpp"
#include "besicovitch/io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace bs = besicovitch;
using bs::json;
using bs::Rational;

namespace {

// Exit statuses.
constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_usage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string norm = "l2";
  std::string p;
  std::string vertices;
  std::size_t dim = 0;
  std::string gen = "corners";
  std::string candidates;
  std::size_t n = 500;
  unsigned steps = 2;
  std::string radius;
  std::string kind = "closed";
  std::string margin;
  std::string mode = "auto";
  std::string method = "exact";
  std::uint64_t seed = 1;
  std::uint64_t budget = 100000;
  std::size_t cap = bs::default_candidate_cap;
  std::string input;
  std::string output;
  std::string to;
  std::string c;
  std::uint64_t big_n = 1;
  bool json_out = false;
  std::string measure_out;
  std::string function_out;
};

json json_argument(const std::string& text) {
  if (!text.empty() && (text.front() == '{' || text.front() == '[')) return bs::parse_json(text);
  return bs::read_json_file(text);
}

bs::NormSpec parse_norm(const RunConfig& cfg) {
  const std::string& name = cfg.norm;
  if (name == "l1") return bs::NormSpec::l1();
  if (name == "l2") return bs::NormSpec::l2();
  if (name == "linf") return bs::NormSpec::linf();
  if (name == "lp") {
    if (cfg.p.empty()) throw UsageError("--norm lp needs --p");
    return bs::NormSpec::lp(bs::to_double(bs::parse_rational(cfg.p)));
  }
  if (name == "polytope") {
    if (cfg.vertices.empty()) throw UsageError("--norm polytope needs --vertices");
    const json v = json_argument(cfg.vertices);
    if (!v.is_array()) throw UsageError("--vertices must be a JSON array of points");
    std::vector<bs::Vector<Rational>> verts;
    for (const auto& x : v) verts.push_back(bs::vector_from_json<Rational>(x));
    return bs::NormSpec::polytope(std::move(verts));
  }
  return bs::norm_from_json(json_argument(name));
}

std::optional<bs::Arithmetic> parse_mode(const std::string& mode) {
  if (mode == "auto") return std::nullopt;
  return bs::arithmetic_from_string(mode);
}

template <class T>
T parse_scalar(const std::string& text) {
  return bs::from_rational<T>(bs::parse_rational(text));
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += bs::format_scalar(v[i]);
  }
  return out;
}

void emit_json(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << bs::dump(j);
  } else {
    bs::write_text_file(path, bs::dump(j));
  }
}

// Reports go to stdout unless stdout carries the JSON payload.
std::ostream& report_stream(const std::string& output) {
  return output.empty() || output == "-" ? std::cerr : std::cout;
}

// ---- search ---------------------------------------------------------------

using AnyCandidates = bs::AnyCandidates;

std::size_t required_dim(const RunConfig& cfg, std::size_t natural) {
  if (cfg.dim != 0 && cfg.dim != natural) {
    throw UsageError("generator '" + cfg.gen + "' lives in dimension " + std::to_string(natural));
  }
  return natural;
}

AnyCandidates generate(const RunConfig& cfg, const bs::NormSpec& norm) {
  const std::size_t dim = cfg.dim != 0 ? cfg.dim : norm.dimension().value_or(0);
  if (cfg.gen == "corners" || cfg.gen == "cross") {
    if (dim == 0) throw UsageError("--gen " + cfg.gen + " needs --dim");
    return cfg.gen == "corners" ? bs::corner_candidates(norm, dim)
                                : bs::cross_candidates(norm, dim);
  }
  if (cfg.gen == "lattice") {
    if (dim == 0) throw UsageError("--gen lattice needs --dim");
    const Rational r = cfg.radius.empty() ? Rational(1) : bs::parse_rational(cfg.radius);
    if (norm.exact_comparison() && cfg.mode != "float") {
      return bs::lattice_candidates<Rational>(norm, dim, r, cfg.steps);
    }
    return bs::lattice_candidates<double>(norm, dim, bs::to_double(r), cfg.steps);
  }
  if (cfg.gen == "fib-circle") {
    required_dim(cfg, 2);
    return bs::with_norm(bs::fibonacci_circle(cfg.n), norm);
  }
  if (cfg.gen == "fib-sphere") {
    required_dim(cfg, 3);
    return bs::with_norm(bs::fibonacci_sphere(cfg.n), norm);
  }
  if (cfg.gen == "polygon") {
    required_dim(cfg, 2);
    return bs::with_norm(bs::regular_polygon(cfg.n), norm);
  }
  if (cfg.gen == "random-circle") {
    required_dim(cfg, 2);
    return bs::with_norm(bs::random_circle(cfg.n, cfg.seed), norm);
  }
  if (cfg.gen == "icosahedron") {
    required_dim(cfg, 3);
    return bs::with_norm(bs::icosahedron(), norm);
  }
  if (cfg.gen == "file") {
    if (cfg.candidates.empty()) throw UsageError("--gen file needs --candidates");
    const json j = bs::read_json_file(cfg.candidates);
    std::optional<bs::NormSpec> override_norm;
    if (!j.contains("norm")) override_norm = norm;
    return bs::candidates_from_json(j, parse_mode(cfg.mode), override_norm);
  }
  throw UsageError("unknown generator '" + cfg.gen + "'");
}

AnyCandidates apply_mode(AnyCandidates cands, const std::string& mode) {
  if (mode == "float") {
    if (auto* exact = std::get_if<bs::CandidateSet<Rational>>(&cands)) {
      return bs::to_double(*exact);
    }
  } else if (mode == "exact" && std::holds_alternative<bs::CandidateSet<double>>(cands)) {
    throw UsageError("this generator produces irrational coordinates; use --mode float");
  } else if (mode == "auto") {
    if (auto* exact = std::get_if<bs::CandidateSet<Rational>>(&cands)) {
      if (!exact->norm.exact_comparison()) return bs::to_double(*exact);
    }
  }
  return cands;
}

template <class T>
int run_search(const RunConfig& cfg, bs::CandidateSet<T> cands) {
  if (!cfg.radius.empty() && cfg.gen != "lattice") cands.radius = parse_scalar<T>(cfg.radius);
  const bs::BallKind kind = bs::ball_kind_from_string(cfg.kind);
  const T margin = cfg.margin.empty() ? bs::default_margin<T>() : parse_scalar<T>(cfg.margin);
  if constexpr (bs::is_exact_v<T>) {
    if (margin != 0) throw UsageError("exact mode certifies with margin 0");
  } else {
    if (!(margin >= 0)) throw UsageError("margin must be nonnegative");
  }
  bs::Certificate<T> cert;
  if (cfg.method == "exact") {
    bs::SearchOptions options;
    options.cap = cfg.cap;
    cert = bs::clique_search_exact(cands, kind, margin, options);
  } else if (cfg.method == "heuristic") {
    cert = bs::clique_search_heuristic(cands, kind, margin, cfg.seed, cfg.budget);
  } else {
    throw UsageError("unknown method '" + cfg.method + "'");
  }
  cert.seed = cfg.seed;
  emit_json(bs::certificate_to_json(cert), cfg.output);
  std::ostream& out = report_stream(cfg.output);
  out << "cardinality " << cert.cardinality() << "\n";
  out << "margin " << bs::format_scalar(cert.margin) << "\n";
  out << "mode " << bs::to_string(cert.mode()) << "\n";
  return exit_ok;
}

int cmd_search(const RunConfig& cfg) {
  const bs::NormSpec norm = parse_norm(cfg);
  AnyCandidates cands = apply_mode(generate(cfg, norm), cfg.mode);
  return std::visit([&](auto& c) { return run_search(cfg, std::move(c)); }, cands);
}

// ---- verify ---------------------------------------------------------------

template <class T>
int run_verify(const RunConfig& cfg, const bs::Certificate<T>& cert) {
  const T margin = cfg.margin.empty() ? cert.margin : parse_scalar<T>(cfg.margin);
  if constexpr (bs::is_exact_v<T>) {
    if (margin != 0) throw UsageError("exact certificates verify at margin 0");
  }
  const auto result = bs::validate_family(cert.family, margin);
  if (!result) {
    const auto& v = *result.violation;
    std::cout << "invalid: " << v.message << "\n";
    if (v.index_b == bs::Violation::npos) {
      std::cout << "violation centre " << v.index_a << " witness";
    } else {
      std::cout << "violation pair " << v.index_a << " " << v.index_b;
    }
    std::cout << " distance " << bs::format_scalar(v.distance) << " bound "
              << bs::format_scalar(v.bound) << "\n";
    return exit_invalid;
  }
  std::cout << "valid cardinality " << cert.cardinality() << " margin "
            << bs::format_scalar(margin) << " mode " << bs::to_string(cert.mode()) << "\n";
  return exit_ok;
}

int cmd_verify(const RunConfig& cfg) {
  const auto cert = bs::certificate_from_json(bs::read_json_file(cfg.input));
  return std::visit([&](const auto& c) { return run_verify(cfg, c); }, cert);
}

// ---- norm -----------------------------------------------------------------

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bs::AnyMeasure load_measure(const RunConfig& cfg) {
  if (ends_with(cfg.input, ".csv")) {
    std::istringstream in(bs::read_text_file(cfg.input));
    return bs::measure_from_csv(in, parse_norm(cfg), parse_mode(cfg.mode));
  }
  return bs::measure_from_json(bs::read_json_file(cfg.input), parse_mode(cfg.mode));
}

template <class T>
int run_norm(const RunConfig& cfg, const bs::DiscreteMeasure<T>& mu) {
  if (cfg.radius.empty()) throw UsageError("norm needs --r");
  const T r = parse_scalar<T>(cfg.radius);
  if (!(r > 0)) throw UsageError("radius must be positive");
  const bs::AveragingOperator<T> op(mu, r, bs::ball_kind_from_string(cfg.kind));
  const auto a = op.conjugate();
  const auto norm = op.l1_norm();
  if (cfg.json_out) {
    json out;
    out["norm"] = bs::scalar_to_json(norm.value);
    out["argmax"] = norm.argmax;
    out["conjugate"] = bs::function_to_json(a);
    out["radius"] = bs::scalar_to_json(r);
    out["kind"] = cfg.kind;
    out["mode"] = std::string(bs::to_string(bs::arithmetic_of<T>()));
    emit_json(out, cfg.output);
  } else {
    std::cout << "norm " << bs::format_scalar(norm.value) << "\n";
    std::cout << "argmax " << norm.argmax << "\n";
    std::cout << "conjugate " << join(a) << "\n";
    std::cout << "mode " << bs::to_string(bs::arithmetic_of<T>()) << "\n";
  }
  return exit_ok;
}

int cmd_norm(const RunConfig& cfg) {
  const auto mu = load_measure(cfg);
  return std::visit([&](const auto& m) { return run_norm(cfg, m); }, mu);
}

// ---- adversarial ----------------------------------------------------------

template <class T>
int run_adversarial(const RunConfig& cfg, const bs::Certificate<T>& cert) {
  const T c = cfg.c.empty() ? bs::default_c<T>() : parse_scalar<T>(cfg.c);
  const auto inst = bs::build_adversarial(cert.family, c);
  const auto bound = bs::strong_lower_bound_eval(inst);
  if (!cfg.measure_out.empty()) emit_json(bs::measure_to_json(inst.measure), cfg.measure_out);
  if (!cfg.function_out.empty()) emit_json(bs::function_to_json(inst.function), cfg.function_out);
  std::cout << "family_size " << inst.family_size << "\n";
  std::cout << "c " << bs::format_scalar(c) << "\n";
  std::cout << "value " << bs::format_scalar(bound.value) << "\n";
  std::cout << "threshold " << bs::format_scalar(bound.threshold) << "\n";
  std::cout << "pass " << (bound.pass ? "true" : "false") << "\n";
  bool ok = bound.pass;
  if (const auto e = bs::table_constant(cert.family.norm, cert.family.witness.size())) {
    const bool within = bound.value <= T(*e);
    std::cout << "table_constant " << *e << "\n";
    std::cout << "within_table " << (within ? "true" : "false") << "\n";
    ok = ok && within;
  }
  return ok ? exit_ok : exit_invalid;
}

int cmd_adversarial(const RunConfig& cfg) {
  const auto cert = bs::certificate_from_json(bs::read_json_file(cfg.input));
  return std::visit([&](const auto& c) { return run_adversarial(cfg, c); }, cert);
}

// ---- extrapolate ----------------------------------------------------------

template <class T>
int run_weak(double p, std::uint64_t n, const bs::Certificate<T>& cert) {
  const auto w = bs::weak_pp_witness(p, n, cert.family);
  std::cout << "c " << bs::format_scalar(w.c) << "\n";
  std::cout << "alpha " << bs::format_scalar(w.alpha) << "\n";
  std::cout << "level_set " << bs::format_scalar(w.level_set) << "\n";
  std::cout << "ratio " << bs::format_scalar(w.ratio) << "\n";
  std::cout << "bound " << bs::format_scalar(w.bound) << "\n";
  std::cout << "pass " << (w.pass ? "true" : "false") << "\n";
  return w.pass ? exit_ok : exit_invalid;
}

int cmd_extrapolate(const RunConfig& cfg) {
  if (cfg.p.empty()) throw UsageError("extrapolate needs --p");
  const double p = bs::to_double(bs::parse_rational(cfg.p));
  const std::uint64_t k = bs::extrapolation_constant(p, cfg.big_n);
  std::cout << "constant " << k << "\n";
  std::cout << "required_size " << k + 1 << "\n";
  if (cfg.input.empty()) return exit_ok;
  const auto cert = bs::certificate_from_json(bs::read_json_file(cfg.input));
  if (cert.index() == 0 ? std::get<0>(cert).cardinality() <= k
                        : std::get<1>(cert).cardinality() <= k) {
    throw UsageError("certificate has fewer than " + std::to_string(k + 1) + " balls");
  }
  return std::visit([&](const auto& c) { return run_weak(p, cfg.big_n, c); }, cert);
}

// ---- table ----------------------------------------------------------------

int cmd_table() {
  std::printf("%-34s %-4s %-6s %-9s %s\n", "space", "d", "E", "attained", "note");
  for (const auto& row : bs::constant_table()) {
    const std::string d = row.dim == 0 ? "d" : std::to_string(row.dim);
    std::string e = row.value ? std::to_string(*row.value) : "-";
    if (!row.value && row.space == "R^d, l_inf") e = "2^d";
    std::printf("%-34s %-4s %-6s %-9s %s\n", row.space.c_str(), d.c_str(), e.c_str(),
                row.attained ? "yes" : "no", row.note.c_str());
  }
  return exit_ok;
}

// ---- convert --------------------------------------------------------------

template <class T>
int run_convert(const RunConfig& cfg, const bs::Certificate<T>& cert) {
  bs::BallFamily<T> out;
  if (cfg.to == "equal") {
    out = bs::equalize_family(cert.family);
  } else if (cfg.to == "open" || cfg.to == "closed") {
    const bs::BallKind target = bs::ball_kind_from_string(cfg.to);
    if (target == cert.family.kind) {
      throw UsageError("certificate already uses " + cfg.to + " balls");
    }
    out = bs::open_closed_convert(cert.family, cert.margin);
  } else {
    throw UsageError("--to must be open, closed or equal");
  }
  const auto result = bs::validate_family(out, cert.margin);
  if (!result) {
    std::cerr << "converted family fails at margin " << bs::format_scalar(cert.margin) << ": "
              << result.violation->message << "\n";
    return exit_invalid;
  }
  bs::Certificate<T> converted = *result.certificate;
  converted.seed = cert.seed;
  emit_json(bs::certificate_to_json(converted), cfg.output);
  report_stream(cfg.output) << "cardinality " << converted.cardinality() << "\n";
  return exit_ok;
}

int cmd_convert(const RunConfig& cfg) {
  const auto cert = bs::certificate_from_json(bs::read_json_file(cfg.input));
  return std::visit([&](const auto& c) { return run_convert(cfg, c); }, cert);
}

void add_norm_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--norm", cfg.norm, "l1, l2, linf, lp, polytope, or a norm JSON file/string");
  app->add_option("--p", cfg.p, "exponent for --norm lp");
  app->add_option("--vertices", cfg.vertices, "polytope vertices as JSON (file or inline)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Averaging operator norms and Besicovitch family search"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* search = app.add_subcommand("search", "search a candidate universe for a family");
  add_norm_options(search, cfg);
  search->add_option("--dim", cfg.dim, "ambient dimension");
  search->add_option("--gen", cfg.gen,
                     "corners, cross, lattice, fib-circle, fib-sphere, polygon, "
                     "random-circle, icosahedron, file")
      ->capture_default_str();
  search->add_option("--candidates", cfg.candidates, "candidate JSON for --gen file");
  search->add_option("--n", cfg.n, "point count for sphere generators")->capture_default_str();
  search->add_option("--steps", cfg.steps, "lattice subdivisions per radius")->capture_default_str();
  search->add_option("--radius,--r", cfg.radius, "ball radius (default 1)");
  search->add_option("--kind", cfg.kind, "open or closed")->capture_default_str();
  search->add_option("--margin", cfg.margin, "certificate margin (exact 0, float 1e-9)");
  search->add_option("--mode", cfg.mode, "auto, exact or float")->capture_default_str();
  search->add_option("--method", cfg.method, "exact or heuristic")->capture_default_str();
  search->add_option("--seed", cfg.seed, "seed, recorded in the certificate")->capture_default_str();
  search->add_option("--budget", cfg.budget, "heuristic step budget")->capture_default_str();
  search->add_option("--cap", cfg.cap, "admissible candidate cap for exact search")
      ->capture_default_str();
  search->add_option("-o,--output", cfg.output, "certificate path (default stdout)");

  auto* verify = app.add_subcommand("verify", "re-validate a certificate file");
  verify->add_option("certificate", cfg.input)->required();
  verify->add_option("--margin", cfg.margin, "margin override");

  auto* norm = app.add_subcommand("norm", "L1 operator norm of an averaging operator");
  norm->add_option("measure", cfg.input, "measure JSON or CSV")->required();
  norm->add_option("--r,--radius", cfg.radius, "radius")->required();
  norm->add_option("--kind", cfg.kind, "open or closed")->capture_default_str();
  norm->add_option("--mode", cfg.mode, "auto, exact or float")->capture_default_str();
  add_norm_options(norm, cfg);
  norm->add_flag("--json", cfg.json_out, "JSON report");
  norm->add_option("-o,--output", cfg.output, "JSON report path");

  auto* adversarial = app.add_subcommand("adversarial", "adversarial measure lower bound");
  adversarial->add_option("certificate", cfg.input)->required();
  adversarial->add_option("--c", cfg.c, "weight of the witness atom (default 0.001)");
  adversarial->add_option("--measure-out", cfg.measure_out, "write the measure JSON");
  adversarial->add_option("--function-out", cfg.function_out, "write the function JSON");

  auto* extrapolate = app.add_subcommand("extrapolate", "extrapolation constant and weak witness");
  extrapolate->add_option("--p", cfg.p, "exponent p > 1")->required();
  extrapolate->add_option("--N", cfg.big_n, "bound N >= 1")->capture_default_str();
  extrapolate->add_option("--certificate", cfg.input, "family for the weak (p,p) witness");

  app.add_subcommand("table", "known sharp constants");

  auto* convert = app.add_subcommand("convert", "open/closed conversion or equalization");
  convert->add_option("certificate", cfg.input)->required();
  convert->add_option("--to", cfg.to, "open, closed or equal")->required();
  convert->add_option("-o,--output", cfg.output, "certificate path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*search) return cmd_search(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*norm) return cmd_norm(cfg);
    if (*adversarial) return cmd_adversarial(cfg);
    if (*extrapolate) return cmd_extrapolate(cfg);
    if (*convert) return cmd_convert(cfg);
    return cmd_table();
  } catch (const bs::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
}
