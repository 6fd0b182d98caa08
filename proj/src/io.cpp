#include "besicovitch/io.hpp"

#include <fstream>
#include <sstream>

namespace besicovitch {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

bool has_float_number(const json& j) {
  if (j.is_number_float()) return true;
  if (j.is_array() || j.is_object()) {
    for (const auto& item : j) {
      if (has_float_number(item)) return true;
    }
  }
  return false;
}

template <class T>
std::vector<Vector<T>> points_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of points");
  std::vector<Vector<T>> out;
  for (const auto& p : j) out.push_back(vector_from_json<T>(p));
  return out;
}

template <class T>
json points_to_json(const std::vector<Vector<T>>& points) {
  json out = json::array();
  for (const auto& p : points) out.push_back(vector_to_json(p));
  return out;
}

template <class T>
DiscreteMeasure<T> measure_from_parts(const NormSpec& norm, const json& j) {
  auto atoms = points_from_json<T>(field(j, "atoms"));
  const json& w = field(j, "weights");
  if (!w.is_array()) throw ParseError("weights must be an array");
  std::vector<T> weights;
  for (const auto& x : w) weights.push_back(scalar_from_json<T>(x));
  try {
    return DiscreteMeasure<T>(norm, std::move(atoms), std::move(weights));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid measure: ") + e.what());
  }
}

template <class T>
Certificate<T> certificate_from_parts(const json& j) {
  BallFamily<T> family;
  family.norm = norm_from_json(field(j, "norm"));
  family.kind = ball_kind_from_string(field(j, "kind").get<std::string>());
  family.witness = vector_from_json<T>(field(j, "witness"));
  family.centers = points_from_json<T>(field(j, "centers"));
  if (j.contains("radii")) {
    const json& radii = j.at("radii");
    if (!radii.is_array()) throw ParseError("radii must be an array");
    for (const auto& r : radii) family.radii.push_back(scalar_from_json<T>(r));
    if (family.radii.size() != family.centers.size()) throw ParseError("radii count mismatch");
  } else {
    family.radii.assign(family.centers.size(), scalar_from_json<T>(field(j, "radius")));
  }
  Certificate<T> cert{std::move(family), scalar_from_json<T>(field(j, "margin")), std::nullopt};
  if (j.contains("cardinality") &&
      j.at("cardinality").get<std::size_t>() != cert.family.centers.size()) {
    throw ParseError("cardinality does not match the number of centres");
  }
  if (j.contains("seed")) cert.seed = j.at("seed").get<std::uint64_t>();
  return cert;
}

template <class T>
CandidateSet<T> candidates_from_parts(const NormSpec& norm, const json& j) {
  CandidateSet<T> cands;
  cands.norm = norm;
  cands.anchor = vector_from_json<T>(field(j, "anchor"));
  cands.radius = scalar_from_json<T>(field(j, "radius"));
  cands.points = points_from_json<T>(field(j, "points"));
  if (!(cands.radius > 0)) throw ParseError("radius must be positive");
  for (const auto& p : cands.points) check_dimension(norm, p.size(), cands.anchor.size());
  return cands;
}

}  // namespace

template <>
json scalar_to_json<Rational>(const Rational& x) {
  return format_scalar(x);
}

template <>
json scalar_to_json<double>(const double& x) {
  return x;
}

template <>
Rational scalar_from_json<Rational>(const json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) {
      return j.is_number_unsigned() ? Rational(j.get<std::uint64_t>())
                                    : Rational(j.get<std::int64_t>());
    }
    if (j.is_number_float()) return to_rational(j.get<double>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("expected a number, got " + j.dump());
}

template <>
double scalar_from_json<double>(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    try {
      return to_double(parse_rational(j.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("expected a number, got " + j.dump());
}

template <class T>
json vector_to_json(const Vector<T>& v) {
  json out = json::array();
  for (const T& x : v) out.push_back(scalar_to_json(x));
  return out;
}

template <class T>
Vector<T> vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty coordinate array");
  Vector<T> out;
  for (const auto& x : j) out.push_back(scalar_from_json<T>(x));
  return out;
}

json norm_to_json(const NormSpec& norm) {
  json out{{"kind", std::string(to_string(norm.kind()))}};
  if (norm.kind() == NormKind::lp) out["p"] = norm.p();
  if (norm.kind() == NormKind::polytope) out["vertices"] = points_to_json(norm.vertices());
  return out;
}

NormSpec norm_from_json(const json& j) {
  if (j.is_string()) return norm_from_json(json{{"kind", j}});
  try {
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "l1") return NormSpec::l1();
    if (kind == "l2") return NormSpec::l2();
    if (kind == "linf") return NormSpec::linf();
    if (kind == "lp") return NormSpec::lp(scalar_from_json<double>(field(j, "p")));
    if (kind == "polytope") {
      return NormSpec::polytope(points_from_json<Rational>(field(j, "vertices")));
    }
    throw ParseError("unknown norm kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad norm: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad norm: ") + e.what());
  }
}

template <class T>
json candidates_to_json(const CandidateSet<T>& cands) {
  json out;
  out["norm"] = norm_to_json(cands.norm);
  out["anchor"] = vector_to_json(cands.anchor);
  out["radius"] = scalar_to_json(cands.radius);
  out["points"] = points_to_json(cands.points);
  out["mode"] = std::string(to_string(arithmetic_of<T>()));
  return out;
}

AnyCandidates candidates_from_json(const json& j, std::optional<Arithmetic> mode,
                                   std::optional<NormSpec> norm) {
  try {
    if (!norm) norm = j.contains("norm") ? norm_from_json(j.at("norm")) : NormSpec::l2();
    if (!mode && j.contains("mode")) mode = arithmetic_from_string(j.at("mode").get<std::string>());
    if (!mode) {
      mode = has_float_number(j) || !norm->exact_comparison() ? Arithmetic::floating
                                                              : Arithmetic::exact;
    }
    if (*mode == Arithmetic::exact) return candidates_from_parts<Rational>(*norm, j);
    return candidates_from_parts<double>(*norm, j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad candidate set: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad candidate set: ") + e.what());
  }
}

template <class T>
json family_to_json(const BallFamily<T>& family, const T& margin) {
  json out;
  out["norm"] = norm_to_json(family.norm);
  out["kind"] = std::string(to_string(family.kind));
  out["witness"] = vector_to_json(family.witness);
  out["centers"] = points_to_json(family.centers);
  if (family.size() > 0 && !family.has_equal_radii()) {
    out["radii"] = vector_to_json(family.radii);
  } else {
    out["radius"] = scalar_to_json(family.radii.empty() ? T(1) : family.radii.front());
  }
  out["margin"] = scalar_to_json(margin);
  out["cardinality"] = family.size();
  out["mode"] = std::string(to_string(arithmetic_of<T>()));
  return out;
}

template <class T>
json certificate_to_json(const Certificate<T>& cert) {
  json out = family_to_json(cert.family, cert.margin);
  out["constant_claim"] = cert.constant_claim();
  if (cert.seed) out["seed"] = *cert.seed;
  return out;
}

AnyCertificate certificate_from_json(const json& j) {
  try {
    Arithmetic mode = j.contains("mode") ? arithmetic_from_string(j.at("mode").get<std::string>())
                                         : (has_float_number(j) ? Arithmetic::floating
                                                                : Arithmetic::exact);
    if (mode == Arithmetic::exact) return certificate_from_parts<Rational>(j);
    return certificate_from_parts<double>(j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad certificate: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad certificate: ") + e.what());
  }
}

template <class T>
json measure_to_json(const DiscreteMeasure<T>& mu) {
  json out;
  out["norm"] = norm_to_json(mu.norm());
  out["atoms"] = points_to_json(mu.atoms());
  out["weights"] = vector_to_json(mu.weights());
  out["mode"] = std::string(to_string(arithmetic_of<T>()));
  return out;
}

AnyMeasure measure_from_json(const json& j, std::optional<Arithmetic> mode) {
  try {
    NormSpec norm = norm_from_json(field(j, "norm"));
    if (!mode && j.contains("mode")) mode = arithmetic_from_string(j.at("mode").get<std::string>());
    if (!mode) {
      mode = has_float_number(j) || !norm.exact_comparison() ? Arithmetic::floating
                                                             : Arithmetic::exact;
    }
    if (*mode == Arithmetic::exact) return measure_from_parts<Rational>(norm, j);
    return measure_from_parts<double>(norm, j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad measure: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad measure: ") + e.what());
  }
}

AnyMeasure measure_from_csv(std::istream& in, const NormSpec& norm,
                            std::optional<Arithmetic> mode) {
  std::vector<Vector<Rational>> atoms;
  std::vector<Rational> weights;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::vector<Rational> fields;
    std::stringstream row(line);
    std::string cell;
    try {
      while (std::getline(row, cell, ',')) fields.push_back(parse_rational(cell));
    } catch (const std::invalid_argument& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (fields.size() < 2) {
      throw ParseError("line " + std::to_string(line_no) + ": need coordinates and a weight");
    }
    weights.push_back(fields.back());
    fields.pop_back();
    atoms.push_back(std::move(fields));
  }
  if (!mode) mode = norm.exact_comparison() ? Arithmetic::exact : Arithmetic::floating;
  try {
    if (*mode == Arithmetic::exact) {
      return DiscreteMeasure<Rational>(norm, std::move(atoms), std::move(weights));
    }
    std::vector<Vector<double>> datoms;
    std::vector<double> dweights;
    for (const auto& a : atoms) datoms.push_back(to_double(a));
    for (const auto& w : weights) dweights.push_back(to_double(w));
    return DiscreteMeasure<double>(norm, std::move(datoms), std::move(dweights));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid measure: ") + e.what());
  }
}

template <class T>
std::string measure_to_csv(const DiscreteMeasure<T>& mu) {
  std::string out;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    for (const T& x : mu.atom(i)) out += format_scalar(x) + ",";
    out += format_scalar(mu.weight(i)) + "\n";
  }
  return out;
}

template <class T>
json function_to_json(const SupportFunction<T>& f) {
  return vector_to_json(f);
}

template <class T>
SupportFunction<T> function_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("a function file holds a JSON array");
  SupportFunction<T> out;
  for (const auto& x : j) out.push_back(scalar_from_json<T>(x));
  return out;
}

template <class T>
DiscreteMeasure<T> convert_measure(const AnyMeasure& mu) {
  if (const auto* same = std::get_if<DiscreteMeasure<T>>(&mu)) return *same;
  return std::visit(
      [](const auto& m) -> DiscreteMeasure<T> {
        std::vector<Vector<T>> atoms;
        std::vector<T> weights;
        for (const auto& a : m.atoms()) {
          Vector<T> p;
          for (const auto& x : a) {
            if constexpr (is_exact_v<T>) {
              p.push_back(to_rational(to_double(x)));
            } else {
              p.push_back(to_double(x));
            }
          }
          atoms.push_back(std::move(p));
        }
        for (const auto& w : m.weights()) {
          if constexpr (is_exact_v<T>) {
            weights.push_back(to_rational(to_double(w)));
          } else {
            weights.push_back(to_double(w));
          }
        }
        return DiscreteMeasure<T>(m.norm(), std::move(atoms), std::move(weights));
      },
      mu);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json read_json_file(const std::string& path) { return parse_json(read_text_file(path)); }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

#define BESICOVITCH_INSTANTIATE(T)                                                 \
  template json vector_to_json<T>(const Vector<T>&);                               \
  template Vector<T> vector_from_json<T>(const json&);                             \
  template json family_to_json<T>(const BallFamily<T>&, const T&);                 \
  template json certificate_to_json<T>(const Certificate<T>&);                     \
  template json measure_to_json<T>(const DiscreteMeasure<T>&);                     \
  template std::string measure_to_csv<T>(const DiscreteMeasure<T>&);               \
  template json function_to_json<T>(const SupportFunction<T>&);                    \
  template json candidates_to_json<T>(const CandidateSet<T>&);                     \
  template SupportFunction<T> function_from_json<T>(const json&);                  \
  template DiscreteMeasure<T> convert_measure<T>(const AnyMeasure&);

BESICOVITCH_INSTANTIATE(double)
BESICOVITCH_INSTANTIATE(Rational)

#undef BESICOVITCH_INSTANTIATE

}  // namespace besicovitch
