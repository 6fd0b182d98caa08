#ifndef BESICOVITCH_IO_HPP
#define BESICOVITCH_IO_HPP

#include "besicovitch/family.hpp"
#include "besicovitch/measure.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace besicovitch {

using json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact scalars are JSON strings "p/q" (integers also accepted as numbers);
// float scalars are JSON numbers, written with round-trip precision.
template <class T>
json scalar_to_json(const T& x);
template <class T>
T scalar_from_json(const json& j);

template <class T>
json vector_to_json(const Vector<T>& v);
template <class T>
Vector<T> vector_from_json(const json& j);

// {"kind": "l1" | "l2" | "linf" | "lp" | "polytope", "p": ..., "vertices": [[...]]}
json norm_to_json(const NormSpec& norm);
NormSpec norm_from_json(const json& j);

// {"norm", "kind", "witness", "centers", "radius" (or "radii" when mixed),
//  "margin", "cardinality", "constant_claim", "mode", "seed" (optional)}
template <class T>
json certificate_to_json(const Certificate<T>& cert);

using AnyCertificate = std::variant<Certificate<Rational>, Certificate<double>>;
AnyCertificate certificate_from_json(const json& j);

// Family fields only; the margin and cardinality of a certificate are ignored.
template <class T>
json family_to_json(const BallFamily<T>& family, const T& margin);

// {"norm", "atoms": [[...]], "weights": [...], "mode"}
template <class T>
json measure_to_json(const DiscreteMeasure<T>& mu);

using AnyMeasure = std::variant<DiscreteMeasure<Rational>, DiscreteMeasure<double>>;

// Without "mode" or an override, files holding any non-integer JSON number
// load in float mode, everything else exactly (when the norm allows it).
AnyMeasure measure_from_json(const json& j, std::optional<Arithmetic> mode = std::nullopt);

// One atom per row: coordinates, then the weight. Fields are read as exact
// decimals; exact mode is the default when the norm allows it.
AnyMeasure measure_from_csv(std::istream& in, const NormSpec& norm,
                            std::optional<Arithmetic> mode = std::nullopt);

template <class T>
std::string measure_to_csv(const DiscreteMeasure<T>& mu);

// {"norm", "anchor", "radius", "points": [[...]], "mode"}
template <class T>
json candidates_to_json(const CandidateSet<T>& cands);

using AnyCandidates = std::variant<CandidateSet<Rational>, CandidateSet<double>>;

// Mode detection as for measures; the norm may be overridden by the caller.
AnyCandidates candidates_from_json(const json& j, std::optional<Arithmetic> mode = std::nullopt,
                                   std::optional<NormSpec> norm = std::nullopt);

template <class T>
json function_to_json(const SupportFunction<T>& f);
template <class T>
SupportFunction<T> function_from_json(const json& j);

template <class T>
DiscreteMeasure<T> convert_measure(const AnyMeasure& mu);

// Canonical text form: two-space indent, trailing newline.
std::string dump(const json& j);

json parse_json(const std::string& text);
json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace besicovitch

#endif  // BESICOVITCH_IO_HPP
