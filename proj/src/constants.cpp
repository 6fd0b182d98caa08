#include "besicovitch/constants.hpp"

namespace besicovitch {

namespace {

constexpr const char* euclidean_bracket =
    "(1 + o(1)) sqrt(3 pi / 8) log(3 / (2 sqrt 2)) d^{3/2} (2 / sqrt 3)^d <= E <= "
    "2^{0.401 (1 + o(1)) d}; asymptotic only, no numeric claim";

}  // namespace

ConstantRecord known_constant(SpaceClass space, std::size_t dim) {
  switch (space) {
    case SpaceClass::line:
      if (dim != 1) break;
      return {"R, any norm", 1, 2, true, "two balls on either side of the witness"};
    case SpaceClass::parallelogram_plane:
      if (dim != 2) break;
      return {"R^2, unit ball a parallelogram", 2, 4, false, ""};
    case SpaceClass::other_plane:
      if (dim != 2) break;
      return {"R^2, any other norm", 2, 5, false, ""};
    case SpaceClass::linf:
      if (dim == 0 || dim > 63) break;
      return {"R^d, l_inf", dim, std::uint64_t{1} << dim, true, "2^d, the cube corners"};
    case SpaceClass::euclidean:
      if (dim == 1) return known_constant(SpaceClass::line, 1);
      if (dim == 2) return known_constant(SpaceClass::other_plane, 2);
      if (dim == 3) return {"R^3, l_2", 3, 12, true, "icosahedron vertices"};
      if (dim >= 4) return {"R^d, l_2", dim, std::nullopt, false, euclidean_bracket};
      break;
  }
  throw NoTableEntry("no table entry for this space and dimension " + std::to_string(dim));
}

std::optional<SpaceClass> classify(const NormSpec& norm, std::size_t dim) {
  if (dim == 1) return SpaceClass::line;
  if (dim == 2) {
    switch (norm.kind()) {
      case NormKind::l1:
      case NormKind::linf:
        return SpaceClass::parallelogram_plane;
      case NormKind::polytope:
        return norm.facets().size() == 4 ? SpaceClass::parallelogram_plane
                                         : SpaceClass::other_plane;
      case NormKind::l2:
      case NormKind::lp:
        return SpaceClass::other_plane;
    }
  }
  if (norm.kind() == NormKind::linf) return SpaceClass::linf;
  if (norm.kind() == NormKind::l2) return SpaceClass::euclidean;
  return std::nullopt;
}

std::optional<std::uint64_t> table_constant(const NormSpec& norm, std::size_t dim) {
  auto space = classify(norm, dim);
  if (!space) return std::nullopt;
  try {
    return known_constant(*space, dim).value;
  } catch (const NoTableEntry&) {
    return std::nullopt;
  }
}

std::vector<ConstantRecord> constant_table() {
  std::vector<ConstantRecord> rows;
  rows.push_back(known_constant(SpaceClass::line, 1));
  rows.push_back(known_constant(SpaceClass::parallelogram_plane, 2));
  rows.push_back(known_constant(SpaceClass::other_plane, 2));
  rows.push_back({"R^d, l_inf", 0, std::nullopt, true, "2^d, the cube corners"});
  rows.push_back(known_constant(SpaceClass::euclidean, 3));
  rows.push_back({"R^d, l_2, d >= 4", 0, std::nullopt, false, euclidean_bracket});
  return rows;
}

}  // namespace besicovitch
