#ifndef BESICOVITCH_CONSTANTS_HPP
#define BESICOVITCH_CONSTANTS_HPP

#include "besicovitch/geometry.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace besicovitch {

// Spaces whose sharp value of sup_{r, mu} ||A_{r,mu}||_{L1 -> L1} = E is known.
enum class SpaceClass {
  line,                 // any norm on R
  parallelogram_plane,  // planar norm whose unit ball is a parallelogram
  other_plane,          // every other planar norm
  linf,                 // (R^d, l_inf)
  euclidean,            // (R^d, l_2)
};

struct ConstantRecord {
  std::string space;
  std::size_t dim = 0;  // 0: row covers every dimension
  // Sharp value; nullopt for rows that only carry an asymptotic bracket.
  std::optional<std::uint64_t> value;
  bool attained = false;
  std::string note;
};

class NoTableEntry : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

ConstantRecord known_constant(SpaceClass space, std::size_t dim);

std::optional<SpaceClass> classify(const NormSpec& norm, std::size_t dim);

// Numeric sharp constant for (norm, dim) when the table has one.
std::optional<std::uint64_t> table_constant(const NormSpec& norm, std::size_t dim);

std::vector<ConstantRecord> constant_table();

}  // namespace besicovitch

#endif  // BESICOVITCH_CONSTANTS_HPP
