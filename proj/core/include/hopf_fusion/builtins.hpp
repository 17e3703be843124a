// Shipped example inputs: group algebras kC2, kC3, kS3, kD4 and their duals.

#ifndef HOPF_FUSION_BUILTINS_HPP_
#define HOPF_FUSION_BUILTINS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "hopf_fusion/hopf.hpp"

namespace hopf_fusion {

using CayleyTable = std::vector<std::vector<int>>;

CayleyTable cyclic_group(int n);
// Elements are permutations, sorted lexicographically (identity first).
CayleyTable symmetric_group_s3();
CayleyTable dihedral_group_d4();

// Group table behind a builtin name ("kS3" and "dual-kS3" both give S3).
CayleyTable builtin_group(const std::string& name);
std::vector<std::string> builtin_names();

// "kS3@p=7" -> {"kS3", 7}
struct BuiltinSpec {
  std::string name;
  std::uint32_t p;
};
BuiltinSpec parse_builtin_spec(const std::string& text);

// Builds the named algebra over GF(p). Throws InvalidInput for unknown names.
HopfAlgebra make_builtin(const std::string& name, std::uint32_t p);

} // namespace hopf_fusion

#endif
