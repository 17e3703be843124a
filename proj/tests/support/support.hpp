// Shared fixtures and independent oracles for the test suites.

#ifndef HOPF_FUSION_TESTS_SUPPORT_HPP_
#define HOPF_FUSION_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hopf_fusion/builtins.hpp"
#include "hopf_fusion/grothendieck.hpp"
#include "hopf_fusion/rep.hpp"
#include "hopf_fusion/semisimple.hpp"
#include "hopf_fusion/smash.hpp"

namespace hopf_fusion {

inline std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

} // namespace hopf_fusion

namespace hopf_fusion::testing {

// Element codes, for comparing vectors that live in different field objects.
std::vector<std::uint32_t> codes(const Vector& v);
std::vector<std::uint32_t> codes(const Matrix& m);

// Every builtin paired with the prime used throughout the suites.
struct BuiltinCase {
  std::string name;
  std::uint32_t p;
  std::string spec() const { return name + "@p=" + std::to_string(p); }
};
const std::vector<BuiltinCase>& builtin_cases();

// H over GF(p^k) for k >= 1.
HopfAlgebra builtin_over(const std::string& name, std::uint32_t p, unsigned k);

// Every intermediate object of a full run, computed stage by stage through
// the library API over the least field where all of them exist.
struct Workbench {
  explicit Workbench(const HopfAlgebra& base, std::uint64_t seed = 1);

  HopfAlgebra h;
  IntegralPair integrals;
  BlockData blocks;
  Vector u;
  VElement v;
  std::optional<SmashAlgebra> smash;
  IntegralPair smash_integrals;
  Vector smash_u;
  FieldElement psi;
  std::vector<SmashCharacter> chars;
  FusionTable n_table, l_table, smash_table;
  std::vector<Vector> theta;

  int m() const { return blocks.size(); }
  int n() const { return 2 * h.dim(); }
};

// Character table of a finite group computed from its conjugacy classes
// alone (Burnside's class-algebra eigenvector method), over a field where
// it splits. chars[r][g] is the value of the r-th irreducible at element g.
struct GroupCharacterTable {
  std::vector<std::vector<int>> classes;
  std::vector<int> degrees;
  std::vector<std::vector<FieldElement>> chars;
};
GroupCharacterTable character_table_from_classes(const CayleyTable& g, const FieldPtr& field);

// Tensor product multiplicities <chi_a chi_b, chi_c> from a character table,
// in the table's own row order.
std::vector<long long> tensor_multiplicities(const CayleyTable& g, const GroupCharacterTable& t);

// Fusion table of the dual group algebra: delta characters multiply like
// group elements, labels in group element order.
std::vector<long long> dual_group_multiplicities(const CayleyTable& g);

// Compares an engine fusion table against oracle multiplicities whose row
// order is given by matching each engine character to an oracle character.
// Returns an empty string on agreement.
std::string compare_fusion(const FusionTable& t, const std::vector<long long>& oracle,
                           const std::vector<int>& engine_to_oracle);

// Row index of each engine block character in the oracle table, matched by
// values on group elements; -1 when unmatched.
std::vector<int> match_characters(const BlockData& blocks, const std::vector<std::vector<FieldElement>>& oracle);

// Seeded corruption of a single structure constant of h.
struct Mutation {
  HopfAlgebra algebra;
  std::string description;
};
Mutation mutate(const HopfAlgebra& h, std::uint64_t seed);

} // namespace hopf_fusion::testing

#endif
