// Simple modules V_i (x) W_j of H#kG and their characters.
//
// Label (i, j) pairs the i-th simple H-module with the one-dimensional
// kG-module where g acts by psi^j; its flat index is i * n + j.

#ifndef HOPF_FUSION_REP_HPP_
#define HOPF_FUSION_REP_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "hopf_fusion/report.hpp"
#include "hopf_fusion/semisimple.hpp"
#include "hopf_fusion/smash.hpp"

namespace hopf_fusion {

struct SimpleLabel {
  int i = 0;
  int j = 0;
  friend bool operator==(const SimpleLabel&, const SimpleLabel&) = default;
};

std::string to_string(const SimpleLabel& l);

struct SmashCharacter {
  SimpleLabel label;
  Vector values;  // chi_ij on the smash basis
};

// chi_ij(h # g^k) = chi_i(h v^k) psi^(jk) for all m * n labels, in flat
// label order. Throws InternalInconsistency when two characters coincide.
std::vector<SmashCharacter> enumerate_simples(const SmashAlgebra& sm, const BlockData& blocks,
                                              const VElement& v, FieldElement psi);

// Explicit d_i-dimensional irreducible representation of H for block i:
// a right-multiplication eigenspace inside H e_i, which is a minimal left
// ideal. Returns the matrices of the basis elements of H. Throws
// RepresentationSplitFailure after 64 unlucky random draws.
std::vector<Matrix> simple_module(const HopfAlgebra& h, const BlockData& blocks, int i,
                                  std::uint64_t seed = 1);

// Matrices of the smash basis elements on V_i (x) W_j:
// rho(h # g^k) = rho_i(h v^k) psi^(jk).
std::vector<Matrix> module_action(const SmashAlgebra& sm, const std::vector<Matrix>& base_module,
                                  const VElement& v, FieldElement psi, int j);

// Lemma3.module: for every label, rho(x) rho(y) = rho(xy) on all pairs of
// smash basis elements and trace(rho(x)) = chi_ij(x).
Report verify_module_actions(const SmashAlgebra& sm, const BlockData& blocks, const VElement& v,
                             FieldElement psi, const std::vector<SmashCharacter>& chars,
                             std::uint64_t seed = 1);

// Regular character of the smash product read off its multiplication tensor.
Vector smash_regular_character(const SmashAlgebra& sm);

// Thm3.simples: characters pairwise distinct and linearly independent,
// sum_ij d_i chi_ij equals the regular character, the regular character is
// n chi_H at g^0 and vanishes at g^k (k != 0), chi_H = lambda(u .) and
// chi_smash = lambda_smash(u_smash .).
// Rem3.trivial: chi_00 is the counit.
Report verify_completeness(const SmashAlgebra& sm, const BlockData& blocks, const IntegralPair& base,
                           const Vector& base_u, const IntegralPair& smash_integrals,
                           const Vector& smash_u, const std::vector<SmashCharacter>& chars);

// Prop3.duals: chi_{i*, -j} = chi_ij o S_smash for every label.
Report verify_duals(const SmashAlgebra& sm, const BlockData& blocks,
                    const std::vector<SmashCharacter>& chars);

} // namespace hopf_fusion

#endif
