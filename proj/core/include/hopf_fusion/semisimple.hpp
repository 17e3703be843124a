// Integrals, Wedderburn blocks, characters and the elements u and v of a
// semisimple Hopf algebra.

#ifndef HOPF_FUSION_SEMISIMPLE_HPP_
#define HOPF_FUSION_SEMISIMPLE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "hopf_fusion/hopf.hpp"
#include "hopf_fusion/report.hpp"

namespace hopf_fusion {

// Which side the right integral lambda in H* is normalized on:
//   Right: lambda(h_(1)) h_(2) = lambda(h) 1
//   Left:  h_(1) lambda(h_(2)) = lambda(h) 1
enum class IntegralConvention { Right, Left };

const char* to_string(IntegralConvention c);

struct IntegralPair {
  Vector left;          // Lambda, with eps(Lambda) = dim H as a field element
  Vector right;         // lambda as a functional, lambda(Lambda) = 1
  FieldElement counit;  // eps(Lambda)
  IntegralConvention convention = IntegralConvention::Right;
};

// Solves for both integrals. Throws DegenerateIntegralSpace when either
// space is not one-dimensional and NotSemisimple when eps(Lambda) = 0 or
// lambda(Lambda) = 0.
IntegralPair compute_integrals(const HopfAlgebra& h,
                               IntegralConvention convention = IntegralConvention::Right);

// lambda(x) for a functional given by its values on the basis.
FieldElement evaluate(const Vector& functional, const Vector& x);

struct BlockData {
  std::vector<Vector> e;           // central primitive idempotents
  std::vector<int> d;              // block dimensions
  std::vector<Vector> chi;         // chi[i][b] = chi_i(e_b)
  std::vector<int> dual;           // S(e_i) = e_{dual[i]}
  std::vector<FieldElement> regular_character;  // chi_H on the basis

  int size() const { return int(e.size()); }
};

// Splits the center with split_commutative_algebra and orders the blocks:
// the block with eps(e) = 1 first, then by dimension, then by character row.
// Throws SplittingFieldTooSmall when the center does not split over the
// current field and NonSquareBlockDim when some dim(H e_i) is not a square.
BlockData block_decomposition(const HopfAlgebra& h, std::uint64_t seed = 1);

// Character chi(x) for a character given on the basis.
FieldElement character_value(const Vector& chi, const Vector& x);

// Idempotency, orthogonality, completeness, centrality, block dimensions,
// chi_i(1) = d_i, the position of the trivial block, duality and linear
// independence of the characters.
Report check_block_invariants(const HopfAlgebra& h, const IntegralPair& integrals,
                              const BlockData& blocks);

// u = S(Lambda_(2)) Lambda_(1). Throws InvalidInput when u is not a unit.
Vector compute_u(const HopfAlgebra& h, const IntegralPair& integrals);

// True when lambda(e_i) = d_i chi_i(u^-1) for all i and chi_H = lambda(u .),
// i.e. the integral convention agrees with the character identities.
bool integral_convention_consistent(const HopfAlgebra& h, const IntegralPair& integrals,
                                    const BlockData& blocks, const Vector& u);

struct VElement {
  Vector u;
  Vector u_inverse;
  Vector v;
  FieldElement s_lambda;           // s_lambda^2 = eps(Lambda)
  std::vector<FieldElement> s;     // s[i]^2 = lambda(e_i)
  std::string branch_policy;
};

// v = (u / s_lambda) sum_i (s_i / d_i) e_i. The branches are
//   s_lambda = least square root of eps(Lambda),
//   s_i = (d_i / s_lambda) * least square root of eps(Lambda) lambda(e_i) / d_i^2
// for the representative min(i, i*) of each dual pair, and s_{i*} = s_i.
// This forces s_0 = 1 / s_lambda and gives v = 1 on involutory algebras.
// Throws NonResidue when a square root is missing from the field.
VElement compute_v(const HopfAlgebra& h, const IntegralPair& integrals, const BlockData& blocks,
                   const Vector& u);

// Report entries Prop3.20.1 .. Prop3.20.5.
Report check_u_properties(const HopfAlgebra& h, const IntegralPair& integrals,
                          const BlockData& blocks, const Vector& u);

// Report entries Prop2.1 .. Prop2.6; n = 2 dim H.
Report check_v_properties(const HopfAlgebra& h, const VElement& v, int n);

} // namespace hopf_fusion

#endif
