// The smash product H#kG, G cyclic of order n = 2 dim H, where the
// generator g acts on H by S^2.
//
// Basis layout: h_a # g^i sits at index a * n + i.

#ifndef HOPF_FUSION_SMASH_HPP_
#define HOPF_FUSION_SMASH_HPP_

#include <vector>

#include "hopf_fusion/hopf.hpp"
#include "hopf_fusion/report.hpp"
#include "hopf_fusion/semisimple.hpp"

namespace hopf_fusion {

class SmashAlgebra {
public:
  SmashAlgebra(HopfAlgebra base, int n, HopfAlgebra product, std::vector<Matrix> antipode_powers);

  const HopfAlgebra& base() const { return base_; }
  const HopfAlgebra& product() const { return product_; }
  int n() const { return n_; }
  int dim() const { return product_.dim(); }
  int index(int a, int i) const { return a * n_ + i; }

  // S^k of the base algebra for 0 <= k <= 2n.
  const Matrix& antipode_power(int k) const { return antipode_powers_[std::size_t(k)]; }

  // x # g^i for x in H.
  Vector embed(const Vector& x, int i = 0) const;
  // 1 # g^i.
  Vector group_element(int i) const;

private:
  HopfAlgebra base_;
  int n_;
  HopfAlgebra product_;
  std::vector<Matrix> antipode_powers_;
};

// Assembles the structure constants of H#kG with n = 2 dim H. Throws
// InvalidHopf when S^(2n) is not the identity.
SmashAlgebra build_smash(const HopfAlgebra& h);

// Report entries: Smash.axioms (Hopf axioms, counit eps#eps, h -> h#1 is
// a Hopf map, (1#g)^n = 1) and Smash.antipode_square
// (S^2(x) = (1#g) x (1#g)^-1 on every basis element).
Report check_smash(const SmashAlgebra& sm);

// Lambda # (1/n) sum_i g^i and lambda # sum_j psi^j, i.e. the functional
// a # g^i -> n lambda(a) delta_{i0}.
IntegralPair smash_integral(const SmashAlgebra& sm, const IntegralPair& base);

// Smash.integral: the closed forms span the solved integral spaces, are
// normalized against each other and eps(Lambda_smash) = eps(Lambda).
Report check_smash_integral(const SmashAlgebra& sm, const IntegralPair& base, const IntegralPair& closed);

// u of the smash product from the closed-form integrals.
Vector smash_u(const SmashAlgebra& sm, const IntegralPair& closed);

// Smash.u: u_smash = u # 1.
Report check_smash_u(const SmashAlgebra& sm, const Vector& base_u, const Vector& smash_u);

} // namespace hopf_fusion

#endif
