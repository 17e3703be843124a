// Grothendieck algebras: the convolution * and twisted product on G_0(H),
// the fusion table of H#kG, the idempotents theta_l and the corner and
// subcategory decompositions built from them.

#ifndef HOPF_FUSION_GROTHENDIECK_HPP_
#define HOPF_FUSION_GROTHENDIECK_HPP_

#include <string>
#include <vector>

#include "hopf_fusion/rep.hpp"
#include "hopf_fusion/report.hpp"
#include "hopf_fusion/semisimple.hpp"
#include "hopf_fusion/smash.hpp"

namespace hopf_fusion {

// Integer structure constants T_ab^c over an ordered label set; label 0 is
// expected to be the unit.
class FusionTable {
public:
  FusionTable() = default;
  explicit FusionTable(std::vector<std::string> labels);

  int size() const { return int(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  long long operator()(int a, int b, int c) const { return coeffs_[index(a, b, c)]; }
  long long& at(int a, int b, int c) { return coeffs_[index(a, b, c)]; }

  friend bool operator==(const FusionTable&, const FusionTable&) = default;

private:
  std::size_t index(int a, int b, int c) const {
    return (std::size_t(a) * labels_.size() + std::size_t(b)) * labels_.size() + std::size_t(c);
  }
  std::vector<std::string> labels_;
  std::vector<long long> coeffs_;
};

// Empty string when associative, otherwise the first failing (a, b, c, d).
std::string associativity_witness(const FusionTable& t);
// Empty string when label 0 is a two-sided unit.
std::string unit_witness(const FusionTable& t);

// Lines "labels: ..." followed by "a b c value" for every nonzero entry.
std::string dump(const FusionTable& t);

// Coordinates of functions in the span of linearly independent characters.
class CharacterBasis {
public:
  explicit CharacterBasis(std::vector<Vector> characters);
  std::size_t size() const { return chars_.size(); }
  // nullopt when f is outside the span.
  std::optional<Vector> coordinates(const Vector& f) const;

private:
  std::vector<Vector> chars_;
  std::vector<std::size_t> cols_;
  Matrix inverse_;  // inverse of the characters restricted to cols_
};

// (chi (x) psi)(Delta(h)) for every basis element h.
Vector convolve(const HopfAlgebra& h, const Vector& chi, const Vector& psi);

// Integer representative of a prime-field element: in [0, p) or, when
// symmetric, in (-p/2, p/2]. Throws NonIntegralCoefficient otherwise.
long long lift_integer(FieldElement x, bool symmetric);

// N: chi_i * chi_j = sum_k N_ij^k chi_k. Throws NonIntegralCoefficient when a
// coordinate is not a small nonnegative integer.
FusionTable star_product_coeffs(const HopfAlgebra& h, const BlockData& blocks);

// Delta(v^-1)(v (x) v) in H (x) H.
Tensor2 star_twist(const HopfAlgebra& h, const VElement& v);

// L: (chi_i star chi_j)(h) = (chi_i (x) chi_j)(Delta(h) Delta(v^-1)(v (x) v)),
// lifted symmetrically. Throws NonIntegralCoefficient when a coordinate is
// not an integer with |L| <= d_i d_j.
FusionTable newstar_product_coeffs(const HopfAlgebra& h, const BlockData& blocks, const VElement& v);

// Label names for H ("V0", ...) and for the smash product ("V0xW0", ...).
std::vector<std::string> base_labels(int m);
std::vector<std::string> smash_labels(int m, int n);

// Fusion table of H#kG in flat label order i * n + j, by convolution and
// solving against the smash characters.
FusionTable smash_fusion_table(const SmashAlgebra& sm, const std::vector<SmashCharacter>& chars, int m);

// Fusion.tables: N, L and the smash table are associative and unital, N
// counts dimensions and N_ij^0 = [j = i*].
// Prop4.star_associative: the twisted product is associative and unital,
// both as an integer table and on the character functions.
// Rem6.involutory: L = N when S^2 = id (vacuous otherwise).
// Rem9: |L| <= N and N +- L even, so (N +- L) / 2 are nonnegative integers.
Report check_fusion_tables(const HopfAlgebra& h, const BlockData& blocks, const VElement& v,
                           const FusionTable& n_table, const FusionTable& l_table, const FusionTable& smash);

// Prop1.1 .. Prop1.3 against the smash table.
Report check_smash_products(const FusionTable& n_table, const FusionTable& l_table, const FusionTable& smash,
                            int m, int n);

// Field-valued product in the algebra spanned by the labels of t.
Vector fusion_multiply(const FusionTable& t, const Vector& x, const Vector& y, const FieldPtr& field);

// theta_l = (1/n) sum_t psi^(-lt) chi_0t as vectors over the smash labels.
std::vector<Vector> theta_idempotents(int m, int n, FieldElement psi);

// Theta.relations: idempotent, orthogonal, summing to chi_00, central, and
// chi_ij * theta_l = psi^(jl) chi_i0 * theta_l.
Report check_theta(const FusionTable& smash, const std::vector<Vector>& theta, FieldElement psi, int m, int n);

// Thm4.1 (even l against N), Thm4.2 (odd l against L) and Thm4.3 (the
// corners have rank m and together span the whole algebra).
Report verify_theorem_decomposition(const FusionTable& n_table, const FusionTable& l_table,
                                    const FusionTable& smash, const std::vector<Vector>& theta, int m, int n);

struct SubcategoryResult {
  FusionTable table;  // labels (i, 0) for all i, then (i, n/2)
  Report report;      // C.closure, PropP1, Cor4
};

SubcategoryResult subcategory_C(const FusionTable& n_table, const FusionTable& l_table, const FusionTable& smash,
                                const std::vector<Vector>& theta, const BlockData& blocks, int n);

struct QuantumDimensions {
  std::vector<FieldElement> dims;  // dim(V_i (x) W_j) at i * n + j
  std::vector<bool> spherical;     // dim equals the dual's dim
  Report report;                   // QDim
};

// dim(V_i (x) W_j) = chi_i(v) psi^j; chi_i(v) must equal s_lambda s_i, and
// the dual dimensions agree exactly when j is 0 or n/2.
QuantumDimensions quantum_dimensions(const HopfAlgebra& h, const BlockData& blocks, const VElement& v,
                                     FieldElement psi, int n);

} // namespace hopf_fusion

#endif
