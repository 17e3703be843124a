// Structure-constant model of a finite-dimensional Hopf algebra.
//
// Basis elements are numbered 0..dim-1. Raw data (HopfData) is accepted
// without checks so that invalid presentations can be built on purpose;
// validate_hopf is the separate, explicit axiom check.

#ifndef HOPF_FUSION_HOPF_HPP_
#define HOPF_FUSION_HOPF_HPP_

#include <string>
#include <vector>

#include "hopf_fusion/field.hpp"
#include "hopf_fusion/linalg.hpp"

namespace hopf_fusion {

// e_a * e_b contains coeff * e_c   (multiplication)
// Delta(e_a) contains coeff * e_b (x) e_c   (comultiplication)
struct StructureEntry {
  int a;
  int b;
  int c;
  FieldElement coeff;
};

struct HopfData {
  FieldPtr field;
  int dim = 0;
  std::vector<StructureEntry> mult;
  std::vector<StructureEntry> comult;
  Vector unit;
  Vector counit;
  Matrix antipode;  // column a is S(e_a)
};

struct Term {
  int index;
  FieldElement coeff;
};

struct PairTerm {
  int left;
  int right;
  FieldElement coeff;
};

// Element of H (x) H as a dense dim*dim coefficient array, (b, c) at b*dim + c.
using Tensor2 = Vector;

class HopfAlgebra {
public:
  explicit HopfAlgebra(const HopfData& data);

  const FieldPtr& field() const { return field_; }
  int dim() const { return dim_; }

  const std::vector<Term>& mult_terms(int a, int b) const { return mult_[std::size_t(a * dim_ + b)]; }
  const std::vector<PairTerm>& comult_terms(int a) const { return comult_[std::size_t(a)]; }
  const Vector& unit() const { return unit_; }
  const Vector& counit_vector() const { return counit_; }
  const Matrix& antipode() const { return antipode_; }

  HopfData data() const;

  Vector basis(int a) const { return unit_vector(*field_, std::size_t(dim_), std::size_t(a)); }
  Vector zero() const { return zero_vector(*field_, std::size_t(dim_)); }

  Vector multiply(const Vector& x, const Vector& y) const;
  Tensor2 comultiply(const Vector& x) const;
  FieldElement counit(const Vector& x) const;
  // S^power(x); negative powers use the inverse antipode. Throws InvalidHopf
  // when S is singular.
  Vector apply_antipode(const Vector& x, int power = 1) const;
  Matrix antipode_power(int power) const;

  // Matrix of y -> x*y (left regular) and y -> y*x (right regular).
  Matrix left_regular(const Vector& x) const;
  Matrix right_regular(const Vector& x) const;
  // Trace of left multiplication, i.e. the regular character chi_H.
  FieldElement regular_trace(const Vector& x) const;

  // Multiplicative inverse; nullopt when x is not a unit.
  std::optional<Vector> invert(const Vector& x) const;
  Vector power(const Vector& x, long long e) const;

  // Products in the algebra H (x) H.
  Tensor2 tensor_multiply(const Tensor2& x, const Tensor2& y) const;
  Tensor2 tensor(const Vector& x, const Vector& y) const;

  bool is_commutative() const;
  bool is_cocommutative() const;
  bool is_involutory() const;

  // Re-expresses every structure constant through an embedding of fields.
  HopfAlgebra change_field(const FieldEmbedding& embedding) const;

private:
  FieldPtr field_;
  int dim_;
  std::vector<std::vector<Term>> mult_;
  std::vector<std::vector<PairTerm>> comult_;
  Vector unit_;
  Vector counit_;
  Matrix antipode_;
};

struct AxiomCheck {
  std::string name;
  bool passed;
  std::string witness;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  bool all_passed() const;
  std::string first_failure() const;
};

// Associativity, unit, coassociativity, counit, the bialgebra laws and the
// antipode law, each checked exactly on basis elements. The witness names
// the first failing basis indices.
ValidationReport validate_hopf(const HopfAlgebra& h);

// Group algebra of the group with the given Cayley table (entry [a][b] is
// the index of a*b). Throws NotAGroup with a witness.
HopfAlgebra group_algebra(const std::vector<std::vector<int>>& cayley, const FieldPtr& field);

// Dual Hopf algebra in the dual basis: multiplication and comultiplication
// swap roles, the antipode is transposed.
HopfAlgebra dual_hopf(const HopfAlgebra& h);

// H (x) K with componentwise structure; basis (a, b) at a * dim K + b.
HopfAlgebra tensor_product(const HopfAlgebra& h, const HopfAlgebra& k);

} // namespace hopf_fusion

#endif
