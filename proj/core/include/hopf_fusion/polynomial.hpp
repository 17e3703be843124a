// Univariate polynomials over GF(p^k) and their factorization.

#ifndef HOPF_FUSION_POLYNOMIAL_HPP_
#define HOPF_FUSION_POLYNOMIAL_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hopf_fusion/field.hpp"

namespace hopf_fusion {

class Matrix;

// Coefficients lowest degree first, no trailing zeros (the zero polynomial
// has no coefficients).
class Polynomial {
public:
  explicit Polynomial(FieldPtr field) : field_(std::move(field)) {}
  Polynomial(FieldPtr field, std::vector<FieldElement> coeffs);

  static Polynomial x(FieldPtr field);
  static Polynomial constant(FieldPtr field, FieldElement c);
  // Monic x - root.
  static Polynomial linear(FieldPtr field, FieldElement root);

  const FieldPtr& field() const { return field_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return int(coeffs_.size()) - 1; }
  FieldElement leading() const;
  FieldElement coeff(std::size_t i) const;
  Polynomial monic() const;
  Polynomial derivative() const;
  FieldElement operator()(FieldElement x) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator/(const Polynomial& o) const { return divmod(o).first; }
  Polynomial operator%(const Polynomial& o) const { return divmod(o).second; }
  Polynomial scaled(FieldElement s) const;
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
  void normalize();

  FieldPtr field_;
  std::vector<FieldElement> coeffs_;
};

// Monic gcd (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& mod);

struct Factorization {
  FieldElement unit;
  // Monic irreducible factors with multiplicity, sorted by degree and then
  // by coefficient codes.
  std::vector<std::pair<Polynomial, int>> factors;
};

// Square-free decomposition, distinct-degree splitting and Cantor-Zassenhaus
// equal-degree splitting. The random splitting elements come from a
// mt19937_64 seeded with seed, so output is reproducible. Odd characteristic
// only for the equal-degree step.
Factorization factor_poly(const Polynomial& f, std::uint64_t seed = 1);

// Least-degree monic polynomial annihilating a square matrix.
Polynomial minimal_polynomial(const Matrix& a);

} // namespace hopf_fusion

#endif
