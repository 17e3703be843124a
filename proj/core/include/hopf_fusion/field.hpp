// Exact arithmetic in GF(p^k).
//
// An element is stored as the integer code sum_i c_i p^i of its coefficient
// vector (c_0 + c_1 x + ... + c_{k-1} x^{k-1} modulo the field's modulus).
// Comparing codes is the same as comparing coefficient vectors
// lexicographically from the highest-degree coefficient down; every
// "lexicographically least" rule in the engine (modulus choice, square-root
// branch, block ordering) uses this order.
//
// Multiplication goes through discrete log tables and addition through a
// Zech logarithm table, so fields are limited to kMaxFieldOrder elements.

#ifndef HOPF_FUSION_FIELD_HPP_
#define HOPF_FUSION_FIELD_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hopf_fusion {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t(1) << 22;

bool is_prime(std::uint64_t n);

// A value of GF(p^k). Holds a raw pointer to its field: the field must
// outlive the element, which every container in the engine guarantees by
// holding the FieldPtr.
class FieldElement {
public:
  FieldElement() = default;
  FieldElement(const Field* field, std::uint32_t code) : field_(field), code_(code) {}

  const Field* field() const { return field_; }
  std::uint32_t code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  bool is_one() const;

  std::vector<std::uint32_t> coeffs() const;
  // Comma separated coefficient list, lowest degree first ("3", "1,4").
  std::string to_string() const;

  FieldElement operator+(FieldElement o) const;
  FieldElement operator-(FieldElement o) const;
  FieldElement operator-() const;
  FieldElement operator*(FieldElement o) const;
  FieldElement operator/(FieldElement o) const;
  FieldElement& operator+=(FieldElement o) { return *this = *this + o; }
  FieldElement& operator-=(FieldElement o) { return *this = *this - o; }
  FieldElement& operator*=(FieldElement o) { return *this = *this * o; }
  FieldElement& operator/=(FieldElement o) { return *this = *this / o; }

  FieldElement inverse() const;
  FieldElement pow(long long e) const;

  friend bool operator==(FieldElement a, FieldElement b) {
    return a.code_ == b.code_ && a.field_ == b.field_;
  }
  // Lexicographic order on coefficient vectors (see header comment).
  friend std::strong_ordering operator<=>(FieldElement a, FieldElement b) {
    return a.code_ <=> b.code_;
  }

private:
  const Field* field_ = nullptr;
  std::uint32_t code_ = 0;
};

class Field {
public:
  // GF(p^k) with the lexicographically least monic irreducible modulus of
  // degree k (x for k = 1). Throws InvalidInput for composite p.
  static FieldPtr construct(std::uint32_t p, unsigned k);
  // Caller-supplied modulus, lowest degree first, monic, length k+1.
  static FieldPtr with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {this, 0}; }
  FieldElement one() const { return {this, 1}; }
  FieldElement element(std::uint32_t code) const;
  FieldElement from_int(long long v) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  // Least-code generator of the multiplicative group.
  FieldElement generator() const { return {this, exp_[1]}; }
  // generator()^e for 0 <= e < q-1.
  FieldElement generator_power(std::uint64_t e) const { return {this, exp_[e]}; }
  std::uint32_t log(FieldElement a) const;

  bool in_prime_field(FieldElement a) const { return a.code() < p_; }
  // Representative in [0, p) of a prime-field element.
  std::uint32_t prime_residue(FieldElement a) const;

  std::string describe() const;

  // Raw code arithmetic, used by FieldElement.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;

private:
  Field(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;   // 2(q-1) entries, exp_[i] = code of g^i
  std::vector<std::uint32_t> log_;   // log_[code], log_[0] unused
  std::vector<std::uint32_t> zech_;  // log(1 + g^i), kNoLog if zero
};

inline constexpr std::uint32_t kNoLog = 0xffffffffu;

// y with y*y == x, choosing the branch with the least code; nullopt if x is
// not a square. Tonelli-Shanks, with the direct formula when q = 3 mod 4.
std::optional<FieldElement> sqrt(FieldElement x);

// Element of exact multiplicative order n: generator^((q-1)/n).
// Throws InvalidInput when n does not divide q-1.
FieldElement primitive_root_of_unity(const Field& field, std::uint64_t n);

// Injective ring homomorphism GF(p^a) -> GF(p^b), a | b. The image of the
// defining root is the least-code root of the source modulus in the target.
class FieldEmbedding {
public:
  FieldEmbedding(FieldPtr source, FieldPtr target);
  const FieldPtr& source() const { return source_; }
  const FieldPtr& target() const { return target_; }
  FieldElement operator()(FieldElement x) const;

private:
  FieldPtr source_;
  FieldPtr target_;
  std::vector<std::uint32_t> image_;
};

// GF(p^(k*factor)) together with the embedding of field into it.
std::pair<FieldPtr, FieldEmbedding> extend_field(const FieldPtr& field, unsigned factor);

// Least m >= 1 with n | p^m - 1, i.e. the multiplicative order of p mod n.
unsigned root_of_unity_degree(std::uint32_t p, std::uint64_t n);

} // namespace hopf_fusion

#endif
