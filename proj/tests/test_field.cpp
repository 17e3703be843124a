#include <gtest/gtest.h>

#include <set>

#include "hopf_fusion/errors.hpp"
#include "hopf_fusion/field.hpp"

using namespace hopf_fusion;

TEST(Field, PrimeFieldMatchesModularArithmetic) {
  FieldPtr f = Field::construct(7, 1);
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) {
      EXPECT_EQ(f->prime_residue(f->from_int(a) + f->from_int(b)), std::uint32_t((a + b) % 7));
      EXPECT_EQ(f->prime_residue(f->from_int(a) * f->from_int(b)), std::uint32_t((a * b) % 7));
      EXPECT_EQ(f->prime_residue(f->from_int(a) - f->from_int(b)), std::uint32_t(((a - b) % 7 + 7) % 7));
    }
  EXPECT_EQ(f->from_int(-1), f->from_int(6));
}

TEST(Field, ExtensionFieldAxioms) {
  for (auto [p, k] : {std::pair{5u, 2u}, std::pair{7u, 2u}, std::pair{3u, 3u}, std::pair{2u, 4u}}) {
    FieldPtr f = Field::construct(p, k);
    ASSERT_EQ(f->order(), [&] { std::uint32_t q = 1; for (unsigned i = 0; i < k; ++i) q *= p; return q; }());
    for (std::uint32_t a = 0; a < f->order(); ++a) {
      FieldElement x = f->element(a);
      EXPECT_EQ(x + f->zero(), x);
      EXPECT_EQ(x * f->one(), x);
      EXPECT_TRUE((x - x).is_zero());
      if (!x.is_zero())
        EXPECT_TRUE((x * x.inverse()).is_one());
      for (std::uint32_t b = 0; b < f->order(); b += 3) {
        FieldElement y = f->element(b);
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ(x + y, y + x);
        FieldElement z = f->element((a * 7 + b) % f->order());
        EXPECT_EQ(x * (y + z), x * y + x * z);
      }
    }
  }
}

// Least monic irreducible quadratic over GF(7), by enumeration in code order.
TEST(Field, ModulusIsLeastIrreducibleQuadratic) {
  FieldPtr f = Field::construct(7, 2);
  std::vector<std::uint32_t> expected;
  for (std::uint32_t code = 0; code < 49 && expected.empty(); ++code) {
    std::uint32_t c0 = code % 7, c1 = code / 7;
    bool has_root = false;
    for (std::uint32_t x = 0; x < 7; ++x)
      has_root |= (x * x + c1 * x + c0) % 7 == 0;
    if (!has_root)
      expected = {c0, c1, 1};
  }
  EXPECT_EQ(f->modulus(), expected);
}

TEST(Field, SquareRoots) {
  FieldPtr f5 = Field::construct(5, 1);
  std::set<std::uint32_t> squares;
  for (std::uint32_t x = 0; x < 5; ++x)
    squares.insert((x * x) % 5);
  for (std::uint32_t x = 0; x < 5; ++x) {
    auto r = sqrt(f5->element(x));
    EXPECT_EQ(r.has_value(), squares.count(x) == 1);
    if (r) {
      EXPECT_EQ(*r * *r, f5->element(x));
      EXPECT_LE(r->code(), (-*r).code());
    }
  }
  EXPECT_FALSE(sqrt(f5->from_int(3)).has_value());

  auto [f25, emb] = extend_field(f5, 2);
  for (std::uint32_t x = 0; x < 5; ++x)
    EXPECT_TRUE(sqrt(emb(f5->element(x))).has_value());
  for (std::uint32_t x = 0; x < f25->order(); ++x) {
    auto r = sqrt(f25->element(x));
    if (r)
      EXPECT_EQ(*r * *r, f25->element(x));
  }
}

TEST(Field, PrimitiveRootsHaveExactOrder) {
  FieldPtr f5 = Field::construct(5, 1);
  FieldElement w = primitive_root_of_unity(*f5, 4);
  EXPECT_TRUE(w == f5->from_int(2) || w == f5->from_int(3));
  EXPECT_TRUE(w.pow(4).is_one());
  EXPECT_FALSE(w.pow(2).is_one());

  FieldPtr f49 = Field::construct(7, 2);
  FieldElement z = primitive_root_of_unity(*f49, 12);
  for (int d : {1, 2, 3, 4, 6})
    EXPECT_FALSE(z.pow(d).is_one());
  EXPECT_TRUE(z.pow(12).is_one());
  EXPECT_THROW(primitive_root_of_unity(*f5, 3), InvalidInput);
}

TEST(Field, EmbeddingIsRingHomomorphism) {
  FieldPtr f9 = Field::construct(3, 2);
  auto [f81, emb] = extend_field(f9, 2);
  EXPECT_EQ(f81->order(), 81u);
  for (std::uint32_t a = 0; a < 9; ++a)
    for (std::uint32_t b = 0; b < 9; ++b) {
      FieldElement x = f9->element(a), y = f9->element(b);
      EXPECT_EQ(emb(x + y), emb(x) + emb(y));
      EXPECT_EQ(emb(x * y), emb(x) * emb(y));
    }
  EXPECT_TRUE(emb(f9->one()).is_one());
}

TEST(Field, RootOfUnityDegree) {
  EXPECT_EQ(root_of_unity_degree(5, 4), 1u);
  EXPECT_EQ(root_of_unity_degree(7, 12), 2u);
  EXPECT_EQ(root_of_unity_degree(5, 6), 2u);
  EXPECT_EQ(root_of_unity_degree(7, 16), 2u);
}

TEST(Field, CoefficientStrings) {
  FieldPtr f = Field::construct(7, 2);
  FieldElement x = f->from_coeffs(std::vector<std::uint32_t>{3, 4});
  EXPECT_EQ(x.to_string(), "3,4");
  EXPECT_EQ(f->from_int(5).to_string(), "5");
  EXPECT_THROW(Field::construct(6, 1), InvalidInput);
}
