#include <gtest/gtest.h>

#include "hopf_fusion/errors.hpp"
#include "hopf_fusion/grothendieck.hpp"
#include "support.hpp"

using namespace hopf_fusion;
using namespace hopf_fusion::testing;

namespace {

std::string oracle_mismatch(const Workbench& w, const std::string& name) {
  CayleyTable g = builtin_group(name);
  if (name.rfind("dual-", 0) == 0) {
    // block i of k^G is the delta function at some group element g_i
    std::vector<std::vector<FieldElement>> evals;
    for (int x = 0; x < int(g.size()); ++x) {
      std::vector<FieldElement> row(g.size(), w.h.field()->zero());
      row[std::size_t(x)] = w.h.field()->one();
      evals.push_back(row);
    }
    // chi_g(delta_x) = [g == x]
    return compare_fusion(w.n_table, dual_group_multiplicities(g), match_characters(w.blocks, evals));
  }
  GroupCharacterTable t = character_table_from_classes(g, w.h.field());
  return compare_fusion(w.n_table, tensor_multiplicities(g, t), match_characters(w.blocks, t.chars));
}

} // namespace

TEST(Oracle, S3CharacterTableFromClasses) {
  FieldPtr f = Field::construct(7, 1);
  GroupCharacterTable t = character_table_from_classes(symmetric_group_s3(), f);
  EXPECT_EQ(t.classes.size(), 3u);
  std::vector<int> d = t.degrees;
  std::sort(d.begin(), d.end());
  EXPECT_EQ(d, (std::vector<int>{1, 1, 2}));
}

TEST(Grothendieck, S3TensorSquareOfStandard) {
  Workbench w(make_builtin("kS3", 7));
  ASSERT_EQ(w.n_table.size(), 3);
  for (int c = 0; c < 3; ++c)
    EXPECT_EQ(w.n_table(2, 2, c), 1);
}

TEST(Grothendieck, NMatchesBruteForceOracle) {
  for (const auto& c : builtin_cases()) {
    Workbench w(make_builtin(c.name, c.p));
    EXPECT_EQ(oracle_mismatch(w, c.name), "") << c.spec();
  }
}

TEST(Grothendieck, TablesOnAllBuiltins) {
  for (const auto& c : builtin_cases()) {
    Workbench w(make_builtin(c.name, c.p));
    EXPECT_EQ(w.l_table, w.n_table) << c.spec();
    EXPECT_EQ(dump(w.l_table), dump(w.n_table));
    EXPECT_EQ(associativity_witness(w.n_table), "");
    EXPECT_EQ(unit_witness(w.l_table), "");
    Report r = check_fusion_tables(w.h, w.blocks, w.v, w.n_table, w.l_table, w.smash_table);
    r.append(check_smash_products(w.n_table, w.l_table, w.smash_table, w.m(), w.n()));
    r.append(check_theta(w.smash_table, w.theta, w.psi, w.m(), w.n()));
    r.append(verify_theorem_decomposition(w.n_table, w.l_table, w.smash_table, w.theta, w.m(), w.n()));
    SubcategoryResult sc = subcategory_C(w.n_table, w.l_table, w.smash_table, w.theta, w.blocks, w.n());
    r.append(sc.report);
    r.append(quantum_dimensions(w.h, w.blocks, w.v, w.psi, w.n()).report);
    for (const auto& e : r.entries())
      EXPECT_TRUE(e.passed) << c.spec() << " " << e.id << ": " << e.witness;
    EXPECT_EQ(sc.table.size(), 2 * w.m());
  }
}

TEST(Grothendieck, C2SmashTableShape) {
  Workbench w(make_builtin("kC2", 5));
  EXPECT_EQ(w.smash_table.size(), 8);
  std::string d = dump(w.smash_table);
  EXPECT_EQ(d.substr(0, d.find('\n')), "labels: V0xW0 V0xW1 V0xW2 V0xW3 V1xW0 V1xW1 V1xW2 V1xW3");
  // every product of invertible simples is simple: 64 nonzero entries
  EXPECT_EQ(std::count(d.begin(), d.end(), '\n'), 65);
}

TEST(Grothendieck, ThetaIdempotentsOfC2) {
  Workbench w(make_builtin("kC2", 5));
  ASSERT_EQ(w.theta.size(), 4u);
  FieldPtr f = w.h.field();
  Vector sum = zero_vector(*f, 8);
  for (int l = 0; l < 4; ++l) {
    const Vector& t = w.theta[std::size_t(l)];
    EXPECT_EQ(fusion_multiply(w.smash_table, t, t, f), t);
    sum = add(sum, t);
    // chi_{0,n/2} * theta_l = (-1)^l theta_l
    Vector x = fusion_multiply(w.smash_table, unit_vector(*f, 8, 2), t, f);
    EXPECT_EQ(x, l % 2 == 0 ? t : scale(t, -f->one()));
  }
  EXPECT_EQ(sum, unit_vector(*f, 8, 0));
}

TEST(Grothendieck, C2SubcategoryIsTwoCorners) {
  Workbench w(make_builtin("kC2", 5));
  SubcategoryResult sc = subcategory_C(w.n_table, w.l_table, w.smash_table, w.theta, w.blocks, w.n());
  EXPECT_EQ(sc.table.labels(), (std::vector<std::string>{"V0xW0", "V1xW0", "V0xW2", "V1xW2"}));
  EXPECT_EQ(associativity_witness(sc.table), "");
}

TEST(Grothendieck, QuantumDimensionDichotomyForC2) {
  Workbench w(make_builtin("kC2", 5));
  QuantumDimensions q = quantum_dimensions(w.h, w.blocks, w.v, w.psi, w.n());
  ASSERT_EQ(q.spherical.size(), 8u);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j)
      EXPECT_EQ(q.spherical[std::size_t(i * 4 + j)], j == 0 || j == 2);
}

TEST(Grothendieck, CharacterBasisRejectsOutsideSpan) {
  FieldPtr f = Field::construct(7, 1);
  CharacterBasis b({Vector{f->one(), f->zero(), f->zero()}, Vector{f->zero(), f->one(), f->zero()}});
  auto in = b.coordinates(Vector{f->from_int(2), f->from_int(3), f->zero()});
  ASSERT_TRUE(in);
  EXPECT_EQ((*in)[0], f->from_int(2));
  EXPECT_FALSE(b.coordinates(Vector{f->one(), f->one(), f->one()}));
}

TEST(Grothendieck, LiftInteger) {
  FieldPtr f = Field::construct(7, 1);
  EXPECT_EQ(lift_integer(f->from_int(6), false), 6);
  EXPECT_EQ(lift_integer(f->from_int(6), true), -1);
  EXPECT_EQ(lift_integer(f->from_int(3), true), 3);
  FieldPtr f49 = Field::construct(7, 2);
  EXPECT_THROW(lift_integer(f49->element(8), false), NonIntegralCoefficient);
}

TEST(Grothendieck, FusionTableCheckersFindViolations) {
  FusionTable t(base_labels(2));
  t.at(0, 0, 0) = 1;
  t.at(0, 1, 1) = 1;
  t.at(1, 0, 1) = 1;
  t.at(1, 1, 0) = 1;
  EXPECT_EQ(associativity_witness(t), "");
  EXPECT_EQ(unit_witness(t), "");
  t.at(0, 1, 0) = 1;
  EXPECT_NE(associativity_witness(t), "");
  EXPECT_NE(unit_witness(t), "");
}
