#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "hopf_fusion/errors.hpp"

namespace hopf_fusion::testing {

namespace {

std::size_t sz(int i) { return std::size_t(i); }

int inverse_of(const CayleyTable& g, int a) {
  for (int b = 0; b < int(g.size()); ++b)
    if (g[sz(a)][sz(b)] == 0)
      return b;
  return -1;
}

} // namespace

std::vector<std::uint32_t> codes(const Vector& v) {
  std::vector<std::uint32_t> out;
  for (auto x : v)
    out.push_back(x.code());
  return out;
}

std::vector<std::uint32_t> codes(const Matrix& m) {
  std::vector<std::uint32_t> out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out.push_back(m(r, c).code());
  return out;
}

const std::vector<BuiltinCase>& builtin_cases() {
  static const std::vector<BuiltinCase> cases{
      {"kC2", 5}, {"kC3", 5}, {"kS3", 7}, {"kD4", 7}, {"dual-kC2", 5}, {"dual-kC3", 5}, {"dual-kS3", 7}, {"dual-kD4", 7},
  };
  return cases;
}

HopfAlgebra builtin_over(const std::string& name, std::uint32_t p, unsigned k) {
  HopfAlgebra h = make_builtin(name, p);
  if (k == 1)
    return h;
  auto [field, emb] = extend_field(h.field(), k);
  return h.change_field(emb);
}

Workbench::Workbench(const HopfAlgebra& base, std::uint64_t seed) : h(base) {
  const std::uint32_t p = base.field()->characteristic();
  unsigned factor = root_of_unity_degree(p, 2 * std::uint64_t(base.dim()));
  while (true) {
    try {
      if (factor == 1) {
        h = base;
      } else {
        auto [field, emb] = extend_field(base.field(), factor);
        h = base.change_field(emb);
      }
      integrals = compute_integrals(h);
      blocks = block_decomposition(h, seed);
      u = compute_u(h, integrals);
      if (!integral_convention_consistent(h, integrals, blocks, u)) {
        integrals = compute_integrals(h, IntegralConvention::Left);
        u = compute_u(h, integrals);
      }
      v = compute_v(h, integrals, blocks, u);
      break;
    } catch (const NonResidue& e) {
      factor *= e.extension;
    } catch (const SplittingFieldTooSmall& e) {
      factor *= e.degree;
    }
  }
  smash.emplace(build_smash(h));
  smash_integrals = smash_integral(*smash, integrals);
  smash_u = hopf_fusion::smash_u(*smash, smash_integrals);
  psi = primitive_root_of_unity(*h.field(), std::uint64_t(n()));
  chars = enumerate_simples(*smash, blocks, v, psi);
  n_table = star_product_coeffs(h, blocks);
  l_table = newstar_product_coeffs(h, blocks, v);
  smash_table = smash_fusion_table(*smash, chars, m());
  theta = theta_idempotents(m(), n(), psi);
}

GroupCharacterTable character_table_from_classes(const CayleyTable& g, const FieldPtr& field) {
  const int order = int(g.size());
  const Field& f = *field;
  GroupCharacterTable t;

  std::vector<int> class_of(sz(order), -1);
  for (int x = 0; x < order; ++x) {
    if (class_of[sz(x)] >= 0)
      continue;
    std::vector<int> cls;
    for (int y = 0; y < order; ++y) {
      int conj = g[sz(g[sz(y)][sz(x)])][sz(inverse_of(g, y))];
      if (class_of[sz(conj)] < 0) {
        class_of[sz(conj)] = int(t.classes.size());
        cls.push_back(conj);
      }
    }
    std::sort(cls.begin(), cls.end());
    t.classes.push_back(cls);
  }
  const int r = int(t.classes.size());

  // coeff[j][l][k] = #{(x, y) in C_j x C_l : xy = rep(C_k)}
  std::vector<Matrix> a(sz(r), Matrix(field, sz(r), sz(r)));
  for (int j = 0; j < r; ++j)
    for (int l = 0; l < r; ++l)
      for (int k = 0; k < r; ++k) {
        int rep = t.classes[sz(k)].front();
        long long count = 0;
        for (int x : t.classes[sz(j)])
          for (int y : t.classes[sz(l)])
            count += g[sz(x)][sz(y)] == rep;
        a[sz(j)](sz(l), sz(k)) = f.from_int(count);
      }

  // A generic combination has simple spectrum; its eigenvectors are the
  // central characters omega.
  std::mt19937_64 rng(12345);
  std::vector<Vector> omegas;
  for (int attempt = 0; attempt < 100 && int(omegas.size()) != r; ++attempt) {
    Matrix combo(field, sz(r), sz(r));
    for (int j = 0; j < r; ++j)
      combo = combo + a[sz(j)].scaled(f.element(std::uint32_t(rng() % f.order())));
    omegas.clear();
    for (std::uint32_t code = 0; code < f.order(); ++code) {
      auto ker = kernel(combo - Matrix::identity(field, sz(r)).scaled(f.element(code)));
      if (ker.size() > 1)
        break;
      if (ker.size() == 1)
        omegas.push_back(scale(ker[0], ker[0][sz(class_of[0])].inverse()));
    }
  }
  if (int(omegas.size()) != r)
    throw InternalInconsistency("class algebra did not split");

  for (const auto& w : omegas) {
    // chi(1)^2 = |G| / sum_j omega_j omega_j* / |C_j|
    FieldElement denom = f.zero();
    for (int j = 0; j < r; ++j) {
      int inv_class = class_of[sz(inverse_of(g, t.classes[sz(j)].front()))];
      denom += w[sz(j)] * w[sz(inv_class)] / f.from_int(long(t.classes[sz(j)].size()));
    }
    FieldElement d2 = f.from_int(order) / denom;
    int degree = 0;
    for (int d = 1; d * d <= order; ++d)
      if (f.from_int(d * d) == d2)
        degree = d;
    if (degree == 0)
      throw InternalInconsistency("no integral degree");
    std::vector<FieldElement> chi(sz(order));
    for (int x = 0; x < order; ++x) {
      int j = class_of[sz(x)];
      chi[sz(x)] = w[sz(j)] * f.from_int(degree) / f.from_int(long(t.classes[sz(j)].size()));
    }
    t.degrees.push_back(degree);
    t.chars.push_back(std::move(chi));
  }
  return t;
}

std::vector<long long> tensor_multiplicities(const CayleyTable& g, const GroupCharacterTable& t) {
  const int order = int(g.size());
  const int r = int(t.chars.size());
  const Field& f = *t.chars.front().front().field();
  FieldElement inv_order = f.from_int(order).inverse();
  std::vector<long long> out(sz(r * r * r));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        FieldElement s = f.zero();
        for (int x = 0; x < order; ++x)
          s += t.chars[sz(a)][sz(x)] * t.chars[sz(b)][sz(x)] * t.chars[sz(c)][sz(inverse_of(g, x))];
        s *= inv_order;
        out[sz((a * r + b) * r + c)] = f.prime_residue(s);
      }
  return out;
}

std::vector<long long> dual_group_multiplicities(const CayleyTable& g) {
  const int r = int(g.size());
  std::vector<long long> out(sz(r * r * r));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      out[sz((a * r + b) * r + g[sz(a)][sz(b)])] = 1;
  return out;
}

std::string compare_fusion(const FusionTable& t, const std::vector<long long>& oracle,
                           const std::vector<int>& map) {
  const int r = t.size();
  if (oracle.size() != sz(r * r * r) || map.size() != sz(r))
    return "size mismatch";
  for (int a = 0; a < r; ++a)
    if (map[sz(a)] < 0)
      return "engine character " + std::to_string(a) + " has no oracle match";
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        long long want = oracle[sz((map[sz(a)] * r + map[sz(b)]) * r + map[sz(c)])];
        if (t(a, b, c) != want)
          return "a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" + std::to_string(c) +
                 " engine=" + std::to_string(t(a, b, c)) + " oracle=" + std::to_string(want);
      }
  return {};
}

std::vector<int> match_characters(const BlockData& blocks, const std::vector<std::vector<FieldElement>>& oracle) {
  std::vector<int> out;
  for (const auto& chi : blocks.chi) {
    int found = -1;
    for (int r = 0; r < int(oracle.size()); ++r)
      if (std::equal(chi.begin(), chi.end(), oracle[sz(r)].begin(), oracle[sz(r)].end()))
        found = r;
    out.push_back(found);
  }
  return out;
}

Mutation mutate(const HopfAlgebra& h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  HopfData data = h.data();
  const Field& f = *data.field;
  auto pick = [&](std::size_t n) { return std::size_t(rng() % n); };
  auto nonzero = [&] { return f.element(std::uint32_t(1 + rng() % (f.order() - 1))); };
  auto idx = [&] { return int(pick(sz(data.dim))); };
  std::string what;
  switch (seed % 7) {
    case 0: {
      auto& e = data.mult[pick(data.mult.size())];
      e.coeff += nonzero();
      what = "mult coefficient at (" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
      break;
    }
    case 1: {
      auto& e = data.mult[pick(data.mult.size())];
      int old = e.c;
      e.c = (e.c + 1 + int(pick(sz(data.dim - 1)))) % data.dim;
      what = "mult target at (" + std::to_string(e.a) + "," + std::to_string(e.b) + ") " + std::to_string(old) +
             "->" + std::to_string(e.c);
      break;
    }
    case 2: {
      auto& e = data.comult[pick(data.comult.size())];
      e.coeff += nonzero();
      what = "comult coefficient of e_" + std::to_string(e.a);
      break;
    }
    case 3: {
      int a = idx(), b = idx();
      data.antipode(sz(b), sz(a)) += nonzero();
      what = "antipode entry S(e_" + std::to_string(a) + ")_" + std::to_string(b);
      break;
    }
    case 4: {
      int a = idx();
      data.counit[sz(a)] += nonzero();
      what = "counit at " + std::to_string(a);
      break;
    }
    case 5: {
      int a = idx();
      data.unit[sz(a)] += nonzero();
      what = "unit at " + std::to_string(a);
      break;
    }
    default: {
      int a = idx(), b = idx(), c = idx();
      data.mult.push_back({a, b, c, nonzero()});
      what = "extra mult term e_" + std::to_string(a) + " e_" + std::to_string(b) + " -> e_" + std::to_string(c);
      break;
    }
  }
  return {HopfAlgebra(data), what};
}

} // namespace hopf_fusion::testing
