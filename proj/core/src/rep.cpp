#include "hopf_fusion/rep.hpp"

#include <random>
#include <set>

#include "hopf_fusion/errors.hpp"
#include "hopf_fusion/polynomial.hpp"

namespace hopf_fusion {

namespace {

std::size_t sz(int i) { return std::size_t(i); }

// v^k for 0 <= k < n.
std::vector<Vector> powers_of(const HopfAlgebra& h, const Vector& v, int n) {
  std::vector<Vector> out{h.unit()};
  for (int k = 1; k < n; ++k)
    out.push_back(h.multiply(out.back(), v));
  return out;
}

std::vector<FieldElement> psi_powers(FieldElement psi, int n) {
  std::vector<FieldElement> out;
  FieldElement x = psi.field()->one();
  for (int k = 0; k < n; ++k) {
    out.push_back(x);
    x *= psi;
  }
  return out;
}

Matrix combine(const std::vector<Matrix>& basis_matrices, const Vector& x, const FieldPtr& f, std::size_t d) {
  Matrix r(f, d, d);
  for (std::size_t a = 0; a < x.size(); ++a)
    if (!x[a].is_zero())
      r = r + basis_matrices[a].scaled(x[a]);
  return r;
}

} // namespace

std::string to_string(const SimpleLabel& l) { return "(" + std::to_string(l.i) + "," + std::to_string(l.j) + ")"; }

std::vector<SmashCharacter> enumerate_simples(const SmashAlgebra& sm, const BlockData& blocks,
                                              const VElement& v, FieldElement psi) {
  const HopfAlgebra& h = sm.base();
  const int n = sm.n();
  std::vector<Vector> vk = powers_of(h, v.v, n);
  std::vector<FieldElement> pk = psi_powers(psi, n);

  // base[i][a * n + k] = chi_i(e_a v^k)
  std::vector<Vector> base(sz(blocks.size()), zero_vector(*h.field(), sz(sm.dim())));
  for (int a = 0; a < h.dim(); ++a)
    for (int k = 0; k < n; ++k) {
      Vector x = h.multiply(h.basis(a), vk[sz(k)]);
      for (int i = 0; i < blocks.size(); ++i)
        base[sz(i)][sz(sm.index(a, k))] = character_value(blocks.chi[sz(i)], x);
    }

  std::vector<SmashCharacter> out;
  std::set<std::vector<std::uint32_t>> seen;
  for (int i = 0; i < blocks.size(); ++i)
    for (int j = 0; j < n; ++j) {
      SmashCharacter c{{i, j}, base[sz(i)]};
      for (int a = 0; a < h.dim(); ++a)
        for (int k = 0; k < n; ++k)
          c.values[sz(sm.index(a, k))] *= pk[sz((j * k) % n)];
      std::vector<std::uint32_t> key;
      for (auto x : c.values)
        key.push_back(x.code());
      if (!seen.insert(key).second)
        throw InternalInconsistency("character " + to_string(c.label) + " repeats an earlier one");
      out.push_back(std::move(c));
    }
  return out;
}

std::vector<Matrix> simple_module(const HopfAlgebra& h, const BlockData& blocks, int i, std::uint64_t seed) {
  const FieldPtr& f = h.field();
  const std::size_t n = sz(h.dim());
  const Vector& e = blocks.e[sz(i)];
  const int d = blocks.d[sz(i)];
  Matrix le = h.left_regular(e) - Matrix::identity(f, n);
  std::mt19937_64 rng(seed + std::uint64_t(i) * 0x9e3779b97f4a7c15ull);
  std::uniform_int_distribution<std::uint32_t> coeff(0, f->order() - 1);

  for (int attempt = 0; attempt < 64; ++attempt) {
    Vector x(n);
    for (auto& c : x)
      c = f->element(coeff(rng));
    x = h.multiply(x, e);
    Matrix rx = h.right_regular(x);
    Factorization fac = factor_poly(minimal_polynomial(rx), seed + std::uint64_t(attempt));
    for (const auto& [factor, mult] : fac.factors) {
      if (factor.degree() != 1)
        continue;
      FieldElement root = -factor.coeff(0);
      Matrix shifted = rx - Matrix::identity(f, n).scaled(root);
      Matrix space = common_kernel(f, n, 2, [&](std::size_t which) { return which == 0 ? shifted : le; });
      if (space.cols() != sz(d))
        continue;
      std::vector<Matrix> out;
      out.reserve(n);
      for (int b = 0; b < h.dim(); ++b) {
        Matrix rho(f, sz(d), sz(d));
        for (int c = 0; c < d; ++c) {
          auto coords = coordinates(space, h.multiply(h.basis(b), space.column(sz(c))));
          if (!coords)
            throw RepresentationSplitFailure("eigenspace is not a left ideal");
          rho.set_column(sz(c), *coords);
        }
        out.push_back(std::move(rho));
      }
      return out;
    }
  }
  throw RepresentationSplitFailure("no minimal left ideal found in block " + std::to_string(i));
}

std::vector<Matrix> module_action(const SmashAlgebra& sm, const std::vector<Matrix>& base_module,
                                  const VElement& v, FieldElement psi, int j) {
  const HopfAlgebra& h = sm.base();
  const FieldPtr& f = h.field();
  const int n = sm.n();
  const std::size_t d = base_module.front().rows();
  Matrix rv = combine(base_module, v.v, f, d);
  std::vector<Matrix> rvk{Matrix::identity(f, d)};
  for (int k = 1; k < n; ++k)
    rvk.push_back(rvk.back() * rv);
  std::vector<FieldElement> pk = psi_powers(psi, n);
  std::vector<Matrix> out(sz(sm.dim()));
  for (int a = 0; a < h.dim(); ++a)
    for (int k = 0; k < n; ++k)
      out[sz(sm.index(a, k))] = (base_module[sz(a)] * rvk[sz(k)]).scaled(pk[sz((j * k) % n)]);
  return out;
}

Report verify_module_actions(const SmashAlgebra& sm, const BlockData& blocks, const VElement& v,
                             FieldElement psi, const std::vector<SmashCharacter>& chars, std::uint64_t seed) {
  const HopfAlgebra& p = sm.product();
  const FieldPtr& f = p.field();
  std::string fail;
  for (int i = 0; i < blocks.size() && fail.empty(); ++i) {
    std::vector<Matrix> base;
    try {
      base = simple_module(sm.base(), blocks, i, seed);
    } catch (const RepresentationSplitFailure& e) {
      fail = e.what();
      break;
    }
    for (int j = 0; j < sm.n() && fail.empty(); ++j) {
      std::vector<Matrix> rho = module_action(sm, base, v, psi, j);
      const std::size_t d = rho.front().rows();
      const Vector& chi = chars[sz(i * sm.n() + j)].values;
      for (int x = 0; x < p.dim() && fail.empty(); ++x)
        if (rho[sz(x)].trace() != chi[sz(x)])
          fail = "label (" + std::to_string(i) + "," + std::to_string(j) + ") trace x=" + std::to_string(x);
      for (int x = 0; x < p.dim() && fail.empty(); ++x)
        for (int y = 0; y < p.dim() && fail.empty(); ++y) {
          Matrix lhs = rho[sz(x)] * rho[sz(y)];
          Matrix rhs(f, d, d);
          for (const auto& t : p.mult_terms(x, y))
            rhs = rhs + rho[sz(t.index)].scaled(t.coeff);
          if (!(lhs == rhs))
            fail = "label (" + std::to_string(i) + "," + std::to_string(j) + ") x=" + std::to_string(x) +
                   " y=" + std::to_string(y);
        }
    }
  }
  Report r;
  r.add("Lemma3.module", fail.empty(), fail);
  return r;
}

Vector smash_regular_character(const SmashAlgebra& sm) {
  const HopfAlgebra& p = sm.product();
  Vector chi = p.zero();
  for (int x = 0; x < p.dim(); ++x)
    for (int y = 0; y < p.dim(); ++y)
      for (const auto& t : p.mult_terms(x, y))
        if (t.index == y)
          chi[sz(x)] += t.coeff;
  return chi;
}

Report verify_completeness(const SmashAlgebra& sm, const BlockData& blocks, const IntegralPair& base,
                           const Vector& base_u, const IntegralPair& smash_integrals, const Vector& smash_u,
                           const std::vector<SmashCharacter>& chars) {
  const HopfAlgebra& h = sm.base();
  const HopfAlgebra& p = sm.product();
  const FieldPtr& f = p.field();
  const int n = sm.n();
  std::string fail;

  std::size_t expected = 0;
  for (int d : blocks.d)
    expected += sz(d * d * n);
  if (chars.size() != sz(blocks.size() * n) || expected != sz(p.dim()))
    fail = "sum of squared dimensions " + std::to_string(expected) + " != dim " + std::to_string(p.dim());

  std::vector<Vector> rows;
  for (const auto& c : chars)
    rows.push_back(c.values);
  if (fail.empty() && rank(Matrix::from_rows(f, sz(p.dim()), rows)) != chars.size())
    fail = "characters are linearly dependent";

  Vector regular = smash_regular_character(sm);
  Vector sum = p.zero();
  for (const auto& c : chars)
    sum = add(sum, scale(c.values, f->from_int(blocks.d[sz(c.label.i)])));
  for (int x = 0; x < p.dim() && fail.empty(); ++x)
    if (sum[sz(x)] != regular[sz(x)])
      fail = "sum d_i chi_ij != chi_smash at x=" + std::to_string(x);

  FieldElement fn = f->from_int(n);
  for (int a = 0; a < h.dim() && fail.empty(); ++a)
    for (int k = 0; k < n && fail.empty(); ++k) {
      FieldElement want = k == 0 ? fn * blocks.regular_character[sz(a)] : f->zero();
      if (regular[sz(sm.index(a, k))] != want)
        fail = "chi_smash(h#g^k) at h=" + std::to_string(a) + " k=" + std::to_string(k);
    }

  for (int a = 0; a < h.dim() && fail.empty(); ++a)
    if (evaluate(base.right, h.multiply(base_u, h.basis(a))) != blocks.regular_character[sz(a)])
      fail = "chi_H != lambda(u .) at h=" + std::to_string(a);
  for (int x = 0; x < p.dim() && fail.empty(); ++x)
    if (evaluate(smash_integrals.right, p.multiply(smash_u, p.basis(x))) != regular[sz(x)])
      fail = "chi_smash != lambda_smash(u_smash .) at x=" + std::to_string(x);

  Report r;
  r.add("Thm3.simples", fail.empty(), fail);
  bool trivial = !chars.empty() && chars.front().label == SimpleLabel{0, 0} && chars.front().values == p.counit_vector();
  r.add("Rem3.trivial", trivial, "chi_00 differs from the counit");
  return r;
}

Report verify_duals(const SmashAlgebra& sm, const BlockData& blocks, const std::vector<SmashCharacter>& chars) {
  const HopfAlgebra& p = sm.product();
  const Matrix& s = p.antipode();
  const int n = sm.n();
  std::vector<std::string> fail;
  for (const auto& c : chars) {
    // (chi o S)(e_x) = sum_y S_yx chi(e_y)
    Vector composed = p.zero();
    for (int x = 0; x < p.dim(); ++x)
      for (int y = 0; y < p.dim(); ++y)
        composed[sz(x)] += s(sz(y), sz(x)) * c.values[sz(y)];
    int di = blocks.dual[sz(c.label.i)];
    int dj = (n - c.label.j) % n;
    if (composed != chars[sz(di * n + dj)].values)
      fail.push_back("label " + to_string(c.label) + " dual " + to_string(SimpleLabel{di, dj}));
  }
  Report r;
  r.add_first_failure("Prop3.duals", fail);
  return r;
}

} // namespace hopf_fusion
