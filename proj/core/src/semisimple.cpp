#include "hopf_fusion/semisimple.hpp"

#include <algorithm>
#include <numeric>

#include "hopf_fusion/errors.hpp"

namespace hopf_fusion {

namespace {

std::size_t sz(int i) { return std::size_t(i); }

int isqrt(std::size_t n) {
  int r = 0;
  while (std::size_t(r + 1) * std::size_t(r + 1) <= n)
    ++r;
  return r;
}

// Columns of a basis matrix as vectors.
std::vector<Vector> columns(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t c = 0; c < m.cols(); ++c)
    out.push_back(m.column(c));
  return out;
}

// S(t_(2)) t_(1) for t in H (x) H.
Vector antipode_twist(const HopfAlgebra& h, const Tensor2& t) {
  const int n = h.dim();
  const Matrix& s = h.antipode();
  Vector r = h.zero();
  for (int b = 0; b < n; ++b) {
    Vector y = h.zero();
    bool any = false;
    for (int c = 0; c < n; ++c) {
      FieldElement coeff = t[sz(b * n + c)];
      if (coeff.is_zero())
        continue;
      any = true;
      for (int a = 0; a < n; ++a)
        y[sz(a)] += coeff * s(sz(a), sz(c));
    }
    if (!any)
      continue;
    r = add(r, h.multiply(y, h.basis(b)));
  }
  return r;
}

std::string index_witness(const char* name, int i) { return std::string(name) + "=" + std::to_string(i); }

} // namespace

const char* to_string(IntegralConvention c) {
  return c == IntegralConvention::Right ? "lambda(h1)h2=lambda(h)1" : "h1*lambda(h2)=lambda(h)1";
}

FieldElement evaluate(const Vector& functional, const Vector& x) { return dot(functional, x); }

FieldElement character_value(const Vector& chi, const Vector& x) { return dot(chi, x); }

IntegralPair compute_integrals(const HopfAlgebra& h, IntegralConvention convention) {
  const FieldPtr& f = h.field();
  const int n = h.dim();

  Matrix left = common_kernel(f, sz(n), sz(n), [&](std::size_t a) {
    Matrix m = h.left_regular(h.basis(int(a)));
    FieldElement eps = h.counit_vector()[a];
    for (std::size_t i = 0; i < sz(n); ++i)
      m(i, i) -= eps;
    return m;
  });
  if (left.cols() != 1)
    throw DegenerateIntegralSpace("left integral space has dimension " + std::to_string(left.cols()));

  Matrix right = common_kernel(f, sz(n), sz(n), [&](std::size_t a) {
    Matrix m(f, sz(n), sz(n));
    for (const auto& t : h.comult_terms(int(a))) {
      if (convention == IntegralConvention::Right)
        m(sz(t.right), sz(t.left)) += t.coeff;
      else
        m(sz(t.left), sz(t.right)) += t.coeff;
    }
    for (std::size_t c = 0; c < sz(n); ++c)
      m(c, a) -= h.unit()[c];
    return m;
  });
  if (right.cols() != 1)
    throw DegenerateIntegralSpace("right integral space has dimension " + std::to_string(right.cols()));

  IntegralPair ip;
  ip.convention = convention;
  ip.left = left.column(0);
  FieldElement eps = h.counit(ip.left);
  if (eps.is_zero())
    throw NotSemisimple("eps(Lambda) = 0");
  FieldElement target = f->from_int(n);
  if (target.is_zero())
    target = f->one();
  ip.left = scale(ip.left, target / eps);
  ip.counit = target;

  ip.right = right.column(0);
  FieldElement pairing = evaluate(ip.right, ip.left);
  if (pairing.is_zero())
    throw NotSemisimple("lambda(Lambda) = 0");
  ip.right = scale(ip.right, pairing.inverse());
  return ip;
}

BlockData block_decomposition(const HopfAlgebra& h, std::uint64_t seed) {
  const FieldPtr& f = h.field();
  const int n = h.dim();

  Matrix center = common_kernel(f, sz(n), sz(n), [&](std::size_t b) {
    Matrix m(f, sz(n), sz(n));
    for (int a = 0; a < n; ++a) {
      for (const auto& t : h.mult_terms(a, int(b)))
        m(sz(t.index), sz(a)) += t.coeff;
      for (const auto& t : h.mult_terms(int(b), a))
        m(sz(t.index), sz(a)) -= t.coeff;
    }
    return m;
  });

  std::vector<Matrix> ops;
  for (const auto& z : columns(center))
    ops.push_back(h.left_regular(z));
  std::vector<Matrix> projectors = split_commutative_algebra(ops, seed);
  if (projectors.size() != center.cols())
    throw InternalInconsistency("center of dimension " + std::to_string(center.cols()) + " split into " +
                                std::to_string(projectors.size()) + " blocks");

  BlockData raw;
  raw.regular_character.resize(sz(n));
  for (int a = 0; a < n; ++a)
    raw.regular_character[sz(a)] = h.regular_trace(h.basis(a));
  Vector regular(raw.regular_character.begin(), raw.regular_character.end());

  for (const auto& p : projectors) {
    Vector e = p * h.unit();
    std::size_t r = rank(p);
    int d = isqrt(r);
    if (std::size_t(d) * std::size_t(d) != r)
      throw NonSquareBlockDim("block of dimension " + std::to_string(r) + " is not a square");
    FieldElement dinv = f->from_int(d).inverse();
    Vector chi(sz(n));
    for (int b = 0; b < n; ++b)
      chi[sz(b)] = dot(regular, h.multiply(h.basis(b), e)) * dinv;
    raw.e.push_back(std::move(e));
    raw.d.push_back(d);
    raw.chi.push_back(std::move(chi));
  }

  std::vector<int> order(raw.e.size());
  std::iota(order.begin(), order.end(), 0);
  auto trivial = [&](int i) { return h.counit(raw.e[sz(i)]).is_one(); };
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    bool tx = trivial(x), ty = trivial(y);
    if (tx != ty)
      return tx;
    if (raw.d[sz(x)] != raw.d[sz(y)])
      return raw.d[sz(x)] < raw.d[sz(y)];
    return raw.chi[sz(x)] < raw.chi[sz(y)];
  });

  BlockData blocks;
  blocks.regular_character = raw.regular_character;
  for (int i : order) {
    blocks.e.push_back(raw.e[sz(i)]);
    blocks.d.push_back(raw.d[sz(i)]);
    blocks.chi.push_back(raw.chi[sz(i)]);
  }
  const int m = blocks.size();
  blocks.dual.assign(sz(m), -1);
  for (int i = 0; i < m; ++i) {
    Vector se = h.apply_antipode(blocks.e[sz(i)]);
    for (int j = 0; j < m; ++j)
      if (se == blocks.e[sz(j)])
        blocks.dual[sz(i)] = j;
    if (blocks.dual[sz(i)] < 0)
      throw InternalInconsistency("S(e_" + std::to_string(i) + ") is not a block idempotent");
  }
  return blocks;
}

Report check_block_invariants(const HopfAlgebra& h, const IntegralPair& integrals,
                              const BlockData& blocks) {
  const FieldPtr& f = h.field();
  const int m = blocks.size();
  std::vector<std::string> fail;
  Vector total = h.zero();
  for (int i = 0; i < m; ++i) {
    const Vector& ei = blocks.e[sz(i)];
    total = add(total, ei);
    for (int j = 0; j < m; ++j) {
      Vector prod = h.multiply(ei, blocks.e[sz(j)]);
      if (prod != (i == j ? ei : h.zero()))
        fail.push_back("idempotents i=" + std::to_string(i) + " j=" + std::to_string(j));
    }
    for (int b = 0; b < h.dim(); ++b)
      if (h.multiply(ei, h.basis(b)) != h.multiply(h.basis(b), ei))
        fail.push_back("central i=" + std::to_string(i) + " b=" + std::to_string(b));
    if (rank(h.left_regular(ei)) != sz(blocks.d[sz(i)] * blocks.d[sz(i)]))
      fail.push_back("block dimension " + index_witness("i", i));
    if (character_value(blocks.chi[sz(i)], h.unit()) != f->from_int(blocks.d[sz(i)]))
      fail.push_back("chi(1) != d " + index_witness("i", i));
    FieldElement eps = h.counit(ei);
    if (eps != (i == 0 ? f->one() : f->zero()))
      fail.push_back("counit of idempotent " + index_witness("i", i));
    int k = blocks.dual[sz(i)];
    if (blocks.dual[sz(k)] != i || blocks.d[sz(k)] != blocks.d[sz(i)] ||
        evaluate(integrals.right, blocks.e[sz(k)]) != evaluate(integrals.right, ei))
      fail.push_back("duality " + index_witness("i", i));
  }
  if (total != h.unit())
    fail.push_back("idempotents do not sum to 1");
  if (rank(Matrix::from_rows(f, sz(h.dim()), blocks.chi)) != sz(m))
    fail.push_back("characters are linearly dependent");
  Report r;
  r.add_first_failure("Blocks.invariants", fail);
  return r;
}

Vector compute_u(const HopfAlgebra& h, const IntegralPair& integrals) {
  Vector u = antipode_twist(h, h.comultiply(integrals.left));
  if (!h.invert(u))
    throw InvalidInput("u is not invertible");
  return u;
}

bool integral_convention_consistent(const HopfAlgebra& h, const IntegralPair& integrals,
                                    const BlockData& blocks, const Vector& u) {
  auto uinv = h.invert(u);
  if (!uinv)
    return false;
  const FieldPtr& f = h.field();
  for (int i = 0; i < blocks.size(); ++i)
    if (evaluate(integrals.right, blocks.e[sz(i)]) !=
        f->from_int(blocks.d[sz(i)]) * character_value(blocks.chi[sz(i)], *uinv))
      return false;
  for (int b = 0; b < h.dim(); ++b)
    if (blocks.regular_character[sz(b)] != evaluate(integrals.right, h.multiply(u, h.basis(b))))
      return false;
  return true;
}

VElement compute_v(const HopfAlgebra& h, const IntegralPair& integrals, const BlockData& blocks,
                   const Vector& u) {
  const FieldPtr& f = h.field();
  const int m = blocks.size();
  VElement out;
  out.u = u;
  auto uinv = h.invert(u);
  if (!uinv)
    throw InvalidInput("u is not invertible");
  out.u_inverse = *uinv;

  auto sl = sqrt(integrals.counit);
  if (!sl)
    throw NonResidue("eps(Lambda) = " + integrals.counit.to_string() + " is not a square");
  out.s_lambda = *sl;

  out.s.assign(sz(m), f->zero());
  for (int i = 0; i < m; ++i) {
    int rep = std::min(i, blocks.dual[sz(i)]);
    if (rep < i) {
      out.s[sz(i)] = out.s[sz(rep)];
      continue;
    }
    FieldElement d = f->from_int(blocks.d[sz(i)]);
    FieldElement lam = evaluate(integrals.right, blocks.e[sz(i)]);
    FieldElement ratio = integrals.counit * lam / (d * d);
    auto root = sqrt(ratio);
    if (!root)
      throw NonResidue("eps(Lambda) lambda(e_" + std::to_string(i) + ") / d^2 = " + ratio.to_string() +
                       " is not a square");
    out.s[sz(i)] = d / out.s_lambda * *root;
  }

  Vector central = h.zero();
  for (int i = 0; i < m; ++i)
    central = add(central, scale(blocks.e[sz(i)], out.s[sz(i)] / f->from_int(blocks.d[sz(i)])));
  out.v = scale(h.multiply(u, central), out.s_lambda.inverse());
  out.branch_policy =
      "s_lambda=least sqrt(eps(Lambda)); s_i=(d_i/s_lambda)*least sqrt(eps(Lambda)*lambda(e_i)/d_i^2) "
      "for i<=i*; s_i*=s_i";
  return out;
}

Report check_u_properties(const HopfAlgebra& h, const IntegralPair& integrals,
                          const BlockData& blocks, const Vector& u) {
  const FieldPtr& f = h.field();
  const int n = h.dim();
  const int m = blocks.size();
  Report r;
  Tensor2 dl = h.comultiply(integrals.left);
  Vector regular(blocks.regular_character.begin(), blocks.regular_character.end());

  // u = chi_H(Lambda_(1)) S(Lambda_(2))
  Vector alt = h.zero();
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      FieldElement t = dl[sz(b * n + c)];
      if (!t.is_zero())
        alt = add(alt, scale(h.apply_antipode(h.basis(c)), t * regular[sz(b)]));
    }
  r.add("Prop3.20.1", alt == u, "u=" + to_string(u) + " alt=" + to_string(alt));

  auto uinv = h.invert(u);
  if (!uinv) {
    for (const char* id : {"Prop3.20.2", "Prop3.20.3", "Prop3.20.4", "Prop3.20.5"})
      r.add(id, false, "u is not invertible");
    return r;
  }

  // Lambda_(1) u^-1 S(Lambda_(2)) = 1
  Vector two = h.zero();
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      FieldElement t = dl[sz(b * n + c)];
      if (!t.is_zero())
        two = add(two, scale(h.multiply(h.multiply(h.basis(b), *uinv), h.apply_antipode(h.basis(c))), t));
    }
  r.add("Prop3.20.2", two == h.unit(), "value=" + to_string(two));

  std::vector<std::string> fail3;
  for (int i = 0; i < m; ++i) {
    FieldElement lhs = evaluate(integrals.right, blocks.e[sz(i)]);
    FieldElement rhs = f->from_int(blocks.d[sz(i)]) * character_value(blocks.chi[sz(i)], *uinv);
    if (lhs != rhs)
      fail3.push_back("i=" + std::to_string(i) + " lambda(e_i)=" + lhs.to_string() + " d_i*chi_i(u^-1)=" +
                      rhs.to_string());
  }
  r.add_first_failure("Prop3.20.3", fail3);

  Vector su = h.apply_antipode(u);
  Vector usu = h.multiply(u, su);
  Vector suu = h.multiply(su, u);
  Vector expected = h.zero();
  std::string fail4;
  for (int i = 0; i < m; ++i) {
    FieldElement lam = evaluate(integrals.right, blocks.e[sz(i)]);
    if (lam.is_zero()) {
      fail4 = "lambda(e_" + std::to_string(i) + ") = 0";
      break;
    }
    FieldElement d = f->from_int(blocks.d[sz(i)]);
    expected = add(expected, scale(blocks.e[sz(i)], integrals.counit * d * d / lam));
  }
  if (fail4.empty() && usu != expected)
    fail4 = "uS(u)=" + to_string(usu) + " expected=" + to_string(expected);
  if (fail4.empty() && suu != expected)
    fail4 = "S(u)u=" + to_string(suu) + " expected=" + to_string(expected);
  r.add("Prop3.20.4", fail4.empty(), fail4);

  Vector suinv = h.apply_antipode(*uinv);
  Vector g = h.multiply(suinv, u);
  Vector g2 = h.multiply(u, suinv);
  std::string fail5;
  if (g != g2)
    fail5 = "S(u^-1)u=" + to_string(g) + " uS(u^-1)=" + to_string(g2);
  else if (h.comultiply(g) != h.tensor(g, g))
    fail5 = "not group-like: " + to_string(g);
  else if (!h.counit(g).is_one())
    fail5 = "eps=" + h.counit(g).to_string();
  r.add("Prop3.20.5", fail5.empty(), fail5);
  return r;
}

Report check_v_properties(const HopfAlgebra& h, const VElement& vd, int n) {
  Report r;
  const Vector& v = vd.v;
  FieldElement eps = h.counit(v);
  r.add("Prop2.1", eps.is_one(), "eps(v)=" + eps.to_string());

  auto vinv = h.invert(v);
  if (!vinv) {
    for (const char* id : {"Prop2.2", "Prop2.3", "Prop2.4", "Prop2.5", "Prop2.6"})
      r.add(id, false, "v is not invertible");
    return r;
  }

  std::vector<std::string> fail2;
  for (int b = 0; b < h.dim(); ++b) {
    Vector lhs = h.apply_antipode(h.basis(b), 2);
    Vector rhs = h.multiply(h.multiply(v, h.basis(b)), *vinv);
    if (lhs != rhs)
      fail2.push_back("h=e_" + std::to_string(b) + " S^2(h)=" + to_string(lhs) + " vhv^-1=" + to_string(rhs));
  }
  r.add_first_failure("Prop2.2", fail2);

  Vector v2 = h.multiply(v, v);
  Vector g = h.multiply(vd.u, h.apply_antipode(vd.u_inverse));
  r.add("Prop2.3", v2 == g, "v^2=" + to_string(v2) + " uS(u^-1)=" + to_string(g));

  Vector vn = h.power(v, n);
  r.add("Prop2.4", vn == h.unit(), "v^n=" + to_string(vn));

  Vector sv = h.apply_antipode(v);
  bool five = sv == *vinv && h.multiply(sv, v) == h.unit();
  r.add("Prop2.5", five, "S(v)=" + to_string(sv) + " v^-1=" + to_string(*vinv));

  bool v_is_one = v == h.unit();
  bool involutory = h.is_involutory();
  r.add("Prop2.6", v_is_one == involutory,
        std::string("v=1 is ") + (v_is_one ? "true" : "false") + ", S^2=id is " + (involutory ? "true" : "false"));
  return r;
}

} // namespace hopf_fusion
