#include "hopf_fusion/smash.hpp"

#include "hopf_fusion/errors.hpp"

namespace hopf_fusion {

namespace {

std::size_t sz(int i) { return std::size_t(i); }

// b = c a for some scalar c, with a and b nonzero.
bool proportional(const Vector& a, const Vector& b) {
  std::size_t k = 0;
  while (k < a.size() && a[k].is_zero())
    ++k;
  if (k == a.size() || b[k].is_zero())
    return false;
  FieldElement ratio = b[k] / a[k];
  return scale(a, ratio) == b;
}

} // namespace

SmashAlgebra::SmashAlgebra(HopfAlgebra base, int n, HopfAlgebra product, std::vector<Matrix> antipode_powers)
    : base_(std::move(base)), n_(n), product_(std::move(product)), antipode_powers_(std::move(antipode_powers)) {}

Vector SmashAlgebra::embed(const Vector& x, int i) const {
  Vector r = product_.zero();
  for (int a = 0; a < base_.dim(); ++a)
    r[sz(index(a, i))] = x[sz(a)];
  return r;
}

Vector SmashAlgebra::group_element(int i) const { return embed(base_.unit(), ((i % n_) + n_) % n_); }

SmashAlgebra build_smash(const HopfAlgebra& h) {
  const FieldPtr& f = h.field();
  const int d = h.dim();
  const int n = 2 * d;

  std::vector<Matrix> powers{Matrix::identity(f, sz(d))};
  for (int k = 1; k <= 2 * n; ++k)
    powers.push_back(powers.back() * h.antipode());
  if (!(powers[sz(2 * n)] == powers[0]))
    throw InvalidHopf("S^" + std::to_string(2 * n) + " is not the identity");

  auto at = [n](int a, int i) { return a * n + i; };
  HopfData data;
  data.field = f;
  data.dim = d * n;

  for (int i = 0; i < n; ++i) {
    const Matrix& s2i = powers[sz(2 * i)];
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c) {
          FieldElement coeff = s2i(sz(c), sz(b));
          if (coeff.is_zero())
            continue;
          for (const auto& t : h.mult_terms(a, c))
            for (int j = 0; j < n; ++j)
              data.mult.push_back({at(a, i), at(b, j), at(t.index, (i + j) % n), coeff * t.coeff});
        }
  }

  for (int a = 0; a < d; ++a)
    for (const auto& t : h.comult_terms(a))
      for (int i = 0; i < n; ++i)
        data.comult.push_back({at(a, i), at(t.left, i), at(t.right, i), t.coeff});

  data.unit = zero_vector(*f, sz(d * n));
  data.counit = zero_vector(*f, sz(d * n));
  for (int a = 0; a < d; ++a) {
    data.unit[sz(at(a, 0))] = h.unit()[sz(a)];
    for (int i = 0; i < n; ++i)
      data.counit[sz(at(a, i))] = h.counit_vector()[sz(a)];
  }

  // S(h # g^i) = S^(1-2i)(h) # g^(-i), and S^(1-2i) = S^(2n+1-2i)
  data.antipode = Matrix(f, sz(d * n), sz(d * n));
  for (int i = 0; i < n; ++i) {
    const Matrix& s = powers[sz((2 * n + 1 - 2 * i) % (2 * n))];
    for (int a = 0; a < d; ++a)
      for (int c = 0; c < d; ++c)
        data.antipode(sz(at(c, (n - i) % n)), sz(at(a, i))) = s(sz(c), sz(a));
  }

  return SmashAlgebra(h, n, HopfAlgebra(data), std::move(powers));
}

Report check_smash(const SmashAlgebra& sm) {
  const HopfAlgebra& h = sm.base();
  const HopfAlgebra& p = sm.product();
  Report r;

  std::string fail;
  ValidationReport vr = validate_hopf(p);
  if (!vr.all_passed())
    fail = vr.first_failure();
  for (int a = 0; a < h.dim() && fail.empty(); ++a)
    for (int i = 0; i < sm.n() && fail.empty(); ++i)
      if (p.counit_vector()[sz(sm.index(a, i))] != h.counit_vector()[sz(a)])
        fail = "counit a=" + std::to_string(a) + " i=" + std::to_string(i);
  for (int a = 0; a < h.dim() && fail.empty(); ++a) {
    Vector ea = h.basis(a);
    for (int b = 0; b < h.dim() && fail.empty(); ++b)
      if (p.multiply(sm.embed(ea), sm.embed(h.basis(b))) != sm.embed(h.multiply(ea, h.basis(b))))
        fail = "embedding not multiplicative a=" + std::to_string(a) + " b=" + std::to_string(b);
    if (!fail.empty())
      break;
    Tensor2 dh = h.comultiply(ea);
    Tensor2 expected(sz(p.dim() * p.dim()), p.field()->zero());
    for (int b = 0; b < h.dim(); ++b)
      for (int c = 0; c < h.dim(); ++c)
        expected[sz(sm.index(b, 0) * p.dim() + sm.index(c, 0))] = dh[sz(b * h.dim() + c)];
    if (p.comultiply(sm.embed(ea)) != expected)
      fail = "embedding not comultiplicative a=" + std::to_string(a);
    else if (p.apply_antipode(sm.embed(ea)) != sm.embed(h.apply_antipode(ea)))
      fail = "embedding does not commute with S a=" + std::to_string(a);
  }
  if (fail.empty() && p.power(sm.group_element(1), sm.n()) != p.unit())
    fail = "(1#g)^n != 1";
  r.add("Smash.axioms", fail.empty(), fail);

  std::vector<std::string> fail2;
  Vector g = sm.group_element(1);
  Vector ginv = sm.group_element(sm.n() - 1);
  for (int x = 0; x < p.dim() && fail2.empty(); ++x) {
    Vector lhs = p.apply_antipode(p.basis(x), 2);
    Vector rhs = p.multiply(p.multiply(g, p.basis(x)), ginv);
    if (lhs != rhs)
      fail2.push_back("x=" + std::to_string(x));
  }
  r.add_first_failure("Smash.antipode_square", fail2);
  return r;
}

IntegralPair smash_integral(const SmashAlgebra& sm, const IntegralPair& base) {
  const FieldPtr& f = sm.product().field();
  const int n = sm.n();
  FieldElement inv_n = f->from_int(n).inverse();
  FieldElement fn = f->from_int(n);
  IntegralPair out;
  out.convention = base.convention;
  out.left = sm.product().zero();
  out.right = sm.product().zero();
  for (int a = 0; a < sm.base().dim(); ++a) {
    for (int i = 0; i < n; ++i)
      out.left[sz(sm.index(a, i))] = base.left[sz(a)] * inv_n;
    out.right[sz(sm.index(a, 0))] = base.right[sz(a)] * fn;
  }
  out.counit = sm.product().counit(out.left);
  return out;
}

Report check_smash_integral(const SmashAlgebra& sm, const IntegralPair& base, const IntegralPair& closed) {
  Report r;
  std::string fail;
  try {
    IntegralPair solved = compute_integrals(sm.product(), base.convention);
    if (!proportional(closed.left, solved.left))
      fail = "closed-form left integral is not in the solved integral space";
    else if (!proportional(closed.right, solved.right))
      fail = "closed-form right integral is not in the solved integral space";
  } catch (const Error& e) {
    fail = e.what();
  }
  if (fail.empty() && !evaluate(closed.right, closed.left).is_one())
    fail = "lambda(Lambda) = " + evaluate(closed.right, closed.left).to_string();
  if (fail.empty() && closed.counit != base.counit)
    fail = "eps(Lambda_smash) = " + closed.counit.to_string() + " eps(Lambda) = " + base.counit.to_string();
  if (fail.empty() && closed.counit.is_zero())
    fail = "eps(Lambda_smash) = 0";
  r.add("Smash.integral", fail.empty(), fail);
  return r;
}

Vector smash_u(const SmashAlgebra& sm, const IntegralPair& closed) { return compute_u(sm.product(), closed); }

Report check_smash_u(const SmashAlgebra& sm, const Vector& base_u, const Vector& u) {
  Report r;
  Vector expected = sm.embed(base_u);
  r.add("Smash.u", u == expected, "u_smash=" + to_string(u) + " u#1=" + to_string(expected));
  return r;
}

} // namespace hopf_fusion
