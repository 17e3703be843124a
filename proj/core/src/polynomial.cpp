#include "hopf_fusion/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <random>

#include "hopf_fusion/errors.hpp"
#include "hopf_fusion/linalg.hpp"

namespace hopf_fusion {

Polynomial::Polynomial(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  normalize();
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero())
    coeffs_.pop_back();
}

Polynomial Polynomial::x(FieldPtr field) {
  std::vector<FieldElement> c{field->zero(), field->one()};
  return Polynomial(std::move(field), std::move(c));
}

Polynomial Polynomial::constant(FieldPtr field, FieldElement c) {
  return Polynomial(std::move(field), {c});
}

Polynomial Polynomial::linear(FieldPtr field, FieldElement root) {
  std::vector<FieldElement> c{-root, field->one()};
  return Polynomial(std::move(field), std::move(c));
}

FieldElement Polynomial::leading() const {
  return coeffs_.empty() ? field_->zero() : coeffs_.back();
}

FieldElement Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : field_->zero();
}

Polynomial Polynomial::monic() const {
  if (is_zero())
    return *this;
  return scaled(leading().inverse());
}

Polynomial Polynomial::derivative() const {
  std::vector<FieldElement> c;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    c.push_back(coeffs_[i] * field_->from_int(static_cast<long long>(i)));
  return Polynomial(field_, std::move(c));
}

FieldElement Polynomial::operator()(FieldElement x) const {
  FieldElement acc = field_->zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = acc * x + coeffs_[i];
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<FieldElement> c(std::max(coeffs_.size(), o.coeffs_.size()), field_->zero());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = coeff(i) + o.coeff(i);
  return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<FieldElement> c(std::max(coeffs_.size(), o.coeffs_.size()), field_->zero());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = coeff(i) - o.coeff(i);
  return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero())
    return Polynomial(field_);
  std::vector<FieldElement> c(coeffs_.size() + o.coeffs_.size() - 1, field_->zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::scaled(FieldElement s) const {
  std::vector<FieldElement> c = coeffs_;
  for (auto& x : c)
    x *= s;
  return Polynomial(field_, std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero())
    throw std::domain_error("polynomial division by zero");
  std::vector<FieldElement> rem = coeffs_;
  const std::size_t dd = d.coeffs_.size() - 1;
  if (rem.size() <= dd)
    return {Polynomial(field_), *this};
  std::vector<FieldElement> quot(rem.size() - dd, field_->zero());
  FieldElement inv_lead = d.leading().inverse();
  for (std::size_t i = rem.size(); i-- > dd;) {
    FieldElement f = rem[i] * inv_lead;
    if (f.is_zero())
      continue;
    quot[i - dd] = f;
    for (std::size_t j = 0; j <= dd; ++j)
      rem[i - dd + j] -= f * d.coeffs_[j];
  }
  rem.resize(dd);
  return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
}

std::string Polynomial::to_string() const {
  if (is_zero())
    return "0";
  std::string s;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero())
      continue;
    if (!s.empty())
      s += " + ";
    bool unit = coeffs_[i].is_one() && i > 0;
    if (!unit)
      s += coeffs_[i].code() < field_->characteristic() ? coeffs_[i].to_string()
                                                         : "(" + coeffs_[i].to_string() + ")";
    if (i > 0)
      s += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return s;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& mod) {
  Polynomial result = Polynomial::constant(mod.field(), mod.field()->one()) % mod;
  Polynomial b = base % mod;
  while (e) {
    if (e & 1)
      result = (result * b) % mod;
    e >>= 1;
    if (e)
      b = (b * b) % mod;
  }
  return result;
}

namespace {

using FactorList = std::vector<std::pair<Polynomial, int>>;

// p-th root of a polynomial whose derivative vanishes.
Polynomial pth_root(const Polynomial& f) {
  const Field& field = *f.field();
  const std::uint32_t p = field.characteristic();
  const long long frob_inv = static_cast<long long>(field.order() / p);
  std::vector<FieldElement> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p)
    c.push_back(f.coeffs()[i].pow(frob_inv));
  return Polynomial(f.field(), std::move(c));
}

void square_free(const Polynomial& f, int multiplier, FactorList& out) {
  Polynomial c = gcd(f, f.derivative());
  Polynomial w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    Polynomial y = gcd(w, c);
    Polynomial fac = (w / y).monic();
    if (fac.degree() > 0)
      out.emplace_back(fac, i * multiplier);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0)
    square_free(pth_root(c.monic()).monic(), multiplier * int(f.field()->characteristic()), out);
}

void distinct_degree(Polynomial g, FactorList& out) {
  const std::uint64_t q = g.field()->order();
  Polynomial x = Polynomial::x(g.field());
  Polynomial h = x % g;
  for (int d = 1; g.degree() >= 2 * d; ++d) {
    h = powmod(h, q, g);
    Polynomial t = gcd(h - x, g);
    if (t.degree() > 0) {
      out.emplace_back(t, d);
      g = (g / t).monic();
      h = h % g;
    }
  }
  if (g.degree() > 0)
    out.emplace_back(g, g.degree());
}

void equal_degree(const Polynomial& g, int d, std::mt19937_64& rng, std::vector<Polynomial>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const Field& field = *g.field();
  if (field.characteristic() == 2)
    throw InvalidInput("equal-degree factorization needs odd characteristic");
  const std::uint64_t q = field.order();
  std::uniform_int_distribution<std::uint32_t> pick(0, field.order() - 1);
  Polynomial one = Polynomial::constant(g.field(), field.one());
  for (;;) {
    std::vector<FieldElement> c(std::size_t(g.degree()));
    for (auto& x : c)
      x = field.element(pick(rng));
    Polynomial a(g.field(), std::move(c));
    if (a.degree() < 1)
      continue;
    // a^((q^d - 1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2)
    Polynomial t = a % g;
    Polynomial norm = t;
    for (int i = 1; i < d; ++i) {
      t = powmod(t, q, g);
      norm = (norm * t) % g;
    }
    Polynomial b = powmod(norm, (q - 1) / 2, g);
    Polynomial u = gcd(b - one, g);
    if (u.degree() > 0 && u.degree() < g.degree()) {
      equal_degree(u, d, rng, out);
      equal_degree((g / u).monic(), d, rng, out);
      return;
    }
  }
}

bool poly_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree())
    return a.degree() < b.degree();
  for (std::size_t i = a.coeffs().size(); i-- > 0;)
    if (a.coeffs()[i] != b.coeffs()[i])
      return a.coeffs()[i] < b.coeffs()[i];
  return false;
}

} // namespace

Factorization factor_poly(const Polynomial& f, std::uint64_t seed) {
  if (f.is_zero())
    throw InvalidInput("cannot factor the zero polynomial");
  Factorization result{f.leading(), {}};
  if (f.degree() == 0)
    return result;

  FactorList square_free_parts;
  square_free(f.monic(), 1, square_free_parts);

  std::mt19937_64 rng(seed);
  for (const auto& [part, mult] : square_free_parts) {
    FactorList by_degree;
    distinct_degree(part, by_degree);
    for (const auto& [g, d] : by_degree) {
      std::vector<Polynomial> irreducible;
      equal_degree(g, d, rng, irreducible);
      for (auto& h : irreducible)
        result.factors.emplace_back(std::move(h), mult);
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) {
              if (poly_less(a.first, b.first))
                return true;
              if (poly_less(b.first, a.first))
                return false;
              return a.second < b.second;
            });
  return result;
}

Polynomial minimal_polynomial(const Matrix& a) {
  assert(a.rows() == a.cols());
  const FieldPtr& field = a.field();
  const std::size_t n = a.rows();
  const std::size_t len = n * n;
  auto flatten = [&](const Matrix& m) {
    Vector v(len);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        v[i * n + j] = m(i, j);
    return v;
  };

  // Reduced Krylov vectors vec(A^j) with the combination that produced them.
  struct Row {
    std::size_t pivot;
    Vector vec;
    Vector combo;
  };
  std::vector<Row> rows;
  Matrix power = Matrix::identity(field, n);
  for (std::size_t j = 0; j <= n; ++j) {
    Vector v = flatten(power);
    Vector combo = unit_vector(*field, n + 1, j);
    for (const auto& r : rows) {
      FieldElement f = v[r.pivot];
      if (f.is_zero())
        continue;
      for (std::size_t t = 0; t < len; ++t)
        v[t] -= f * r.vec[t];
      for (std::size_t t = 0; t <= n; ++t)
        combo[t] -= f * r.combo[t];
    }
    std::size_t pivot = 0;
    while (pivot < len && v[pivot].is_zero())
      ++pivot;
    if (pivot == len) {
      combo.resize(j + 1);
      return Polynomial(field, std::move(combo));
    }
    FieldElement inv = v[pivot].inverse();
    for (auto& x : v)
      x *= inv;
    for (auto& x : combo)
      x *= inv;
    rows.push_back({pivot, std::move(v), std::move(combo)});
    power = power * a;
  }
  throw InternalInconsistency("minimal polynomial degree exceeds matrix size");
}

} // namespace hopf_fusion
