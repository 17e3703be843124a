#include "hopf_fusion/hopf.hpp"

#include <cassert>
#include <map>
#include <optional>
#include <sstream>

#include "hopf_fusion/errors.hpp"

namespace hopf_fusion {

namespace {

std::string witness(std::initializer_list<std::pair<const char*, int>> items) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, value] : items) {
    os << (first ? "" : " ") << name << '=' << value;
    first = false;
  }
  return os.str();
}

// Sparse accumulator over a dense index range, reset in O(touched).
class Accumulator {
public:
  Accumulator(const Field& field, std::size_t size) : zero_(field.zero()), values_(size, zero_) {}

  void add(std::size_t i, FieldElement v) {
    if (v.is_zero())
      return;
    if (values_[i].is_zero() && !seen(i))
      touched_.push_back(i);
    values_[i] += v;
  }

  // First index holding a nonzero value, or npos.
  std::size_t first_nonzero() const {
    std::size_t best = npos;
    for (auto i : touched_)
      if (!values_[i].is_zero() && i < best)
        best = i;
    return best;
  }

  void clear() {
    for (auto i : touched_)
      values_[i] = zero_;
    touched_.clear();
  }

  static constexpr std::size_t npos = std::size_t(-1);

private:
  bool seen(std::size_t i) const {
    for (auto t : touched_)
      if (t == i)
        return true;
    return false;
  }

  FieldElement zero_;
  std::vector<FieldElement> values_;
  std::vector<std::size_t> touched_;
};

using SparseTensor = std::map<std::size_t, FieldElement>;

void accumulate(SparseTensor& t, std::size_t key, FieldElement v) {
  if (v.is_zero())
    return;
  auto [it, inserted] = t.emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero())
      t.erase(it);
  }
}

} // namespace

HopfAlgebra::HopfAlgebra(const HopfData& data)
    : field_(data.field), dim_(data.dim), antipode_(data.antipode) {
  if (!field_)
    throw InvalidInput("Hopf data has no field");
  if (dim_ <= 0)
    throw InvalidInput("Hopf algebra dimension must be positive");
  const std::size_t n = std::size_t(dim_);
  if (data.unit.size() != n || data.counit.size() != n)
    throw InvalidInput("unit/counit vectors have the wrong length");
  if (antipode_.rows() != n || antipode_.cols() != n)
    throw InvalidInput("antipode matrix has the wrong shape");
  auto in_range = [&](int i) { return i >= 0 && i < dim_; };

  std::vector<std::map<int, FieldElement>> mult(n * n);
  for (const auto& e : data.mult) {
    if (!in_range(e.a) || !in_range(e.b) || !in_range(e.c))
      throw InvalidInput("multiplication index out of range");
    auto& slot = mult[std::size_t(e.a * dim_ + e.b)];
    auto [it, inserted] = slot.emplace(e.c, e.coeff);
    if (!inserted)
      it->second += e.coeff;
  }
  mult_.resize(n * n);
  for (std::size_t i = 0; i < n * n; ++i)
    for (const auto& [c, v] : mult[i])
      if (!v.is_zero())
        mult_[i].push_back({c, v});

  std::vector<std::map<std::pair<int, int>, FieldElement>> comult(n);
  for (const auto& e : data.comult) {
    if (!in_range(e.a) || !in_range(e.b) || !in_range(e.c))
      throw InvalidInput("comultiplication index out of range");
    auto& slot = comult[std::size_t(e.a)];
    auto [it, inserted] = slot.emplace(std::make_pair(e.b, e.c), e.coeff);
    if (!inserted)
      it->second += e.coeff;
  }
  comult_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (const auto& [bc, v] : comult[a])
      if (!v.is_zero())
        comult_[a].push_back({bc.first, bc.second, v});

  unit_ = data.unit;
  counit_ = data.counit;
}

HopfData HopfAlgebra::data() const {
  HopfData d;
  d.field = field_;
  d.dim = dim_;
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      for (const auto& t : mult_terms(a, b))
        d.mult.push_back({a, b, t.index, t.coeff});
  for (int a = 0; a < dim_; ++a)
    for (const auto& t : comult_terms(a))
      d.comult.push_back({a, t.left, t.right, t.coeff});
  d.unit = unit_;
  d.counit = counit_;
  d.antipode = antipode_;
  return d;
}

Vector HopfAlgebra::multiply(const Vector& x, const Vector& y) const {
  Vector r = zero();
  for (int a = 0; a < dim_; ++a) {
    if (x[std::size_t(a)].is_zero())
      continue;
    for (int b = 0; b < dim_; ++b) {
      FieldElement xy = x[std::size_t(a)] * y[std::size_t(b)];
      if (xy.is_zero())
        continue;
      for (const auto& t : mult_terms(a, b))
        r[std::size_t(t.index)] += xy * t.coeff;
    }
  }
  return r;
}

Tensor2 HopfAlgebra::comultiply(const Vector& x) const {
  Tensor2 r(std::size_t(dim_ * dim_), field_->zero());
  for (int a = 0; a < dim_; ++a) {
    if (x[std::size_t(a)].is_zero())
      continue;
    for (const auto& t : comult_terms(a))
      r[std::size_t(t.left * dim_ + t.right)] += x[std::size_t(a)] * t.coeff;
  }
  return r;
}

FieldElement HopfAlgebra::counit(const Vector& x) const { return dot(counit_, x); }

Matrix HopfAlgebra::antipode_power(int power) const {
  if (power >= 0)
    return antipode_.pow(unsigned(power));
  auto inv = inverse(antipode_);
  if (!inv)
    throw InvalidHopf("antipode is not invertible");
  return inv->pow(unsigned(-power));
}

Vector HopfAlgebra::apply_antipode(const Vector& x, int power) const {
  if (power == 0)
    return x;
  return antipode_power(power) * x;
}

Matrix HopfAlgebra::left_regular(const Vector& x) const {
  Matrix m(field_, std::size_t(dim_), std::size_t(dim_));
  for (int b = 0; b < dim_; ++b)
    m.set_column(std::size_t(b), multiply(x, basis(b)));
  return m;
}

Matrix HopfAlgebra::right_regular(const Vector& x) const {
  Matrix m(field_, std::size_t(dim_), std::size_t(dim_));
  for (int b = 0; b < dim_; ++b)
    m.set_column(std::size_t(b), multiply(basis(b), x));
  return m;
}

FieldElement HopfAlgebra::regular_trace(const Vector& x) const {
  FieldElement t = field_->zero();
  for (int a = 0; a < dim_; ++a) {
    if (x[std::size_t(a)].is_zero())
      continue;
    FieldElement diag = field_->zero();
    for (int b = 0; b < dim_; ++b)
      for (const auto& term : mult_terms(a, b))
        if (term.index == b)
          diag += term.coeff;
    t += x[std::size_t(a)] * diag;
  }
  return t;
}

std::optional<Vector> HopfAlgebra::invert(const Vector& x) const {
  auto y = solve(left_regular(x), unit_);
  if (!y)
    return std::nullopt;
  if (multiply(*y, x) != unit_)
    return std::nullopt;
  return y;
}

Vector HopfAlgebra::power(const Vector& x, long long e) const {
  Vector base = x;
  if (e < 0) {
    auto inv = invert(x);
    if (!inv)
      throw InvalidInput("element is not invertible");
    base = *inv;
    e = -e;
  }
  Vector result = unit_;
  while (e) {
    if (e & 1)
      result = multiply(result, base);
    e >>= 1;
    if (e)
      base = multiply(base, base);
  }
  return result;
}

Tensor2 HopfAlgebra::tensor_multiply(const Tensor2& x, const Tensor2& y) const {
  const std::size_t n = std::size_t(dim_);
  Tensor2 r(n * n, field_->zero());
  for (std::size_t i = 0; i < n * n; ++i) {
    if (x[i].is_zero())
      continue;
    int a = int(i / n), b = int(i % n);
    for (std::size_t j = 0; j < n * n; ++j) {
      if (y[j].is_zero())
        continue;
      int c = int(j / n), d = int(j % n);
      FieldElement coeff = x[i] * y[j];
      for (const auto& left : mult_terms(a, c))
        for (const auto& right : mult_terms(b, d))
          r[std::size_t(left.index) * n + std::size_t(right.index)] += coeff * left.coeff * right.coeff;
    }
  }
  return r;
}

Tensor2 HopfAlgebra::tensor(const Vector& x, const Vector& y) const {
  const std::size_t n = std::size_t(dim_);
  Tensor2 r(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r[i * n + j] = x[i] * y[j];
  return r;
}

bool HopfAlgebra::is_commutative() const {
  for (int a = 0; a < dim_; ++a)
    for (int b = a + 1; b < dim_; ++b)
      if (multiply(basis(a), basis(b)) != multiply(basis(b), basis(a)))
        return false;
  return true;
}

bool HopfAlgebra::is_cocommutative() const {
  const std::size_t n = std::size_t(dim_);
  for (int a = 0; a < dim_; ++a) {
    Tensor2 t = comultiply(basis(a));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (t[i * n + j] != t[j * n + i])
          return false;
  }
  return true;
}

bool HopfAlgebra::is_involutory() const {
  return antipode_ * antipode_ == Matrix::identity(field_, std::size_t(dim_));
}

HopfAlgebra HopfAlgebra::change_field(const FieldEmbedding& emb) const {
  if (emb.source() != field_)
    throw InvalidInput("embedding does not start at this algebra's field");
  HopfData d = data();
  d.field = emb.target();
  for (auto& e : d.mult)
    e.coeff = emb(e.coeff);
  for (auto& e : d.comult)
    e.coeff = emb(e.coeff);
  for (auto& x : d.unit)
    x = emb(x);
  for (auto& x : d.counit)
    x = emb(x);
  Matrix s(d.field, std::size_t(dim_), std::size_t(dim_));
  for (std::size_t i = 0; i < std::size_t(dim_); ++i)
    for (std::size_t j = 0; j < std::size_t(dim_); ++j)
      s(i, j) = emb(antipode_(i, j));
  d.antipode = std::move(s);
  return HopfAlgebra(d);
}

bool ValidationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed)
      return false;
  return true;
}

std::string ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed)
      return c.name + ": " + c.witness;
  return {};
}

ValidationReport validate_hopf(const HopfAlgebra& h) {
  const Field& f = *h.field();
  const int n = h.dim();
  const std::size_t un = std::size_t(n);
  ValidationReport report;
  auto record = [&](const char* name, std::optional<std::string> fail) {
    report.checks.push_back({name, !fail.has_value(), fail.value_or("")});
  };

  // associativity: (e_a e_b) e_c = e_a (e_b e_c)
  {
    std::optional<std::string> fail;
    Accumulator acc(f, un);
    for (int a = 0; a < n && !fail; ++a)
      for (int b = 0; b < n && !fail; ++b)
        for (int c = 0; c < n && !fail; ++c) {
          for (const auto& t : h.mult_terms(a, b))
            for (const auto& s : h.mult_terms(t.index, c))
              acc.add(std::size_t(s.index), t.coeff * s.coeff);
          for (const auto& t : h.mult_terms(b, c))
            for (const auto& s : h.mult_terms(a, t.index))
              acc.add(std::size_t(s.index), -(t.coeff * s.coeff));
          std::size_t bad = acc.first_nonzero();
          if (bad != Accumulator::npos)
            fail = witness({{"a", a}, {"b", b}, {"c", c}, {"coord", int(bad)}});
          acc.clear();
        }
    record("associativity", fail);
  }

  // unit: 1 e_a = e_a = e_a 1
  {
    std::optional<std::string> fail;
    for (int a = 0; a < n && !fail; ++a) {
      Vector ea = h.basis(a);
      if (h.multiply(h.unit(), ea) != ea)
        fail = witness({{"a", a}, {"side", 0}});
      else if (h.multiply(ea, h.unit()) != ea)
        fail = witness({{"a", a}, {"side", 1}});
    }
    record("unit", fail);
  }

  // coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta
  {
    std::optional<std::string> fail;
    for (int a = 0; a < n && !fail; ++a) {
      SparseTensor diff;
      for (const auto& t : h.comult_terms(a)) {
        for (const auto& s : h.comult_terms(t.left))
          accumulate(diff, (std::size_t(s.left) * un + std::size_t(s.right)) * un + std::size_t(t.right),
                     t.coeff * s.coeff);
        for (const auto& s : h.comult_terms(t.right))
          accumulate(diff, (std::size_t(t.left) * un + std::size_t(s.left)) * un + std::size_t(s.right),
                     -(t.coeff * s.coeff));
      }
      if (!diff.empty()) {
        std::size_t key = diff.begin()->first;
        fail = witness({{"a", a},
                        {"b", int(key / (un * un))},
                        {"c", int(key / un % un)},
                        {"d", int(key % un)}});
      }
    }
    record("coassociativity", fail);
  }

  // counit: (eps (x) id) Delta(e_a) = e_a = (id (x) eps) Delta(e_a)
  {
    std::optional<std::string> fail;
    for (int a = 0; a < n && !fail; ++a) {
      Vector left = h.zero(), right = h.zero();
      for (const auto& t : h.comult_terms(a)) {
        left[std::size_t(t.right)] += t.coeff * h.counit_vector()[std::size_t(t.left)];
        right[std::size_t(t.left)] += t.coeff * h.counit_vector()[std::size_t(t.right)];
      }
      Vector ea = h.basis(a);
      if (left != ea)
        fail = witness({{"a", a}, {"side", 0}});
      else if (right != ea)
        fail = witness({{"a", a}, {"side", 1}});
    }
    record("counit", fail);
  }

  // bialgebra: Delta(e_a e_b) = Delta(e_a) Delta(e_b), eps multiplicative,
  // Delta(1) = 1 (x) 1, eps(1) = 1
  {
    std::optional<std::string> fail;
    for (int a = 0; a < n && !fail; ++a)
      for (int b = 0; b < n && !fail; ++b) {
        SparseTensor diff;
        for (const auto& t : h.mult_terms(a, b))
          for (const auto& s : h.comult_terms(t.index))
            accumulate(diff, std::size_t(s.left) * un + std::size_t(s.right), t.coeff * s.coeff);
        for (const auto& x : h.comult_terms(a))
          for (const auto& y : h.comult_terms(b)) {
            FieldElement c = x.coeff * y.coeff;
            for (const auto& l : h.mult_terms(x.left, y.left))
              for (const auto& r : h.mult_terms(x.right, y.right))
                accumulate(diff, std::size_t(l.index) * un + std::size_t(r.index),
                           -(c * l.coeff * r.coeff));
          }
        if (!diff.empty()) {
          std::size_t key = diff.begin()->first;
          fail = witness({{"a", a}, {"b", b}, {"left", int(key / un)}, {"right", int(key % un)}});
        }
      }
    record("comultiplication_multiplicative", fail);
  }
  {
    std::optional<std::string> fail;
    for (int a = 0; a < n && !fail; ++a)
      for (int b = 0; b < n && !fail; ++b)
        if (h.counit(h.multiply(h.basis(a), h.basis(b))) !=
            h.counit_vector()[std::size_t(a)] * h.counit_vector()[std::size_t(b)])
          fail = witness({{"a", a}, {"b", b}});
    record("counit_multiplicative", fail);
  }
  {
    std::optional<std::string> fail;
    Tensor2 d1 = h.comultiply(h.unit());
    Tensor2 expected = h.tensor(h.unit(), h.unit());
    for (std::size_t i = 0; i < d1.size() && !fail; ++i)
      if (d1[i] != expected[i])
        fail = witness({{"left", int(i / un)}, {"right", int(i % un)}});
    if (!fail && !h.counit(h.unit()).is_one())
      fail = std::string("counit(1) != 1");
    record("unit_coalgebra_map", fail);
  }

  // antipode: S(x1) x2 = eps(x) 1 = x1 S(x2)
  {
    std::optional<std::string> fail;
    const Matrix& s = h.antipode();
    for (int a = 0; a < n && !fail; ++a) {
      Vector left = h.zero(), right = h.zero();
      for (const auto& t : h.comult_terms(a)) {
        Vector s_left = s.column(std::size_t(t.left));
        Vector s_right = s.column(std::size_t(t.right));
        Vector l = h.multiply(s_left, h.basis(t.right));
        Vector r = h.multiply(h.basis(t.left), s_right);
        for (std::size_t i = 0; i < un; ++i) {
          left[i] += t.coeff * l[i];
          right[i] += t.coeff * r[i];
        }
      }
      Vector expected = scale(h.unit(), h.counit_vector()[std::size_t(a)]);
      if (left != expected)
        fail = witness({{"a", a}, {"side", 0}});
      else if (right != expected)
        fail = witness({{"a", a}, {"side", 1}});
    }
    record("antipode", fail);
  }
  return report;
}

HopfAlgebra group_algebra(const std::vector<std::vector<int>>& cayley, const FieldPtr& field) {
  const int n = int(cayley.size());
  if (n == 0)
    throw NotAGroup("empty Cayley table");
  for (int a = 0; a < n; ++a) {
    if (int(cayley[std::size_t(a)].size()) != n)
      throw NotAGroup("Cayley table row " + std::to_string(a) + " has wrong length");
    for (int v : cayley[std::size_t(a)])
      if (v < 0 || v >= n)
        throw NotAGroup("Cayley table entry out of range in row " + std::to_string(a));
  }
  auto mul = [&](int a, int b) { return cayley[std::size_t(a)][std::size_t(b)]; };

  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = mul(e, a) == a && mul(a, e) == a;
    if (ok)
      identity = e;
  }
  if (identity < 0)
    throw NotAGroup("no identity element");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw NotAGroup("not associative: " + witness({{"a", a}, {"b", b}, {"c", c}}));
  std::vector<int> inv(std::size_t(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == identity && mul(b, a) == identity)
        inv[std::size_t(a)] = b;
    if (inv[std::size_t(a)] < 0)
      throw NotAGroup("element " + std::to_string(a) + " has no inverse");
  }

  HopfData d;
  d.field = field;
  d.dim = n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      d.mult.push_back({a, b, mul(a, b), field->one()});
  for (int a = 0; a < n; ++a)
    d.comult.push_back({a, a, a, field->one()});
  d.unit = unit_vector(*field, std::size_t(n), std::size_t(identity));
  d.counit = Vector(std::size_t(n), field->one());
  d.antipode = Matrix(field, std::size_t(n), std::size_t(n));
  for (int a = 0; a < n; ++a)
    d.antipode(std::size_t(inv[std::size_t(a)]), std::size_t(a)) = field->one();
  return HopfAlgebra(d);
}

HopfAlgebra dual_hopf(const HopfAlgebra& h) {
  HopfData d;
  d.field = h.field();
  d.dim = h.dim();
  for (int a = 0; a < h.dim(); ++a)
    for (const auto& t : h.comult_terms(a))
      d.mult.push_back({t.left, t.right, a, t.coeff});
  for (int a = 0; a < h.dim(); ++a)
    for (int b = 0; b < h.dim(); ++b)
      for (const auto& t : h.mult_terms(a, b))
        d.comult.push_back({t.index, a, b, t.coeff});
  d.unit = h.counit_vector();
  d.counit = h.unit();
  d.antipode = h.antipode().transposed();
  return HopfAlgebra(d);
}

HopfAlgebra tensor_product(const HopfAlgebra& h, const HopfAlgebra& k) {
  if (h.field() != k.field())
    throw InvalidInput("tensor product of algebras over different fields");
  const int m = k.dim();
  auto idx = [m](int a, int b) { return a * m + b; };
  HopfData d;
  d.field = h.field();
  d.dim = h.dim() * m;
  for (int a = 0; a < h.dim(); ++a)
    for (int a2 = 0; a2 < h.dim(); ++a2)
      for (const auto& x : h.mult_terms(a, a2))
        for (int b = 0; b < m; ++b)
          for (int b2 = 0; b2 < m; ++b2)
            for (const auto& y : k.mult_terms(b, b2))
              d.mult.push_back({idx(a, b), idx(a2, b2), idx(x.index, y.index), x.coeff * y.coeff});
  for (int a = 0; a < h.dim(); ++a)
    for (const auto& x : h.comult_terms(a))
      for (int b = 0; b < m; ++b)
        for (const auto& y : k.comult_terms(b))
          d.comult.push_back({idx(a, b), idx(x.left, y.left), idx(x.right, y.right), x.coeff * y.coeff});
  const std::size_t n = std::size_t(d.dim);
  d.unit = zero_vector(*d.field, n);
  d.counit = zero_vector(*d.field, n);
  d.antipode = Matrix(d.field, n, n);
  for (int a = 0; a < h.dim(); ++a)
    for (int b = 0; b < m; ++b) {
      const std::size_t i = std::size_t(idx(a, b));
      d.unit[i] = h.unit()[std::size_t(a)] * k.unit()[std::size_t(b)];
      d.counit[i] = h.counit_vector()[std::size_t(a)] * k.counit_vector()[std::size_t(b)];
      for (int a2 = 0; a2 < h.dim(); ++a2)
        for (int b2 = 0; b2 < m; ++b2)
          d.antipode(std::size_t(idx(a2, b2)), i) =
              h.antipode()(std::size_t(a2), std::size_t(a)) * k.antipode()(std::size_t(b2), std::size_t(b));
    }
  return HopfAlgebra(d);
}

} // namespace hopf_fusion
