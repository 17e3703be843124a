#include "hopf_fusion/field.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "hopf_fusion/errors.hpp"

namespace hopf_fusion {

namespace {

// Dense polynomials over Z/p, lowest degree first. Only used to pick a
// modulus and to build the log tables, before any Field exists.
using IntPoly = std::vector<std::uint32_t>;

void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

IntPoly poly_mod(IntPoly a, const IntPoly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  // f is monic
  while (a.size() > df) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      std::uint64_t sub = lead * f[i] % p;
      a[shift + i] = std::uint32_t((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

IntPoly poly_mulmod(const IntPoly& a, const IntPoly& b, const IntPoly& f, std::uint32_t p) {
  if (a.empty() || b.empty())
    return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = std::uint32_t((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  return poly_mod(std::move(r), f, p);
}

IntPoly poly_powmod(IntPoly base, std::uint64_t e, const IntPoly& f, std::uint32_t p) {
  IntPoly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1)
      r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1)
      r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return std::uint32_t(r);
}

IntPoly poly_gcd(IntPoly a, IntPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic so poly_mod applies
    std::uint32_t li = inv_mod(b.back(), p);
    for (auto& c : b)
      c = std::uint32_t(std::uint64_t(c) * li % p);
    IntPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

// Rabin's irreducibility test for monic f of degree k over GF(p).
bool is_irreducible(const IntPoly& f, std::uint32_t p) {
  const unsigned k = unsigned(f.size() - 1);
  if (k == 1)
    return true;
  auto frobenius_power = [&](unsigned times) {
    IntPoly h{0, 1};
    for (unsigned i = 0; i < times; ++i)
      h = poly_powmod(h, p, f, p);
    return h;
  };
  IntPoly full = frobenius_power(k);
  IntPoly x = poly_mod(IntPoly{0, 1}, f, p);
  if (full != x)
    return false;
  for (std::uint64_t r : prime_factors(k)) {
    IntPoly h = frobenius_power(unsigned(k / r));
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    IntPoly g = poly_gcd(f, h, p);
    if (g.size() != 1)
      return false;
  }
  return true;
}

IntPoly digits_of(std::uint64_t code, std::uint32_t p, unsigned k) {
  IntPoly d(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = std::uint32_t(code % p);
    code /= p;
  }
  return d;
}

std::uint32_t code_of(const IntPoly& digits, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = digits.size(); i-- > 0;)
    code = code * p + digits[i];
  return std::uint32_t(code);
}

std::uint64_t checked_order(std::uint32_t p, unsigned k) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder)
      throw InvalidInput("field GF(" + std::to_string(p) + "^" + std::to_string(k) +
                         ") exceeds the supported size");
  }
  return q;
}

} // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

FieldPtr Field::construct(std::uint32_t p, unsigned k) {
  if (!is_prime(p))
    throw InvalidInput("characteristic " + std::to_string(p) + " is not prime");
  if (k == 0)
    throw InvalidInput("extension degree must be at least 1");
  const std::uint64_t q = checked_order(p, k);
  if (k == 1)
    return with_modulus(p, {0, 1});
  // candidates x^k + c_{k-1} x^{k-1} + ... + c_0 in increasing code order
  for (std::uint64_t code = 0; code < q; ++code) {
    IntPoly f = digits_of(code, p, k);
    f.push_back(1);
    if (f[0] == 0)
      continue;
    if (is_irreducible(f, p))
      return with_modulus(p, std::move(f));
  }
  throw InternalInconsistency("no irreducible polynomial found");
}

FieldPtr Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p))
    throw InvalidInput("characteristic " + std::to_string(p) + " is not prime");
  if (modulus.size() < 2 || modulus.back() != 1)
    throw InvalidInput("modulus must be monic of degree >= 1");
  for (auto c : modulus)
    if (c >= p)
      throw InvalidInput("modulus coefficient out of range");
  if (!is_irreducible(modulus, p))
    throw InvalidInput("modulus is reducible");
  checked_order(p, unsigned(modulus.size() - 1));
  return FieldPtr(new Field(p, std::move(modulus)));
}

Field::Field(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), k_(unsigned(modulus.size() - 1)), modulus_(std::move(modulus)) {
  q_ = std::uint32_t(checked_order(p_, k_));
  const std::uint32_t group = q_ - 1;
  const auto factors = prime_factors(group);

  std::uint32_t gen = 0;
  for (std::uint32_t c = 1; c < q_ && !gen; ++c) {
    IntPoly base = digits_of(c, p_, k_);
    bool ok = true;
    for (auto r : factors) {
      IntPoly t = poly_powmod(base, group / r, modulus_, p_);
      if (t.size() == 1 && t[0] == 1) {
        ok = false;
        break;
      }
    }
    if (ok)
      gen = c;
  }
  if (q_ == 2)
    gen = 1;
  assert(gen != 0);

  exp_.assign(2 * std::size_t(group), 0);
  log_.assign(q_, kNoLog);
  IntPoly g = digits_of(gen, p_, k_);
  IntPoly cur{1};
  for (std::uint32_t i = 0; i < group; ++i) {
    IntPoly d = cur;
    d.resize(k_, 0);
    std::uint32_t code = code_of(d, p_);
    exp_[i] = code;
    exp_[i + group] = code;
    log_[code] = i;
    cur = poly_mulmod(cur, g, modulus_, p_);
  }

  zech_.assign(group, kNoLog);
  for (std::uint32_t i = 0; i < group; ++i) {
    std::uint32_t code = exp_[i];
    std::uint32_t c0 = code % p_;
    std::uint32_t shifted = code - c0 + (c0 + 1) % p_;
    zech_[i] = shifted == 0 ? kNoLog : log_[shifted];
  }
}

FieldElement Field::element(std::uint32_t code) const {
  if (code >= q_)
    throw InvalidInput("field element code out of range");
  return {this, code};
}

FieldElement Field::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0)
    r += p_;
  return {this, std::uint32_t(r)};
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > k_)
    throw InvalidInput("too many coefficients for GF(" + std::to_string(p_) + "^" +
                       std::to_string(k_) + ")");
  IntPoly d(k_, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= p_)
      throw InvalidInput("coefficient " + std::to_string(coeffs[i]) + " out of range");
    d[i] = coeffs[i];
  }
  return {this, code_of(d, p_)};
}

std::uint32_t Field::log(FieldElement a) const {
  if (a.is_zero())
    throw InvalidInput("log of zero");
  return log_[a.code()];
}

std::uint32_t Field::prime_residue(FieldElement a) const {
  if (!in_prime_field(a))
    throw NonIntegralCoefficient("element " + a.to_string() + " is not in the prime field");
  return a.code();
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "p=" << p_ << " k=" << k_ << " modulus=";
  for (std::size_t i = 0; i < modulus_.size(); ++i)
    os << (i ? "," : "") << modulus_[i];
  return os.str();
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  if (a == 0)
    return b;
  if (b == 0)
    return a;
  const std::uint32_t group = q_ - 1;
  std::uint32_t la = log_[a], lb = log_[b];
  std::uint32_t d = lb >= la ? lb - la : lb + group - la;
  std::uint32_t z = zech_[d];
  if (z == kNoLog)
    return 0;
  return exp_[la + z];
}

std::uint32_t Field::neg(std::uint32_t a) const {
  if (a == 0 || p_ == 2)
    return a;
  // -1 = g^((q-1)/2) for odd q
  return exp_[log_[a] + (q_ - 1) / 2];
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0)
    return 0;
  return exp_[log_[a] + log_[b]];
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0)
    throw std::domain_error("division by zero in " + describe());
  std::uint32_t la = log_[a];
  return exp_[la == 0 ? 0 : (q_ - 1) - la];
}

// FieldElement

bool FieldElement::is_one() const { return code_ == 1; }

std::vector<std::uint32_t> FieldElement::coeffs() const {
  return digits_of(code_, field_->characteristic(), field_->degree());
}

std::string FieldElement::to_string() const {
  if (!field_)
    return "?";
  auto c = coeffs();
  std::size_t len = c.size();
  while (len > 1 && c[len - 1] == 0)
    --len;
  std::string s;
  for (std::size_t i = 0; i < len; ++i) {
    if (i)
      s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

FieldElement FieldElement::operator+(FieldElement o) const {
  assert(field_ && field_ == o.field_);
  return {field_, field_->add(code_, o.code_)};
}

FieldElement FieldElement::operator-(FieldElement o) const {
  assert(field_ && field_ == o.field_);
  return {field_, field_->add(code_, field_->neg(o.code_))};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(code_)}; }

FieldElement FieldElement::operator*(FieldElement o) const {
  assert(field_ && field_ == o.field_);
  return {field_, field_->mul(code_, o.code_)};
}

FieldElement FieldElement::operator/(FieldElement o) const {
  assert(field_ && field_ == o.field_);
  return {field_, field_->mul(code_, field_->inv(o.code_))};
}

FieldElement FieldElement::inverse() const { return {field_, field_->inv(code_)}; }

FieldElement FieldElement::pow(long long e) const {
  if (e < 0)
    return inverse().pow(-e);
  if (e == 0)
    return field_->one();
  if (code_ == 0)
    return *this;
  const std::uint64_t group = field_->order() - 1;
  std::uint64_t l = field_->log(*this);
  std::uint64_t r = (l * (std::uint64_t(e) % group)) % group;
  return field_->generator_power(r);
}

// Tonelli-Shanks in the cyclic group of order q-1.
std::optional<FieldElement> sqrt(FieldElement x) {
  const Field& f = *x.field();
  if (f.characteristic() == 2)
    throw InvalidInput("square roots are only supported in odd characteristic");
  if (x.is_zero())
    return x;
  const std::uint64_t q = f.order();
  if (!x.pow(static_cast<long long>((q - 1) / 2)).is_one())
    return std::nullopt;

  FieldElement y;
  if (q % 4 == 3) {
    y = x.pow(static_cast<long long>((q + 1) / 4));
  } else {
    std::uint64_t t = q - 1;
    unsigned s = 0;
    while (t % 2 == 0) {
      t /= 2;
      ++s;
    }
    FieldElement z;
    for (std::uint32_t c = 2; c < q; ++c) {
      FieldElement cand = f.element(c);
      if (!cand.pow(static_cast<long long>((q - 1) / 2)).is_one()) {
        z = cand;
        break;
      }
    }
    unsigned m = s;
    FieldElement c = z.pow(static_cast<long long>(t));
    FieldElement r = x.pow(static_cast<long long>(t));
    y = x.pow(static_cast<long long>((t + 1) / 2));
    while (!r.is_one()) {
      unsigned i = 0;
      FieldElement rr = r;
      while (!rr.is_one()) {
        rr = rr * rr;
        ++i;
      }
      FieldElement b = c;
      for (unsigned j = 0; j + 1 < m - i; ++j)
        b = b * b;
      m = i;
      c = b * b;
      r = r * c;
      y = y * b;
    }
  }
  FieldElement other = -y;
  return other < y ? other : y;
}

FieldElement primitive_root_of_unity(const Field& field, std::uint64_t n) {
  const std::uint64_t group = field.order() - 1;
  if (n == 0 || group % n != 0)
    throw InvalidInput("no element of order " + std::to_string(n) + " in " + field.describe());
  return field.generator().pow(static_cast<long long>(group / n));
}

FieldEmbedding::FieldEmbedding(FieldPtr source, FieldPtr target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_->characteristic() != target_->characteristic() ||
      target_->degree() % source_->degree() != 0)
    throw InvalidInput("no embedding from " + source_->describe() + " into " +
                       target_->describe());
  const auto& mod = source_->modulus();
  auto eval = [&](FieldElement r) {
    FieldElement acc = target_->zero();
    for (std::size_t i = mod.size(); i-- > 0;)
      acc = acc * r + target_->from_int(mod[i]);
    return acc;
  };
  FieldElement root;
  bool found = false;
  for (std::uint32_t c = 0; c < target_->order() && !found; ++c) {
    FieldElement r = target_->element(c);
    if (eval(r).is_zero()) {
      root = r;
      found = true;
    }
  }
  if (!found)
    throw InternalInconsistency("source modulus has no root in the target field");

  image_.resize(source_->order());
  const unsigned k = source_->degree();
  for (std::uint32_t code = 0; code < source_->order(); ++code) {
    IntPoly d = digits_of(code, source_->characteristic(), k);
    FieldElement acc = target_->zero();
    for (std::size_t i = d.size(); i-- > 0;)
      acc = acc * root + target_->from_int(d[i]);
    image_[code] = acc.code();
  }
}

FieldElement FieldEmbedding::operator()(FieldElement x) const {
  assert(x.field() == source_.get());
  return {target_.get(), image_[x.code()]};
}

std::pair<FieldPtr, FieldEmbedding> extend_field(const FieldPtr& field, unsigned factor) {
  if (factor < 2)
    throw InvalidInput("extension factor must be at least 2");
  FieldPtr big = Field::construct(field->characteristic(), field->degree() * factor);
  FieldEmbedding emb(field, big);
  return {big, std::move(emb)};
}

unsigned root_of_unity_degree(std::uint32_t p, std::uint64_t n) {
  if (n == 0 || n % p == 0)
    throw InvalidInput("no primitive " + std::to_string(n) + "-th root of unity in characteristic " +
                       std::to_string(p));
  std::uint64_t acc = p % n;
  unsigned m = 1;
  while (acc != 1 % n) {
    acc = acc * p % n;
    ++m;
  }
  return m;
}

} // namespace hopf_fusion
