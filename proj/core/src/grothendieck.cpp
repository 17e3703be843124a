#include "hopf_fusion/grothendieck.hpp"

#include <cstdlib>
#include <sstream>

#include "hopf_fusion/errors.hpp"

namespace hopf_fusion {

namespace {

std::size_t sz(int i) { return std::size_t(i); }

std::string triple(int a, int b, int c) {
  return "a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" + std::to_string(c);
}

// Sparse rows of a fusion table: for (a, b) the nonzero (c, value) pairs.
struct SparseTable {
  int size;
  std::vector<std::vector<std::pair<int, FieldElement>>> rows;
};

SparseTable sparse(const FusionTable& t, const Field& f) {
  SparseTable s{t.size(), {}};
  s.rows.resize(sz(t.size() * t.size()));
  for (int a = 0; a < t.size(); ++a)
    for (int b = 0; b < t.size(); ++b)
      for (int c = 0; c < t.size(); ++c)
        if (t(a, b, c) != 0)
          s.rows[sz(a * t.size() + b)].emplace_back(c, f.from_int(t(a, b, c)));
  return s;
}

Vector multiply_sparse(const SparseTable& s, const Vector& x, const Vector& y, const Field& f) {
  Vector r = zero_vector(f, sz(s.size));
  for (int a = 0; a < s.size; ++a) {
    if (x[sz(a)].is_zero())
      continue;
    for (int b = 0; b < s.size; ++b) {
      FieldElement xy = x[sz(a)] * y[sz(b)];
      if (xy.is_zero())
        continue;
      for (const auto& [c, v] : s.rows[sz(a * s.size + b)])
        r[sz(c)] += xy * v;
    }
  }
  return r;
}

// Checks that phi(chi_i) * phi(chi_j) = sum_k T_ij^k phi(chi_k) in the
// algebra given by s, and that the images are linearly independent.
std::string homomorphism_witness(const SparseTable& s, const FusionTable& t, const std::vector<Vector>& images,
                                 const FieldPtr& f) {
  const int m = t.size();
  if (rank(Matrix::from_rows(f, sz(s.size), images)) != sz(m))
    return "images are linearly dependent";
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Vector lhs = multiply_sparse(s, images[sz(i)], images[sz(j)], *f);
      Vector rhs = zero_vector(*f, sz(s.size));
      for (int k = 0; k < m; ++k)
        if (t(i, j, k) != 0)
          rhs = add(rhs, scale(images[sz(k)], f->from_int(t(i, j, k))));
      if (lhs != rhs)
        return "i=" + std::to_string(i) + " j=" + std::to_string(j);
    }
  return {};
}

Vector unit_label(const Field& f, int size, int a) { return unit_vector(f, sz(size), sz(a)); }

// Non-owning handle; the field outlives every vector built over it.
FieldPtr borrow(const Field& f) { return FieldPtr(FieldPtr(), &f); }

} // namespace

FusionTable::FusionTable(std::vector<std::string> labels)
    : labels_(std::move(labels)), coeffs_(labels_.size() * labels_.size() * labels_.size(), 0) {}

std::string associativity_witness(const FusionTable& t) {
  const int r = t.size();
  std::vector<long long> lhs(sz(r)), rhs(sz(r));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (int e = 0; e < r; ++e) {
          long long ab = t(a, b, e);
          if (ab != 0)
            for (int d = 0; d < r; ++d)
              lhs[sz(d)] += ab * t(e, c, d);
          long long bc = t(b, c, e);
          if (bc != 0)
            for (int d = 0; d < r; ++d)
              rhs[sz(d)] += bc * t(a, e, d);
        }
        for (int d = 0; d < r; ++d)
          if (lhs[sz(d)] != rhs[sz(d)])
            return triple(a, b, c) + " d=" + std::to_string(d);
      }
  return {};
}

std::string unit_witness(const FusionTable& t) {
  for (int a = 0; a < t.size(); ++a)
    for (int c = 0; c < t.size(); ++c) {
      long long want = a == c ? 1 : 0;
      if (t(0, a, c) != want || t(a, 0, c) != want)
        return "a=" + std::to_string(a) + " c=" + std::to_string(c);
    }
  return {};
}

std::string dump(const FusionTable& t) {
  std::ostringstream out;
  out << "labels:";
  for (const auto& l : t.labels())
    out << ' ' << l;
  out << '\n';
  for (int a = 0; a < t.size(); ++a)
    for (int b = 0; b < t.size(); ++b)
      for (int c = 0; c < t.size(); ++c)
        if (t(a, b, c) != 0)
          out << a << ' ' << b << ' ' << c << ' ' << t(a, b, c) << '\n';
  return out.str();
}

CharacterBasis::CharacterBasis(std::vector<Vector> characters) : chars_(std::move(characters)) {
  if (chars_.empty())
    return;
  FieldPtr alias = borrow(*chars_.front().front().field());
  const std::size_t r = chars_.size();
  const std::size_t cols = chars_.front().size();
  Echelon e = rref(Matrix::from_rows(alias, cols, chars_));
  if (e.pivots.size() != r)
    throw InternalInconsistency("characters are linearly dependent");
  cols_ = e.pivots;
  Matrix mt(alias, r, r);  // mt(c, k) = chi_k(cols_[c])
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t k = 0; k < r; ++k)
      mt(c, k) = chars_[k][cols_[c]];
  auto inv = inverse(mt);
  if (!inv)
    throw InternalInconsistency("character submatrix is singular");
  inverse_ = *inv;
}

std::optional<Vector> CharacterBasis::coordinates(const Vector& f) const {
  const std::size_t r = chars_.size();
  Vector sub(r);
  for (std::size_t c = 0; c < r; ++c)
    sub[c] = f[cols_[c]];
  Vector coords = inverse_ * sub;
  Vector back = zero_vector(*f.front().field(), f.size());
  for (std::size_t k = 0; k < r; ++k)
    if (!coords[k].is_zero())
      for (std::size_t x = 0; x < f.size(); ++x)
        back[x] += coords[k] * chars_[k][x];
  if (back != f)
    return std::nullopt;
  return coords;
}

Vector convolve(const HopfAlgebra& h, const Vector& chi, const Vector& psi) {
  Vector r = h.zero();
  for (int a = 0; a < h.dim(); ++a)
    for (const auto& t : h.comult_terms(a))
      r[sz(a)] += t.coeff * chi[sz(t.left)] * psi[sz(t.right)];
  return r;
}

long long lift_integer(FieldElement x, bool symmetric) {
  const Field& f = *x.field();
  if (!f.in_prime_field(x))
    throw NonIntegralCoefficient("coefficient " + x.to_string() + " is outside the prime field");
  long long r = f.prime_residue(x);
  long long p = f.characteristic();
  if (symmetric && 2 * r > p)
    r -= p;
  return r;
}

namespace {

FusionTable solve_table(std::vector<std::string> labels, const CharacterBasis& basis, const std::vector<int>& dims,
                        bool symmetric, const std::function<Vector(int, int)>& product) {
  FusionTable t(std::move(labels));
  const int r = t.size();
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      auto coords = basis.coordinates(product(a, b));
      if (!coords)
        throw NonIntegralCoefficient("product of " + t.labels()[sz(a)] + " and " + t.labels()[sz(b)] +
                                     " is not a combination of characters");
      for (int c = 0; c < r; ++c) {
        long long v = lift_integer((*coords)[sz(c)], symmetric);
        if (std::llabs(v) > (long long)dims[sz(a)] * dims[sz(b)])
          throw NonIntegralCoefficient("coefficient " + std::to_string(v) + " at " + triple(a, b, c) +
                                       " exceeds the dimension bound");
        t.at(a, b, c) = v;
      }
    }
  return t;
}

} // namespace

std::vector<std::string> base_labels(int m) {
  std::vector<std::string> out;
  for (int i = 0; i < m; ++i)
    out.push_back("V" + std::to_string(i));
  return out;
}

std::vector<std::string> smash_labels(int m, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      out.push_back("V" + std::to_string(i) + "xW" + std::to_string(j));
  return out;
}

FusionTable star_product_coeffs(const HopfAlgebra& h, const BlockData& blocks) {
  CharacterBasis basis(blocks.chi);
  return solve_table(base_labels(blocks.size()), basis, blocks.d, false, [&](int a, int b) {
    return convolve(h, blocks.chi[sz(a)], blocks.chi[sz(b)]);
  });
}

Tensor2 star_twist(const HopfAlgebra& h, const VElement& v) {
  auto vinv = h.invert(v.v);
  if (!vinv)
    throw InternalInconsistency("v is not invertible");
  return h.tensor_multiply(h.comultiply(*vinv), h.tensor(v.v, v.v));
}

FusionTable newstar_product_coeffs(const HopfAlgebra& h, const BlockData& blocks, const VElement& v) {
  const std::size_t n = sz(h.dim());
  Tensor2 twist = star_twist(h, v);
  // twisted[a] = Delta(e_a) * twist, kept sparse
  std::vector<std::vector<std::pair<std::size_t, FieldElement>>> twisted(n);
  for (std::size_t a = 0; a < n; ++a) {
    Tensor2 x = h.tensor_multiply(h.comultiply(h.basis(int(a))), twist);
    for (std::size_t bc = 0; bc < x.size(); ++bc)
      if (!x[bc].is_zero())
        twisted[a].emplace_back(bc, x[bc]);
  }
  CharacterBasis basis(blocks.chi);
  return solve_table(base_labels(blocks.size()), basis, blocks.d, true, [&](int i, int j) {
    Vector r = h.zero();
    for (std::size_t a = 0; a < n; ++a)
      for (const auto& [bc, coeff] : twisted[a])
        r[a] += coeff * blocks.chi[sz(i)][bc / n] * blocks.chi[sz(j)][bc % n];
    return r;
  });
}

FusionTable smash_fusion_table(const SmashAlgebra& sm, const std::vector<SmashCharacter>& chars, int m) {
  std::vector<Vector> values;
  std::vector<int> dims;
  for (const auto& c : chars) {
    values.push_back(c.values);
    dims.push_back(int(lift_integer(character_value(c.values, sm.product().unit()), false)));
  }
  CharacterBasis basis(values);
  return solve_table(smash_labels(m, sm.n()), basis, dims, false, [&](int a, int b) {
    return convolve(sm.product(), values[sz(a)], values[sz(b)]);
  });
}

Vector fusion_multiply(const FusionTable& t, const Vector& x, const Vector& y, const FieldPtr& field) {
  return multiply_sparse(sparse(t, *field), x, y, *field);
}

Report check_fusion_tables(const HopfAlgebra& h, const BlockData& blocks, const VElement& v,
                           const FusionTable& n_table, const FusionTable& l_table, const FusionTable& smash) {
  Report r;
  const int m = blocks.size();
  std::string fail;
  for (const auto* t : {&n_table, &smash}) {
    if (fail.empty() && !(fail = associativity_witness(*t)).empty())
      fail = "associativity " + fail;
    if (fail.empty() && !(fail = unit_witness(*t)).empty())
      fail = "unit " + fail;
  }
  for (int i = 0; i < m && fail.empty(); ++i)
    for (int j = 0; j < m && fail.empty(); ++j) {
      long long total = 0;
      for (int k = 0; k < m; ++k) {
        if (n_table(i, j, k) < 0)
          fail = "negative N at " + triple(i, j, k);
        total += n_table(i, j, k) * blocks.d[sz(k)];
      }
      if (fail.empty() && total != (long long)blocks.d[sz(i)] * blocks.d[sz(j)])
        fail = "dimension count i=" + std::to_string(i) + " j=" + std::to_string(j);
      if (fail.empty() && n_table(i, j, 0) != (j == blocks.dual[sz(i)] ? 1 : 0))
        fail = "trivial multiplicity i=" + std::to_string(i) + " j=" + std::to_string(j);
    }
  r.add("Fusion.tables", fail.empty(), fail);

  std::string star;
  if (!(star = associativity_witness(l_table)).empty())
    star = "associativity " + star;
  else if (!(star = unit_witness(l_table)).empty())
    star = "unit " + star;
  r.add("Prop4.star_associative", star.empty(), star);

  bool involutory = h.is_involutory();
  bool equal = l_table == n_table;
  r.add("Rem6.involutory", !involutory || equal, "S^2 = id but L != N");
  (void)v;

  std::string rem9;
  for (int i = 0; i < m && rem9.empty(); ++i)
    for (int j = 0; j < m && rem9.empty(); ++j)
      for (int k = 0; k < m && rem9.empty(); ++k) {
        long long nn = n_table(i, j, k), ll = l_table(i, j, k);
        if (std::llabs(ll) > nn || (nn + ll) % 2 != 0)
          rem9 = triple(i, j, k) + " N=" + std::to_string(nn) + " L=" + std::to_string(ll);
      }
  r.add("Rem9", rem9.empty(), rem9);
  return r;
}

Report check_smash_products(const FusionTable& n_table, const FusionTable& l_table, const FusionTable& smash,
                            int m, int n) {
  auto at = [n](int i, int j) { return i * n + ((j % n) + n) % n; };
  const int half = n / 2;
  Report r;

  std::string one;
  for (int i = 0; i < m && one.empty(); ++i)
    for (int j = 0; j < n && one.empty(); ++j)
      for (int c = 0; c < smash.size() && one.empty(); ++c) {
        long long want = c == at(i, j) ? 1 : 0;
        if (smash(at(i, 0), at(0, j), c) != want || smash(at(0, j), at(i, 0), c) != want)
          one = "i=" + std::to_string(i) + " j=" + std::to_string(j) + " c=" + std::to_string(c);
      }
  r.add("Prop1.1", one.empty(), one);

  // expected coefficient of chi_{k, s+t+shift} in chi_is * chi_jt
  auto check = [&](int i, int s, int j, int t) -> std::string {
    for (int c = 0; c < smash.size(); ++c) {
      int k = c / n, col = c % n;
      long long want = 0;
      long long nn = n_table(i, j, k), ll = l_table(i, j, k);
      if (col == at(0, s + t))
        want += (nn + ll) / 2;
      if (col == at(0, s + t + half))
        want += (nn - ll) / 2;
      if ((nn + ll) % 2 != 0)
        return "odd N+L at " + triple(i, j, k);
      if (smash(at(i, s), at(j, t), c) != want)
        return "i=" + std::to_string(i) + " s=" + std::to_string(s) + " j=" + std::to_string(j) +
               " t=" + std::to_string(t) + " k=" + std::to_string(k) + " col=" + std::to_string(col);
    }
    return {};
  };

  std::string two;
  for (int i = 0; i < m && two.empty(); ++i)
    for (int j = 0; j < m && two.empty(); ++j)
      two = check(i, 0, j, 0);
  r.add("Prop1.2", two.empty(), two);

  std::string three;
  for (int i = 0; i < m && three.empty(); ++i)
    for (int s = 0; s < n && three.empty(); ++s)
      for (int j = 0; j < m && three.empty(); ++j)
        for (int t = 0; t < n && three.empty(); ++t)
          three = check(i, s, j, t);
  r.add("Prop1.3", three.empty(), three);
  return r;
}

std::vector<Vector> theta_idempotents(int m, int n, FieldElement psi) {
  const Field& f = *psi.field();
  FieldElement inv_n = f.from_int(n).inverse();
  FieldElement psi_inv = psi.inverse();
  std::vector<Vector> out;
  for (int l = 0; l < n; ++l) {
    Vector theta = zero_vector(f, sz(m * n));
    for (int t = 0; t < n; ++t)
      theta[sz(t)] = psi_inv.pow((long long)l * t) * inv_n;
    out.push_back(std::move(theta));
  }
  return out;
}

Report check_theta(const FusionTable& smash, const std::vector<Vector>& theta, FieldElement psi, int m, int n) {
  const Field& f = *psi.field();
  FieldPtr alias = borrow(f);
  SparseTable s = sparse(smash, f);
  const int r = smash.size();
  std::string fail;
  Vector sum = zero_vector(f, sz(r));
  for (int l = 0; l < n && fail.empty(); ++l) {
    sum = add(sum, theta[sz(l)]);
    for (int l2 = 0; l2 < n && fail.empty(); ++l2) {
      Vector prod = multiply_sparse(s, theta[sz(l)], theta[sz(l2)], f);
      if (prod != (l == l2 ? theta[sz(l)] : zero_vector(f, sz(r))))
        fail = "theta_" + std::to_string(l) + " * theta_" + std::to_string(l2);
    }
    for (int a = 0; a < r && fail.empty(); ++a) {
      Vector x = unit_label(f, r, a);
      Vector left = multiply_sparse(s, x, theta[sz(l)], f);
      if (left != multiply_sparse(s, theta[sz(l)], x, f))
        fail = "theta_" + std::to_string(l) + " is not central at " + smash.labels()[sz(a)];
      int i = a / n, j = a % n;
      Vector base = multiply_sparse(s, unit_label(f, r, i * n), theta[sz(l)], f);
      if (fail.empty() && left != scale(base, psi.pow((long long)j * l)))
        fail = "chi_ij * theta_l at " + smash.labels()[sz(a)] + " l=" + std::to_string(l);
    }
  }
  if (fail.empty() && sum != unit_label(f, r, 0))
    fail = "sum of theta_l differs from chi_00";
  (void)m;
  Report rep;
  rep.add("Theta.relations", fail.empty(), fail);
  return rep;
}

Report verify_theorem_decomposition(const FusionTable& n_table, const FusionTable& l_table,
                                    const FusionTable& smash, const std::vector<Vector>& theta, int m, int n) {
  const Field& f = *theta.front().front().field();
  FieldPtr alias = borrow(f);
  SparseTable s = sparse(smash, f);
  const int r = smash.size();
  std::string even, odd, whole;
  std::vector<Vector> all_images;
  for (int l = 0; l < n; ++l) {
    std::vector<Vector> images;
    for (int i = 0; i < m; ++i)
      images.push_back(multiply_sparse(s, unit_label(f, r, i * n), theta[sz(l)], f));
    std::string& slot = l % 2 == 0 ? even : odd;
    if (slot.empty()) {
      std::string w = homomorphism_witness(s, l % 2 == 0 ? n_table : l_table, images, alias);
      if (!w.empty())
        slot = "l=" + std::to_string(l) + " " + w;
    }
    if (slot.empty()) {
      // chi_{i,n/2} * theta_l = (-1)^l chi_i0 * theta_l
      for (int i = 0; i < m && slot.empty(); ++i) {
        Vector x = multiply_sparse(s, unit_label(f, r, i * n + n / 2), theta[sz(l)], f);
        if (x != (l % 2 == 0 ? images[sz(i)] : scale(images[sz(i)], -f.one())))
          slot = "l=" + std::to_string(l) + " sign at i=" + std::to_string(i);
      }
    }
    std::vector<Vector> corner;
    for (int a = 0; a < r; ++a)
      corner.push_back(multiply_sparse(s, unit_label(f, r, a), theta[sz(l)], f));
    if (whole.empty() && rank(Matrix::from_rows(alias, sz(r), corner)) != sz(m))
      whole = "corner l=" + std::to_string(l) + " does not have rank m";
    all_images.insert(all_images.end(), images.begin(), images.end());
  }
  Vector sum = zero_vector(f, sz(r));
  for (const auto& t : theta)
    sum = add(sum, t);
  if (whole.empty() && sum != unit_label(f, r, 0))
    whole = "sum of theta_l differs from chi_00";
  if (whole.empty() && rank(Matrix::from_rows(alias, sz(r), all_images)) != sz(r))
    whole = "corners do not span the algebra";
  Report rep;
  rep.add("Thm4.1", even.empty(), even);
  rep.add("Thm4.2", odd.empty(), odd);
  rep.add("Thm4.3", whole.empty(), whole);
  return rep;
}

SubcategoryResult subcategory_C(const FusionTable& n_table, const FusionTable& l_table, const FusionTable& smash,
                                const std::vector<Vector>& theta, const BlockData& blocks, int n) {
  const int m = blocks.size();
  const int half = n / 2;
  const Field& f = *theta.front().front().field();
  FieldPtr alias = borrow(f);
  auto flat = [n](int i, int j) { return i * n + j; };
  std::vector<int> members;  // smash label of each C label
  std::vector<std::string> labels;
  for (int j : {0, half})
    for (int i = 0; i < m; ++i) {
      members.push_back(flat(i, j));
      labels.push_back(smash.labels()[sz(flat(i, j))]);
    }
  std::vector<int> position(sz(smash.size()), -1);
  for (std::size_t c = 0; c < members.size(); ++c)
    position[sz(members[c])] = int(c);

  SubcategoryResult out{FusionTable(labels), {}};
  const int r = out.table.size();

  std::string closure;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < smash.size(); ++c) {
        long long v = smash(members[sz(a)], members[sz(b)], c);
        if (v == 0)
          continue;
        if (position[sz(c)] < 0) {
          if (closure.empty())
            closure = labels[sz(a)] + " * " + labels[sz(b)] + " contains " + smash.labels()[sz(c)];
          continue;
        }
        out.table.at(a, b, position[sz(c)]) = v;
      }
  for (int a = 0; a < r && closure.empty(); ++a) {
    int i = members[sz(a)] / n, j = members[sz(a)] % n;
    if (position[sz(flat(blocks.dual[sz(i)], (n - j) % n))] < 0)
      closure = "dual of " + labels[sz(a)] + " leaves the subcategory";
  }
  // the displayed decompositions
  for (int i = 0; i < m && closure.empty(); ++i)
    for (int j = 0; j < m && closure.empty(); ++j)
      for (int k = 0; k < m && closure.empty(); ++k) {
        long long plus = (n_table(i, j, k) + l_table(i, j, k)) / 2;
        long long minus = (n_table(i, j, k) - l_table(i, j, k)) / 2;
        const FusionTable& t = out.table;
        bool ok = t(m + i, m + j, k) == plus && t(m + i, m + j, m + k) == minus && t(i, j, k) == plus &&
                  t(i, j, m + k) == minus && t(i, m + j, m + k) == plus && t(i, m + j, k) == minus &&
                  t(m + i, j, m + k) == plus && t(m + i, j, k) == minus;
        if (!ok)
          closure = "decomposition " + triple(i, j, k);
      }
  out.report.add("C.closure", closure.empty(), closure);

  SparseTable sc = sparse(out.table, f);
  Vector one = unit_label(f, r, 0);
  FieldElement inv2 = f.from_int(2).inverse();
  Vector th = scale(add(one, unit_label(f, r, m)), inv2);
  Vector co = sub(one, th);
  std::string p1;
  if (multiply_sparse(sc, th, th, f) != th || multiply_sparse(sc, co, co, f) != co ||
      !is_zero(multiply_sparse(sc, th, co, f)))
    p1 = "theta, 1-theta are not orthogonal idempotents";
  for (int a = 0; a < r && p1.empty(); ++a) {
    Vector x = unit_label(f, r, a);
    if (multiply_sparse(sc, x, th, f) != multiply_sparse(sc, th, x, f))
      p1 = "theta is not central at " + labels[sz(a)];
  }
  for (int part = 0; part < 2 && p1.empty(); ++part) {
    const Vector& idem = part == 0 ? th : co;
    std::vector<Vector> images;
    for (int i = 0; i < m; ++i)
      images.push_back(multiply_sparse(sc, unit_label(f, r, i), idem, f));
    std::string w = homomorphism_witness(sc, part == 0 ? n_table : l_table, images, alias);
    if (!w.empty())
      p1 = std::string(part == 0 ? "theta corner " : "1-theta corner ") + w;
  }
  out.report.add("PropP1", p1.empty(), p1);

  SparseTable s = sparse(smash, f);
  const int full = smash.size();
  std::string cor;
  std::vector<Vector> all_images;
  for (int k = 0; k < half && cor.empty(); ++k) {
    Vector e = add(theta[sz(2 * k)], theta[sz(2 * k + 1)]);
    std::vector<Vector> images;
    for (int a = 0; a < r; ++a)
      images.push_back(multiply_sparse(s, unit_label(f, full, members[sz(a)]), e, f));
    std::string w = homomorphism_witness(s, out.table, images, alias);
    if (!w.empty())
      cor = "copy " + std::to_string(k) + " " + w;
    all_images.insert(all_images.end(), images.begin(), images.end());
  }
  if (cor.empty() && rank(Matrix::from_rows(alias, sz(full), all_images)) != sz(full))
    cor = "copies do not span the algebra";
  out.report.add("Cor4", cor.empty(), cor);
  return out;
}

QuantumDimensions quantum_dimensions(const HopfAlgebra& h, const BlockData& blocks, const VElement& v,
                                     FieldElement psi, int n) {
  const int m = blocks.size();
  QuantumDimensions q;
  std::string fail;
  std::vector<FieldElement> chiv;
  for (int i = 0; i < m; ++i) {
    chiv.push_back(character_value(blocks.chi[sz(i)], v.v));
    if (fail.empty() && chiv.back() != v.s_lambda * v.s[sz(i)])
      fail = "chi_" + std::to_string(i) + "(v) = " + chiv.back().to_string() + " but s_lambda s_i = " +
             (v.s_lambda * v.s[sz(i)]).to_string();
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      q.dims.push_back(chiv[sz(i)] * psi.pow(j));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      FieldElement dual = q.dims[sz(blocks.dual[sz(i)] * n + (n - j) % n)];
      bool same = dual == q.dims[sz(i * n + j)];
      q.spherical.push_back(same);
      bool expected = j == 0 || 2 * j == n;
      if (fail.empty() && same != expected)
        fail = "dual dimension " + std::string(same ? "agrees" : "differs") + " at i=" + std::to_string(i) +
               " j=" + std::to_string(j);
    }
  (void)h;
  q.report.add("QDim", fail.empty(), fail);
  return q;
}

} // namespace hopf_fusion
