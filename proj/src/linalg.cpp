#include "verlinde/linalg.hpp"

#include <algorithm>
#include <cstdlib>

#include "verlinde/errors.hpp"

namespace verlinde {

RatVec vec_add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec vec_scale(const Rat& c, const RatVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Rat vec_dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw precondition_error("dot: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool vec_is_zero(const RatVec& a) {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
  RatMat r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Rat& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

RatVec RatMat::operator*(const RatVec& v) const {
  RatVec r(rows);
  for (int i = 0; i < rows; ++i) {
    Rat s = 0;
    for (int j = 0; j < cols; ++j) s += (*this)(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

RatMat RatMat::operator+(const RatMat& o) const {
  RatMat r(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
  return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
  RatMat r(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
  return r;
}

RatMat RatMat::transposed() const {
  RatMat r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
  return r;
}

RatVec RatMat::col(int j) const {
  RatVec r(rows);
  for (int i = 0; i < rows; ++i) r[i] = (*this)(i, j);
  return r;
}

namespace {

Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return a / boost::multiprecision::gcd(a, b) * b;
}

// Integerize each row of [A | b] by its denominator lcm (row scaling keeps
// the solution set).
IntMat integerize_augmented(const RatMat& A, const RatVec& b) {
  IntMat M(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    Int l = 1;
    for (int j = 0; j < A.cols; ++j) l = lcm_int(l, rat_den(A(i, j)));
    l = lcm_int(l, rat_den(b[i]));
    for (int j = 0; j < A.cols; ++j) {
      Rat v = A(i, j) * Rat(l);
      M(i, j) = rat_num(v);
    }
    Rat v = b[i] * Rat(l);
    M(i, A.cols) = rat_num(v);
  }
  return M;
}

}  // namespace

std::optional<RatVec> solve_exact(const RatMat& A, const RatVec& b) {
  const int m = A.rows, n = A.cols;
  IntMat M = integerize_augmented(A, b);

  // Bareiss fraction-free elimination with row pivoting.
  std::vector<int> pivot_row;  // pivot_row[t] = row of t-th pivot (column t)
  Int prev = 1;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int p = -1;
    for (int i = r; i < m; ++i)
      if (M(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) return std::nullopt;  // rank deficient in this column
    if (p != r)
      for (int j = 0; j <= n; ++j) std::swap(M(p, j), M(r, j));
    for (int i = r + 1; i < m; ++i) {
      for (int j = c + 1; j <= n; ++j)
        M(i, j) = (M(i, j) * M(r, c) - M(i, c) * M(r, j)) / prev;
      M(i, c) = 0;
    }
    prev = M(r, c);
    pivot_row.push_back(r);
    ++r;
  }
  if (r < n) return std::nullopt;
  // Consistency of the remaining rows.
  for (int i = r; i < m; ++i)
    if (M(i, n) != 0) return std::nullopt;

  RatVec x(n);
  for (int c = n - 1; c >= 0; --c) {
    Rat s(M(c, n));
    for (int j = c + 1; j < n; ++j) s -= Rat(M(c, j)) * x[j];
    x[c] = s / Rat(M(c, c));
  }
  return x;
}

Rat det(const RatMat& A) {
  if (A.rows != A.cols) throw precondition_error("det: matrix not square");
  const int n = A.rows;
  RatMat M = A;
  Rat d = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (M(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(M(p, j), M(c, j));
      d = -d;
    }
    d *= M(c, c);
    Rat inv = Rat(1) / M(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (M(i, c) == 0) continue;
      Rat f = M(i, c) * inv;
      for (int j = c; j < n; ++j) M(i, j) -= f * M(c, j);
    }
  }
  return d;
}

RatMat inverse(const RatMat& A) {
  if (A.rows != A.cols) throw precondition_error("inverse: matrix not square");
  const int n = A.rows;
  RatMat inv(n, n);
  for (int j = 0; j < n; ++j) {
    RatVec e(n, Rat(0));
    e[j] = 1;
    auto x = solve_exact(A, e);
    if (!x) throw precondition_error("inverse: singular matrix");
    for (int i = 0; i < n; ++i) inv(i, j) = (*x)[i];
  }
  return inv;
}

namespace {

void swap_rows(IntMat& M, int i, int j) {
  for (int c = 0; c < M.cols; ++c) std::swap(M(i, c), M(j, c));
}
void swap_cols(IntMat& M, int i, int j) {
  for (int r = 0; r < M.rows; ++r) std::swap(M(r, i), M(r, j));
}
// row_i -= q * row_j
void row_sub(IntMat& M, int i, int j, const Int& q) {
  if (q == 0) return;
  for (int c = 0; c < M.cols; ++c) M(i, c) -= q * M(j, c);
}
void col_sub(IntMat& M, int i, int j, const Int& q) {
  if (q == 0) return;
  for (int r = 0; r < M.rows; ++r) M(r, i) -= q * M(r, j);
}
void negate_row(IntMat& M, int i) {
  for (int c = 0; c < M.cols; ++c) M(i, c) = -M(i, c);
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntMat hermite_row_basis(const IntMat& Min) {
  IntMat M = Min;
  const int m = M.rows, n = M.cols;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    // Reduce all entries in column c below row r to a single pivot via gcd.
    while (true) {
      int p = -1;
      for (int i = r; i < m; ++i)
        if (M(i, c) != 0) {
          p = i;
          break;
        }
      if (p < 0) break;
      if (p != r) swap_rows(M, p, r);
      bool again = false;
      for (int i = r + 1; i < m; ++i) {
        if (M(i, c) == 0) continue;
        Int q = floor_div(M(i, c), M(r, c));
        row_sub(M, i, r, q);
        if (M(i, c) != 0) again = true;
      }
      if (!again) break;
      // Move the smallest nonzero remainder up and repeat.
      int best = r;
      for (int i = r + 1; i < m; ++i)
        if (M(i, c) != 0 &&
            (M(best, c) == 0 || abs(M(i, c)) < abs(M(best, c))))
          best = i;
      if (best != r) swap_rows(M, best, r);
    }
    if (M(r, c) == 0) continue;
    if (M(r, c) < 0) negate_row(M, r);
    // Reduce entries above the pivot into [0, pivot).
    for (int i = 0; i < r; ++i) {
      Int q = floor_div(M(i, c), M(r, c));
      row_sub(M, i, r, q);
    }
    ++r;
  }
  IntMat B(r, n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) B(i, j) = M(i, j);
  return B;
}

SmithResult smith_normal_form(const IntMat& Min) {
  SmithResult res;
  IntMat& M = res.D;
  M = Min;
  const int m = M.rows, n = M.cols;
  IntMat& U = res.U;
  IntMat& V = res.V;
  U = IntMat(m, m);
  V = IntMat(n, n);
  for (int i = 0; i < m; ++i) U(i, i) = 1;
  for (int j = 0; j < n; ++j) V(j, j) = 1;

  auto u_swap = [&](int i, int j) { swap_rows(U, i, j); };
  auto v_swap = [&](int i, int j) { swap_cols(V, i, j); };

  int t = 0;
  const int lim = std::min(m, n);
  while (t < lim) {
    // Find nonzero entry of minimal absolute value in the trailing block.
    int bi = -1, bj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (M(i, j) != 0 &&
            (bi < 0 || abs(M(i, j)) < abs(M(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi < 0) break;
    if (bi != t) {
      swap_rows(M, bi, t);
      u_swap(bi, t);
    }
    if (bj != t) {
      swap_cols(M, bj, t);
      v_swap(bj, t);
    }

    bool clean = true;
    for (int i = t + 1; i < m; ++i) {
      Int q = floor_div(M(i, t), M(t, t));
      row_sub(M, i, t, q);
      row_sub(U, i, t, q);
      if (M(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < n; ++j) {
      Int q = floor_div(M(t, j), M(t, t));
      col_sub(M, j, t, q);
      col_sub(V, j, t, q);
      if (M(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders appeared; repick pivot

    // Enforce divisibility of the trailing block by the pivot.
    bool divides = true;
    for (int i = t + 1; i < m && divides; ++i)
      for (int j = t + 1; j < n && divides; ++j)
        if (M(i, j) % M(t, t) != 0) {
          // Fold row i into row t and restart this pivot.
          for (int c = 0; c < n; ++c) M(t, c) += M(i, c);
          for (int c = 0; c < m; ++c) U(t, c) += U(i, c);
          divides = false;
        }
    if (!divides) continue;
    if (M(t, t) < 0) {
      negate_row(M, t);
      negate_row(U, t);
    }
    ++t;
  }
  return res;
}

Lattice Lattice::from_basis(RatMat basis) {
  Lattice L;
  L.basis_ = std::move(basis);
  return L;
}

Lattice Lattice::from_generators(int ambient_dim,
                                 const std::vector<RatVec>& gens) {
  Int l = 1;
  for (const auto& g : gens)
    for (const auto& x : g) l = lcm_int(l, rat_den(x));
  IntMat rowsM(static_cast<int>(gens.size()), ambient_dim);
  for (int i = 0; i < rowsM.rows; ++i)
    for (int j = 0; j < ambient_dim; ++j) {
      Rat v = gens[i][j] * Rat(l);
      rowsM(i, j) = rat_num(v);
    }
  IntMat H = hermite_row_basis(rowsM);
  RatMat basis(ambient_dim, H.rows);
  for (int i = 0; i < H.rows; ++i)
    for (int j = 0; j < ambient_dim; ++j)
      basis(j, i) = Rat(H(i, j)) / Rat(l);
  Lattice L;
  L.basis_ = std::move(basis);
  return L;
}

std::optional<RatVec> Lattice::coords(const RatVec& x) const {
  return solve_exact(basis_, x);
}

bool Lattice::contains(const RatVec& x) const {
  auto c = coords(x);
  if (!c) return false;
  for (const Rat& v : *c)
    if (!is_integer(v)) return false;
  return true;
}

RatVec Lattice::frac_coords(const RatVec& x) const {
  auto c = coords(x);
  if (!c) throw precondition_error("frac_coords: vector outside lattice span");
  RatVec r(c->size());
  for (size_t i = 0; i < c->size(); ++i) r[i] = frac_mod1((*c)[i]);
  return r;
}

namespace {

// Integer coordinate matrix of sub's basis in sup's basis.
IntMat inclusion_matrix(const Lattice& sup, const Lattice& sub) {
  if (sup.rank() != sub.rank())
    throw precondition_error("lattice quotient: rank mismatch");
  const int r = sup.rank();
  IntMat M(r, r);
  for (int j = 0; j < r; ++j) {
    auto c = sup.coords(sub.basis_vector(j));
    if (!c) throw precondition_error("lattice quotient: sub not inside sup");
    for (int i = 0; i < r; ++i) {
      if (!is_integer((*c)[i]))
        throw precondition_error("lattice quotient: sub not inside sup");
      M(i, j) = rat_num((*c)[i]);
    }
  }
  return M;
}

}  // namespace

Int lattice_index(const Lattice& sup, const Lattice& sub) {
  IntMat M = inclusion_matrix(sup, sub);
  RatMat R(M.rows, M.cols);
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) R(i, j) = Rat(M(i, j));
  Rat d = det(R);
  if (d == 0) throw precondition_error("lattice_index: not finite index");
  Int v = rat_num(d);
  return v < 0 ? Int(-v) : v;
}

FiniteQuotient lattice_quotient(const Lattice& sup, const Lattice& sub) {
  IntMat M = inclusion_matrix(sup, sub);
  SmithResult s = smith_normal_form(M);
  const int r = M.rows;
  // With U*M*V = D, the basis sup*U^{-1} exhibits sup/sub = ⊕ Z/d_i.
  RatMat Ur(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) Ur(i, j) = Rat(s.U(i, j));
  RatMat Uinv = inverse(Ur);

  FiniteQuotient q;
  for (int i = 0; i < r; ++i) {
    Int d = s.D(i, i);
    q.order *= (d == 0 ? Int(1) : d);
    if (d > 1) {
      q.factors.push_back(d);
      q.generators.push_back(sup.basis() * Uinv.col(i));
    }
  }
  return q;
}

}  // namespace verlinde
