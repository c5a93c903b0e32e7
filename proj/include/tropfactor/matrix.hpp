// Exact integer and rational linear algebra: column-style Hermite reduction,
// integer kernels and solves, rational elimination, and the mixed
// rational/integer affine solver used by the decomposition machinery.
#pragma once

#include <cassert>
#include <optional>
#include <variant>

#include "tropfactor/arith.hpp"

namespace tropfactor {

inline size_t rows_of(const ZMat& a) { return a.size(); }
inline size_t cols_of(const ZMat& a) { return a.empty() ? 0 : a[0].size(); }

inline ZMat transpose(const ZMat& a) {
  ZMat t(cols_of(a), ZVec(rows_of(a)));
  for (size_t i = 0; i < rows_of(a); ++i)
    for (size_t j = 0; j < cols_of(a); ++j) t[j][i] = a[i][j];
  return t;
}

inline ZVec mat_vec(const ZMat& a, const ZVec& x) {
  ZVec r(rows_of(a), Int(0));
  for (size_t i = 0; i < rows_of(a); ++i) r[i] = dot(a[i], x);
  return r;
}

namespace detail {

// Column Hermite reduction of an r x m matrix: returns (H, U) with
// A*U = H, U unimodular m x m, and H in column echelon form. Pivot
// columns are determined scanning rows top to bottom.
struct ColumnHNF {
  ZMat h;                      // r x m
  ZMat u;                      // m x m, columns track the transform
  std::vector<size_t> pivot_row;  // per pivot column (prefix of columns)
};

inline ColumnHNF column_hnf(const ZMat& a) {
  size_t r = rows_of(a), m = cols_of(a);
  ZMat h = a;
  ZMat u(m, ZVec(m, Int(0)));
  for (size_t j = 0; j < m; ++j) u[j][j] = 1;

  auto col_combine = [&](size_t j, size_t k, const Int& p, const Int& q,
                         const Int& s, const Int& t) {
    // (col_j, col_k) <- (p*col_j + q*col_k, s*col_j + t*col_k)
    for (size_t i = 0; i < r; ++i) {
      Int nj = p * h[i][j] + q * h[i][k];
      Int nk = s * h[i][j] + t * h[i][k];
      h[i][j] = nj;
      h[i][k] = nk;
    }
    for (size_t i = 0; i < m; ++i) {
      Int nj = p * u[i][j] + q * u[i][k];
      Int nk = s * u[i][j] + t * u[i][k];
      u[i][j] = nj;
      u[i][k] = nk;
    }
  };

  size_t piv = 0;
  std::vector<size_t> pivot_row;
  for (size_t i = 0; i < r && piv < m; ++i) {
    // Clear row i to a single nonzero among columns piv..m-1.
    for (size_t j = piv + 1; j < m; ++j) {
      if (h[i][j] == 0) continue;
      if (h[i][piv] == 0) {
        col_combine(piv, j, 0, 1, 1, 0);  // swap
        continue;
      }
      Int g, p, q;
      mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(),
                 h[i][piv].get_mpz_t(), h[i][j].get_mpz_t());
      Int s = -h[i][j] / g, t = h[i][piv] / g;
      // det [[p, s],[q, t]] = p*t - q*s = 1
      col_combine(piv, j, p, q, s, t);
    }
    if (h[i][piv] == 0) continue;
    if (h[i][piv] < 0) col_combine(piv, piv, -1, 0, 0, -1);
    // Reduce earlier columns against this pivot.
    for (size_t j = 0; j < piv; ++j) {
      Int f;
      mpz_fdiv_q(f.get_mpz_t(), h[i][j].get_mpz_t(), h[i][piv].get_mpz_t());
      if (f != 0)
        for (size_t t2 = 0; t2 < r; ++t2) h[t2][j] -= f * h[t2][piv];
      if (f != 0)
        for (size_t t2 = 0; t2 < m; ++t2) u[t2][j] -= f * u[t2][piv];
    }
    pivot_row.push_back(i);
    ++piv;
  }
  return {std::move(h), std::move(u), std::move(pivot_row)};
}

}  // namespace detail

// Basis of {x in Z^m : A x = 0}.
inline ZMat integer_kernel(const ZMat& a) {
  if (cols_of(a) == 0) return {};
  auto hnf = detail::column_hnf(a);
  size_t m = cols_of(a), npiv = hnf.pivot_row.size();
  ZMat basis;
  for (size_t j = npiv; j < m; ++j) {
    ZVec v(m);
    for (size_t i = 0; i < m; ++i) v[i] = hnf.u[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Some integer solution of A x = b, if one exists.
inline std::optional<ZVec> solve_integer(const ZMat& a, const ZVec& b) {
  size_t r = rows_of(a), m = cols_of(a);
  if (r != b.size()) throw std::invalid_argument("solve_integer: shape mismatch");
  if (m == 0) {
    for (const Int& x : b)
      if (x != 0) return std::nullopt;
    return ZVec{};
  }
  auto hnf = detail::column_hnf(a);
  ZVec z(m, Int(0));
  ZVec resid = b;
  size_t npiv = hnf.pivot_row.size();
  for (size_t j = 0; j < npiv; ++j) {
    size_t i = hnf.pivot_row[j];
    const Int& p = hnf.h[i][j];
    if (resid[i] % p != 0) return std::nullopt;
    z[j] = resid[i] / p;
    if (z[j] != 0)
      for (size_t t = 0; t < r; ++t) resid[t] -= z[j] * hnf.h[t][j];
  }
  for (const Int& x : resid)
    if (x != 0) return std::nullopt;
  ZVec x(m, Int(0));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      if (z[j] != 0) x[i] += hnf.u[i][j] * z[j];
  return x;
}

// ----- rational elimination -----

struct QReduction {
  QMat mat;                    // reduced rows (row echelon, leading 1s)
  std::vector<size_t> pivot_col;
  size_t rank() const { return pivot_col.size(); }
};

inline QReduction rref(QMat m) {
  size_t r = m.size(), c = r ? m[0].size() : 0;
  QReduction red;
  size_t row = 0;
  for (size_t col = 0; col < c && row < r; ++col) {
    size_t sel = row;
    while (sel < r && m[sel][col] == 0) ++sel;
    if (sel == r) continue;
    std::swap(m[row], m[sel]);
    Rat inv = m[row][col];
    for (size_t j = col; j < c; ++j) m[row][j] /= inv;
    for (size_t i = 0; i < r; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (size_t j = col; j < c; ++j) m[i][j] -= f * m[row][j];
    }
    red.pivot_col.push_back(col);
    ++row;
  }
  m.resize(row);
  red.mat = std::move(m);
  return red;
}

inline QMat to_qmat(const ZMat& a) {
  QMat q(a.size());
  for (size_t i = 0; i < a.size(); ++i) q[i] = to_qvec(a[i]);
  return q;
}

inline size_t rank_q(const ZMat& a) { return rref(to_qmat(a)).rank(); }

// Particular rational solution of A x = b (free variables set to 0).
inline std::optional<QVec> solve_rational(const QMat& a, const QVec& b) {
  size_t r = a.size(), c = r ? a[0].size() : 0;
  QMat aug(r, QVec(c + 1));
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < c; ++j) aug[i][j] = a[i][j];
    aug[i][c] = b[i];
  }
  QReduction red = rref(std::move(aug));
  QVec x(c, Rat(0));
  for (size_t i = 0; i < red.rank(); ++i) {
    if (red.pivot_col[i] == c) return std::nullopt;  // 0 = 1 row
    x[red.pivot_col[i]] = red.mat[i][c];
  }
  return x;
}

// Basis of the rational left kernel of A, rows scaled to integers.
inline ZMat integer_left_kernel_basis(const ZMat& a) {
  // left kernel of A = kernel of A^T over Q; integer-scale each basis row.
  ZMat at = transpose(a);
  size_t r = at.size(), c = r ? at[0].size() : 0;
  QReduction red = rref(to_qmat(at));
  std::vector<bool> is_pivot(c, false);
  for (size_t p : red.pivot_col) is_pivot[p] = true;
  ZMat basis;
  for (size_t free = 0; free < c; ++free) {
    if (is_pivot[free]) continue;
    QVec v(c, Rat(0));
    v[free] = 1;
    for (size_t i = 0; i < red.rank(); ++i) v[red.pivot_col[i]] = -red.mat[i][free];
    Int den = lcm_den(v);
    ZVec z(c);
    for (size_t i = 0; i < c; ++i) {
      Rat s = v[i] * Rat(den);
      z[i] = s.get_num();
    }
    basis.push_back(primitive(z));
  }
  return basis;
}

// ----- the mixed solver of the decomposition equation -----

struct AffineSolution {
  QVec y;  // rational multipliers, one per column of A
  ZVec w;  // integer translation, one per column of H
};

enum class AffineSolveError { NoSolution, NoIntegralW };

using AffineSolveResult = std::variant<AffineSolution, AffineSolveError>;

// Solves A y + H w = b with y rational and w integral.  A is r x m (columns
// are basis b-vectors), H is r x n.  Reduction: w must satisfy K H w = K b
// for K a basis of the rational left kernel of A; that integer system is
// solved by Hermite reduction, then y follows by rational elimination.
inline AffineSolveResult solve_integer_affine(const ZMat& a, const ZMat& h,
                                              const ZVec& b) {
  size_t r = b.size();
  size_t m = cols_of(a), n = cols_of(h);
  if ((rows_of(a) != r && m > 0) || (rows_of(h) != r && n > 0))
    throw std::invalid_argument("solve_integer_affine: shape mismatch");

  // Consistency over Q of [A | H] z = b.
  {
    QMat full(r, QVec(m + n));
    for (size_t i = 0; i < r; ++i) {
      for (size_t j = 0; j < m; ++j) full[i][j] = Rat(a[i][j]);
      for (size_t j = 0; j < n; ++j) full[i][m + j] = Rat(h.empty() ? Int(0) : h[i][j]);
    }
    if (!solve_rational(full, to_qvec(b))) return AffineSolveError::NoSolution;
  }

  ZMat k = integer_left_kernel_basis(a);
  ZMat kh(k.size(), ZVec(n, Int(0)));
  ZVec kb(k.size(), Int(0));
  for (size_t i = 0; i < k.size(); ++i) {
    for (size_t j = 0; j < n; ++j)
      for (size_t t = 0; t < r; ++t) kh[i][j] += k[i][t] * h[t][j];
    kb[i] = dot(k[i], b);
  }
  ZVec w(n, Int(0));
  if (!k.empty()) {
    auto ws = solve_integer(kh, kb);
    if (!ws) return AffineSolveError::NoIntegralW;
    w = *ws;
  }
  // A y = b - H w over Q.
  QVec rhs(r);
  for (size_t i = 0; i < r; ++i) {
    Int s = b[i];
    for (size_t j = 0; j < n; ++j) s -= h[i][j] * w[j];
    rhs[i] = Rat(s);
  }
  auto y = solve_rational(to_qmat(a), rhs);
  if (!y) return AffineSolveError::NoIntegralW;
  return AffineSolution{std::move(*y), std::move(w)};
}

}  // namespace tropfactor
