#include "phec/linalg.hpp"

#include <algorithm>

namespace phec {

PMat pm_identity(const Ring& R, int n) {
  PMat M(n, n);
  for (int i = 0; i < n; ++i) M.at(i, i) = poly_one(R);
  return M;
}

PMat pm_mul(const Ring& R, const PMat& A, const PMat& B) {
  check(A.c == B.r, "matrix shape mismatch");
  PMat C(A.r, B.c);
  for (int i = 0; i < A.r; ++i)
    for (int k = 0; k < A.c; ++k) {
      const Poly& aik = A.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < B.c; ++j) {
        const Poly& bkj = B.at(k, j);
        if (bkj.is_zero()) continue;
        C.at(i, j) = poly_add(R, C.at(i, j), poly_mul(R, aik, bkj));
      }
    }
  return C;
}

PMat pm_add(const Ring& R, const PMat& A, const PMat& B) {
  check(A.r == B.r && A.c == B.c, "matrix shape mismatch");
  PMat C(A.r, A.c);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = poly_add(R, A.a[i], B.a[i]);
  return C;
}

PMat pm_sub(const Ring& R, const PMat& A, const PMat& B) {
  check(A.r == B.r && A.c == B.c, "matrix shape mismatch");
  PMat C(A.r, A.c);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = poly_sub(R, A.a[i], B.a[i]);
  return C;
}

PMat pm_scale(const Ring& R, const PMat& A, const Poly& s) {
  PMat C(A.r, A.c);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = poly_mul(R, A.a[i], s);
  return C;
}

PMat pm_kron(const Ring& R, const PMat& A, const PMat& B) {
  PMat C(A.r * B.r, A.c * B.c);
  for (int i = 0; i < A.r; ++i)
    for (int j = 0; j < A.c; ++j) {
      if (A.at(i, j).is_zero()) continue;
      for (int k = 0; k < B.r; ++k)
        for (int l = 0; l < B.c; ++l)
          C.at(i * B.r + k, j * B.c + l) = poly_mul(R, A.at(i, j), B.at(k, l));
    }
  return C;
}

PMat pm_transpose(const PMat& A) {
  PMat C(A.c, A.r);
  for (int i = 0; i < A.r; ++i)
    for (int j = 0; j < A.c; ++j) C.at(j, i) = A.at(i, j);
  return C;
}

bool pm_is_zero(const PMat& A) {
  for (const auto& p : A.a)
    if (!p.is_zero()) return false;
  return true;
}

std::vector<Poly> pm_row_mul(const Ring& R, const std::vector<Poly>& v, const PMat& A) {
  check(int(v.size()) == A.r, "row/matrix mismatch");
  std::vector<Poly> out(size_t(A.c), poly_zero());
  for (int i = 0; i < A.r; ++i) {
    if (v[size_t(i)].is_zero()) continue;
    for (int j = 0; j < A.c; ++j) {
      if (A.at(i, j).is_zero()) continue;
      out[size_t(j)] = poly_add(R, out[size_t(j)], poly_mul(R, v[size_t(i)], A.at(i, j)));
    }
  }
  return out;
}

Poly pm_det_bareiss(const Ring& R, PMat A) {
  check(A.r == A.c, "determinant needs a square matrix");
  int n = A.r;
  if (n == 0) return poly_one(R);
  Poly prev = poly_one(R);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (A.at(k, k).is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!A.at(i, k).is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return poly_zero();
      for (int j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Poly num = poly_sub(R, poly_mul(R, A.at(i, j), A.at(k, k)),
                            poly_mul(R, A.at(i, k), A.at(k, j)));
        Poly q;
        check(poly_divexact(R, num, prev, &q), "Bareiss division not exact");
        A.at(i, j) = q;
      }
    prev = A.at(k, k);
  }
  Poly det = A.at(n - 1, n - 1);
  if (sign < 0) det = poly_neg(R, det);
  return det;
}

PMat pm_inverse_field(const Ring& R, const PMat& A) {
  check(R.is_field(), "field inverse needs GFp");
  check(A.r == A.c, "inverse needs a square matrix");
  int n = A.r;
  PMat M = A;
  PMat I = pm_identity(R, n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!M.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    check(piv >= 0, "matrix is singular over the field");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(M.at(col, j), M.at(piv, j));
        std::swap(I.at(col, j), I.at(piv, j));
      }
    Poly inv = poly_unit_inverse(R, M.at(col, col));
    for (int j = 0; j < n; ++j) {
      M.at(col, j) = poly_mul(R, M.at(col, j), inv);
      I.at(col, j) = poly_mul(R, I.at(col, j), inv);
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || M.at(i, col).is_zero()) continue;
      Poly f = M.at(i, col);
      for (int j = 0; j < n; ++j) {
        M.at(i, j) = poly_sub(R, M.at(i, j), poly_mul(R, f, M.at(col, j)));
        I.at(i, j) = poly_sub(R, I.at(i, j), poly_mul(R, f, I.at(col, j)));
      }
    }
  }
  return I;
}

namespace {
// Row echelon over a field; returns rank, transforms M in place.
int field_echelon(const Ring& R, PMat& M) {
  int rank = 0;
  for (int col = 0; col < M.c && rank < M.r; ++col) {
    int piv = -1;
    for (int i = rank; i < M.r; ++i)
      if (!M.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < M.c; ++j) std::swap(M.at(rank, j), M.at(piv, j));
    Poly inv = poly_unit_inverse(R, M.at(rank, col));
    for (int j = 0; j < M.c; ++j) M.at(rank, j) = poly_mul(R, M.at(rank, j), inv);
    for (int i = 0; i < M.r; ++i) {
      if (i == rank || M.at(i, col).is_zero()) continue;
      Poly f = M.at(i, col);
      for (int j = 0; j < M.c; ++j)
        M.at(i, j) = poly_sub(R, M.at(i, j), poly_mul(R, f, M.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}
}  // namespace

int pm_rank_field(const Ring& R, PMat A) {
  check(R.is_field(), "rank over a field ring");
  return field_echelon(R, A);
}

std::vector<std::vector<Poly>> pm_left_nullspace_field(const Ring& R, const PMat& A) {
  // v A = 0  <=>  A^T v^T = 0: compute kernel of transpose via echelon of A^T
  PMat T = pm_transpose(A);
  int n = T.c;  // dimension of v
  PMat M = T;
  // echelon with column pivots recorded
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < M.c && rank < M.r; ++col) {
    int piv = -1;
    for (int i = rank; i < M.r; ++i)
      if (!M.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < M.c; ++j) std::swap(M.at(rank, j), M.at(piv, j));
    Poly inv = poly_unit_inverse(R, M.at(rank, col));
    for (int j = 0; j < M.c; ++j) M.at(rank, j) = poly_mul(R, M.at(rank, j), inv);
    for (int i = 0; i < M.r; ++i) {
      if (i == rank || M.at(i, col).is_zero()) continue;
      Poly f = M.at(i, col);
      for (int j = 0; j < M.c; ++j)
        M.at(i, j) = poly_sub(R, M.at(i, j), poly_mul(R, f, M.at(rank, j)));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(size_t(n), false);
  for (int c : pivot_col) is_pivot[size_t(c)] = true;
  std::vector<std::vector<Poly>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[size_t(free)]) continue;
    std::vector<Poly> v(size_t(n), poly_zero());
    v[size_t(free)] = poly_one(R);
    for (int i = 0; i < rank; ++i)
      v[size_t(pivot_col[size_t(i)])] = poly_neg(R, M.at(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Int>> pm_to_int(const PMat& A) {
  std::vector<std::vector<Int>> M(size_t(A.r), std::vector<Int>(size_t(A.c)));
  for (int i = 0; i < A.r; ++i)
    for (int j = 0; j < A.c; ++j) M[size_t(i)][size_t(j)] = poly_const(A.at(i, j));
  return M;
}

PMat pm_from_int(const Ring& R, const std::vector<std::vector<Int>>& M) {
  int r = int(M.size());
  int c = r ? int(M[0].size()) : 0;
  PMat A(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) A.at(i, j) = poly_from_int(R, M[size_t(i)][size_t(j)]);
  return A;
}

// ---- rational ----------------------------------------------------------------

QMat qm_identity(int n) {
  QMat M(n, n);
  for (int i = 0; i < n; ++i) M.at(i, i) = 1;
  return M;
}

QMat qm_mul(const QMat& A, const QMat& B) {
  check(A.c == B.r, "matrix shape mismatch");
  QMat C(A.r, B.c);
  for (int i = 0; i < A.r; ++i)
    for (int k = 0; k < A.c; ++k) {
      if (A.at(i, k) == 0) continue;
      for (int j = 0; j < B.c; ++j) {
        if (B.at(k, j) == 0) continue;
        C.at(i, j) += A.at(i, k) * B.at(k, j);
      }
    }
  return C;
}

namespace {
int q_echelon(QMat& M, std::vector<int>* pivots) {
  int rank = 0;
  for (int col = 0; col < M.c && rank < M.r; ++col) {
    int piv = -1;
    for (int i = rank; i < M.r; ++i)
      if (M.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < M.c; ++j) std::swap(M.at(rank, j), M.at(piv, j));
    Rat inv = Rat(1) / M.at(rank, col);
    for (int j = 0; j < M.c; ++j) M.at(rank, j) *= inv;
    for (int i = 0; i < M.r; ++i) {
      if (i == rank || M.at(i, col) == 0) continue;
      Rat f = M.at(i, col);
      for (int j = 0; j < M.c; ++j) M.at(i, j) -= f * M.at(rank, j);
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  return rank;
}
}  // namespace

int qm_rank(QMat A) { return q_echelon(A, nullptr); }

bool qm_invert(const QMat& A, QMat* out) {
  check(A.r == A.c, "inverse needs a square matrix");
  int n = A.r;
  QMat M(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) M.at(i, j) = A.at(i, j);
    M.at(i, n + i) = 1;
  }
  std::vector<int> pivots;
  int rank = q_echelon(M, &pivots);
  if (rank < n) return false;
  for (int i = 0; i < n; ++i)
    if (pivots[size_t(i)] != i) return false;
  *out = QMat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out->at(i, j) = M.at(i, n + j);
  return true;
}

std::vector<std::vector<Rat>> qm_left_nullspace(const QMat& A) {
  // kernel of v -> v A: echelon of A^T
  QMat T(A.c, A.r);
  for (int i = 0; i < A.r; ++i)
    for (int j = 0; j < A.c; ++j) T.at(j, i) = A.at(i, j);
  std::vector<int> pivots;
  QMat M = T;
  int rank = q_echelon(M, &pivots);
  int n = M.c;
  std::vector<bool> is_pivot(size_t(n), false);
  for (int c : pivots) is_pivot[size_t(c)] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[size_t(free)]) continue;
    std::vector<Rat> v(size_t(n), Rat(0));
    v[size_t(free)] = 1;
    for (int i = 0; i < rank; ++i) v[size_t(pivots[size_t(i)])] = -M.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool qm_solve_left(const QMat& A, const std::vector<Rat>& b, std::vector<Rat>* x) {
  // x A = b  <=>  A^T x^T = b^T
  int n = A.r, m = A.c;
  check(int(b.size()) == m, "rhs size mismatch");
  QMat M(m, n + 1);
  for (int i = 0; i < A.r; ++i)
    for (int j = 0; j < A.c; ++j) M.at(j, i) = A.at(i, j);
  for (int j = 0; j < m; ++j) M.at(j, n) = b[size_t(j)];
  std::vector<int> pivots;
  int rank = q_echelon(M, &pivots);
  std::vector<Rat> sol(size_t(n), Rat(0));
  for (int i = 0; i < rank; ++i) {
    if (pivots[size_t(i)] == n) return false;  // inconsistent
    sol[size_t(pivots[size_t(i)])] = M.at(i, n);
  }
  *x = sol;
  return true;
}

// ---- integer normal forms -----------------------------------------------------

IMat imat_identity(int n) {
  IMat I(size_t(n), std::vector<Int>(size_t(n), Int(0)));
  for (int i = 0; i < n; ++i) I[size_t(i)][size_t(i)] = 1;
  return I;
}

IMat imat_mul(const IMat& A, const IMat& B) {
  size_t n = A.size(), m = B.empty() ? 0 : B[0].size(), k = B.size();
  IMat C(n, std::vector<Int>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (A[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) C[i][j] += A[i][l] * B[l][j];
    }
  return C;
}

SmithResult smith_normal_form(IMat A) {
  int m = int(A.size());
  int n = m ? int(A[0].size()) : 0;
  SmithResult res;
  res.U = imat_identity(m);
  res.V = imat_identity(n);

  auto row_op = [&](int i, int j, const Int& k) {  // row_i += k row_j
    for (int c = 0; c < n; ++c) A[size_t(i)][size_t(c)] += k * A[size_t(j)][size_t(c)];
    for (int c = 0; c < m; ++c)
      res.U[size_t(i)][size_t(c)] += k * res.U[size_t(j)][size_t(c)];
  };
  auto col_op = [&](int i, int j, const Int& k) {  // col_i += k col_j
    for (int r2 = 0; r2 < m; ++r2)
      A[size_t(r2)][size_t(i)] += k * A[size_t(r2)][size_t(j)];
    for (int r2 = 0; r2 < n; ++r2)
      res.V[size_t(r2)][size_t(i)] += k * res.V[size_t(r2)][size_t(j)];
  };
  auto row_swap = [&](int i, int j) {
    std::swap(A[size_t(i)], A[size_t(j)]);
    std::swap(res.U[size_t(i)], res.U[size_t(j)]);
  };
  auto col_swap = [&](int i, int j) {
    for (int r2 = 0; r2 < m; ++r2)
      std::swap(A[size_t(r2)][size_t(i)], A[size_t(r2)][size_t(j)]);
    for (int r2 = 0; r2 < n; ++r2)
      std::swap(res.V[size_t(r2)][size_t(i)], res.V[size_t(r2)][size_t(j)]);
  };
  auto row_neg = [&](int i) {
    for (int c = 0; c < n; ++c) A[size_t(i)][size_t(c)] = -A[size_t(i)][size_t(c)];
    for (int c = 0; c < m; ++c) res.U[size_t(i)][size_t(c)] = -res.U[size_t(i)][size_t(c)];
  };

  int t = 0;
  while (true) {
    // find smallest nonzero entry in the region [t.., t..]
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        Int v = A[size_t(i)][size_t(j)];
        if (v == 0) continue;
        Int av = v < 0 ? -v : v;
        if (pi < 0 || av < best) {
          best = av;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != t) row_swap(pi, t);
    if (pj != t) col_swap(pj, t);
    if (A[size_t(t)][size_t(t)] < 0) row_neg(t);

    bool dirty = false;
    for (int i = t + 1; i < m; ++i) {
      Int q = A[size_t(i)][size_t(t)] / A[size_t(t)][size_t(t)];
      if (q != 0) row_op(i, t, -q);
      if (A[size_t(i)][size_t(t)] != 0) dirty = true;
    }
    for (int j = t + 1; j < n; ++j) {
      Int q = A[size_t(t)][size_t(j)] / A[size_t(t)][size_t(t)];
      if (q != 0) col_op(j, t, -q);
      if (A[size_t(t)][size_t(j)] != 0) dirty = true;
    }
    if (dirty) continue;  // re-select pivot; remainders are smaller
    ++t;
  }

  // enforce divisibility chain
  for (int i = 0; i + 1 < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      if (A[size_t(j)][size_t(j)] % A[size_t(i)][size_t(i)] == 0) continue;
      // mix: col_i += col_j, then clear with row/col ops (restart region at i)
      col_op(i, j, 1);
      // now A[j][i] = A[j][j] != 0; reduce pair (i..) again
      int tt = i;
      while (true) {
        int pi = -1, pj = -1;
        Int best = 0;
        for (int r2 = tt; r2 < t; ++r2)
          for (int c2 = tt; c2 < t; ++c2) {
            Int v = A[size_t(r2)][size_t(c2)];
            if (v == 0) continue;
            Int av = v < 0 ? -v : v;
            if (pi < 0 || av < best) {
              best = av;
              pi = r2;
              pj = c2;
            }
          }
        if (pi < 0) break;
        if (pi != tt) row_swap(pi, tt);
        if (pj != tt) col_swap(pj, tt);
        if (A[size_t(tt)][size_t(tt)] < 0) row_neg(tt);
        bool dirty = false;
        for (int r2 = tt + 1; r2 < t; ++r2) {
          Int q = A[size_t(r2)][size_t(tt)] / A[size_t(tt)][size_t(tt)];
          if (q != 0) row_op(r2, tt, -q);
          if (A[size_t(r2)][size_t(tt)] != 0) dirty = true;
        }
        for (int c2 = tt + 1; c2 < t; ++c2) {
          Int q = A[size_t(tt)][size_t(c2)] / A[size_t(tt)][size_t(tt)];
          if (q != 0) col_op(c2, tt, -q);
          if (A[size_t(tt)][size_t(c2)] != 0) dirty = true;
        }
        if (!dirty) ++tt;
        if (tt >= t) break;
      }
      j = i;  // recheck divisibility for this i
    }
  }

  res.D = A;
  res.rank = t;
  for (int i = 0; i < t; ++i) res.diag.push_back(A[size_t(i)][size_t(i)]);
  return res;
}

IntQuotient integer_quotient(int n, const IMat& rows) {
  IntQuotient out;
  if (rows.empty()) {
    out.free_rank = n;
    out.proj = imat_identity(n);
    out.section = imat_identity(n);
    return out;
  }
  SmithResult s = smith_normal_form(rows);
  int r = s.rank;
  for (const Int& d : s.diag)
    if (d != 1 && d != -1) out.torsion.push_back(d < 0 ? -d : d);
  out.free_rank = n - r;
  // y = x V; free coordinates are y_r .. y_{n-1}
  out.proj = IMat(size_t(n), std::vector<Int>(size_t(out.free_rank)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < out.free_rank; ++j)
      out.proj[size_t(i)][size_t(j)] = s.V[size_t(i)][size_t(r + j)];
  // section: rows r.. of V^{-1}
  QMat V(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) V.at(i, j) = Rat(s.V[size_t(i)][size_t(j)]);
  QMat Vi;
  check(qm_invert(V, &Vi), "SNF transform not invertible");
  out.section = IMat(size_t(out.free_rank), std::vector<Int>(size_t(n)));
  for (int i = 0; i < out.free_rank; ++i)
    for (int j = 0; j < n; ++j) {
      Rat v = Vi.at(r + i, j);
      check(boost::multiprecision::denominator(v) == 1, "section not integral");
      out.section[size_t(i)][size_t(j)] = boost::multiprecision::numerator(v);
    }
  return out;
}

}  // namespace phec
