#pragma once

// Exact linear algebra: dense matrices over a tagged ring, rational solvers
// (cpp_rational), Smith/Hermite normal forms over Z.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "phec/ring.hpp"

namespace phec {

using Rat = boost::multiprecision::cpp_rational;

// ---- matrices over a Ring ---------------------------------------------------

struct PMat {
  int r = 0, c = 0;
  std::vector<Poly> a;

  PMat() = default;
  PMat(int rows, int cols) : r(rows), c(cols), a(size_t(rows) * cols) {}
  Poly& at(int i, int j) { return a[size_t(i) * c + j]; }
  const Poly& at(int i, int j) const { return a[size_t(i) * c + j]; }
  bool operator==(const PMat& o) const { return r == o.r && c == o.c && a == o.a; }
};

PMat pm_identity(const Ring& R, int n);
PMat pm_mul(const Ring& R, const PMat& A, const PMat& B);
PMat pm_add(const Ring& R, const PMat& A, const PMat& B);
PMat pm_sub(const Ring& R, const PMat& A, const PMat& B);
PMat pm_scale(const Ring& R, const PMat& A, const Poly& s);
PMat pm_kron(const Ring& R, const PMat& A, const PMat& B);
PMat pm_transpose(const PMat& A);
bool pm_is_zero(const PMat& A);

// Row vector times matrix.
std::vector<Poly> pm_row_mul(const Ring& R, const std::vector<Poly>& v, const PMat& A);

// Fraction-free (Bareiss) determinant; works over Z and Z[q].
Poly pm_det_bareiss(const Ring& R, PMat A);

// Inverse over a field ring (GFp).  Fails if singular.
PMat pm_inverse_field(const Ring& R, const PMat& A);
// Rank over a field ring.
int pm_rank_field(const Ring& R, PMat A);
// Nullspace basis (as rows) of v*A = 0 over a field ring: left nullspace.
std::vector<std::vector<Poly>> pm_left_nullspace_field(const Ring& R, const PMat& A);

// Integer view of a PMat over Z (fails on nonconstant entries).
std::vector<std::vector<Int>> pm_to_int(const PMat& A);
PMat pm_from_int(const Ring& R, const std::vector<std::vector<Int>>& M);

// ---- rational matrices ------------------------------------------------------

struct QMat {
  int r = 0, c = 0;
  std::vector<Rat> a;
  QMat() = default;
  QMat(int rows, int cols) : r(rows), c(cols), a(size_t(rows) * cols) {}
  Rat& at(int i, int j) { return a[size_t(i) * c + j]; }
  const Rat& at(int i, int j) const { return a[size_t(i) * c + j]; }
};

QMat qm_mul(const QMat& A, const QMat& B);
QMat qm_identity(int n);
int qm_rank(QMat A);
bool qm_invert(const QMat& A, QMat* out);
// Basis (rows) of the left nullspace {v : v A = 0}.
std::vector<std::vector<Rat>> qm_left_nullspace(const QMat& A);
// Solve x A = b for x (row convention); returns false if inconsistent.
bool qm_solve_left(const QMat& A, const std::vector<Rat>& b, std::vector<Rat>* x);

// ---- integer normal forms ---------------------------------------------------

using IMat = std::vector<std::vector<Int>>;

// Smith normal form: U*A*V = D diagonal with d_i | d_{i+1}; U, V unimodular.
struct SmithResult {
  IMat U, V, D;
  std::vector<Int> diag;  // nonzero invariant factors
  int rank = 0;
};
SmithResult smith_normal_form(IMat A);

// Quotient Z^n / rowspace(A): invariants (torsion), free rank, and a
// projection matrix P (n x free_rank) such that x -> x*P gives coordinates
// in the free part, plus a section S (free_rank x n) with S*P = id.
struct IntQuotient {
  std::vector<Int> torsion;  // invariant factors > 1
  int free_rank = 0;
  IMat proj;     // n x free_rank
  IMat section;  // free_rank x n
};
IntQuotient integer_quotient(int n, const IMat& rows);

IMat imat_mul(const IMat& A, const IMat& B);
IMat imat_identity(int n);

}  // namespace phec
