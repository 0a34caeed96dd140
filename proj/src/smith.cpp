#include "sr1kit/smith.hpp"

#include "sr1kit/error.hpp"

#include <utility>

namespace sr1kit {

namespace {

// Working state: m = U0 * A * V0 at every step, with U0, V0 unimodular.
struct Reduction {
  Int m[2][2];
  Int u[2][2] = {{1, 0}, {0, 1}};
  Int v[2][2] = {{1, 0}, {0, 1}};

  void swap_rows() {
    std::swap(m[0][0], m[1][0]);
    std::swap(m[0][1], m[1][1]);
    std::swap(u[0][0], u[1][0]);
    std::swap(u[0][1], u[1][1]);
  }

  void swap_cols() {
    std::swap(m[0][0], m[0][1]);
    std::swap(m[1][0], m[1][1]);
    std::swap(v[0][0], v[0][1]);
    std::swap(v[1][0], v[1][1]);
  }

  // row i <- row i - q * row j
  void row_sub(int i, int j, const Int& q) {
    m[i][0] -= q * m[j][0];
    m[i][1] -= q * m[j][1];
    u[i][0] -= q * u[j][0];
    u[i][1] -= q * u[j][1];
  }

  // col i <- col i - q * col j
  void col_sub(int i, int j, const Int& q) {
    m[0][i] -= q * m[0][j];
    m[1][i] -= q * m[1][j];
    v[0][i] -= q * v[0][j];
    v[1][i] -= q * v[1][j];
  }

  // col i <- col i + col j
  void col_add(int i, int j) {
    m[0][i] += m[0][j];
    m[1][i] += m[1][j];
    v[0][i] += v[0][j];
    v[1][i] += v[1][j];
  }

  void negate_col(int i) {
    m[0][i] = -m[0][i];
    m[1][i] = -m[1][i];
    v[0][i] = -v[0][i];
    v[1][i] = -v[1][i];
  }
};

}  // namespace

SmithForm smith_form(const Mat2& a) {
  if (!a.over_integers()) throw precondition_error("smith_form expects an integer matrix");

  Reduction r;
  r.m[0][0] = a.a11().value();
  r.m[0][1] = a.a12().value();
  r.m[1][0] = a.a21().value();
  r.m[1][1] = a.a22().value();

  auto build = [&r]() {
    return SmithForm{Mat2::from_ints(r.u[0][0], r.u[0][1], r.u[1][0], r.u[1][1]),
                     Mat2::from_ints(r.v[0][0], r.v[0][1], r.v[1][0], r.v[1][1]), r.m[0][0],
                     r.m[1][1]};
  };

  bool all_zero = r.m[0][0] == 0 && r.m[0][1] == 0 && r.m[1][0] == 0 && r.m[1][1] == 0;
  if (all_zero) return build();

  // Pivot: smallest nonzero absolute value, ties broken row-major.
  int pi = -1, pj = -1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (r.m[i][j] == 0) continue;
      if (pi < 0 || abs(r.m[i][j]) < abs(r.m[pi][pj])) {
        pi = i;
        pj = j;
      }
    }
  if (pi == 1) r.swap_rows();
  if (pj == 1) r.swap_cols();

  // Euclidean elimination of the off-diagonal entries. Each swap strictly
  // shrinks |m00|, so this terminates.
  while (r.m[1][0] != 0 || r.m[0][1] != 0) {
    if (r.m[1][0] != 0) {
      Int q = r.m[1][0] / r.m[0][0];
      r.row_sub(1, 0, q);
      if (r.m[1][0] != 0) r.swap_rows();
      continue;
    }
    Int q = r.m[0][1] / r.m[0][0];
    r.col_sub(1, 0, q);
    if (r.m[0][1] != 0) r.swap_cols();
  }

  // diag(0, d2) with d2 != 0 can only appear if the pivot vanished; move the
  // nonzero entry up front.
  if (r.m[0][0] == 0 && r.m[1][1] != 0) {
    r.swap_rows();
    r.swap_cols();
  }

  // Enforce d1 | d2 by folding d2 into the pivot and re-eliminating.
  while (r.m[0][0] != 0 && r.m[1][1] % r.m[0][0] != 0) {
    r.col_add(0, 1);
    while (r.m[1][0] != 0 || r.m[0][1] != 0) {
      if (r.m[1][0] != 0) {
        Int q = r.m[1][0] / r.m[0][0];
        r.row_sub(1, 0, q);
        if (r.m[1][0] != 0) r.swap_rows();
        continue;
      }
      Int q = r.m[0][1] / r.m[0][0];
      r.col_sub(1, 0, q);
      if (r.m[0][1] != 0) r.swap_cols();
    }
  }

  // Sign normalization d1, d2 >= 0; the unimodular factors land in V.
  if (r.m[0][0] < 0) r.negate_col(0);
  if (r.m[1][1] < 0) r.negate_col(1);

  return build();
}

bool conjugating_pair_check(const Mat2& a, const Mat2& b, const Mat2& u) {
  if (!u.is_unit()) throw precondition_error("conjugating_pair_check: U is not a unit");
  return u * a * u.inverse_unit() == b;
}

}  // namespace sr1kit
