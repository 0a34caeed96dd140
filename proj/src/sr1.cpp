#include "sr1kit/sr1.hpp"

#include "sr1kit/error.hpp"

namespace sr1kit {

std::string to_string(Sr1Reason r) {
  switch (r) {
    case Sr1Reason::Unit:
      return "Unit";
    case Sr1Reason::ZeroDeterminant:
      return "ZeroDeterminant";
    case Sr1Reason::DeterminantObstruction:
      return "DeterminantObstruction";
  }
  return "?";
}

Scalar unit_condition_value(const Mat2& a, const Mat2& x, const Mat2& y) {
  if (a.modulus() != x.modulus() || a.modulus() != y.modulus())
    throw ring_mismatch_error("unit_condition_value: A, X, Y must share one ring");
  Scalar one = a.a11().one_like();
  Scalar det_a = a.det();
  Scalar det_x = x.det();
  Scalar det_y = y.det();
  Scalar tr_xa = (x * a).trace();
  Scalar tr_xy = (x * y).trace();
  Scalar tr_a_adjy = (a * y.adjugate()).trace();
  return det_y * (det_x * det_a - tr_xa + one) + det_a * (tr_xy + one) - tr_a_adjy;
}

Sr1Verdict is_sr1_integer(const Mat2& a) {
  if (!a.over_integers()) throw precondition_error("is_sr1_integer expects an integer matrix");
  Int d = a.det().value();
  if (d == 1 || d == -1) return {true, Sr1Reason::Unit, d};
  if (d == 0) return {true, Sr1Reason::ZeroDeterminant, d};
  return {false, Sr1Reason::DeterminantObstruction, d};
}

ScalarDiagWitness non_sr1_witness_scalar_diag(const Int& n) {
  if (abs(n) < 2)
    throw precondition_error("non_sr1_witness_scalar_diag needs |n| >= 2; n*I2 has sr1 for n in {-1,0,1}");
  // For n >= 2: X = -(n+1) I2, so XA - I2 = -(1+n+n^2) I2 and the
  // determinant can be read mod 1+n+n^2, where it is forced to n^2.
  // For n <= -2 the sign-flip reduction through -A gives X = (1-n) I2 with
  // modulus 1-n+n^2; the forced value is again n^2.
  Int m = n > 0 ? 1 + n + n * n : 1 - n + n * n;
  Mat2 x = n > 0 ? Mat2::scalar_diag(-(n + 1)) : Mat2::scalar_diag(1 - n);
  Int sq = mod_floor(n * n, m);
  if (sq == mod_floor(Int(1), m) || sq == mod_floor(Int(-1), m))
    throw internal_error("scalar-diagonal witness: n^2 is +-1 mod " + to_string(m));
  return {x, m};
}

namespace {

unsigned long small_modulus_for_exhaustive(const Mat2& a, const char* op) {
  if (a.over_integers())
    throw precondition_error(std::string(op) + " expects a matrix over Z/n, 2 <= n <= 6");
  if (a.modulus() > 6)
    throw precondition_error(std::string(op) + ": modulus " + to_string(a.modulus()) +
                             " exceeds the exhaustive-enumeration bound 6");
  return a.modulus().convert_to<unsigned long>();
}

}  // namespace

bool lsr1_finite(const Mat2& a) {
  unsigned long n = small_modulus_for_exhaustive(a, "lsr1_finite");
  unsigned long grid = n * n * n * n;
  Mat2 id = Mat2::identity(a.modulus());
  for (unsigned long xi = 0; xi < grid; ++xi) {
    Mat2 b = Mat2::from_grid_index(xi, a.modulus()) * a - id;
    bool found = false;
    for (unsigned long yi = 0; yi < grid && !found; ++yi) {
      Mat2 y = Mat2::from_grid_index(yi, a.modulus());
      found = (a + y * b).is_unit();
    }
    if (!found) return false;
  }
  return true;
}

bool rsr1_finite(const Mat2& a) {
  unsigned long n = small_modulus_for_exhaustive(a, "rsr1_finite");
  unsigned long grid = n * n * n * n;
  Mat2 id = Mat2::identity(a.modulus());
  for (unsigned long xi = 0; xi < grid; ++xi) {
    Mat2 b = a * Mat2::from_grid_index(xi, a.modulus()) - id;
    bool found = false;
    for (unsigned long yi = 0; yi < grid && !found; ++yi) {
      Mat2 y = Mat2::from_grid_index(yi, a.modulus());
      found = (a + b * y).is_unit();
    }
    if (!found) return false;
  }
  return true;
}

bool jacobson_check(const Mat2& a, const Mat2& b) {
  if (!a.over_integers() || !b.over_integers())
    throw precondition_error("jacobson_check expects integer matrices");
  Mat2 id = Mat2::identity();
  Int d_ab = (id - a * b).det().value();
  Int d_ba = (id - b * a).det().value();
  if (d_ab != d_ba)
    throw internal_error("det(I-AB) != det(I-BA): " + to_string(d_ab) + " vs " + to_string(d_ba));
  return is_sr1_integer(id - a * b).is_sr1 == is_sr1_integer(id - b * a).is_sr1;
}

}  // namespace sr1kit
