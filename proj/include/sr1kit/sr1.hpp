#pragma once

#include "sr1kit/mat2.hpp"

#include <string>

namespace sr1kit {

enum class Sr1Reason { Unit, ZeroDeterminant, DeterminantObstruction };

std::string to_string(Sr1Reason r);

struct Sr1Verdict {
  bool is_sr1;
  Sr1Reason reason;
  Int det;
};

// Closed-form value of det(A + Y(XA - I2)) in terms of determinants, traces
// and the classical adjoint; all three matrices must share one commutative
// ring. Equal to the direct determinant identically (enforced by tests).
Scalar unit_condition_value(const Mat2& a, const Mat2& x, const Mat2& y);

// Integer 2x2 classification: units have sr1, non-units have sr1 exactly
// when the determinant vanishes.
Sr1Verdict is_sr1_integer(const Mat2& a);

// Adversarial witness against A = n*I2, |n| >= 2: an X such that no Y makes
// A + Y(XA - I2) a unit, certified by det = n^2 (mod modulus) with
// n^2 incongruent to +-1.
struct ScalarDiagWitness {
  Mat2 x;
  Int modulus;
};
ScalarDiagWitness non_sr1_witness_scalar_diag(const Int& n);

// Exhaustive left/right sr1 decisions over Z/n, 2 <= n <= 6. Left form:
// for all X there is Y with A + Y(XA - I2) a unit. Right form:
// A + (AX - I2)Y, the transpose-mirror of the left form.
bool lsr1_finite(const Mat2& a);
bool rsr1_finite(const Mat2& a);

// sr1-status of I2 - AB equals that of I2 - BA over Z; the two determinants
// are asserted equal internally.
bool jacobson_check(const Mat2& a, const Mat2& b);

}  // namespace sr1kit
