#pragma once

#include "sr1kit/mat2.hpp"
#include "sr1kit/matn.hpp"
#include "sr1kit/smith.hpp"

#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <variant>

namespace sr1kit {

// A verified unitizer: unit_value = det(A + Y(XA - I2)) and is +-1. The
// factory recomputes the determinant, so an ill-formed certificate cannot be
// constructed.
struct UnitizerCertificate {
  Mat2 a;
  Mat2 x;
  Mat2 y;
  Int unit_value;
};

UnitizerCertificate make_certificate(const Mat2& a, const Mat2& x, const Mat2& y);

// A unitizer rule for one fixed matrix: maps X to a certificate for that X.
using UnitizerOracle = std::function<UnitizerCertificate(const Mat2&)>;

// Closed forms -------------------------------------------------------------

// Units: Y = 0 works for every X.
UnitizerCertificate unitizer_unit(const Mat2& a, const Mat2& x);

// r*E11 with Y = [[0,1],[1,x11]]; unit value -1.
UnitizerCertificate unitizer_rE11_2x2(const Int& r, const Mat2& x);
// The symmetric closed forms for all four positions r*Eij.
UnitizerCertificate unitizer_rEij_2x2(const Int& r, int i, int j, const Mat2& x);

// n x n version: Y is the anti-diagonal matrix with (n,n) entry (-1)^n * x11;
// the resulting determinant is (-1)^n.
std::pair<MatN, Int> unitizer_rE11_nxn(const Int& r, const MatN& x);

// A = [[r,s],[0,0]] with gcd(r,s) = 1: Y = [[0,0],[z0,t0]] with
// s*z0 - r*t0 = 1, independent of X. z0 is normalized into [0, |r|) when
// r != 0.
UnitizerCertificate unitizer_zero_row_coprime(const Int& r, const Int& s, const Mat2& x);

// A = [[r, sign*r],[0,0]]: Y = [[1,0],[a+c+1,1]] (sign +1) or
// [[1,0],[-a+c-1,1]] (sign -1), where a, c are entries of X.
UnitizerCertificate unitizer_equal_entries(const Int& r, const Mat2& x, int sign);

// A = [[1,u],[v,uv]]: Y = [[0,1],[-1, v-u-a-vb-uc-uvd]]; unit value +1.
UnitizerCertificate unitizer_M_uv(const Int& u, const Int& v, const Mat2& x);

// A = [[6,10],[0,0]]: the residue-class table in c mod 3 (c = x21). For
// c = 1 (mod 3) two unitizers exist; alt_c1 selects the second one.
UnitizerCertificate unitizer_diophantine_6_10(const Mat2& x, bool alt_c1 = false);

// Certificate propagation --------------------------------------------------

// Oracle for u*A from an oracle for A: Y'(X) = u * Y(Xu).
UnitizerOracle propagate_left_mul(const Mat2& u, UnitizerOracle base);
// Oracle for u^-1 A u: Y'(X) = u^-1 * Y(u X u^-1) * u.
UnitizerOracle propagate_conjugate(const Mat2& u, UnitizerOracle base);
// Oracle for A*u: Y'(X) = Y(uX) * u.
UnitizerOracle propagate_right_mul(const Mat2& u, UnitizerOracle base);

// Assembly -----------------------------------------------------------------

// Unitizer rule for any integer sr1 matrix: units and zero directly, and the
// singular case through the Smith form diag(g, 0) = g*E11 propagated back
// along A = U^-1 diag(g,0) V^-1. Rejects non-sr1 input.
UnitizerOracle unitizer_oracle(const Mat2& a);
UnitizerCertificate find_unitizer(const Mat2& a, const Mat2& x);

struct NotFoundWithinBound {
  Int bound;
};

// Exhaustive scan of Y with entries in [-bound, bound], lexicographic in
// (y11, y12, y21, y22); returns the first certificate found.
std::variant<UnitizerCertificate, NotFoundWithinBound> search_unitizer_bounded(const Mat2& a,
                                                                               const Mat2& x,
                                                                               const Int& bound);

// Linear Diophantine p*t + q*c + r*a = m ------------------------------------

// Solution family: base + k1*gen1 + k2*gen2 ranges over every solution.
struct LinearDiophantine3 {
  Int p, q, r, m;
  std::array<Int, 3> base;
  std::array<Int, 3> gen1;
  std::array<Int, 3> gen2;

  std::array<Int, 3> at(const Int& k1, const Int& k2) const;
  bool contains(const std::array<Int, 3>& v) const;
};

// Empty when gcd(p,q,r) does not divide m; (p,q,r) = 0 is rejected.
std::optional<LinearDiophantine3> solve_linear3(const Int& p, const Int& q, const Int& r,
                                                const Int& m);

}  // namespace sr1kit
