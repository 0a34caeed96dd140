#pragma once

#include "sr1kit/mat2.hpp"

namespace sr1kit {

// Diagonal reduction U*A*V = diag(d1, d2) with U, V unimodular, d1, d2 >= 0
// and d1 | d2 (d1 = gcd of the entries of A; d1 = d2 = 0 for A = 0).
struct SmithForm {
  Mat2 U;
  Mat2 V;
  Int d1;
  Int d2;

  Mat2 diagonal() const { return Mat2::from_ints(d1, 0, 0, d2); }
};

SmithForm smith_form(const Mat2& a);

// True iff U*A*U^-1 == B exactly; U must be unimodular.
bool conjugating_pair_check(const Mat2& a, const Mat2& b, const Mat2& u);

}  // namespace sr1kit
