#pragma once

#include "sr1kit/integers.hpp"

#include <optional>
#include <vector>

namespace sr1kit {

// a*x^2 + b*xy + c*y^2 + d*x + e*y + f = 0 over Z.
struct Conic {
  Int a, b, c, d, e, f;

  Int quad_discriminant() const { return b * b - 4 * a * c; }
  Int eval(const Int& x, const Int& y) const {
    return a * x * x + b * x * y + c * y * y + d * x + e * y + f;
  }
  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0 && e == 0 && f == 0; }
};

struct ConicPoint {
  Int x, y;
  bool operator==(const ConicPoint& o) const { return x == o.x && y == o.y; }
  bool operator<(const ConicPoint& o) const { return x != o.x ? x < o.x : y < o.y; }
};

// One-parameter solution family x(k), y(k), each a polynomial of degree at
// most 2 with integer coefficients; every integer k yields a solution.
struct ConicFamily {
  Int x2, x1, x0;
  Int y2, y1, y0;

  ConicPoint at(const Int& k) const {
    return {x2 * k * k + x1 * k + x0, y2 * k * k + y1 * k + y0};
  }
  bool contains(const Int& x, const Int& y) const;
  bool operator<(const ConicFamily& o) const;
};

// points + families exhaust the solution set when complete; with
// complete = false (positive non-square discriminant) only solutions
// discovered within |x| <= bound_used are listed.
struct ConicSolutionSet {
  std::vector<ConicPoint> points;
  std::vector<ConicFamily> families;
  bool complete = false;
  std::optional<Int> bound_used;

  bool contains(const Int& x, const Int& y) const;
};

// Exact solver: negative discriminant -> bounded enumeration; zero
// discriminant -> parabolic parametrization; positive square discriminant
// (and the degenerate a = c = 0 case) -> factorization over Q and divisor
// enumeration; positive non-square -> scan with |x| <= fallback_bound,
// complete = false. The all-zero conic is rejected.
ConicSolutionSet solve_conic(const Conic& conic, const Int& fallback_bound);

}  // namespace sr1kit
