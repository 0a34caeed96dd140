#include "sr1kit/conic.hpp"

#include "sr1kit/error.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace sr1kit {

namespace {

// Roots of a*k^2 + b*k + c = 0 over Z, a != 0.
std::vector<Int> quadratic_integer_roots(const Int& a, const Int& b, const Int& c) {
  std::vector<Int> roots;
  auto s = perfect_square_root(b * b - 4 * a * c);
  if (!s) return roots;
  for (int sign : {1, -1}) {
    Int num = -b + sign * (*s);
    if (num % (2 * a) == 0) roots.push_back(num / (2 * a));
    if (*s == 0) break;
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// Integer points of alpha*x + beta*y = gamma as a linear family.
std::optional<ConicFamily> line_family(const Int& alpha, const Int& beta, const Int& gamma) {
  if (alpha == 0 && beta == 0) {
    if (gamma != 0) return std::nullopt;
    throw internal_error("line_family: degenerate 0 = 0 line");
  }
  Bezout bz = extended_gcd(alpha, beta);
  if (gamma % bz.g != 0) return std::nullopt;
  Int scale = gamma / bz.g;
  ConicFamily fam;
  fam.x2 = 0;
  fam.x1 = beta / bz.g;
  fam.x0 = bz.x * scale;
  fam.y2 = 0;
  fam.y1 = -(alpha / bz.g);
  fam.y0 = bz.y * scale;
  return fam;
}

struct Collector {
  const Conic& conic;
  std::set<ConicPoint> points;
  std::vector<ConicFamily> families;

  void add_point(const Int& x, const Int& y) {
    if (conic.eval(x, y) != 0)
      throw internal_error("conic solver produced a non-solution (" + to_string(x) + ", " +
                           to_string(y) + ")");
    points.insert(ConicPoint{x, y});
  }

  void add_family(const ConicFamily& fam) {
    // The family must satisfy the conic identically in the parameter: expand
    // conic(x(k), y(k)) as a degree-4 polynomial (index i holds the k^(4-i)
    // coefficient) and require all-zero.
    auto sq = [](const Int& c2, const Int& c1, const Int& c0) {
      return std::array<Int, 5>{c2 * c2, 2 * c2 * c1, c1 * c1 + 2 * c2 * c0, 2 * c1 * c0, c0 * c0};
    };
    std::array<Int, 5> xx = sq(fam.x2, fam.x1, fam.x0);
    std::array<Int, 5> yy = sq(fam.y2, fam.y1, fam.y0);
    std::array<Int, 5> xy{fam.x2 * fam.y2, fam.x2 * fam.y1 + fam.x1 * fam.y2,
                          fam.x2 * fam.y0 + fam.x1 * fam.y1 + fam.x0 * fam.y2,
                          fam.x1 * fam.y0 + fam.x0 * fam.y1, fam.x0 * fam.y0};
    std::array<Int, 5> total{};
    for (int i = 0; i < 5; ++i)
      total[i] = conic.a * xx[i] + conic.b * xy[i] + conic.c * yy[i];
    total[2] += conic.d * fam.x2 + conic.e * fam.y2;
    total[3] += conic.d * fam.x1 + conic.e * fam.y1;
    total[4] += conic.d * fam.x0 + conic.e * fam.y0 + conic.f;
    for (const Int& coeff : total)
      if (coeff != 0) throw internal_error("conic solver produced an invalid family");
    families.push_back(fam);
  }

  ConicSolutionSet finish(bool complete, std::optional<Int> bound) {
    // Drop isolated points already covered by a family.
    ConicSolutionSet out;
    for (const auto& pt : points) {
      bool covered = false;
      for (const auto& fam : families)
        if (fam.contains(pt.x, pt.y)) {
          covered = true;
          break;
        }
      if (!covered) out.points.push_back(pt);
    }
    std::sort(families.begin(), families.end());
    out.families = std::move(families);
    out.complete = complete;
    out.bound_used = std::move(bound);
    return out;
  }
};

}  // namespace

bool ConicFamily::contains(const Int& x, const Int& y) const {
  auto check = [this, &x, &y](const Int& k) { return at(k) == ConicPoint{x, y}; };
  if (x2 != 0) {
    for (const Int& k : quadratic_integer_roots(x2, x1, x0 - x))
      if (check(k)) return true;
    return false;
  }
  if (x1 != 0) {
    if ((x - x0) % x1 != 0) return false;
    return check((x - x0) / x1);
  }
  if (x != x0) return false;
  if (y2 != 0) {
    for (const Int& k : quadratic_integer_roots(y2, y1, y0 - y))
      if (check(k)) return true;
    return false;
  }
  if (y1 != 0) return (y - y0) % y1 == 0;
  return y == y0;
}

bool ConicFamily::operator<(const ConicFamily& o) const {
  return std::tie(x2, x1, x0, y2, y1, y0) < std::tie(o.x2, o.x1, o.x0, o.y2, o.y1, o.y0);
}

bool ConicSolutionSet::contains(const Int& x, const Int& y) const {
  for (const auto& pt : points)
    if (pt.x == x && pt.y == y) return true;
  for (const auto& fam : families)
    if (fam.contains(x, y)) return true;
  return false;
}

namespace {

ConicSolutionSet swap_xy(ConicSolutionSet in) {
  for (auto& pt : in.points) std::swap(pt.x, pt.y);
  for (auto& fam : in.families) {
    std::swap(fam.x2, fam.y2);
    std::swap(fam.x1, fam.y1);
    std::swap(fam.x0, fam.y0);
  }
  std::sort(in.points.begin(), in.points.end());
  std::sort(in.families.begin(), in.families.end());
  return in;
}

// Purely linear equation d*x + e*y + f = 0.
ConicSolutionSet solve_linear(const Conic& conic) {
  Collector col{conic};
  if (conic.d == 0 && conic.e == 0) {
    // f != 0 (the all-zero conic was rejected upstream): no solutions.
    return col.finish(true, std::nullopt);
  }
  if (auto fam = line_family(conic.d, conic.e, -conic.f)) col.add_family(*fam);
  return col.finish(true, std::nullopt);
}

// b*xy + d*x + e*y + f = 0 with a = c = 0, b != 0:
// (b*x + e)(b*y + d) = e*d - b*f.
ConicSolutionSet solve_hyperbolic_xy(const Conic& conic) {
  Collector col{conic};
  Int n = conic.e * conic.d - conic.b * conic.f;
  if (n == 0) {
    if (conic.e % conic.b == 0) {
      Int x0 = -conic.e / conic.b;
      col.add_family(ConicFamily{0, 0, x0, 0, 1, 0});
    }
    if (conic.d % conic.b == 0) {
      Int y0 = -conic.d / conic.b;
      col.add_family(ConicFamily{0, 1, 0, 0, 0, y0});
    }
    return col.finish(true, std::nullopt);
  }
  for (const Int& e1 : positive_divisors(n)) {
    for (int sign : {1, -1}) {
      Int u = sign * e1;
      Int v = n / u;
      if ((u - conic.e) % conic.b != 0 || (v - conic.d) % conic.b != 0) continue;
      col.add_point((u - conic.e) / conic.b, (v - conic.d) / conic.b);
    }
  }
  return col.finish(true, std::nullopt);
}

// Negative discriminant: x-discriminant as a polynomial in y is negative
// outside a bounded window; enumerate it.
ConicSolutionSet solve_elliptic(const Conic& conic) {
  Collector col{conic};
  Int qd = conic.quad_discriminant();  // < 0, so a != 0 and c != 0
  Int p2 = 2 * conic.b * conic.d - 4 * conic.a * conic.e;
  Int p0 = conic.d * conic.d - 4 * conic.a * conic.f;
  // delta_x(y) = qd*y^2 + p2*y + p0 >= 0 required.
  Int disc = p2 * p2 - 4 * qd * p0;
  if (disc < 0) return col.finish(true, std::nullopt);
  Int s = isqrt(disc);
  // Roots of the downward parabola: (p2 -+ s) / (2|qd|).
  Int two_abs_qd = 2 * abs(qd);
  Int ylo = floor_div(p2 - s, two_abs_qd) - 1;
  Int yhi = floor_div(p2 + s, two_abs_qd) + 1;
  for (Int y = ylo; y <= yhi; ++y) {
    if (qd * y * y + p2 * y + p0 < 0) continue;
    for (const Int& x :
         quadratic_integer_roots(conic.a, conic.b * y + conic.d,
                                 conic.c * y * y + conic.e * y + conic.f))
      col.add_point(x, y);
  }
  return col.finish(true, std::nullopt);
}

// Zero discriminant with a != 0. Substituting t = 2a*x + b*y turns the conic
// times 4a into t^2 + 2d*t + p*y + 4a*f with p = 4a*e - 2b*d.
ConicSolutionSet solve_parabolic(const Conic& conic) {
  Collector col{conic};
  Int a = conic.a, b = conic.b, d = conic.d, e = conic.e, f = conic.f;
  Int p = 4 * a * e - 2 * b * d;

  if (p == 0) {
    // t^2 + 2d*t + 4a*f = 0: at most two lines 2a*x + b*y = t.
    for (const Int& t : quadratic_integer_roots(Int(1), 2 * d, 4 * a * f))
      if (auto fam = line_family(2 * a, b, t)) col.add_family(*fam);
    return col.finish(true, std::nullopt);
  }

  // Joint integrality of y(t) and x(t) is periodic in t with period
  // 2|a*p|; step 4|a*p| keeps the family coefficients integral.
  Int period = 4 * abs(a * p);
  for (Int r = 0; r < period; ++r) {
    Int num_y = r * r + 2 * d * r + 4 * a * f;
    if (num_y % p != 0) continue;
    Int y0 = -num_y / p;
    Int num_x = r - b * y0;
    if (num_x % (2 * a) != 0) continue;
    ConicFamily fam;
    fam.y2 = -exact_div(period * period, p);
    fam.y1 = -exact_div(2 * period * (r + d), p);
    fam.y0 = y0;
    fam.x2 = exact_div(-b * fam.y2, 2 * a);
    fam.x1 = exact_div(period - b * fam.y1, 2 * a);
    fam.x0 = exact_div(num_x, 2 * a);
    col.add_family(fam);
  }
  return col.finish(true, std::nullopt);
}

// Positive square discriminant with a != 0: scale by 4a*s^2 and absorb the
// linear part into the two rational factors, leaving L1 * L2 = n.
ConicSolutionSet solve_factorable(const Conic& conic, const Int& s) {
  Collector col{conic};
  Int a = conic.a, b = conic.b;
  Int u = s * conic.d + 2 * a * conic.e - b * conic.d;
  Int v = s * conic.d - 2 * a * conic.e + b * conic.d;
  Int n = u * v - 4 * a * s * s * conic.f;
  // L1 = 2as*x + s(b-s)*y + u, L2 = 2as*x + s(b+s)*y + v.
  Int c1x = 2 * a * s, c1y = s * (b - s);
  Int c2x = 2 * a * s, c2y = s * (b + s);

  if (n == 0) {
    if (auto fam = line_family(c1x, c1y, -u)) col.add_family(*fam);
    if (auto fam = line_family(c2x, c2y, -v)) col.add_family(*fam);
    return col.finish(true, std::nullopt);
  }

  Int det = c1x * c2y - c2x * c1y;  // 4a*s^3 != 0
  for (const Int& e1 : positive_divisors(n)) {
    for (int sign : {1, -1}) {
      Int l1 = sign * e1;
      Int l2 = n / l1;
      // Cramer on L1 = l1, L2 = l2.
      Int rx = (l1 - u) * c2y - (l2 - v) * c1y;
      Int ry = c1x * (l2 - v) - c2x * (l1 - u);
      if (rx % det != 0 || ry % det != 0) continue;
      col.add_point(rx / det, ry / det);
    }
  }
  return col.finish(true, std::nullopt);
}

// Positive non-square discriminant: complete solution sets are genuinely
// infinite Pell-type objects; scan |x| <= bound and solve exactly in y.
ConicSolutionSet solve_fallback(const Conic& conic, const Int& bound) {
  Collector col{conic};
  // Non-square positive discriminant forces a != 0 and c != 0.
  for (Int x = -bound; x <= bound; ++x)
    for (const Int& y :
         quadratic_integer_roots(conic.c, conic.b * x + conic.e,
                                 conic.a * x * x + conic.d * x + conic.f))
      col.add_point(x, y);
  return col.finish(false, bound);
}

}  // namespace

ConicSolutionSet solve_conic(const Conic& conic, const Int& fallback_bound) {
  if (conic.is_zero()) throw precondition_error("solve_conic: the zero conic is rejected");
  if (fallback_bound < 0) throw precondition_error("solve_conic: fallback bound must be >= 0");

  if (conic.a == 0 && conic.b == 0 && conic.c == 0) return solve_linear(conic);
  if (conic.a == 0 && conic.c == 0) return solve_hyperbolic_xy(conic);
  if (conic.a == 0) {
    // c != 0: swap the roles of x and y.
    Conic swapped{conic.c, conic.b, conic.a, conic.e, conic.d, conic.f};
    return swap_xy(solve_conic(swapped, fallback_bound));
  }

  Int qd = conic.quad_discriminant();
  if (qd < 0) return solve_elliptic(conic);
  if (qd == 0) return solve_parabolic(conic);
  if (auto s = perfect_square_root(qd)) return solve_factorable(conic, *s);
  return solve_fallback(conic, fallback_bound);
}

}  // namespace sr1kit
