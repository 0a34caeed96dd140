#include "sr1kit/clean_exchange.hpp"

#include "sr1kit/error.hpp"

namespace sr1kit {

Conic clean_conic(const Mat2& m, int sign) {
  if (sign != 1 && sign != -1) throw precondition_error("clean_conic: sign must be +-1");
  const Int& a = m.a11().value();
  const Int& b = m.a12().value();
  const Int& c = m.a21().value();
  const Int& d = m.a22().value();
  Int det = m.det().value();
  return Conic{b, -(a - d), -c, b, d - det + sign, 0};
}

namespace {

CleanWitness checked_witness(const Mat2& a, const Mat2& e) {
  Mat2 u = a - e;
  if (!e.is_idempotent()) throw internal_error("clean witness: E is not idempotent");
  Int du = u.det().value();
  if (du != 1 && du != -1) throw internal_error("clean witness: A - E is not a unit");
  return {e, u};
}

// Nontrivial idempotent from a solution (x, y) of the sign-conic, provided
// the linear equation recovers an integral z.
std::optional<CleanWitness> witness_from_xy(const Mat2& m, int sign, const Int& x, const Int& y) {
  const Int& a = m.a11().value();
  const Int& b = m.a12().value();
  const Int& c = m.a21().value();
  const Int& d = m.a22().value();
  Int num = sign - m.det().value() + d - (a - d) * x - c * y;
  if (num % b != 0) return std::nullopt;
  Int z = num / b;
  return checked_witness(m, Mat2::from_ints(x + 1, y, z, -x));
}

// A family contributes a witness iff the z-numerator, a polynomial in the
// family parameter, hits 0 mod b; |b| consecutive parameters decide that.
std::optional<CleanWitness> witness_from_family(const Mat2& m, int sign, const ConicFamily& fam) {
  Int b = m.a12().value();
  Int period = abs(b);
  for (Int k = 0; k < period; ++k) {
    ConicPoint pt = fam.at(k);
    if (auto w = witness_from_xy(m, sign, pt.x, pt.y)) return w;
  }
  return std::nullopt;
}

CleanReport clean_nontrivial_b_nonzero(const Mat2& m, const Int& fallback_bound) {
  bool all_complete = true;
  for (int sign : {1, -1}) {
    ConicSolutionSet sols = solve_conic(clean_conic(m, sign), fallback_bound);
    all_complete = all_complete && sols.complete;
    for (const auto& pt : sols.points)
      if (auto w = witness_from_xy(m, sign, pt.x, pt.y))
        return {CleanVerdict::Clean, std::move(w), true, std::nullopt};
    for (const auto& fam : sols.families)
      if (auto w = witness_from_family(m, sign, fam))
        return {CleanVerdict::Clean, std::move(w), true, std::nullopt};
  }
  if (all_complete) return {CleanVerdict::NotClean, std::nullopt, true, std::nullopt};
  return {CleanVerdict::Unknown, std::nullopt, false, fallback_bound};
}

CleanReport clean_diagonal(const Mat2& m) {
  const Int& a = m.a11().value();
  const Int& d = m.a22().value();
  if (a == d) {
    // (+-2) reads a^2 - a = +-1: a(a-1) is even, so no solution exists and
    // the diagonal case is decided completely.
    return {CleanVerdict::NotClean, std::nullopt, true, std::nullopt};
  }
  for (int sign : {1, -1}) {
    Int num = sign + d - a * d;
    if (num % (a - d) != 0) continue;
    Int x = num / (a - d);
    Int z = -(x * x) - x;
    auto w = checked_witness(m, Mat2::from_ints(x + 1, 1, z, -x));
    return {CleanVerdict::Clean, std::move(w), true, std::nullopt};
  }
  return {CleanVerdict::NotClean, std::nullopt, true, std::nullopt};
}

CleanReport transpose_report(CleanReport rep) {
  if (rep.witness)
    rep.witness = CleanWitness{rep.witness->idempotent.transpose(), rep.witness->unit.transpose()};
  return rep;
}

}  // namespace

CleanReport is_clean(const Mat2& a, const Int& fallback_bound) {
  if (!a.over_integers()) throw precondition_error("is_clean expects an integer matrix");

  // Trivial decompositions: E = 0 when A is a unit, E = I2 when A - I2 is.
  if (a.is_unit()) return {CleanVerdict::Clean, checked_witness(a, Mat2::zero()), true, std::nullopt};
  Mat2 id = Mat2::identity();
  Int d_minus = (a - id).det().value();
  if (d_minus == 1 || d_minus == -1)
    return {CleanVerdict::Clean, checked_witness(a, id), true, std::nullopt};

  if (a.a12().value() != 0) return clean_nontrivial_b_nonzero(a, fallback_bound);
  // Cleanness is transpose-invariant; the transposed matrix has b != 0.
  if (a.a21().value() != 0)
    return transpose_report(clean_nontrivial_b_nonzero(a.transpose(), fallback_bound));
  return clean_diagonal(a);
}

ExchangeReport is_exchange_bounded(const Mat2& a, const Int& bound) {
  if (!a.over_integers()) throw precondition_error("is_exchange_bounded expects an integer matrix");
  if (bound < 0) throw precondition_error("is_exchange_bounded: bound must be >= 0");

  if (a.is_idempotent()) return {ExchangeWitness{Mat2::zero(), a}, bound};

  Mat2 n = a - a * a;
  for (Int m11 = -bound; m11 <= bound; ++m11)
    for (Int m12 = -bound; m12 <= bound; ++m12)
      for (Int m21 = -bound; m21 <= bound; ++m21)
        for (Int m22 = -bound; m22 <= bound; ++m22) {
          Mat2 m = Mat2::from_ints(m11, m12, m21, m22);
          Mat2 e = a + m * n;
          if (e.is_idempotent()) return {ExchangeWitness{std::move(m), std::move(e)}, bound};
        }
  return {std::nullopt, bound};
}

}  // namespace sr1kit
