#pragma once

#include "sr1kit/conic.hpp"
#include "sr1kit/mat2.hpp"

#include <optional>

namespace sr1kit {

enum class CleanVerdict { Clean, NotClean, Unknown };

struct CleanWitness {
  Mat2 idempotent;  // E with E^2 = E
  Mat2 unit;        // A - E, det +-1
};

// NotClean is only reported with complete = true; Unknown appears when a
// non-square-discriminant conic was cut off at the fallback bound.
struct CleanReport {
  CleanVerdict verdict;
  std::optional<CleanWitness> witness;
  bool complete;
  std::optional<Int> bound;
};

// The two reduction conics b*x^2 - (a-d)*xy - c*y^2 + b*x + (d - det +- 1)*y,
// exposed for inspection; sign is +1 or -1.
Conic clean_conic(const Mat2& a, int sign);

CleanReport is_clean(const Mat2& a, const Int& fallback_bound = 100);

struct ExchangeWitness {
  Mat2 multiplier;  // M
  Mat2 idempotent;  // A + M(A - A^2)
};

struct ExchangeReport {
  std::optional<ExchangeWitness> witness;
  Int bound;
};

// Scans M with entries in [-bound, bound] lexicographically; idempotent A
// short-circuits to M = 0.
ExchangeReport is_exchange_bounded(const Mat2& a, const Int& bound);

}  // namespace sr1kit
