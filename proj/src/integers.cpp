#include "sr1kit/integers.hpp"

#include "sr1kit/error.hpp"

#include <algorithm>

namespace sr1kit {

Bezout extended_gcd(Int a, Int b) {
  // Iterative Euclid carrying both cofactor rows.
  Int old_r = std::move(a), r = std::move(b);
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    Int q = old_r / r;  // truncated; fine, invariants hold for any quotient
    Int tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_x - q * x;
    old_x = std::move(x);
    x = std::move(tmp);
    tmp = old_y - q * y;
    old_y = std::move(y);
    y = std::move(tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  return {std::move(old_r), std::move(old_x), std::move(old_y)};
}

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw precondition_error("floor_div: division by zero");
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

Int mod_floor(const Int& a, const Int& b) {
  if (b == 0) throw precondition_error("mod_floor: division by zero");
  Int m = a % b;
  if (m < 0) m += abs(b);
  return m;
}

Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw precondition_error("exact_div: division by zero");
  if (a % b != 0)
    throw internal_error("exact_div: " + to_string(b) + " does not divide " + to_string(a));
  return a / b;
}

Int isqrt(const Int& n) {
  if (n < 0) throw precondition_error("isqrt of negative value");
  return boost::multiprecision::sqrt(n);
}

std::optional<Int> perfect_square_root(const Int& n) {
  if (n < 0) return std::nullopt;
  Int r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

std::vector<Int> positive_divisors(const Int& n) {
  if (n == 0) throw precondition_error("positive_divisors of zero");
  Int m = abs(n);
  std::vector<Int> small, large;
  for (Int i = 1; i * i <= m; ++i) {
    if (m % i == 0) {
      small.push_back(i);
      if (i * i != m) large.push_back(m / i);
    }
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(std::move(*it));
  return small;
}

std::optional<Int> mod_inverse(const Int& a, const Int& m) {
  if (m < 1) throw precondition_error("mod_inverse: modulus must be >= 1");
  Bezout bz = extended_gcd(mod_floor(a, m), m);
  if (bz.g != 1) return std::nullopt;
  return mod_floor(bz.x, m);
}

std::string to_string(const Int& v) { return v.str(); }

}  // namespace sr1kit
