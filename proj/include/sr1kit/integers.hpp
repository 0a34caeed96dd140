#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sr1kit {

// Exact arbitrary-precision integer used for every scalar in the kit.
using Int = boost::multiprecision::cpp_int;

inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }
inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

// g = gcd(a,b) >= 0 and a*x + b*y = g.
struct Bezout {
  Int g, x, y;
};
Bezout extended_gcd(Int a, Int b);

// Floor division; remainder of mod_floor lies in [0, |b|). b != 0.
Int floor_div(const Int& a, const Int& b);
Int mod_floor(const Int& a, const Int& b);

// Division that must be exact; throws on a nonzero remainder.
Int exact_div(const Int& a, const Int& b);

// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);
std::optional<Int> perfect_square_root(const Int& n);

// Positive divisors of |n| in increasing order; n != 0.
std::vector<Int> positive_divisors(const Int& n);

// Inverse of a modulo m (m >= 1) when gcd(a, m) = 1.
std::optional<Int> mod_inverse(const Int& a, const Int& m);

std::string to_string(const Int& v);

}  // namespace sr1kit
