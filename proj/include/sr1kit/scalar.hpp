#pragma once

#include "sr1kit/integers.hpp"

#include <string>

namespace sr1kit {

// An exact ring scalar: an arbitrary-precision integer, or a residue class
// mod n with n >= 2. modulus() == 0 denotes the integers. Residues are kept
// canonical in [0, n) at all times. Values are immutable; operations return
// fresh scalars and reject mixed-ring operands.
class Scalar {
 public:
  Scalar() : v_(0), mod_(0) {}

  static Scalar integer(Int v) { return Scalar(std::move(v), 0); }
  static Scalar residue(const Int& v, const Int& modulus);

  const Int& value() const { return v_; }
  const Int& modulus() const { return mod_; }
  bool over_integers() const { return mod_ == 0; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const;
  // Over Z: v in {-1, 1}. Mod n: gcd(v, n) = 1.
  bool is_unit() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Reduction Z -> Z/n; rejected for scalars that are already modular.
  Scalar project(const Int& n) const;

  Scalar zero_like() const { return Scalar(Int(0), mod_); }
  Scalar one_like() const { return Scalar(Int(1), mod_).canonical(); }

  std::string str() const { return to_string(v_); }

 private:
  Scalar(Int v, Int m) : v_(std::move(v)), mod_(std::move(m)) {}
  Scalar canonical() const;
  void require_same_ring(const Scalar& o) const;

  Int v_;
  Int mod_;
};

}  // namespace sr1kit
