#include "sr1kit/scalar.hpp"

#include "sr1kit/error.hpp"

namespace sr1kit {

Scalar Scalar::residue(const Int& v, const Int& modulus) {
  if (modulus < 2) throw precondition_error("residue modulus must be >= 2");
  return Scalar(mod_floor(v, modulus), modulus);
}

Scalar Scalar::canonical() const {
  if (mod_ == 0) return *this;
  return Scalar(mod_floor(v_, mod_), mod_);
}

void Scalar::require_same_ring(const Scalar& o) const {
  if (mod_ != o.mod_)
    throw ring_mismatch_error("mixed-ring scalars: modulus " + to_string(mod_) + " vs " +
                              to_string(o.mod_));
}

bool Scalar::is_one() const {
  if (mod_ == 0) return v_ == 1;
  return v_ == mod_floor(Int(1), mod_);
}

bool Scalar::is_unit() const {
  if (mod_ == 0) return v_ == 1 || v_ == -1;
  return gcd(v_, mod_) == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_ring(o);
  return Scalar(v_ + o.v_, mod_).canonical();
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_ring(o);
  return Scalar(v_ - o.v_, mod_).canonical();
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_ring(o);
  return Scalar(v_ * o.v_, mod_).canonical();
}

Scalar Scalar::operator-() const { return Scalar(-v_, mod_).canonical(); }

bool Scalar::operator==(const Scalar& o) const { return mod_ == o.mod_ && v_ == o.v_; }

Scalar Scalar::project(const Int& n) const {
  if (mod_ != 0) throw precondition_error("project: scalar is already modular");
  return residue(v_, n);
}

}  // namespace sr1kit
