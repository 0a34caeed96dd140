#pragma once

#include "sr1kit/scalar.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace sr1kit {

// Immutable 2x2 matrix over one exact scalar ring. Entries are stored
// row-major: a11, a12, a21, a22.
class Mat2 {
 public:
  Mat2(Scalar a11, Scalar a12, Scalar a21, Scalar a22);

  // Over Z.
  static Mat2 from_ints(Int a11, Int a12, Int a21, Int a22);
  // Over Z/n.
  static Mat2 from_residues(const Int& a11, const Int& a12, const Int& a21, const Int& a22,
                            const Int& modulus);
  static Mat2 identity(const Int& modulus = 0);
  static Mat2 zero(const Int& modulus = 0);
  // n * I2 over Z.
  static Mat2 scalar_diag(const Int& n);
  // r * E_ij over Z, 1 <= i,j <= 2.
  static Mat2 rEij(const Int& r, int i, int j);

  // Index of a matrix in the full grid over Z/n (row-major digits); the
  // inverse of this map enumerates all n^4 matrices.
  static Mat2 from_grid_index(unsigned long index, const Int& modulus);

  const Scalar& a11() const { return e_[0]; }
  const Scalar& a12() const { return e_[1]; }
  const Scalar& a21() const { return e_[2]; }
  const Scalar& a22() const { return e_[3]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return e_[2 * i + j]; }

  const Int& modulus() const { return e_[0].modulus(); }
  bool over_integers() const { return e_[0].over_integers(); }

  Mat2 operator+(const Mat2& o) const;
  Mat2 operator-(const Mat2& o) const;
  Mat2 operator*(const Mat2& o) const;
  Mat2 operator-() const;
  bool operator==(const Mat2& o) const;
  bool operator!=(const Mat2& o) const { return !(*this == o); }

  Scalar det() const;
  Scalar trace() const;
  Mat2 adjugate() const;
  Mat2 transpose() const;

  bool is_unit() const;        // det a unit of the scalar ring
  bool is_idempotent() const;  // A*A == A
  bool is_zero() const;

  // Exact inverse for unimodular matrices (det = +-1 over Z, or det a unit
  // mod n); throws otherwise.
  Mat2 inverse_unit() const;

  Mat2 project(const Int& n) const;

  // Text form "a11,a12;a21,a22" (no spaces). parse() accepts optional
  // whitespace around tokens and arbitrary-magnitude signed integers.
  std::string format() const;
  static Mat2 parse(std::string_view text, const Int& modulus = 0);

 private:
  std::array<Scalar, 4> e_;
};

// Free-function spellings used throughout the decision procedures.
inline Scalar det(const Mat2& a) { return a.det(); }
inline Scalar trace(const Mat2& a) { return a.trace(); }
inline Mat2 adjugate(const Mat2& a) { return a.adjugate(); }
inline bool is_unit(const Mat2& a) { return a.is_unit(); }
inline bool is_idempotent(const Mat2& a) { return a.is_idempotent(); }

}  // namespace sr1kit
