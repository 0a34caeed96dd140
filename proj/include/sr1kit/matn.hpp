#pragma once

#include "sr1kit/integers.hpp"

#include <cstddef>
#include <vector>

namespace sr1kit {

// Small square integer matrix, 2 <= n <= 6. Only what the n x n unitizer
// construction needs: multiplication, addition and an exact cofactor
// determinant.
class MatN {
 public:
  explicit MatN(std::size_t n);

  static MatN identity(std::size_t n);
  // r * E_11.
  static MatN rE11(std::size_t n, const Int& r);

  std::size_t dim() const { return n_; }
  const Int& at(std::size_t i, std::size_t j) const { return e_[n_ * i + j]; }
  void set(std::size_t i, std::size_t j, Int v) { e_[n_ * i + j] = std::move(v); }

  MatN operator+(const MatN& o) const;
  MatN operator-(const MatN& o) const;
  MatN operator*(const MatN& o) const;
  bool operator==(const MatN& o) const;

  Int det() const;

 private:
  std::size_t n_;
  std::vector<Int> e_;
};

}  // namespace sr1kit
