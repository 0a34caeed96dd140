#include "sr1kit/matn.hpp"

#include "sr1kit/error.hpp"

namespace sr1kit {

MatN::MatN(std::size_t n) : n_(n), e_(n * n, Int(0)) {
  if (n < 2 || n > 6) throw precondition_error("MatN dimension must be in [2, 6]");
}

MatN MatN::identity(std::size_t n) {
  MatN m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatN MatN::rE11(std::size_t n, const Int& r) {
  MatN m(n);
  m.set(0, 0, r);
  return m;
}

MatN MatN::operator+(const MatN& o) const {
  if (n_ != o.n_) throw precondition_error("MatN dimension mismatch");
  MatN r(n_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

MatN MatN::operator-(const MatN& o) const {
  if (n_ != o.n_) throw precondition_error("MatN dimension mismatch");
  MatN r(n_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

MatN MatN::operator*(const MatN& o) const {
  if (n_ != o.n_) throw precondition_error("MatN dimension mismatch");
  MatN r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) r.e_[n_ * i + j] += aik * o.at(k, j);
    }
  return r;
}

bool MatN::operator==(const MatN& o) const { return n_ == o.n_ && e_ == o.e_; }

namespace {

Int cofactor_det(const std::vector<Int>& e, std::vector<std::size_t> cols, std::size_t row,
                 std::size_t n) {
  if (cols.size() == 1) return e[n * row + cols[0]];
  Int acc = 0;
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Int& pivot = e[n * row + cols[k]];
    if (pivot != 0) {
      std::vector<std::size_t> rest;
      rest.reserve(cols.size() - 1);
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (j != k) rest.push_back(cols[j]);
      Int sub = cofactor_det(e, std::move(rest), row + 1, n);
      acc += sign > 0 ? pivot * sub : -(pivot * sub);
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

Int MatN::det() const {
  std::vector<std::size_t> cols(n_);
  for (std::size_t j = 0; j < n_; ++j) cols[j] = j;
  return cofactor_det(e_, std::move(cols), 0, n_);
}

}  // namespace sr1kit
