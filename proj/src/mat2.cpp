#include "sr1kit/mat2.hpp"

#include "sr1kit/error.hpp"

#include <cctype>

namespace sr1kit {

Mat2::Mat2(Scalar a11, Scalar a12, Scalar a21, Scalar a22)
    : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)} {
  for (int i = 1; i < 4; ++i) {
    if (e_[i].modulus() != e_[0].modulus())
      throw ring_mismatch_error("matrix entries must share one ring");
  }
}

Mat2 Mat2::from_ints(Int a11, Int a12, Int a21, Int a22) {
  return Mat2(Scalar::integer(std::move(a11)), Scalar::integer(std::move(a12)),
              Scalar::integer(std::move(a21)), Scalar::integer(std::move(a22)));
}

Mat2 Mat2::from_residues(const Int& a11, const Int& a12, const Int& a21, const Int& a22,
                         const Int& modulus) {
  return Mat2(Scalar::residue(a11, modulus), Scalar::residue(a12, modulus),
              Scalar::residue(a21, modulus), Scalar::residue(a22, modulus));
}

static Scalar make_scalar(const Int& v, const Int& modulus) {
  return modulus == 0 ? Scalar::integer(v) : Scalar::residue(v, modulus);
}

Mat2 Mat2::identity(const Int& modulus) {
  return Mat2(make_scalar(1, modulus), make_scalar(0, modulus), make_scalar(0, modulus),
              make_scalar(1, modulus));
}

Mat2 Mat2::zero(const Int& modulus) {
  Scalar z = make_scalar(0, modulus);
  return Mat2(z, z, z, z);
}

Mat2 Mat2::scalar_diag(const Int& n) { return from_ints(n, 0, 0, n); }

Mat2 Mat2::rEij(const Int& r, int i, int j) {
  if (i < 1 || i > 2 || j < 1 || j > 2) throw precondition_error("rEij indices must be 1 or 2");
  Int e[4] = {0, 0, 0, 0};
  e[2 * (i - 1) + (j - 1)] = r;
  return from_ints(e[0], e[1], e[2], e[3]);
}

Mat2 Mat2::from_grid_index(unsigned long index, const Int& modulus) {
  if (modulus < 2) throw precondition_error("grid enumeration needs a modulus >= 2");
  unsigned long n = modulus.convert_to<unsigned long>();
  Int v[4];
  for (int k = 3; k >= 0; --k) {
    v[k] = Int(index % n);
    index /= n;
  }
  return from_residues(v[0], v[1], v[2], v[3], modulus);
}

Mat2 Mat2::operator+(const Mat2& o) const {
  return Mat2(e_[0] + o.e_[0], e_[1] + o.e_[1], e_[2] + o.e_[2], e_[3] + o.e_[3]);
}

Mat2 Mat2::operator-(const Mat2& o) const {
  return Mat2(e_[0] - o.e_[0], e_[1] - o.e_[1], e_[2] - o.e_[2], e_[3] - o.e_[3]);
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return Mat2(e_[0] * o.e_[0] + e_[1] * o.e_[2], e_[0] * o.e_[1] + e_[1] * o.e_[3],
              e_[2] * o.e_[0] + e_[3] * o.e_[2], e_[2] * o.e_[1] + e_[3] * o.e_[3]);
}

Mat2 Mat2::operator-() const { return Mat2(-e_[0], -e_[1], -e_[2], -e_[3]); }

bool Mat2::operator==(const Mat2& o) const {
  return e_[0] == o.e_[0] && e_[1] == o.e_[1] && e_[2] == o.e_[2] && e_[3] == o.e_[3];
}

Scalar Mat2::det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

Scalar Mat2::trace() const { return e_[0] + e_[3]; }

Mat2 Mat2::adjugate() const { return Mat2(e_[3], -e_[1], -e_[2], e_[0]); }

Mat2 Mat2::transpose() const { return Mat2(e_[0], e_[2], e_[1], e_[3]); }

bool Mat2::is_unit() const { return det().is_unit(); }

bool Mat2::is_idempotent() const { return (*this) * (*this) == *this; }

bool Mat2::is_zero() const {
  return e_[0].is_zero() && e_[1].is_zero() && e_[2].is_zero() && e_[3].is_zero();
}

Mat2 Mat2::inverse_unit() const {
  Scalar d = det();
  if (!d.is_unit()) throw precondition_error("inverse_unit: matrix is not a unit");
  if (over_integers()) {
    // 1/d = d for d = +-1.
    Mat2 adj = adjugate();
    return Mat2(adj.a11() * d, adj.a12() * d, adj.a21() * d, adj.a22() * d);
  }
  Int inv = *mod_inverse(d.value(), modulus());
  Scalar di = Scalar::residue(inv, modulus());
  Mat2 adj = adjugate();
  return Mat2(adj.a11() * di, adj.a12() * di, adj.a21() * di, adj.a22() * di);
}

Mat2 Mat2::project(const Int& n) const {
  return Mat2(e_[0].project(n), e_[1].project(n), e_[2].project(n), e_[3].project(n));
}

std::string Mat2::format() const {
  return e_[0].str() + "," + e_[1].str() + ";" + e_[2].str() + "," + e_[3].str();
}

namespace {

struct MatrixLexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw parse_error("matrix literal: " + what + " at position " + std::to_string(pos) +
                      " in \"" + std::string(text) + "\"");
  }

  Int integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      ++digits;
    }
    if (digits == 0) {
      pos = start;
      if (start >= text.size()) fail("missing entry");
      fail(std::string("expected integer, found '") + text[start] + "'");
    }
    return Int(std::string(text.substr(start, pos - start)));
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size()) fail(std::string("expected '") + c + "', found end of input");
    if (text[pos] != c) fail(std::string("expected '") + c + "', found '" + text[pos] + "'");
    ++pos;
  }

  void end() {
    skip_ws();
    if (pos != text.size()) fail(std::string("unexpected trailing '") + text[pos] + "'");
  }
};

}  // namespace

Mat2 Mat2::parse(std::string_view text, const Int& modulus) {
  MatrixLexer lx{text};
  Int a11 = lx.integer();
  lx.expect(',');
  Int a12 = lx.integer();
  lx.expect(';');
  Int a21 = lx.integer();
  lx.expect(',');
  Int a22 = lx.integer();
  lx.end();
  if (modulus == 0) return from_ints(a11, a12, a21, a22);
  return from_residues(a11, a12, a21, a22, modulus);
}

}  // namespace sr1kit
