#include "sr1kit/verify.hpp"

#include "sr1kit/error.hpp"
#include "sr1kit/mat2.hpp"
#include "sr1kit/parallel.hpp"
#include "sr1kit/smith.hpp"
#include "sr1kit/sr1.hpp"

#include <mutex>
#include <random>

namespace sr1kit {

namespace {

Mat2 random_int_mat(std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  return Mat2::from_ints(dist(rng), dist(rng), dist(rng), dist(rng));
}

Int direct_combination_det(const Mat2& a, const Mat2& x, const Mat2& y) {
  return (a + y * (x * a - Mat2::identity(a.modulus()))).det().value();
}

struct SuiteBuilder {
  std::vector<SuiteResult> results;

  void record(std::string name, bool pass, unsigned long checked, std::string counterexample) {
    results.push_back({std::move(name), pass, checked, std::move(counterexample)});
  }
};

}  // namespace

std::vector<SuiteResult> verify_zmod(unsigned n, bool exhaustive, int jobs) {
  if (n < 2 || n > 6) throw precondition_error("verify: modulus must lie in [2, 6]");
  Int mod(n);
  unsigned long grid = 1;
  for (int i = 0; i < 4; ++i) grid *= n;

  SuiteBuilder b;
  std::mt19937_64 rng(0x5eed0000 + n);
  std::uniform_int_distribution<unsigned long> pick(0, grid - 1);

  // Formula vs direct determinant.
  {
    unsigned long checked = 0;
    std::string cx;
    bool pass = true;
    auto check = [&](const Mat2& a, const Mat2& x, const Mat2& y) {
      ++checked;
      if (unit_condition_value(a, x, y).value() != mod_floor(direct_combination_det(a, x, y), mod)) {
        pass = false;
        cx = "A=" + a.format() + " X=" + x.format() + " Y=" + y.format();
        return false;
      }
      return true;
    };
    if (n == 2) {
      for (unsigned long ai = 0; ai < grid && pass; ++ai)
        for (unsigned long xi = 0; xi < grid && pass; ++xi)
          for (unsigned long yi = 0; yi < grid && pass; ++yi)
            check(Mat2::from_grid_index(ai, mod), Mat2::from_grid_index(xi, mod),
                  Mat2::from_grid_index(yi, mod));
    } else {
      unsigned long samples = exhaustive ? 1000000 : 100000;
      for (unsigned long i = 0; i < samples && pass; ++i)
        check(Mat2::from_grid_index(pick(rng), mod), Mat2::from_grid_index(pick(rng), mod),
              Mat2::from_grid_index(pick(rng), mod));
    }
    b.record("formula-oracle-identity", pass, checked, cx);
  }

  // lsr1 table, reused by the remaining suites. Sampled above modulus 3:
  // the full grid at 4..6 is out of reach for repeated exhaustive calls.
  bool full_table = n <= 3;
  std::vector<unsigned long> indices;
  if (full_table) {
    indices.resize(grid);
    for (unsigned long i = 0; i < grid; ++i) indices[i] = i;
  } else {
    unsigned long samples = exhaustive ? 64 : 24;
    for (unsigned long i = 0; i < samples; ++i) indices.push_back(pick(rng));
  }

  std::vector<char> lsr1(indices.size()), rsr1(indices.size());
  parallel_for_index(indices.size(), jobs, [&](std::size_t i) {
    Mat2 a = Mat2::from_grid_index(indices[i], mod);
    lsr1[i] = lsr1_finite(a) ? 1 : 0;
    rsr1[i] = rsr1_finite(a) ? 1 : 0;
  });

  // Left/right symmetry.
  {
    std::string cx;
    bool pass = true;
    for (std::size_t i = 0; i < indices.size(); ++i)
      if (lsr1[i] != rsr1[i]) {
        pass = false;
        cx = "A=" + Mat2::from_grid_index(indices[i], mod).format();
        break;
      }
    b.record("left-right-symmetry", pass, indices.size(), cx);
  }

  // Transpose flip: rsr1(A) = lsr1(A^T).
  {
    std::string cx;
    bool pass = true;
    std::vector<char> lsr1_t(indices.size());
    parallel_for_index(indices.size(), jobs, [&](std::size_t i) {
      lsr1_t[i] = lsr1_finite(Mat2::from_grid_index(indices[i], mod).transpose()) ? 1 : 0;
    });
    for (std::size_t i = 0; i < indices.size(); ++i)
      if (rsr1[i] != lsr1_t[i]) {
        pass = false;
        cx = "A=" + Mat2::from_grid_index(indices[i], mod).format();
        break;
      }
    b.record("transpose-flip", pass, indices.size(), cx);
  }

  // Product closure of the sr1 set.
  {
    std::string cx;
    bool pass = true;
    unsigned long checked = 0;
    if (full_table) {
      for (unsigned long ai = 0; ai < grid && pass; ++ai) {
        if (!lsr1[ai]) continue;
        Mat2 a = Mat2::from_grid_index(ai, mod);
        for (unsigned long bi = 0; bi < grid && pass; ++bi) {
          if (!lsr1[bi]) continue;
          ++checked;
          Mat2 prod = a * Mat2::from_grid_index(bi, mod);
          if (!lsr1_finite(prod)) {
            pass = false;
            cx = "A=" + a.format() + " B=" + Mat2::from_grid_index(bi, mod).format();
          }
        }
      }
    } else {
      for (std::size_t i = 0; i < indices.size() && pass; ++i) {
        if (!lsr1[i]) continue;
        for (std::size_t j = 0; j < indices.size() && pass; ++j) {
          if (!lsr1[j]) continue;
          ++checked;
          Mat2 a = Mat2::from_grid_index(indices[i], mod);
          Mat2 c = Mat2::from_grid_index(indices[j], mod);
          if (!lsr1_finite(a * c)) {
            pass = false;
            cx = "A=" + a.format() + " B=" + c.format();
          }
        }
      }
    }
    b.record("product-closure", pass, checked, cx);
  }

  // Equivalence invariance: lsr1(PAQ) = lsr1(A) for units P, Q.
  {
    std::vector<Mat2> units;
    for (unsigned long i = 0; i < grid; ++i) {
      Mat2 u = Mat2::from_grid_index(i, mod);
      if (u.is_unit()) units.push_back(u);
    }
    std::vector<std::pair<Mat2, Mat2>> pairs;
    if (n == 2) {
      for (const auto& p : units)
        for (const auto& q : units) pairs.emplace_back(p, q);
    } else {
      std::uniform_int_distribution<std::size_t> upick(0, units.size() - 1);
      unsigned long samples = exhaustive ? 24 : 8;
      for (unsigned long i = 0; i < samples; ++i)
        pairs.emplace_back(units[upick(rng)], units[upick(rng)]);
    }
    std::string cx;
    bool pass = true;
    unsigned long checked = 0;
    std::mutex m;
    parallel_for_index(indices.size(), jobs, [&](std::size_t i) {
      Mat2 a = Mat2::from_grid_index(indices[i], mod);
      for (const auto& [p, q] : pairs) {
        bool same = lsr1_finite(p * a * q) == (lsr1[i] != 0);
        std::lock_guard<std::mutex> lock(m);
        ++checked;
        if (!same && pass) {
          pass = false;
          cx = "A=" + a.format() + " P=" + p.format() + " Q=" + q.format();
        }
      }
    });
    b.record("equivalence-invariance", pass, checked, cx);
  }

  // Over Z/4 every matrix with entries in {0, 2} lies in the radical and
  // must have sr1.
  if (n == 4) {
    std::string cx;
    bool pass = true;
    unsigned long checked = 0;
    for (unsigned long mask = 0; mask < 16; ++mask) {
      Int e[4];
      for (int k = 0; k < 4; ++k) e[k] = (mask >> k) & 1 ? 2 : 0;
      Mat2 a = Mat2::from_residues(e[0], e[1], e[2], e[3], mod);
      ++checked;
      if (!lsr1_finite(a)) {
        pass = false;
        cx = "A=" + a.format();
        break;
      }
    }
    b.record("radical-sr1", pass, checked, cx);
  }

  return b.results;
}

std::vector<SuiteResult> verify_int(bool exhaustive, int jobs, std::uint64_t seed) {
  SuiteBuilder b;
  std::mt19937_64 rng(seed);

  // Formula vs direct determinant on random integer triples.
  {
    unsigned long samples = exhaustive ? 100000 : 20000;
    bool pass = true;
    std::string cx;
    for (unsigned long i = 0; i < samples && pass; ++i) {
      Mat2 a = random_int_mat(rng, -20, 20);
      Mat2 x = random_int_mat(rng, -20, 20);
      Mat2 y = random_int_mat(rng, -20, 20);
      if (unit_condition_value(a, x, y).value() != direct_combination_det(a, x, y)) {
        pass = false;
        cx = "A=" + a.format() + " X=" + x.format() + " Y=" + y.format();
      }
    }
    b.record("formula-oracle-identity", pass, samples, cx);
  }

  // det(I - M) = 1 + det(M) - Tr(M) and the Jacobson consequence.
  {
    unsigned long samples = exhaustive ? 10000 : 5000;
    bool pass = true;
    std::string cx;
    Mat2 id = Mat2::identity();
    for (unsigned long i = 0; i < samples && pass; ++i) {
      Mat2 m = random_int_mat(rng, -50, 50);
      Int lhs = (id - m).det().value();
      Int rhs = 1 + m.det().value() - m.trace().value();
      if (lhs != rhs) {
        pass = false;
        cx = "M=" + m.format();
      }
    }
    b.record("det-trace-identity", pass, samples, cx);
  }
  {
    unsigned long samples = exhaustive ? 10000 : 5000;
    bool pass = true;
    std::string cx;
    for (unsigned long i = 0; i < samples && pass; ++i) {
      Mat2 a = random_int_mat(rng, -50, 50);
      Mat2 x = random_int_mat(rng, -50, 50);
      if (!jacobson_check(a, x)) {
        pass = false;
        cx = "A=" + a.format() + " B=" + x.format();
      }
    }
    b.record("jacobson", pass, samples, cx);
  }

  // AB and BA share sr1 status.
  {
    unsigned long samples = exhaustive ? 10000 : 5000;
    bool pass = true;
    std::string cx;
    for (unsigned long i = 0; i < samples && pass; ++i) {
      Mat2 a = random_int_mat(rng, -20, 20);
      Mat2 x = random_int_mat(rng, -20, 20);
      if (is_sr1_integer(a * x).is_sr1 != is_sr1_integer(x * a).is_sr1) {
        pass = false;
        cx = "A=" + a.format() + " B=" + x.format();
      }
    }
    b.record("ab-ba-sr1", pass, samples, cx);
  }

  // Complementary property fails: -I2 has sr1, I2 - (-I2) = 2*I2 does not.
  {
    bool pass = is_sr1_integer(-Mat2::identity()).is_sr1 &&
                !is_sr1_integer(Mat2::scalar_diag(2)).is_sr1;
    b.record("complementary-failure", pass, 2, pass ? "" : "-I2 / 2I2");
  }

  // Idempotents and nilpotents over a full grid are sr1.
  {
    long bound = exhaustive ? 9 : 6;
    long side = 2 * bound + 1;
    unsigned long total = 1;
    for (int k = 0; k < 4; ++k) total *= static_cast<unsigned long>(side);
    bool pass = true;
    std::string cx;
    std::mutex m;
    unsigned long checked = 0;
    parallel_for_index(total, jobs, [&](std::size_t idx) {
      long digits[4];
      std::size_t rest = idx;
      for (int k = 3; k >= 0; --k) {
        digits[k] = static_cast<long>(rest % side) - bound;
        rest /= side;
      }
      Mat2 a = Mat2::from_ints(digits[0], digits[1], digits[2], digits[3]);
      bool idem = a.is_idempotent();
      bool nilp = (a * a).is_zero();
      if (!idem && !nilp) return;
      bool ok = is_sr1_integer(a).is_sr1;
      std::lock_guard<std::mutex> lock(m);
      ++checked;
      if (!ok && pass) {
        pass = false;
        cx = "A=" + a.format();
      }
    });
    b.record("idempotent-nilpotent-sr1", pass, checked, cx);
  }

  // Smith soundness over a grid.
  {
    long bound = exhaustive ? 9 : 5;
    long side = 2 * bound + 1;
    unsigned long total = 1;
    for (int k = 0; k < 4; ++k) total *= static_cast<unsigned long>(side);
    bool pass = true;
    std::string cx;
    std::mutex m;
    parallel_for_index(total, jobs, [&](std::size_t idx) {
      long digits[4];
      std::size_t rest = idx;
      for (int k = 3; k >= 0; --k) {
        digits[k] = static_cast<long>(rest % side) - bound;
        rest /= side;
      }
      Mat2 a = Mat2::from_ints(digits[0], digits[1], digits[2], digits[3]);
      SmithForm sf = smith_form(a);
      bool ok = sf.U.is_unit() && sf.V.is_unit() && sf.U * a * sf.V == sf.diagonal() &&
                sf.d1 >= 0 && sf.d2 >= 0 && (sf.d1 == 0 ? sf.d2 == 0 : sf.d2 % sf.d1 == 0);
      if (!ok) {
        std::lock_guard<std::mutex> lock(m);
        if (pass) {
          pass = false;
          cx = "A=" + a.format();
        }
      }
    });
    b.record("smith-soundness", pass, total, cx);
  }

  return b.results;
}

}  // namespace sr1kit
