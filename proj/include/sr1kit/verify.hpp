#pragma once

#include "sr1kit/integers.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sr1kit {

struct SuiteResult {
  std::string name;
  bool pass = false;
  unsigned long checked = 0;
  std::string counterexample;  // empty when pass
};

// Invariant suites over Z/n (2 <= n <= 6). The inner sr1 quantifiers are
// always exhaustive; the outer matrix loops are exhaustive for n <= 3 and
// for n = 2 unit pairs, and deterministically sampled above that.
// `exhaustive` widens the sampled loops.
std::vector<SuiteResult> verify_zmod(unsigned n, bool exhaustive, int jobs);

// Identity and classification suites over Z with a fixed RNG seed.
std::vector<SuiteResult> verify_int(bool exhaustive, int jobs, std::uint64_t seed = 20240915);

}  // namespace sr1kit
