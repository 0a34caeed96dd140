#pragma once

#include "sr1kit/integers.hpp"
#include "sr1kit/mat2.hpp"

#include <iosfwd>
#include <string>

namespace sr1kit::cli {

// A parsed invocation. main() fills this from argv; tests construct it
// directly. Exit codes from run(): 0 decided, 1 input/usage error, 2
// inconclusive (Unknown / not-found-within-bound).
struct Command {
  enum class Kind { Smith, Sr1, Unitizer, Clean, Exchange, Scan, Verify };

  Kind kind = Kind::Sr1;
  std::string matrix;            // positional literal "a,b;c,d"
  std::string x_literal;         // unitizer --x
  std::string ring = "int";      // "int" or "zmod:N"
  std::string method = "pipeline";  // unitizer: pipeline | search | table
  bool alt_table = false;        // table variant for the c = 1 (mod 3) branch
  Int bound = -1;                // -1: per-command default
  long entry_bound = 9;          // scan
  Int clean_bound = 100;         // scan: conic fallback inside is_clean
  Int exchange_bound = 6;        // scan: exchange witness bound
  std::string json_path;         // scan: chunk file (resumable)
  bool pretty = false;
  bool exhaustive = false;       // verify
  int jobs = 0;                  // 0: default
};

int run(const Command& cmd, std::ostream& out, std::ostream& err);

// Matrix literal parser used by every subcommand.
inline Mat2 parse_matrix(const std::string& text, const Int& modulus = 0) {
  return Mat2::parse(text, modulus);
}

}  // namespace sr1kit::cli
