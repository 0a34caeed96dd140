#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sr1kit {

// Library errors carry a short machine-readable kind; the CLI surfaces it
// as {"error": ..., "kind": ...}.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

inline Error ring_mismatch_error(const std::string& msg) { return Error("ring-mismatch", msg); }
inline Error parse_error(const std::string& msg) { return Error("parse", msg); }
inline Error precondition_error(const std::string& msg) { return Error("precondition", msg); }
inline Error internal_error(const std::string& msg) { return Error("internal", msg); }

}  // namespace sr1kit
