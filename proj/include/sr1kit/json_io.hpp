#pragma once

#include "sr1kit/integers.hpp"
#include "sr1kit/mat2.hpp"

#include <json.hpp>

namespace sr1kit {

using Json = nlohmann::ordered_json;

// Integers up to 2^53 stay JSON numbers; anything larger is emitted as a
// decimal string so no consumer silently rounds it.
inline Json json_int(const Int& v) {
  static const Int kSafe = Int(1) << 53;
  if (abs(v) <= kSafe) return Json(v.convert_to<long long>());
  return Json(v.str());
}

inline Int int_from_json(const Json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(j.get<long long>());
}

inline Json json_mat2(const Mat2& m) {
  return Json::array({Json::array({json_int(m.a11().value()), json_int(m.a12().value())}),
                      Json::array({json_int(m.a21().value()), json_int(m.a22().value())})});
}

}  // namespace sr1kit
