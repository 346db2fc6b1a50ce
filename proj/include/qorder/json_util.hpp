#pragma once

#include <qorder/quadratic.hpp>

#include <json.hpp>

namespace qorder {

// Big integers render as JSON numbers while they fit the double-exact range,
// and as decimal strings beyond it so no consumer silently loses precision.
inline nlohmann::ordered_json json_int(const Int& v) {
  static const Int kLimit = Int(1) << 53;
  if (v > -kLimit && v < kLimit) return nlohmann::ordered_json(v.convert_to<std::int64_t>());
  return nlohmann::ordered_json(v.str());
}

}  // namespace qorder
