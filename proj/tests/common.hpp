#pragma once

#include <array>

#include "conjp/geometry.hpp"

namespace testing {

inline conjp::CircleDomain three_connected() {
  const std::array<conjp::Circle, 3> c{{{{0.0, 0.0}, 1.0}, {{-0.4, 0.15}, 0.15}, {{0.45, 0.2}, 0.2}}};
  return conjp::make_domain(c);
}

inline constexpr const char* kThreeConnectedJson =
    R"({"outer":{"center":[0,0],"radius":1},"holes":[{"center":[-0.4,0.15],"radius":0.15},)"
    R"({"center":[0.45,0.2],"radius":0.2}]})";

}  // namespace testing
