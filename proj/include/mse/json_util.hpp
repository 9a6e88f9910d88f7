#pragma once

#include <cmath>

#include <json.hpp>

namespace mse {

// JSON has no literal for infinities; report fields that can be infinite go
// through this helper and come out as the strings "inf" / "-inf".
inline nlohmann::ordered_json json_real(double v) {
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    return v;
}

}  // namespace mse
