#pragma once

#include <string>

#include "vrkit/cx_geom.hpp"

namespace vrkit::cli {

// parses "A+Bi" complex literals: "1+1i", "0.636-0.5i", "2i", "-i", "0.25",
// "1e-2+3e-4i"; throws std::invalid_argument on anything else
cx parse_complex(const std::string& text);

}  // namespace vrkit::cli
