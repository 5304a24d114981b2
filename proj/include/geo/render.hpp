#pragma once

#include <map>
#include <string>

#include "geo/script.hpp"

namespace geo::render {

// Orthographic projection (dropping z) of all points and segments named in
// a script's assertions and queries, as SVG 1.1. Coordinates come from
// 64-bit enclosures; points with nonzero z carry a dashed offset marker.
std::string to_svg(const script::Script& s,
                   const std::map<std::string, Point>& env);

}  // namespace geo::render
