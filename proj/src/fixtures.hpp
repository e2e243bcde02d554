#pragma once

#include "geometry.hpp"
#include "sign_system.hpp"

namespace svcalc::fixtures {

// Two lines through the origin; every one of the nine patterns is a cell.
Arrangement crossing_lines();
SignSystem crossing_pair();

// One vertical line and two parallel horizontals. The cells realize the
// fifteen-vector system below, the standing example for parallelism and
// one-point extensions.
Arrangement parallel_lines();
SignSystem parallel_demo();

// Five affine lines with two verticals and a triple point at (0,-1):
// 7 vertices, 20 edges, 14 regions, 41 cells in all.
Arrangement five_lines();

} // namespace svcalc::fixtures
