#pragma once

#include "hyparr/lattice.hpp"

namespace hyparr {

struct RenderWindow {
  Rational x0, y0, x1, y1;  // requires x0 < x1 and y0 < y1
};

// Deterministic SVG for a planar arrangement: the window frame, one clipped
// segment per hyperplane (the last one styled distinctly), and a mark on
// every vertex inside the window. Throws InputError unless dim == 2.
std::string render_svg(const Arrangement& a, const RenderWindow& win);

}  // namespace hyparr
