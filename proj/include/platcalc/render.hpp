#pragma once

#include <string>

#include "platcalc/plat.hpp"

namespace platcalc {

// Text picture of the plat: caps on top and bottom, three rows per
// crossing, the center character showing which strand passes over.
std::string render_ascii(const Plat& p);

// Standalone SVG of the plat. The under strand is drawn with a gap at each
// crossing. No external resources are referenced.
std::string render_svg(const Plat& p);

}  // namespace platcalc
