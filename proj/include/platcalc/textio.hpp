#pragma once

#include <string>

#include "platcalc/diagram.hpp"
#include "platcalc/plat.hpp"
#include "platcalc/search.hpp"
#include "platcalc/tiling.hpp"

namespace platcalc {

// Plat files:
//   plat v1
//   strands=4
//   word=1 1 -3 -3
// Blank lines and lines starting with # are ignored. All parsers throw
// std::invalid_argument naming the line and token on malformed input.
Plat parse_plat(const std::string& text);
std::string format_plat(const Plat& p);

// Trace files:
//   trace v1 outcome=reached-standard
//   step 0 strands=4 word=1 -1
//   step 1 strands=4 word= move=reduce
// The word runs until the first non-integer token; the first step records
// the starting plat and has no move.
SimplificationTrace parse_trace(const std::string& text);
std::string format_trace(const SimplificationTrace& trace);

// Tiling files:
//   tiling v1
//   bridge=2
//   tile 0 t440 up h=1/2
//   tile 1 t110 max h=5/3
//   edge 0:1 1:0 arc
//   edge 0:2 3:0 circle inside=4
// Saddle tiles carry up or down, extremum tiles min or max. Edge lines name
// tile:slot ends; inside= refers to another edge line by its position among
// the edge lines, counting from 0.
TilingTree parse_tiling(const std::string& text);
std::string format_tiling(const TilingTree& t);

// One-way debug form of a diagram: one X line per crossing listing the
// nw, ne, sw, se arcs and which strand is on top.
std::string format_diagram(const LinkDiagram& d);

}  // namespace platcalc
