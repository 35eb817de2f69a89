#pragma once

#include <vector>

#include "platcalc/plat.hpp"

namespace platcalc {

// One crossing of a link diagram. The fields name the arcs reaching the four
// corners, drawn with the strands running downward; over_nw_se tells which
// diagonal passes over (true for the strand from NW to SE).
struct Crossing {
  int nw = -1;
  int ne = -1;
  int sw = -1;
  int se = -1;
  bool over_nw_se = true;
};

// A link diagram as numbered arcs meeting at crossings. Every arc id in
// [0, arc_count) either occurs at exactly two crossing corners or not at all;
// free_loops counts closed curves with no crossings on them (they carry no
// arc ids). arc_component is filled by label_components.
struct LinkDiagram {
  int arc_count = 0;
  std::vector<Crossing> crossings;
  int free_loops = 0;
  std::vector<int> arc_component;

  int component_count() const;
};

// Data of one strand pass through one crossing, produced by traversing the
// diagram with a fixed deterministic orientation (each component traversed
// from its lowest-numbered arc).
struct CrossingPasses {
  int component_nw_se = -1;
  int component_ne_sw = -1;
  // +1 when the canonical traversal runs the strand downward through the
  // crossing, -1 upward.
  int direction_nw_se = 0;
  int direction_ne_sw = 0;
};

// Traverses every component, labeling arc_component and returning per-pass
// directions. Throws std::invalid_argument when some arc does not occur at
// exactly zero or two corners.
std::vector<CrossingPasses> label_components(LinkDiagram& d);

// Writhe under the given orientation: component_direction holds one +1/-1
// flag per component, relative to the canonical traversal direction.
int writhe(const LinkDiagram& d, const std::vector<int>& component_direction);

LinkDiagram plat_to_diagram(const Plat& p);

}  // namespace platcalc
