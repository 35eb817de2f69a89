#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "platcalc/plat.hpp"

namespace platcalc {

// Rational heights for tiles. Always normalized: den > 0, gcd(|num|, den) = 1.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);

  bool operator==(const Rational& o) const {
    return num == o.num && den == o.den;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;

  Rational midpoint(const Rational& o) const;
  std::string str() const;
};

// Tile kinds of the singular foliation, named by their slot census:
// T440 is the four-arc saddle square, T221 the saddle with one scc side,
// T003 the all-scc saddle, T001 the interior extremum capping an scc,
// T110 the bridge extremum.
enum class TileKind { T440, T221, T003, T001, T110 };

// Saddle orientation: an up saddle merges two level curves descending, a
// down saddle splits one into two descending.
enum class Polarity { Up, Down };
enum class Extremum { Min, Max };

struct Tile {
  int id = 0;
  TileKind kind = TileKind::T110;
  std::optional<Polarity> polarity;  // saddles only
  std::optional<Extremum> extremum;  // extremum tiles only
  Rational height;
};

enum class EdgeLabel { Arc, Circle };

struct SlotRef {
  int tile = -1;
  int slot = -1;

  bool operator==(const SlotRef& o) const {
    return tile == o.tile && slot == o.slot;
  }
};

// A gluing between two tile slots. Edge ids are vector positions in
// TilingTree::edges. inside optionally names the circle edge whose curve
// encloses this one at shared heights.
struct GlueEdge {
  SlotRef a;
  SlotRef b;
  EdgeLabel label = EdgeLabel::Arc;
  std::optional<int> inside;
};

// The dual tree of a tiled spanning disc for a bridge_index-bridge plat.
struct TilingTree {
  int bridge_index = 1;
  std::vector<Tile> tiles;
  std::vector<GlueEdge> edges;
};

// Slot conventions, fixed per kind:
//   T440: slots 0..3, all arcs; 0 and 1 leave upward, 2 and 3 downward;
//         boundary order interleaves knot segments as
//         [slot0, K0, slot2, K1, slot1, K2, slot3, K3].
//   T221: slot 0 the lone-side arc, slot 1 the paired-side arc, slot 2 the
//         paired-side circle; boundary [K0, slot0, K1, slot1].
//   T003: slot 0 the lone-side circle, slots 1 and 2 the paired side.
//   T001: slot 0 its circle.  T110: slot 0 its arc; boundary [K0, slot0].
int slot_count(TileKind kind);
EdgeLabel slot_label(TileKind kind, int slot);
// Whether the leaf at this slot continues upward from the tile.
bool slot_points_up(const Tile& tile, int slot);
// Euler characteristic of the closed-up tile: T440, T001, T110 are discs,
// T221 an annulus piece, T003 a pair of pants piece.
int tile_euler(TileKind kind);

struct TileCensus {
  int t440 = 0;
  int t221 = 0;
  int t003 = 0;
  int t001 = 0;
  int t110 = 0;
};

TileCensus census(const TilingTree& t);

// All structural violations, in a fixed scan order; empty means valid.
std::vector<std::string> validate(const TilingTree& t);

// Euler characteristic from tile pieces and arc gluings; requires every slot
// glued exactly once (throws std::invalid_argument otherwise).
int euler_characteristic(const TilingTree& t);

// |T001| == |T221| + |T003|, forced for valid tilings.
bool check_counting_identity(const TilingTree& t);

// Lexicographic complexity (|T440|, |T001|).
std::pair<int, int> complexity(const TilingTree& t);

struct ReducibleVertex {
  int tile_id = -1;
  // 'a': interior minimum under a down saddle with an empty pocket;
  // 'b': interior maximum over an up saddle with an empty pocket;
  // 'c': saddle square passed consecutively between a bridge minimum and a
  //      bridge maximum on the boundary walk.
  char condition = '?';

  bool operator==(const ReducibleVertex& o) const {
    return tile_id == o.tile_id && condition == o.condition;
  }
};

// First reducible vertex in scan order (condition a, then b, then c; tiles
// by ascending id). Requires a valid tiling.
std::optional<ReducibleVertex> find_reducible_vertex(const TilingTree& t);

// Removes the reducible vertex by the matching surgery. Conditions a and b
// cancel the extremum against its saddle; condition c removes the saddle
// square with its two bridge extrema and lowers the bridge index. The
// lexicographic complexity strictly decreases. Throws MoveError when the
// named condition does not hold at the tile.
TilingTree reduce(const TilingTree& t, const ReducibleVertex& vertex);

// True when a tiling with |T001| > 0 or |T440| > 0 has a reducible vertex
// (vacuously true otherwise).
bool reducible_when_nontrivial(const TilingTree& t);

// The fan tiling of the trivial n-bridge plat: a chain of n-1 saddle
// squares joined to n bridge maxima and n bridge minima.
TilingTree trivial_tiling(int bridge_index);

// Seeded generator: grows the trivial tiling by random saddle-extremum
// insertions (at most max_extra tiles added, two per insertion), possibly
// nesting inserted pockets. Always produces a valid tiling.
TilingTree random_valid_tiling(unsigned long long seed, int bridge_index,
                               int max_extra);

}  // namespace platcalc
