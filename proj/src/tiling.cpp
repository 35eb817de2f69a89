#include "platcalc/tiling.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace platcalc {

namespace {

using Int128 = __int128;

Int128 gcd128(Int128 a, Int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Rational make_rational(Int128 num, Int128 den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr Int128 lo = std::numeric_limits<long long>::min();
  constexpr Int128 hi = std::numeric_limits<long long>::max();
  if (num < lo || num > hi || den > hi) {
    throw std::overflow_error("rational height out of range");
  }
  Rational r;
  r.num = static_cast<long long>(num);
  r.den = static_cast<long long>(den);
  return r;
}

}  // namespace

Rational::Rational(long long n, long long d) { *this = make_rational(n, d); }

bool Rational::operator<(const Rational& o) const {
  return Int128(num) * o.den < Int128(o.num) * den;
}

Rational Rational::midpoint(const Rational& o) const {
  return make_rational(Int128(num) * o.den + Int128(o.num) * den,
                       Int128(2) * den * o.den);
}

std::string Rational::str() const {
  std::ostringstream out;
  out << num;
  if (den != 1) out << '/' << den;
  return out.str();
}

int slot_count(TileKind kind) {
  switch (kind) {
    case TileKind::T440:
      return 4;
    case TileKind::T221:
    case TileKind::T003:
      return 3;
    case TileKind::T001:
    case TileKind::T110:
      return 1;
  }
  return 0;
}

EdgeLabel slot_label(TileKind kind, int slot) {
  switch (kind) {
    case TileKind::T440:
      return EdgeLabel::Arc;
    case TileKind::T221:
      return slot == 2 ? EdgeLabel::Circle : EdgeLabel::Arc;
    case TileKind::T003:
    case TileKind::T001:
      return EdgeLabel::Circle;
    case TileKind::T110:
      return EdgeLabel::Arc;
  }
  return EdgeLabel::Arc;
}

bool slot_points_up(const Tile& tile, int slot) {
  switch (tile.kind) {
    case TileKind::T440:
      return slot == 0 || slot == 1;
    case TileKind::T221:
    case TileKind::T003:
      // A down saddle splits one level curve into two descending, so its
      // lone side (slot 0) continues upward and the pair side downward.
      if (tile.polarity == Polarity::Down) return slot == 0;
      return slot != 0;
    case TileKind::T001:
    case TileKind::T110:
      return tile.extremum == Extremum::Min;
  }
  return false;
}

int tile_euler(TileKind kind) {
  switch (kind) {
    case TileKind::T440:
    case TileKind::T001:
    case TileKind::T110:
      return 1;
    case TileKind::T221:
      return 0;
    case TileKind::T003:
      return -1;
  }
  return 0;
}

TileCensus census(const TilingTree& t) {
  TileCensus c;
  for (const Tile& tile : t.tiles) {
    switch (tile.kind) {
      case TileKind::T440:
        ++c.t440;
        break;
      case TileKind::T221:
        ++c.t221;
        break;
      case TileKind::T003:
        ++c.t003;
        break;
      case TileKind::T001:
        ++c.t001;
        break;
      case TileKind::T110:
        ++c.t110;
        break;
    }
  }
  return c;
}

namespace {

const char* kind_name(TileKind kind) {
  switch (kind) {
    case TileKind::T440:
      return "t440";
    case TileKind::T221:
      return "t221";
    case TileKind::T003:
      return "t003";
    case TileKind::T001:
      return "t001";
    case TileKind::T110:
      return "t110";
  }
  return "?";
}

bool is_saddle(TileKind kind) {
  return kind == TileKind::T440 || kind == TileKind::T221 ||
         kind == TileKind::T003;
}

std::map<int, int> index_by_id(const TilingTree& t) {
  std::map<int, int> m;
  for (int i = 0; i < static_cast<int>(t.tiles.size()); ++i) {
    m.emplace(t.tiles[i].id, i);
  }
  return m;
}

// edge_at[tile index][slot] is the index of the edge glued there, or -1.
std::vector<std::array<int, 4>> slot_edges(const TilingTree& t,
                                           const std::map<int, int>& idx) {
  std::vector<std::array<int, 4>> at(t.tiles.size(), {-1, -1, -1, -1});
  for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
    for (const SlotRef* end : {&t.edges[e].a, &t.edges[e].b}) {
      auto it = idx.find(end->tile);
      if (it == idx.end()) continue;
      if (end->slot < 0 || end->slot >= 4) continue;
      at[it->second][end->slot] = e;
    }
  }
  return at;
}

// In the boundary cycle of a tile the knot segments and arc slots alternate:
//   T440: [slot0, K0, slot2, K1, slot1, K2, slot3, K3]
//   T221: [K0, slot0, K1, slot1]
//   T110: [K0, slot0]
int knot_segment_count(TileKind kind) {
  switch (kind) {
    case TileKind::T440:
      return 4;
    case TileKind::T221:
      return 2;
    case TileKind::T110:
      return 1;
    default:
      return 0;
  }
}

// Arc slot following knot segment k in the boundary cycle.
int slot_after_knot(TileKind kind, int k) {
  switch (kind) {
    case TileKind::T440: {
      static constexpr int next[4] = {2, 1, 3, 0};
      return next[k];
    }
    case TileKind::T221:
      return k;
    case TileKind::T110:
      return 0;
    default:
      return -1;
  }
}

// Knot segment following arc slot s in the boundary cycle.
int knot_after_slot(TileKind kind, int s) {
  switch (kind) {
    case TileKind::T440: {
      static constexpr int next[4] = {0, 2, 1, 3};
      return next[s];
    }
    case TileKind::T221:
      return 1 - s;
    case TileKind::T110:
      return 0;
    default:
      return -1;
  }
}

struct WalkStop {
  int tile_index = -1;
  int segment = -1;
};

// Follows the disc boundary through the knot segments. After segment k of a
// tile the boundary meets an arc slot; crossing its edge lands on the other
// tile, where the next knot segment follows the entry slot. Returns the
// closed cycle of stops, or an empty vector when the walk does not close
// into a single cycle covering every segment.
std::vector<WalkStop> boundary_walk(const TilingTree& t,
                                    const std::map<int, int>& idx,
                                    const std::vector<std::array<int, 4>>& at) {
  int total = 0;
  int start = -1;
  for (int i = 0; i < static_cast<int>(t.tiles.size()); ++i) {
    int k = knot_segment_count(t.tiles[i].kind);
    if (k > 0 && start < 0) start = i;
    total += k;
  }
  std::vector<WalkStop> stops;
  if (total == 0) return stops;
  int tile = start;
  int seg = 0;
  for (int step = 0; step < total; ++step) {
    stops.push_back({tile, seg});
    TileKind kind = t.tiles[tile].kind;
    int slot = slot_after_knot(kind, seg);
    int e = at[tile][slot];
    if (e < 0) return {};
    const GlueEdge& edge = t.edges[e];
    int cur_id = t.tiles[tile].id;
    SlotRef other = edge.a.tile == cur_id && edge.a.slot == slot ? edge.b
                                                                 : edge.a;
    auto oit = idx.find(other.tile);
    if (oit == idx.end()) return {};
    tile = oit->second;
    seg = knot_after_slot(t.tiles[tile].kind, other.slot);
    if (seg < 0) return {};
  }
  if (tile != start || seg != 0) return {};
  return stops;
}

}  // namespace

std::vector<std::string> validate(const TilingTree& t) {
  std::vector<std::string> errors;
  std::ostringstream msg;
  auto emit = [&](const std::string& s) { errors.push_back(s); };

  if (t.bridge_index < 1) {
    emit("bridge index must be at least 1, got " +
         std::to_string(t.bridge_index));
  }
  std::set<int> ids;
  std::set<std::pair<long long, long long>> heights;
  for (const Tile& tile : t.tiles) {
    std::string label = "tile " + std::to_string(tile.id);
    if (tile.id < 0) emit(label + ": negative id");
    if (!ids.insert(tile.id).second) emit(label + ": duplicate id");
    if (is_saddle(tile.kind)) {
      if (!tile.polarity) emit(label + ": saddle without up/down polarity");
      if (tile.extremum) emit(label + ": saddle with an extremum marker");
    } else {
      if (!tile.extremum) emit(label + ": extremum tile without min/max");
      if (tile.polarity) emit(label + ": extremum tile with a polarity");
    }
    if (!heights.insert({tile.height.num, tile.height.den}).second) {
      emit(label + ": height " + tile.height.str() +
           " repeats an earlier tile height");
    }
  }
  if (!errors.empty()) return errors;

  auto idx = index_by_id(t);
  std::vector<std::array<int, 4>> at(t.tiles.size(), {-1, -1, -1, -1});
  for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
    const GlueEdge& edge = t.edges[e];
    std::string label = "edge " + std::to_string(e);
    if (edge.a.tile == edge.b.tile) {
      emit(label + ": glues tile " + std::to_string(edge.a.tile) +
           " to itself");
      continue;
    }
    bool ends_ok = true;
    for (const SlotRef* end : {&edge.a, &edge.b}) {
      auto it = idx.find(end->tile);
      if (it == idx.end()) {
        emit(label + ": unknown tile " + std::to_string(end->tile));
        ends_ok = false;
        continue;
      }
      const Tile& tile = t.tiles[it->second];
      if (end->slot < 0 || end->slot >= slot_count(tile.kind)) {
        emit(label + ": tile " + std::to_string(end->tile) + " (" +
             kind_name(tile.kind) + ") has no slot " +
             std::to_string(end->slot));
        ends_ok = false;
        continue;
      }
      if (slot_label(tile.kind, end->slot) != edge.label) {
        emit(label + ": slot " + std::to_string(end->tile) + ":" +
             std::to_string(end->slot) + " is " +
             (slot_label(tile.kind, end->slot) == EdgeLabel::Arc ? "an arc"
                                                                 : "a circle") +
             " slot but the edge is labelled " +
             (edge.label == EdgeLabel::Arc ? "arc" : "circle"));
        ends_ok = false;
      }
    }
    if (!ends_ok) continue;
    for (const SlotRef* end : {&edge.a, &edge.b}) {
      int ti = idx.at(end->tile);
      if (at[ti][end->slot] >= 0) {
        emit(label + ": slot " + std::to_string(end->tile) + ":" +
             std::to_string(end->slot) + " already glued by edge " +
             std::to_string(at[ti][end->slot]));
      } else {
        at[ti][end->slot] = e;
      }
    }
  }
  for (int i = 0; i < static_cast<int>(t.tiles.size()); ++i) {
    for (int s = 0; s < slot_count(t.tiles[i].kind); ++s) {
      if (at[i][s] < 0) {
        emit("slot " + std::to_string(t.tiles[i].id) + ":" +
             std::to_string(s) + " is not glued to anything");
      }
    }
  }
  if (!errors.empty()) return errors;

  // Tree shape: connected with exactly one fewer edge than tiles.
  if (t.edges.size() + 1 != t.tiles.size()) {
    msg.str("");
    msg << "a tree on " << t.tiles.size() << " tiles needs "
        << (t.tiles.size() - 1) << " edges, got " << t.edges.size();
    emit(msg.str());
  }
  {
    std::vector<std::vector<int>> adj(t.tiles.size());
    for (const GlueEdge& edge : t.edges) {
      int u = idx.at(edge.a.tile);
      int v = idx.at(edge.b.tile);
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    std::vector<char> seen(t.tiles.size(), 0);
    std::vector<int> stack;
    if (!t.tiles.empty()) {
      stack.push_back(0);
      seen[0] = 1;
    }
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    for (int i = 0; i < static_cast<int>(t.tiles.size()); ++i) {
      if (!seen[i]) {
        emit("tile " + std::to_string(t.tiles[i].id) +
             " is disconnected from tile " + std::to_string(t.tiles[0].id));
        break;
      }
    }
  }

  // Monotone gluing: each edge runs from a lower tile (slot pointing up)
  // to a higher tile (slot pointing down).
  for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
    const GlueEdge& edge = t.edges[e];
    const Tile& ta = t.tiles[idx.at(edge.a.tile)];
    const Tile& tb = t.tiles[idx.at(edge.b.tile)];
    bool a_up = slot_points_up(ta, edge.a.slot);
    bool b_up = slot_points_up(tb, edge.b.slot);
    std::string label = "edge " + std::to_string(e);
    if (a_up == b_up) {
      emit(label + ": both ends point " + (a_up ? "up" : "down"));
      continue;
    }
    const Tile& lower = a_up ? ta : tb;
    const Tile& upper = a_up ? tb : ta;
    if (!(lower.height < upper.height)) {
      emit(label + ": runs upward from tile " + std::to_string(lower.id) +
           " at height " + lower.height.str() + " to tile " +
           std::to_string(upper.id) + " at height " + upper.height.str() +
           " which is not higher");
    }
  }

  TileCensus c = census(t);
  if (c.t110 != 2 * t.bridge_index) {
    msg.str("");
    msg << "a " << t.bridge_index << "-bridge tiling needs "
        << 2 * t.bridge_index << " bridge extrema, got " << c.t110;
    emit(msg.str());
  }
  if (c.t440 != t.bridge_index - 1) {
    msg.str("");
    msg << "a " << t.bridge_index << "-bridge tiling needs "
        << t.bridge_index - 1 << " saddle squares, got " << c.t440;
    emit(msg.str());
  }
  if (c.t001 != c.t221 + c.t003) {
    msg.str("");
    msg << "counting identity broken: " << c.t001 << " interior extrema vs "
        << c.t221 + c.t003 << " circle-side saddles";
    emit(msg.str());
  }
  {
    int chi = euler_characteristic(t);
    if (chi != 1) {
      emit("euler characteristic is " + std::to_string(chi) +
           ", a disc needs 1");
    }
  }

  {
    auto stops = boundary_walk(t, idx, at);
    int total = 0;
    for (const Tile& tile : t.tiles) total += knot_segment_count(tile.kind);
    if (total > 0) {
      std::set<std::pair<int, int>> seen;
      for (const WalkStop& s : stops) seen.insert({s.tile_index, s.segment});
      if (stops.empty() || static_cast<int>(seen.size()) != total) {
        emit("boundary walk does not close into a single cycle through all " +
             std::to_string(total) + " knot segments");
      }
    }
  }

  for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
    const GlueEdge& edge = t.edges[e];
    std::string label = "edge " + std::to_string(e);
    if (!edge.inside) continue;
    if (edge.label != EdgeLabel::Circle) {
      emit(label + ": only circle edges can be nested inside another");
      continue;
    }
    int target = *edge.inside;
    if (target < 0 || target >= static_cast<int>(t.edges.size())) {
      emit(label + ": nesting target " + std::to_string(target) +
           " is not an edge");
      continue;
    }
    if (target == e) {
      emit(label + ": nested inside itself");
      continue;
    }
    if (t.edges[target].label != EdgeLabel::Circle) {
      emit(label + ": nesting target " + std::to_string(target) +
           " is not a circle edge");
    }
  }
  // Nesting chains must terminate.
  for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
    std::set<int> chain;
    int cur = e;
    while (t.edges[cur].inside) {
      if (!chain.insert(cur).second) {
        emit("edge " + std::to_string(e) + ": nesting chain loops");
        break;
      }
      int next = *t.edges[cur].inside;
      if (next < 0 || next >= static_cast<int>(t.edges.size())) break;
      cur = next;
    }
  }
  return errors;
}

int euler_characteristic(const TilingTree& t) {
  auto idx = index_by_id(t);
  std::vector<std::array<int, 4>> count(t.tiles.size(), {0, 0, 0, 0});
  for (const GlueEdge& edge : t.edges) {
    for (const SlotRef* end : {&edge.a, &edge.b}) {
      auto it = idx.find(end->tile);
      if (it == idx.end()) {
        throw std::invalid_argument("edge references unknown tile " +
                                    std::to_string(end->tile));
      }
      const Tile& tile = t.tiles[it->second];
      if (end->slot < 0 || end->slot >= slot_count(tile.kind)) {
        throw std::invalid_argument("edge references missing slot " +
                                    std::to_string(end->tile) + ":" +
                                    std::to_string(end->slot));
      }
      ++count[it->second][end->slot];
    }
  }
  for (int i = 0; i < static_cast<int>(t.tiles.size()); ++i) {
    for (int s = 0; s < slot_count(t.tiles[i].kind); ++s) {
      if (count[i][s] != 1) {
        throw std::invalid_argument("slot " + std::to_string(t.tiles[i].id) +
                                    ":" + std::to_string(s) +
                                    " glued " + std::to_string(count[i][s]) +
                                    " times");
      }
    }
  }
  int chi = 0;
  for (const Tile& tile : t.tiles) chi += tile_euler(tile.kind);
  for (const GlueEdge& edge : t.edges) {
    if (edge.label == EdgeLabel::Arc) --chi;
  }
  return chi;
}

bool check_counting_identity(const TilingTree& t) {
  TileCensus c = census(t);
  return c.t001 == c.t221 + c.t003;
}

std::pair<int, int> complexity(const TilingTree& t) {
  TileCensus c = census(t);
  return {c.t440, c.t001};
}

namespace {

struct CapContext {
  int cap_edge = -1;    // the circle edge at the extremum
  int saddle = -1;      // tile index of the saddle at its other end
  int saddle_slot = -1;
};

// For a T001 tile, the edge at its single slot and the saddle beyond it.
std::optional<CapContext> cap_context(const TilingTree& t,
                                      const std::map<int, int>& idx,
                                      const std::vector<std::array<int, 4>>& at,
                                      int tile_index) {
  CapContext ctx;
  ctx.cap_edge = at[tile_index][0];
  if (ctx.cap_edge < 0) return std::nullopt;
  const GlueEdge& edge = t.edges[ctx.cap_edge];
  SlotRef other =
      idx.at(edge.a.tile) == tile_index && edge.a.slot == 0 ? edge.b : edge.a;
  auto it = idx.find(other.tile);
  if (it == idx.end()) return std::nullopt;
  if (!is_saddle(t.tiles[it->second].kind)) return std::nullopt;
  ctx.saddle = it->second;
  ctx.saddle_slot = other.slot;
  return ctx;
}

bool edge_has_children(const TilingTree& t, int edge_index) {
  for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
    if (e != edge_index && t.edges[e].inside &&
        *t.edges[e].inside == edge_index) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<ReducibleVertex> find_reducible_vertex(const TilingTree& t) {
  auto idx = index_by_id(t);
  auto at = slot_edges(t, idx);

  std::vector<int> order(t.tiles.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return t.tiles[a].id < t.tiles[b].id; });

  for (char cond : {'a', 'b'}) {
    Extremum want_ext = cond == 'a' ? Extremum::Min : Extremum::Max;
    Polarity want_pol = cond == 'a' ? Polarity::Down : Polarity::Up;
    for (int i : order) {
      const Tile& tile = t.tiles[i];
      if (tile.kind != TileKind::T001 || tile.extremum != want_ext) continue;
      auto ctx = cap_context(t, idx, at, i);
      if (!ctx) continue;
      const Tile& saddle = t.tiles[ctx->saddle];
      if (saddle.kind == TileKind::T440) continue;
      if (saddle.polarity != want_pol) continue;
      // The lone slot of the saddle carries the surviving curve; a cap
      // glued there is not part of a cancelling pair.
      if (ctx->saddle_slot == 0) continue;
      if (edge_has_children(t, ctx->cap_edge)) continue;
      return ReducibleVertex{tile.id, cond};
    }
  }

  auto stops = boundary_walk(t, idx, at);
  int m = static_cast<int>(stops.size());
  if (m == 0) return std::nullopt;
  auto tile_at = [&](int pos) -> const Tile& {
    return t.tiles[stops[((pos % m) + m) % m].tile_index];
  };
  for (int i : order) {
    const Tile& tile = t.tiles[i];
    if (tile.kind != TileKind::T440) continue;
    for (int p = 0; p < m; ++p) {
      if (&tile_at(p + 1) != &tile) continue;
      const Tile& before = tile_at(p);
      const Tile& after = tile_at(p + 2);
      if (before.kind != TileKind::T110 || after.kind != TileKind::T110) {
        continue;
      }
      bool min_max = before.extremum == Extremum::Min &&
                     after.extremum == Extremum::Max;
      bool max_min = before.extremum == Extremum::Max &&
                     after.extremum == Extremum::Min;
      if (min_max || max_min) return ReducibleVertex{tile.id, 'c'};
    }
  }
  return std::nullopt;
}

namespace {

// Rebuilds the edge vector after a surgery: edges listed in dead_edges are
// dropped, fused_edge (if any) is appended, and nesting pointers into the
// fused pieces are redirected onto the fused edge.
TilingTree assemble(const TilingTree& t, const std::set<int>& dead_tiles,
                    const std::set<int>& dead_edges,
                    std::optional<GlueEdge> fused_edge,
                    const std::set<int>& fused_pieces, int bridge_delta) {
  TilingTree out;
  out.bridge_index = t.bridge_index + bridge_delta;
  for (const Tile& tile : t.tiles) {
    if (!dead_tiles.count(tile.id)) out.tiles.push_back(tile);
  }
  std::map<int, int> remap;
  for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
    if (dead_edges.count(e)) continue;
    remap[e] = static_cast<int>(out.edges.size());
    out.edges.push_back(t.edges[e]);
  }
  int fused_index = -1;
  if (fused_edge) {
    fused_index = static_cast<int>(out.edges.size());
    out.edges.push_back(*fused_edge);
  }
  for (GlueEdge& edge : out.edges) {
    if (!edge.inside) continue;
    int target = *edge.inside;
    if (fused_pieces.count(target)) {
      edge.inside = fused_index;
    } else {
      auto it = remap.find(target);
      edge.inside = it == remap.end() ? std::optional<int>()
                                      : std::optional<int>(it->second);
    }
  }
  return out;
}

SlotRef far_end(const GlueEdge& edge, int tile_id) {
  return edge.a.tile == tile_id ? edge.b : edge.a;
}

}  // namespace

TilingTree reduce(const TilingTree& t, const ReducibleVertex& vertex) {
  auto idx = index_by_id(t);
  auto it = idx.find(vertex.tile_id);
  if (it == idx.end()) {
    throw MoveError("reduce: no tile with id " +
                    std::to_string(vertex.tile_id));
  }
  auto at = slot_edges(t, idx);
  int vi = it->second;
  const Tile& v = t.tiles[vi];

  if (vertex.condition == 'a' || vertex.condition == 'b') {
    Extremum want_ext = vertex.condition == 'a' ? Extremum::Min : Extremum::Max;
    Polarity want_pol = vertex.condition == 'a' ? Polarity::Down : Polarity::Up;
    if (v.kind != TileKind::T001 || v.extremum != want_ext) {
      throw MoveError(std::string("reduce: condition ") + vertex.condition +
                      " needs an interior " +
                      (want_ext == Extremum::Min ? "minimum" : "maximum") +
                      ", tile " + std::to_string(v.id) + " is not one");
    }
    auto ctx = cap_context(t, idx, at, vi);
    if (!ctx || t.tiles[ctx->saddle].kind == TileKind::T440 ||
        t.tiles[ctx->saddle].polarity != want_pol || ctx->saddle_slot == 0) {
      throw MoveError(std::string("reduce: tile ") + std::to_string(v.id) +
                      " is not capped against a matching saddle");
    }
    if (edge_has_children(t, ctx->cap_edge)) {
      throw MoveError(std::string("reduce: the pocket under tile ") +
                      std::to_string(v.id) + " is not empty");
    }
    const Tile& saddle = t.tiles[ctx->saddle];
    // The saddle's two remaining slots carry the curve that survives; fuse
    // their edges end to end.
    std::vector<int> keep_slots;
    for (int s = 0; s < slot_count(saddle.kind); ++s) {
      if (s != ctx->saddle_slot) keep_slots.push_back(s);
    }
    int e0 = at[ctx->saddle][keep_slots[0]];
    int e1 = at[ctx->saddle][keep_slots[1]];
    if (e0 < 0 || e1 < 0) {
      throw MoveError("reduce: saddle " + std::to_string(saddle.id) +
                      " has unglued slots");
    }
    GlueEdge fused;
    fused.a = far_end(t.edges[e0], saddle.id);
    fused.b = far_end(t.edges[e1], saddle.id);
    fused.label = saddle.kind == TileKind::T221 ? EdgeLabel::Arc
                                                : EdgeLabel::Circle;
    if (fused.label == EdgeLabel::Circle) {
      fused.inside = t.edges[e0].inside ? t.edges[e0].inside
                                        : t.edges[e1].inside;
      if (fused.inside && (*fused.inside == e0 || *fused.inside == e1 ||
                           *fused.inside == ctx->cap_edge)) {
        fused.inside.reset();
      }
    }
    return assemble(t, {v.id, saddle.id}, {ctx->cap_edge, e0, e1}, fused,
                    {e0, e1}, 0);
  }

  if (vertex.condition == 'c') {
    if (v.kind != TileKind::T440) {
      throw MoveError("reduce: condition c needs a saddle square, tile " +
                      std::to_string(v.id) + " is not one");
    }
    auto stops = boundary_walk(t, idx, at);
    int m = static_cast<int>(stops.size());
    int min_tile = -1;
    int max_tile = -1;
    for (int p = 0; p < m && min_tile < 0; ++p) {
      const Tile& mid = t.tiles[stops[(p + 1) % m].tile_index];
      if (&mid != &v) continue;
      const Tile& before = t.tiles[stops[p].tile_index];
      const Tile& after = t.tiles[stops[(p + 2) % m].tile_index];
      if (before.kind != TileKind::T110 || after.kind != TileKind::T110) {
        continue;
      }
      if (before.extremum == Extremum::Min && after.extremum == Extremum::Max) {
        min_tile = stops[p].tile_index;
        max_tile = stops[(p + 2) % m].tile_index;
      } else if (before.extremum == Extremum::Max &&
                 after.extremum == Extremum::Min) {
        max_tile = stops[p].tile_index;
        min_tile = stops[(p + 2) % m].tile_index;
      }
    }
    if (min_tile < 0) {
      throw MoveError("reduce: square " + std::to_string(v.id) +
                      " is not passed between a bridge minimum and a bridge "
                      "maximum");
    }
    int min_id = t.tiles[min_tile].id;
    int max_id = t.tiles[max_tile].id;
    std::set<int> dead_edges;
    std::vector<int> keep_edges;
    for (int s = 0; s < 4; ++s) {
      int e = at[vi][s];
      if (e < 0) {
        throw MoveError("reduce: square " + std::to_string(v.id) +
                        " has unglued slots");
      }
      dead_edges.insert(e);
      SlotRef far = far_end(t.edges[e], v.id);
      if (far.tile != min_id && far.tile != max_id) keep_edges.push_back(e);
    }
    if (keep_edges.size() != 2) {
      throw MoveError("reduce: square " + std::to_string(v.id) +
                      " does not meet the bridge extrema on exactly two "
                      "slots");
    }
    GlueEdge fused;
    fused.a = far_end(t.edges[keep_edges[0]], v.id);
    fused.b = far_end(t.edges[keep_edges[1]], v.id);
    fused.label = EdgeLabel::Arc;
    return assemble(t, {v.id, min_id, max_id}, dead_edges, fused,
                    {keep_edges[0], keep_edges[1]}, -1);
  }

  throw MoveError(std::string("reduce: unknown condition '") +
                  vertex.condition + "'");
}

bool reducible_when_nontrivial(const TilingTree& t) {
  TileCensus c = census(t);
  if (c.t001 == 0 && c.t440 == 0) return true;
  return find_reducible_vertex(t).has_value();
}

TilingTree trivial_tiling(int bridge_index) {
  if (bridge_index < 1) {
    throw std::invalid_argument("bridge index must be at least 1, got " +
                                std::to_string(bridge_index));
  }
  int n = bridge_index;
  TilingTree t;
  t.bridge_index = n;
  if (n == 1) {
    Tile top{0, TileKind::T110, std::nullopt, Extremum::Max, Rational(3, 2)};
    Tile bot{1, TileKind::T110, std::nullopt, Extremum::Min, Rational(-1, 2)};
    t.tiles = {top, bot};
    t.edges.push_back({{0, 0}, {1, 0}, EdgeLabel::Arc, std::nullopt});
    return t;
  }
  // Saddle squares 0..n-2, then maxima, then minima.
  auto max_id = [n](int j) { return n - 2 + j; };        // j in 1..n
  auto min_id = [n](int j) { return 2 * n - 2 + j; };    // j in 1..n
  for (int j = 1; j <= n - 1; ++j) {
    t.tiles.push_back(
        {j - 1, TileKind::T440, Polarity::Up, std::nullopt, Rational(j, n)});
  }
  for (int j = 1; j <= n; ++j) {
    t.tiles.push_back({max_id(j), TileKind::T110, std::nullopt, Extremum::Max,
                       Rational(n + 1 + j, n + 1)});
  }
  for (int j = 1; j <= n; ++j) {
    t.tiles.push_back({min_id(j), TileKind::T110, std::nullopt, Extremum::Min,
                       Rational(-j, n + 1)});
  }
  auto arc = [&t](int ta, int sa, int tb, int sb) {
    t.edges.push_back({{ta, sa}, {tb, sb}, EdgeLabel::Arc, std::nullopt});
  };
  for (int j = 1; j <= n - 2; ++j) arc(j - 1, 0, j, 3);
  for (int j = 1; j <= n - 1; ++j) arc(j - 1, 1, max_id(j), 0);
  arc(n - 2, 0, max_id(n), 0);
  for (int j = 1; j <= n - 1; ++j) arc(j - 1, 2, min_id(j), 0);
  arc(0, 3, min_id(n), 0);
  return t;
}

namespace {

Rational fresh_between(const Rational& lo, const Rational& hi,
                       std::set<std::pair<long long, long long>>& used) {
  for (long long step = 2;; ++step) {
    // lo + (hi - lo) / step, walking toward lo until the height is new.
    Rational h = make_rational(
        Int128(lo.num) * hi.den * step +
            (Int128(hi.num) * lo.den - Int128(lo.num) * hi.den),
        Int128(lo.den) * hi.den * step);
    if (used.insert({h.num, h.den}).second) return h;
  }
}

}  // namespace

TilingTree random_valid_tiling(unsigned long long seed, int bridge_index,
                               int max_extra) {
  TilingTree t = trivial_tiling(bridge_index);
  std::mt19937_64 rng(seed);
  auto pick = [&rng](unsigned long long n) -> int {
    return static_cast<int>(rng() % n);
  };
  std::set<std::pair<long long, long long>> used;
  for (const Tile& tile : t.tiles) used.insert({tile.height.num,
                                                tile.height.den});
  auto idx = index_by_id(t);
  int insertions = max_extra >= 2 ? pick(max_extra / 2 + 1) : 0;
  for (int round = 0; round < insertions; ++round) {
    idx = index_by_id(t);
    // Only edges without nested children can be subdivided cleanly.
    std::vector<int> eligible;
    for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
      if (!edge_has_children(t, e)) eligible.push_back(e);
    }
    int e = eligible[pick(eligible.size())];
    GlueEdge edge = t.edges[e];
    const Tile& ta = t.tiles[idx.at(edge.a.tile)];
    const Tile& tb = t.tiles[idx.at(edge.b.tile)];
    bool a_up = slot_points_up(ta, edge.a.slot);
    SlotRef lower_end = a_up ? edge.a : edge.b;
    SlotRef upper_end = a_up ? edge.b : edge.a;
    const Tile& lower = a_up ? ta : tb;
    const Tile& upper = a_up ? tb : ta;
    Polarity pol = pick(2) == 0 ? Polarity::Down : Polarity::Up;
    int saddle_id = static_cast<int>(t.tiles.size());
    int cap_id = saddle_id + 1;
    Rational sh = fresh_between(lower.height, upper.height, used);
    Rational ch = pol == Polarity::Down ? fresh_between(lower.height, sh, used)
                                        : fresh_between(sh, upper.height, used);
    Extremum ext = pol == Polarity::Down ? Extremum::Min : Extremum::Max;
    if (edge.label == EdgeLabel::Arc) {
      Tile saddle{saddle_id, TileKind::T221, pol, std::nullopt, sh};
      Tile cap{cap_id, TileKind::T001, std::nullopt, ext, ch};
      t.tiles.push_back(saddle);
      t.tiles.push_back(cap);
      int up_slot = pol == Polarity::Down ? 0 : 1;
      int down_slot = pol == Polarity::Down ? 1 : 0;
      t.edges[e] = {upper_end, {saddle_id, up_slot}, EdgeLabel::Arc,
                    std::nullopt};
      t.edges.push_back({{saddle_id, down_slot}, lower_end, EdgeLabel::Arc,
                         std::nullopt});
      t.edges.push_back({{saddle_id, 2}, {cap_id, 0}, EdgeLabel::Circle,
                         std::nullopt});
    } else {
      Tile saddle{saddle_id, TileKind::T003, pol, std::nullopt, sh};
      Tile cap{cap_id, TileKind::T001, std::nullopt, ext, ch};
      t.tiles.push_back(saddle);
      t.tiles.push_back(cap);
      int up_slot = pol == Polarity::Down ? 0 : 1;
      int down_slot = pol == Polarity::Down ? 1 : 0;
      std::optional<int> parent = edge.inside;
      t.edges[e] = {upper_end, {saddle_id, up_slot}, EdgeLabel::Circle,
                    parent};
      int cont_index = static_cast<int>(t.edges.size());
      t.edges.push_back({{saddle_id, down_slot}, lower_end, EdgeLabel::Circle,
                         parent});
      // The cap circle can sit beside the continuing curve or nest inside
      // the piece on its own side of the saddle.
      std::optional<int> cap_parent = parent;
      if (pick(2) == 0) {
        cap_parent = pol == Polarity::Down ? cont_index : e;
      }
      t.edges.push_back({{saddle_id, 2}, {cap_id, 0}, EdgeLabel::Circle,
                         cap_parent});
    }
  }
  return t;
}

}  // namespace platcalc
