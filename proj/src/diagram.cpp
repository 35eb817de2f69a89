#include "platcalc/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace platcalc {

namespace {

// Corner indices: 0 = nw, 1 = ne, 2 = sw, 3 = se.
constexpr int kNw = 0, kNe = 1, kSw = 2, kSe = 3;

int corner_arc(const Crossing& c, int corner) {
  switch (corner) {
    case kNw:
      return c.nw;
    case kNe:
      return c.ne;
    case kSw:
      return c.sw;
    default:
      return c.se;
  }
}

// The strand entering one corner leaves at the diagonally opposite one.
int through_corner(int corner) {
  switch (corner) {
    case kNw:
      return kSe;
    case kNe:
      return kSw;
    case kSw:
      return kNe;
    default:
      return kNw;
  }
}

struct Occurrence {
  int crossing;
  int corner;
  bool operator==(const Occurrence& o) const {
    return crossing == o.crossing && corner == o.corner;
  }
};

}  // namespace

int LinkDiagram::component_count() const {
  int labeled = 0;
  for (int c : arc_component) labeled = std::max(labeled, c + 1);
  return labeled + free_loops;
}

std::vector<CrossingPasses> label_components(LinkDiagram& d) {
  std::vector<std::vector<Occurrence>> occ(d.arc_count);
  for (size_t ci = 0; ci < d.crossings.size(); ++ci)
    for (int corner = 0; corner < 4; ++corner) {
      int a = corner_arc(d.crossings[ci], corner);
      if (a < 0 || a >= d.arc_count)
        throw std::invalid_argument("diagram: crossing " + std::to_string(ci) +
                                    " names arc " + std::to_string(a) +
                                    " outside 0.." +
                                    std::to_string(d.arc_count - 1));
      occ[a].push_back({static_cast<int>(ci), corner});
    }
  for (int a = 0; a < d.arc_count; ++a)
    if (occ[a].size() != 0 && occ[a].size() != 2)
      throw std::invalid_argument("diagram: arc " + std::to_string(a) +
                                  " occurs at " +
                                  std::to_string(occ[a].size()) +
                                  " corners, expected 0 or 2");

  d.arc_component.assign(d.arc_count, -1);
  std::vector<CrossingPasses> passes(d.crossings.size());
  int comp = 0;
  for (int start = 0; start < d.arc_count; ++start) {
    if (d.arc_component[start] != -1 || occ[start].empty()) continue;
    // Travel from the start arc into its first occurrence and follow the
    // strand until the walk returns.
    Occurrence entry = occ[start][0];
    int arc = start;
    do {
      d.arc_component[arc] = comp;
      // Entering at nw or ne means heading downward through the crossing.
      int dir = (entry.corner == kNw || entry.corner == kNe) ? 1 : -1;
      CrossingPasses& cp = passes[entry.crossing];
      if (entry.corner == kNw || entry.corner == kSe) {
        cp.component_nw_se = comp;
        cp.direction_nw_se = dir;
      } else {
        cp.component_ne_sw = comp;
        cp.direction_ne_sw = dir;
      }
      int out_corner = through_corner(entry.corner);
      int out_arc = corner_arc(d.crossings[entry.crossing], out_corner);
      Occurrence out_end{entry.crossing, out_corner};
      entry = occ[out_arc][0] == out_end ? occ[out_arc][1] : occ[out_arc][0];
      arc = out_arc;
    } while (!(arc == start && entry == occ[start][0]));
    ++comp;
  }
  // Arcs in no crossing stay unlabeled; only free_loops represents
  // crossing-free components.
  for (auto& cp : passes)
    assert(cp.direction_nw_se != 0 && cp.direction_ne_sw != 0);
  return passes;
}

int writhe(const LinkDiagram& d, const std::vector<int>& component_direction) {
  LinkDiagram copy = d;
  std::vector<CrossingPasses> passes = label_components(copy);
  if (static_cast<int>(component_direction.size()) != copy.component_count())
    throw std::invalid_argument(
        "writhe: orientation needs one flag per component");
  int total = 0;
  for (size_t ci = 0; ci < copy.crossings.size(); ++ci) {
    const CrossingPasses& cp = passes[ci];
    int d1 = cp.direction_nw_se * component_direction[cp.component_nw_se];
    int d2 = cp.direction_ne_sw * component_direction[cp.component_ne_sw];
    int base = copy.crossings[ci].over_nw_se ? 1 : -1;
    total += base * d1 * d2;
  }
  return total;
}

LinkDiagram plat_to_diagram(const Plat& p) {
  int m = p.strands();
  LinkDiagram d;
  int next_arc = 0;
  std::vector<int> cur(m);
  for (int i = 0; i + 1 < m; i += 2) {
    cur[i] = next_arc;
    cur[i + 1] = next_arc;
    ++next_arc;
  }
  for (int g : p.word.letters) {
    int s = std::abs(g) - 1;
    Crossing c;
    c.nw = cur[s];
    c.ne = cur[s + 1];
    c.sw = next_arc++;
    c.se = next_arc++;
    c.over_nw_se = g > 0;
    cur[s] = c.sw;
    cur[s + 1] = c.se;
    d.crossings.push_back(c);
  }

  std::vector<int> uses(next_arc, 0);
  for (const Crossing& c : d.crossings) {
    ++uses[c.nw];
    ++uses[c.ne];
    ++uses[c.sw];
    ++uses[c.se];
  }
  // Close the bottom caps: joining two arcs merges them into one; a cap
  // closing an untouched arc onto itself yields a crossing-free loop.
  std::vector<int> parent(next_arc);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<bool> dead(next_arc, false);
  for (int i = 0; i + 1 < m; i += 2) {
    int a = find(cur[i]);
    int b = find(cur[i + 1]);
    if (a == b) {
      if (uses[a] == 0) {
        dead[a] = true;
        ++d.free_loops;
      }
      continue;
    }
    uses[b] += uses[a];
    parent[a] = b;
  }
  std::vector<int> dense(next_arc, -1);
  int count = 0;
  for (int a = 0; a < next_arc; ++a) {
    int r = find(a);
    if (dead[r]) continue;
    if (dense[r] == -1) dense[r] = count++;
    dense[a] = dense[r];
  }
  d.arc_count = count;
  for (Crossing& c : d.crossings) {
    c.nw = dense[c.nw];
    c.ne = dense[c.ne];
    c.sw = dense[c.sw];
    c.se = dense[c.se];
  }
  label_components(d);
  return d;
}

}  // namespace platcalc
