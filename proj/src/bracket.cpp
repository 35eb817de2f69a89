#include "platcalc/bracket.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <numeric>

namespace platcalc {

namespace {

// Union-find with undo, no path compression, links by size.
struct RollbackDsu {
  std::vector<int> parent;
  std::vector<int> size;
  std::vector<std::pair<int, int>> trail;  // (child root, parent root)

  explicit RollbackDsu(int n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
  // False when the ends already belong to one class (a loop closes).
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] > size[b]) std::swap(a, b);
    parent[a] = b;
    size[b] += size[a];
    trail.push_back({a, b});
    return true;
  }
  size_t mark() const { return trail.size(); }
  void rewind(size_t mark) {
    while (trail.size() > mark) {
      auto [child, root] = trail.back();
      trail.pop_back();
      parent[child] = child;
      size[root] -= size[child];
    }
  }
};

LaurentPolynomial loop_power(int exponent) {
  LaurentPolynomial out(1);
  LaurentPolynomial d = loop_value();
  for (int i = 0; i < exponent; ++i) out = out * d;
  return out;
}

}  // namespace

std::optional<LaurentPolynomial> kauffman_bracket(const LinkDiagram& d,
                                                  int budget) {
  int c = static_cast<int>(d.crossings.size());
  if (c > budget) return std::nullopt;
  if (d.arc_count == 0 && d.free_loops == 0) return LaurentPolynomial(1);

  // leaf_counts[(exponent gap, loops closed)] = number of smoothing states
  std::map<std::pair<int, int>, long long> leaf_counts;
  RollbackDsu dsu(d.arc_count);
  struct Frame {
    int crossing;
    int branch;  // 0: next is A, 1: next is B, 2: done
    size_t mark;
    int exponent;
    int loops;
  };
  std::vector<Frame> stack;
  stack.reserve(c + 1);
  stack.push_back({0, 0, dsu.mark(), 0, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.crossing == c) {
      ++leaf_counts[{f.exponent, f.loops}];
      stack.pop_back();
      continue;
    }
    if (f.branch == 2) {
      dsu.rewind(f.mark);
      stack.pop_back();
      continue;
    }
    // Undo the unions of this frame's previous branch before taking the next.
    dsu.rewind(f.mark);
    const Crossing& x = d.crossings[f.crossing];
    // A-smoothing of an over NW-SE crossing joins the corners vertically;
    // for the mirrored crossing the A-smoothing joins them horizontally.
    bool vertical = x.over_nw_se == (f.branch == 0);
    int exponent = f.branch == 0 ? 1 : -1;
    ++f.branch;
    int loops = 0;
    if (vertical) {
      if (!dsu.unite(x.nw, x.sw)) ++loops;
      if (!dsu.unite(x.ne, x.se)) ++loops;
    } else {
      if (!dsu.unite(x.nw, x.ne)) ++loops;
      if (!dsu.unite(x.sw, x.se)) ++loops;
    }
    Frame child{f.crossing + 1, 0, dsu.mark(), f.exponent + exponent,
                f.loops + loops};
    stack.push_back(child);
  }

  LaurentPolynomial out;
  for (const auto& [key, count] : leaf_counts) {
    auto [exponent, loops] = key;
    LaurentPolynomial term = loop_power(loops + d.free_loops - 1);
    term.mul_monomial(count, exponent);
    out += term;
  }
  return out;
}

namespace {

// Crossingless pairing of the 2n cap points: partner[i] = partner of point i.
using CapPairing = std::vector<int>;

CapPairing cap_pairing(int strands) {
  CapPairing m(strands);
  for (int i = 0; i + 1 < strands; i += 2) {
    m[i] = i + 1;
    m[i + 1] = i;
  }
  return m;
}

int union_loop_count(const CapPairing& a, const CapPairing& b) {
  int n = static_cast<int>(a.size());
  std::vector<bool> seen(n, false);
  int loops = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    int x = start;
    do {
      seen[x] = true;
      seen[a[x]] = true;
      x = b[a[x]];
    } while (x != start);
    ++loops;
  }
  return loops;
}

}  // namespace

LaurentPolynomial plat_bracket(const Plat& p) {
  int m = p.strands();
  CapPairing caps = cap_pairing(m);
  std::map<CapPairing, LaurentPolynomial> state;
  state[caps] = LaurentPolynomial(1);
  LaurentPolynomial d = loop_value();
  for (int g : p.word.letters) {
    int s = std::abs(g) - 1;
    int e = g > 0 ? 1 : -1;
    std::map<CapPairing, LaurentPolynomial> next;
    for (const auto& [pairing, coeff] : state) {
      // Identity smoothing.
      {
        LaurentPolynomial c = coeff;
        c.mul_monomial(1, e);
        next[pairing] += c;
      }
      // Cap-cup smoothing at s, s+1.
      LaurentPolynomial c = coeff;
      c.mul_monomial(1, -e);
      if (pairing[s] == s + 1) {
        next[pairing] += c * d;
      } else {
        CapPairing joined = pairing;
        int a = joined[s], b = joined[s + 1];
        joined[a] = b;
        joined[b] = a;
        joined[s] = s + 1;
        joined[s + 1] = s;
        next[joined] += c;
      }
    }
    state = std::move(next);
  }
  LaurentPolynomial out;
  for (const auto& [pairing, coeff] : state) {
    LaurentPolynomial term = coeff * loop_power(union_loop_count(pairing, caps) - 1);
    out += term;
  }
  return out;
}

std::string OracleValue::str() const {
  if (classes.size() == 1) return classes[0].str();
  std::string out = "{";
  for (size_t i = 0; i < classes.size(); ++i) {
    if (i) out += "; ";
    out += classes[i].str();
  }
  out += "}";
  return out;
}

std::optional<OracleValue> oracle_value(const Plat& p, int budget) {
  if (crossing_count(p) > budget) return std::nullopt;
  LinkDiagram d = plat_to_diagram(p);
  std::vector<CrossingPasses> passes = label_components(d);
  int comp = d.component_count();
  LaurentPolynomial bracket = plat_bracket(p);

  // Signed pass products accumulated per component pair, diagonal included.
  std::vector<std::vector<long long>> w(comp, std::vector<long long>(comp, 0));
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    const CrossingPasses& cp = passes[ci];
    int base = d.crossings[ci].over_nw_se ? 1 : -1;
    int a = cp.component_nw_se, b = cp.component_ne_sw;
    int s = base * cp.direction_nw_se * cp.direction_ne_sw;
    w[std::min(a, b)][std::max(a, b)] += s;
  }

  OracleValue out;
  out.components = comp;
  int free_classes = comp > 0 ? comp - 1 : 0;
  for (long long mask = 0; mask < (1LL << free_classes); ++mask) {
    std::vector<int> eps(comp, 1);
    for (int i = 0; i < free_classes; ++i)
      if (mask & (1LL << i)) eps[i + 1] = -1;
    long long writhe_sum = 0;
    for (int i = 0; i < comp; ++i)
      for (int j = i; j < comp; ++j) writhe_sum += w[i][j] * eps[i] * eps[j];
    LaurentPolynomial value = bracket;
    value.mul_monomial(writhe_sum % 2 == 0 ? 1 : -1,
                       static_cast<int>(-3 * writhe_sum));
    out.classes.push_back(std::move(value));
  }
  std::sort(out.classes.begin(), out.classes.end());
  return out;
}

std::optional<bool> unknot_evidence(const Plat& p, int budget) {
  std::optional<OracleValue> v = oracle_value(p, budget);
  if (!v) return std::nullopt;
  return v->components == 1 && v->classes.size() == 1 &&
         v->classes[0] == LaurentPolynomial(1);
}

}  // namespace platcalc
