#include "platcalc/plat.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>

namespace platcalc {

Plat make_plat(int strands, std::vector<int> letters) {
  if (strands < 2 || strands % 2 != 0)
    throw std::invalid_argument("strand count " + std::to_string(strands) +
                                " is not a positive even number");
  for (int g : letters)
    if (!valid_letter(strands, g))
      throw std::invalid_argument("letter " + std::to_string(g) +
                                  " out of range for strands=" +
                                  std::to_string(strands));
  Plat p;
  p.word.strand_count = strands;
  p.word.letters = std::move(letters);
  return p;
}

int crossing_count(const Plat& p) {
  return static_cast<int>(p.word.letters.size());
}

namespace {

struct Dsu {
  std::vector<int> parent;

  explicit Dsu(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int component_count(const Plat& p) {
  int m = p.strands();
  Dsu dsu(m);
  for (int i = 0; i + 1 < m; i += 2) dsu.unite(i, i + 1);
  StrandPermutation perm = underlying_permutation(p.word);
  StrandPermutation inv = inverse(perm);
  for (int i = 0; i + 1 < m; i += 2) dsu.unite(inv.image[i], inv.image[i + 1]);
  int count = 0;
  for (int i = 0; i < m; ++i)
    if (dsu.find(i) == i) ++count;
  return count;
}

Plat stabilize(const Plat& p) {
  Plat out = p;
  out.word.strand_count += 2;
  out.word.letters.push_back(p.strands());
  return out;
}

std::optional<Plat> destabilize(const Plat& p) {
  int m = p.strands();
  if (m < 4) return std::nullopt;
  int last = m - 1, next = m - 2;
  int next_uses = 0;
  size_t next_pos = 0;
  for (size_t i = 0; i < p.word.letters.size(); ++i) {
    int a = std::abs(p.word.letters[i]);
    if (a == last) return std::nullopt;
    if (a == next) {
      ++next_uses;
      next_pos = i;
    }
  }
  if (next_uses != 1) return std::nullopt;
  Plat out;
  out.word.strand_count = m - 2;
  out.word.letters = p.word.letters;
  out.word.letters.erase(out.word.letters.begin() + next_pos);
  return out;
}

std::vector<BraidWord> hilden_generators(int strands) {
  if (strands < 2 || strands % 2 != 0)
    throw std::invalid_argument("hilden_generators: bad strand count " +
                                std::to_string(strands));
  std::vector<BraidWord> out;
  out.push_back(BraidWord{strands, {1}});
  if (strands == 2) return out;
  out.push_back(BraidWord{strands, {2, 1, 1, 2}});
  for (int i = 1; 2 * i + 1 < strands; ++i)
    out.push_back(
        BraidWord{strands, {2 * i, 2 * i - 1, 2 * i + 1, 2 * i}});
  return out;
}

Plat double_coset_move(const Plat& p, Side side, int generator_index,
                       bool inverted) {
  std::vector<BraidWord> gens = hilden_generators(p.strands());
  if (generator_index < 0 ||
      generator_index >= static_cast<int>(gens.size()))
    throw MoveError("double_coset: generator index " +
                    std::to_string(generator_index) + " out of range for " +
                    std::to_string(p.strands()) + " strands");
  BraidWord g = gens[generator_index];
  if (inverted) g = invert(g);
  Plat out = p;
  out.word = side == Side::Top ? concat(g, p.word) : concat(p.word, g);
  return out;
}

BraidWord flip_insertion(int strands, int k, FlipDirection direction) {
  if (strands < 2 || strands % 2 != 0)
    throw MoveError("flip: bad strand count " + std::to_string(strands));
  if (k < 1 || k > strands - 1)
    throw MoveError("flip: k=" + std::to_string(k) +
                    " out of range 1.." + std::to_string(strands - 1));
  BraidWord out;
  out.strand_count = strands;
  if (direction == FlipDirection::In) {
    for (int rep = 0; rep < k; ++rep)
      for (int g = 1; g <= k - 1; ++g) out.letters.push_back(g);
    for (int rep = 0; rep < strands - k; ++rep)
      for (int g = strands - 1; g >= k + 1; --g) out.letters.push_back(-g);
  } else {
    for (int rep = 0; rep < k; ++rep)
      for (int g = k - 1; g >= 1; --g) out.letters.push_back(-g);
    for (int rep = 0; rep < strands - k; ++rep)
      for (int g = k + 1; g <= strands - 1; ++g) out.letters.push_back(g);
  }
  return out;
}

namespace {

Plat insert_word(const Plat& p, int split, const std::vector<int>& letters) {
  if (split < 0 || split > static_cast<int>(p.word.letters.size()))
    throw MoveError("split=" + std::to_string(split) +
                    " out of range 0.." +
                    std::to_string(p.word.letters.size()));
  Plat out = p;
  out.word.letters.insert(out.word.letters.begin() + split, letters.begin(),
                          letters.end());
  return out;
}

}  // namespace

Plat flip(const Plat& p, int split, int k, FlipDirection direction) {
  BraidWord w = flip_insertion(p.strands(), k, direction);
  return insert_word(p, split, w.letters);
}

Plat microflip(const Plat& p, int first_strand, int block, int gap, int split,
               FlipDirection direction) {
  if (block < 2 || block % 2 != 0)
    throw MoveError("microflip: block size " + std::to_string(block) +
                    " is not a positive even number");
  if (first_strand < 1 || first_strand % 2 == 0)
    throw MoveError("microflip: first strand " + std::to_string(first_strand) +
                    " must be odd so the block covers whole caps");
  if (first_strand + block - 1 > p.strands())
    throw MoveError("microflip: block [" + std::to_string(first_strand) +
                    ".." + std::to_string(first_strand + block - 1) +
                    "] exceeds " + std::to_string(p.strands()) + " strands");
  if (gap < 1 || gap > block - 1)
    throw MoveError("microflip: gap=" + std::to_string(gap) +
                    " out of range 1.." + std::to_string(block - 1));
  // Turning a proper block is an isotopy only where the block's caps are
  // next to the insertion, because the turn carries those caps along.
  // Mid-word insertions change the link type; see the counterexample in
  // the move tests.
  bool proper = first_strand != 1 || block != p.strands();
  int len = static_cast<int>(p.word.letters.size());
  if (proper && split != 0 && split != len)
    throw MoveError("microflip: split=" + std::to_string(split) +
                    " must touch a cap (0 or " + std::to_string(len) +
                    ") when the block is a proper subset of the strands");
  BraidWord local = flip_insertion(block, gap, direction);
  std::vector<int> shifted;
  shifted.reserve(local.letters.size());
  for (int g : local.letters) {
    int a = std::abs(g) + first_strand - 1;
    shifted.push_back(g > 0 ? a : -a);
  }
  return insert_word(p, split, shifted);
}

Plat pocket_move(const Plat& p, const std::vector<PocketEntry>& script) {
  Plat out = p;
  for (const PocketEntry& e : script)
    out = double_coset_move(out, e.side, e.generator_index, e.inverted);
  return out;
}

MoveKind move_kind(const MoveParams& params) {
  struct Visitor {
    MoveKind operator()(const ReduceParams&) { return MoveKind::Isotopy; }
    MoveKind operator()(const RewriteParams&) { return MoveKind::Isotopy; }
    MoveKind operator()(const StabilizeParams&) { return MoveKind::Stabilize; }
    MoveKind operator()(const DestabilizeParams&) {
      return MoveKind::Destabilize;
    }
    MoveKind operator()(const DoubleCosetParams&) {
      return MoveKind::DoubleCoset;
    }
    MoveKind operator()(const FlipParams&) { return MoveKind::Flip; }
    MoveKind operator()(const MicroflipParams&) { return MoveKind::Microflip; }
    MoveKind operator()(const PocketParams&) { return MoveKind::Pocket; }
  };
  return std::visit(Visitor{}, params);
}

Plat apply_move(const Plat& p, const MoveParams& params) {
  struct Visitor {
    const Plat& p;

    Plat operator()(const ReduceParams&) {
      Plat out = p;
      out.word = free_reduce(out.word);
      return out;
    }
    Plat operator()(const RewriteParams& r) {
      std::optional<BraidWord> w =
          apply_relation(p.word, r.position, r.relation, r.direction);
      if (!w)
        throw MoveError("rw: no relation instance at position " +
                        std::to_string(r.position));
      Plat out = p;
      out.word = std::move(*w);
      return out;
    }
    Plat operator()(const StabilizeParams&) { return stabilize(p); }
    Plat operator()(const DestabilizeParams&) {
      std::optional<Plat> out = destabilize(p);
      if (!out)
        throw MoveError("destab: word does not present a free last bridge");
      return *out;
    }
    Plat operator()(const DoubleCosetParams& d) {
      return double_coset_move(p, d.side, d.generator_index, d.inverted);
    }
    Plat operator()(const FlipParams& f) {
      return flip(p, f.split, f.k, f.direction);
    }
    Plat operator()(const MicroflipParams& m) {
      return microflip(p, m.first_strand, m.block, m.gap, m.split,
                       m.direction);
    }
    Plat operator()(const PocketParams& k) { return pocket_move(p, k.script); }
  };
  return std::visit(Visitor{p}, params);
}

}  // namespace platcalc
