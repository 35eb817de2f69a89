#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "platcalc/braid.hpp"

namespace platcalc {

// A move was asked for parameters or a state it does not apply to.
struct MoveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A link presented as a plat: a braid on an even number of strands closed by
// caps joining strands (2i-1, 2i) at the top and at the bottom.
struct Plat {
  BraidWord word;

  int strands() const { return word.strand_count; }
  int bridge_index() const { return word.strand_count / 2; }
  bool operator==(const Plat& o) const { return word == o.word; }
  bool operator!=(const Plat& o) const { return !(*this == o); }
};

// Validates strand count (even, >= 2) and letter ranges; throws
// std::invalid_argument with the offending value otherwise.
Plat make_plat(int strands, std::vector<int> letters);

int crossing_count(const Plat& p);
// Number of link components of the plat closure.
int component_count(const Plat& p);

// Appends the new generator on two fresh strands: (2n, w) -> (2n+2, w s_2n).
Plat stabilize(const Plat& p);

// Applicable when the word avoids the last generator entirely and uses the
// next-to-last exactly once; that letter caps off a detour of the last two
// strands, so removing it and the two strands preserves the link.
// Returns nullopt when the pattern does not hold.
std::optional<Plat> destabilize(const Plat& p);

// Generators of the subgroup of cap-preserving braids on `strands` strands:
// n = 1 gives {s1}; otherwise {s1, s2 s1 s1 s2, s_2i s_2i-1 s_2i+1 s_2i}.
std::vector<BraidWord> hilden_generators(int strands);

enum class Side { Top, Bottom };

// Multiplies a cap-preserving generator onto the chosen end of the word:
// top prepends, bottom appends.
Plat double_coset_move(const Plat& p, Side side, int generator_index,
                       bool inverted);

enum class FlipDirection { In, Out };

// The word inserted by a flip at gap position k on `strands` strands:
//   in:  (s1 s2 ... s_k-1)^k (s_2n-1^-1 ... s_k+1^-1)^2n-k
//   out: (s_k-1^-1 ... s1^-1)^k (s_k+1 ... s_2n-1)^2n-k
BraidWord flip_insertion(int strands, int k, FlipDirection direction);

// Rotates the capped block hanging below the split by a half turn, realized
// by inserting flip_insertion at the split position of the word.
Plat flip(const Plat& p, int split, int k, FlipDirection direction);

// Flip of a contiguous even-size block of strands: the block-local flip word
// for `block` strands with gap position `gap`, every letter shifted up by
// first_strand-1. first_strand must be odd so the block covers whole caps.
Plat microflip(const Plat& p, int first_strand, int block, int gap, int split,
               FlipDirection direction);

struct PocketEntry {
  Side side;
  int generator_index;
  bool inverted;
};

// A short program of double-coset moves recorded as one move.
Plat pocket_move(const Plat& p, const std::vector<PocketEntry>& script);

enum class MoveKind {
  Isotopy,
  Stabilize,
  Destabilize,
  DoubleCoset,
  Flip,
  Microflip,
  Pocket
};

struct ReduceParams {};
struct RewriteParams {
  int position;
  RelationKind relation;
  RewriteDirection direction = RewriteDirection::Forward;
};
struct StabilizeParams {};
struct DestabilizeParams {};
struct DoubleCosetParams {
  Side side;
  int generator_index;
  bool inverted;
};
struct FlipParams {
  int split;
  int k;
  FlipDirection direction;
};
struct MicroflipParams {
  int first_strand;
  int block;
  int gap;
  int split;
  FlipDirection direction;
};
struct PocketParams {
  std::vector<PocketEntry> script;
};

using MoveParams =
    std::variant<ReduceParams, RewriteParams, StabilizeParams,
                 DestabilizeParams, DoubleCosetParams, FlipParams,
                 MicroflipParams, PocketParams>;

MoveKind move_kind(const MoveParams& params);

struct MoveRecord {
  MoveParams params;
  int crossing_count_after = 0;
  int bridge_index_after = 0;

  MoveKind kind() const { return move_kind(params); }
};

// Applies the move exactly as parameterized, with no normalization.
// ReduceParams applies free_reduce. Throws MoveError when the move does not
// apply (destabilize pattern absent, rewrite mismatch, range errors).
Plat apply_move(const Plat& p, const MoveParams& params);

}  // namespace platcalc
