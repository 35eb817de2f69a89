#pragma once

#include <optional>
#include <string>
#include <vector>

namespace platcalc {

// A word in the Artin generators of the braid group on strand_count strands.
// Letter g with g > 0 is the generator crossing strands g and g+1 with the
// left strand passing over; -g is its inverse. Valid letters satisfy
// 1 <= |g| <= strand_count - 1. The empty word is the identity.
struct BraidWord {
  int strand_count = 2;
  std::vector<int> letters;

  bool operator==(const BraidWord& o) const {
    return strand_count == o.strand_count && letters == o.letters;
  }
};

bool valid_letter(int strand_count, int letter);
bool valid_word(const BraidWord& w);

// Cancels adjacent inverse pairs until none remain. The result is unique.
BraidWord free_reduce(BraidWord w);

// Stronger cleanup used by the simplifier: repeatedly deletes a pair g ... -g
// whose in-between letters all commute with g (generator distance >= 2), which
// amounts to a fixed sequence of commutation rewrites followed by free
// cancellation. Deterministic: scans left to right and removes the first
// deletable pair, then restarts.
BraidWord isotopy_normalize(BraidWord w);

enum class RelationKind { Commutation, BraidRelation };
enum class RewriteDirection { Forward, Reverse };

// Replaces the subword starting at position (0-based) by the other side of the
// named defining relation. Commutation swaps two letters whose generator
// distance is at least 2. BraidRelation rewrites one of the six signed
// three-letter relation instances on adjacent generators:
//   ( i,  j,  i) <-> ( j,  i,  j)     (-i, -j, -i) <-> (-j, -i, -j)
//   ( i,  j, -i) <-> (-j,  i,  j)     (-i,  j,  i) <-> ( j,  i, -j)
//   ( i, -j, -i) <-> (-j, -i,  j)     (-i, -j,  i) <-> ( j, -i, -j)
// The instance set is closed under reversal, so both directions accept the
// same patterns; the direction is kept for symmetry in recorded moves.
// Returns nullopt when no instance matches at the position.
std::optional<BraidWord> apply_relation(const BraidWord& w, int position,
                                        RelationKind relation,
                                        RewriteDirection direction);

// Permutation of strand positions. image[i] is the 0-based bottom position of
// the strand entering at 0-based top position i.
struct StrandPermutation {
  std::vector<int> image;

  int size() const { return static_cast<int>(image.size()); }
  bool operator==(const StrandPermutation& o) const { return image == o.image; }
};

StrandPermutation identity_permutation(int size);
StrandPermutation underlying_permutation(const BraidWord& w);
// apply first, then then.
StrandPermutation compose(const StrandPermutation& first,
                          const StrandPermutation& then);
StrandPermutation inverse(const StrandPermutation& p);

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord invert(const BraidWord& w);
// u w u^-1.
BraidWord conjugate(const BraidWord& w, const BraidWord& u);

// The central full twist (s_1 s_2 ... s_{m-1})^m on m >= 2 strands.
BraidWord full_twist(int strand_count);

// Left Garside normal form: delta_power half twists followed by the
// permutations of the non-trivial simple factors, left-weighted.
struct GarsideNormalForm {
  int strand_count = 2;
  int delta_power = 0;
  std::vector<std::vector<int>> factors;

  bool operator==(const GarsideNormalForm& o) const {
    return strand_count == o.strand_count && delta_power == o.delta_power &&
           factors == o.factors;
  }
};

GarsideNormalForm garside_normal_form(const BraidWord& w);

// Exact word problem: true iff the words represent the same group element.
// Negative letters are cleared by multiplying through by a central full-twist
// power, then the positive words are compared by Garside normal form.
bool words_equal(const BraidWord& a, const BraidWord& b);

}  // namespace platcalc
