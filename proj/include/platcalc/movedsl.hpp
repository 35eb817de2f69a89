#pragma once

#include <string>

#include "platcalc/plat.hpp"

namespace platcalc {

// Parses a move expression. The vocabulary:
//   reduce                      free cancellation pass
//   rw(pos=3,rel=braid,dir=fwd) relation rewrite at a word position
//   stab                        stabilization
//   destab                      destabilization
//   dc(side=top,gen=1,inv=0)    double coset move
//   flip(split=0,k=1,dir=in)    flip insertion
//   microflip(start=1,k=4,gap=2,split=0,dir=in)   block flip; gap
//                               defaults to k/2 when omitted
//   pocket(script=top0+bottom2i) double-coset script; each entry is a side,
//                               a generator index, and an optional trailing
//                               i for the inverse
// Whitespace is ignored. Throws std::invalid_argument naming the offending
// token on malformed input.
MoveParams parse_move(const std::string& text);

// Canonical text for a move; parse_move(format_move(m)) reproduces m.
std::string format_move(const MoveParams& move);

}  // namespace platcalc
