#pragma once

#include <optional>
#include <string>
#include <vector>

#include "platcalc/bracket.hpp"
#include "platcalc/plat.hpp"

namespace platcalc {

struct SearchConfig {
  int beam_width = 24;
  // Ceiling on candidate states generated before the search gives up.
  int node_budget = 200000;
  // When set, states with more crossings than this are discarded.
  std::optional<int> crossing_cap;
  // 0 keeps the fully deterministic candidate order; any other value
  // shuffles ties among equally ranked candidates.
  unsigned long long seed = 0;
};

enum class SearchOutcome { ReachedStandard, BudgetExhausted };

// One state of a simplification. The first step records the starting plat
// and has no move; every later step records the move applied and the plat
// after that move and the automatic cancellation pass.
struct TraceStep {
  std::optional<MoveParams> move;
  Plat plat;
};

struct SimplificationTrace {
  SearchOutcome outcome = SearchOutcome::BudgetExhausted;
  std::vector<TraceStep> steps;
};

// Beam search toward the standard plat (empty word whose bridge number
// matches its component count). Children come from relation rewrites,
// double coset moves, flips and balanced microflips at the word ends, and
// destabilization; stabilization is never searched. Every child is run
// through isotopy_normalize before ranking. On a blown budget the trace
// leads to the best state seen.
SimplificationTrace simplify(const Plat& start, const SearchConfig& config);

// Replays and checks a trace. Returns human-readable violations; an empty
// vector certifies it. Checks: steps replay exactly (move then
// isotopy_normalize), no stabilization, bridge index never increases, the
// component count is constant, the bracket-derived invariant agrees on
// every step small enough for the given budget, every step respects
// crossing_cap when one is given, and the claimed outcome matches the
// final step.
std::vector<std::string> certify_trace(
    const SimplificationTrace& trace,
    std::optional<int> crossing_cap = std::nullopt,
    int oracle_budget = kDefaultBracketBudget);

// Applies move_budget random complexity-raising moves (stabilization,
// double coset moves, flips, balanced microflips) to the plat, cancelling
// after each. Parameters are drawn small enough to keep the scramble
// searchable: at most 12 strands and insertions that keep the word under
// 80 letters.
Plat scramble(const Plat& start, unsigned long long seed, int move_budget);

}  // namespace platcalc
