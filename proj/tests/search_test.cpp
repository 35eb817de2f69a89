#include <doctest.h>

#include <optional>
#include <string>
#include <vector>

#include "platcalc/bracket.hpp"
#include "platcalc/search.hpp"

using namespace platcalc;

namespace {

bool trace_uses_stabilize(const SimplificationTrace& t) {
  for (const TraceStep& s : t.steps)
    if (s.move && move_kind(*s.move) == MoveKind::Stabilize) return true;
  return false;
}

}  // namespace

TEST_CASE("simplify recognizes a standard plat immediately") {
  SimplificationTrace t = simplify(make_plat(4, {}), SearchConfig{});
  CHECK(t.outcome == SearchOutcome::ReachedStandard);
  REQUIRE(t.steps.size() == 1);
  CHECK_FALSE(t.steps[0].move.has_value());
  CHECK(t.steps[0].plat == make_plat(4, {}));
  CHECK(certify_trace(t).empty());
}

TEST_CASE("the starting plat is normalized before the search begins") {
  SimplificationTrace t = simplify(make_plat(2, {1, -1}), SearchConfig{});
  CHECK(t.outcome == SearchOutcome::ReachedStandard);
  REQUIRE(t.steps.size() == 1);
  CHECK(t.steps[0].plat == make_plat(2, {}));
}

TEST_CASE("simplify unwinds small unknots") {
  for (const Plat& start :
       {make_plat(2, {1, 1}), make_plat(2, {1, 1, 1, -1, 1}),
        make_plat(4, {2}), make_plat(4, {1, 2, -1})}) {
    CAPTURE(start.word.letters);
    SimplificationTrace t = simplify(start, SearchConfig{});
    REQUIRE(t.outcome == SearchOutcome::ReachedStandard);
    const Plat& last = t.steps.back().plat;
    CHECK(last.word.letters.empty());
    CHECK(last.bridge_index() == component_count(start));
    CHECK_FALSE(trace_uses_stabilize(t));
    CHECK(certify_trace(t).empty());
  }
}

TEST_CASE("scramble") {
  Plat start = make_plat(4, {});
  SUBCASE("deterministic per seed") {
    CHECK(scramble(start, 7, 5) == scramble(start, 7, 5));
    CHECK(scramble(start, 7, 5) != scramble(start, 8, 5));
  }
  SUBCASE("keeps the link and respects the size bounds") {
    for (unsigned long long seed = 1; seed <= 12; ++seed) {
      Plat s = scramble(start, seed, 6);
      CAPTURE(seed);
      CHECK(s.strands() <= 12);
      CHECK(s.word.letters.size() <= 80);
      CHECK(component_count(s) == 2);
      auto before = oracle_value(start);
      auto after = oracle_value(s, 80);
      REQUIRE(before.has_value());
      REQUIRE(after.has_value());
      CHECK(*before == *after);
    }
  }
}

TEST_CASE("simplify returns scrambled trivial plats to standard") {
  for (unsigned long long seed : {3ULL, 11ULL, 19ULL}) {
    Plat start = scramble(make_plat(2, {}), seed, 5);
    CAPTURE(seed);
    CAPTURE(start.word.letters);
    SimplificationTrace t = simplify(start, SearchConfig{});
    REQUIRE(t.outcome == SearchOutcome::ReachedStandard);
    CHECK(t.steps.back().plat == make_plat(2, {}));
    CHECK_FALSE(trace_uses_stabilize(t));
    CHECK(certify_trace(t).empty());
  }
}

TEST_CASE("a nonzero seed shuffles ties but still reaches the goal") {
  Plat start = scramble(make_plat(2, {}), 23, 5);
  SearchConfig config;
  config.seed = 424242;
  SimplificationTrace t = simplify(start, config);
  REQUIRE(t.outcome == SearchOutcome::ReachedStandard);
  CHECK(certify_trace(t).empty());
}

TEST_CASE("an exhausted budget still yields a certifiable trace") {
  Plat start = scramble(make_plat(2, {}), 5, 6);
  SearchConfig config;
  config.node_budget = 3;
  SimplificationTrace t = simplify(start, config);
  CHECK(t.outcome == SearchOutcome::BudgetExhausted);
  REQUIRE_FALSE(t.steps.empty());
  CHECK(certify_trace(t).empty());
}

TEST_CASE("crossing_cap bounds every step of the trace") {
  Plat start = scramble(make_plat(2, {}), 9, 4);
  SearchConfig config;
  config.crossing_cap = crossing_count(start);
  SimplificationTrace t = simplify(start, config);
  for (const TraceStep& s : t.steps)
    CHECK(crossing_count(s.plat) <= *config.crossing_cap);
  CHECK(certify_trace(t, config.crossing_cap).empty());
}

TEST_CASE("certify_trace rejects tampering") {
  Plat start = scramble(make_plat(2, {}), 18, 4);
  SimplificationTrace good = simplify(start, SearchConfig{});
  REQUIRE(good.outcome == SearchOutcome::ReachedStandard);
  REQUIRE(good.steps.size() >= 2);
  REQUIRE(certify_trace(good).empty());

  SUBCASE("a rewritten intermediate plat") {
    SimplificationTrace bad = good;
    bad.steps[1].plat.word.letters.push_back(1);
    CHECK_FALSE(certify_trace(bad).empty());
  }
  SUBCASE("a claimed outcome the final step does not support") {
    SimplificationTrace bad = good;
    bad.steps.pop_back();
    bad.outcome = SearchOutcome::ReachedStandard;
    bool final_is_standard =
        bad.steps.back().plat.word.letters.empty() &&
        bad.steps.back().plat.bridge_index() ==
            component_count(bad.steps.back().plat);
    if (!final_is_standard) CHECK_FALSE(certify_trace(bad).empty());
  }
  SUBCASE("a stabilization step") {
    SimplificationTrace bad;
    bad.outcome = SearchOutcome::BudgetExhausted;
    Plat p = make_plat(4, {});
    bad.steps.push_back(TraceStep{std::nullopt, p});
    bad.steps.push_back(TraceStep{MoveParams{StabilizeParams{}}, stabilize(p)});
    CHECK_FALSE(certify_trace(bad).empty());
  }
  SUBCASE("a crossing cap the trace ignores") {
    bool above_cap = false;
    for (const TraceStep& s : good.steps)
      if (crossing_count(s.plat) > 1) above_cap = true;
    if (above_cap) CHECK_FALSE(certify_trace(good, 1).empty());
  }
}
