// End-to-end acceptance checks for the plat engine. Each criterion prints
// one PASS/FAIL line with its check counts and elapsed time; the exit
// status is the number of failed criteria. All randomness is fixed-seed,
// so the run is deterministic.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "platcalc/bracket.hpp"
#include "platcalc/braid.hpp"
#include "platcalc/diagram.hpp"
#include "platcalc/laurent.hpp"
#include "platcalc/plat.hpp"
#include "platcalc/search.hpp"
#include "platcalc/textio.hpp"
#include "platcalc/tiling.hpp"
#include "support/word_closure.hpp"

namespace {

using namespace platcalc;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;
};

void fail(Outcome& out, std::string note) {
  out.pass = false;
  if (out.notes.size() < 8) out.notes.push_back(std::move(note));
}

std::string word_str(const Plat& p) {
  std::string s = std::to_string(p.strands()) + " strands [";
  for (size_t i = 0; i < p.word.letters.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p.word.letters[i]);
  }
  return s + "]";
}

Plat random_plat(std::mt19937_64& rng, int max_bridge, int max_len) {
  int strands = 2 * (1 + static_cast<int>(rng() % max_bridge));
  int len = static_cast<int>(rng() % (max_len + 1));
  std::vector<int> letters;
  letters.reserve(len);
  for (int i = 0; i < len; ++i) {
    int g = 1 + static_cast<int>(rng() % (strands - 1));
    letters.push_back(rng() % 2 ? g : -g);
  }
  return make_plat(strands, std::move(letters));
}

// Criterion 1: 200 seeded random plats (bridge <= 4, word length <= 10);
// every move kind, plus stabilize, leaves the oracle value unchanged.
Outcome criterion1() {
  Outcome out;
  std::mt19937_64 rng(101);
  const int budget = 120;
  long long applications = 0;
  for (int trial = 0; trial < 200 && out.pass; ++trial) {
    Plat p = random_plat(rng, 4, 10);
    std::optional<OracleValue> base = oracle_value(p, budget);
    if (!base) {
      fail(out, "base oracle unavailable on " + word_str(p));
      break;
    }

    std::vector<std::pair<std::string, MoveParams>> menu;
    menu.emplace_back("reduce", ReduceParams{});
    menu.emplace_back("stab", StabilizeParams{});
    if (destabilize(p)) menu.emplace_back("destab", DestabilizeParams{});
    int len = static_cast<int>(p.word.letters.size());
    for (int pos = 0; pos < len; ++pos) {
      for (RelationKind rel :
           {RelationKind::Commutation, RelationKind::BraidRelation}) {
        if (apply_relation(p.word, pos, rel, RewriteDirection::Forward)) {
          menu.emplace_back(
              "rw", RewriteParams{pos, rel, RewriteDirection::Forward});
        }
      }
    }
    int gens = static_cast<int>(hilden_generators(p.strands()).size());
    for (Side side : {Side::Top, Side::Bottom}) {
      for (int g = 0; g < gens; ++g) {
        for (int inv = 0; inv < 2; ++inv)
          menu.emplace_back("dc", DoubleCosetParams{side, g, inv != 0});
      }
    }
    for (int k = 1; k < p.strands(); ++k) {
      for (FlipDirection dir : {FlipDirection::In, FlipDirection::Out}) {
        int split = static_cast<int>(rng() % (len + 1));
        menu.emplace_back("flip", FlipParams{split, k, dir});
      }
    }
    {
      int block = p.strands();
      int gap = 1 + static_cast<int>(rng() % (block - 1));
      int split = static_cast<int>(rng() % (len + 1));
      menu.emplace_back("microflip",
                        MicroflipParams{1, block, gap, split,
                                        FlipDirection::In});
    }
    if (p.strands() >= 4) {
      menu.emplace_back("microflip",
                        MicroflipParams{1, 2, 1, 0, FlipDirection::Out});
      menu.emplace_back("microflip",
                        MicroflipParams{p.strands() - 1, 2, 1, len,
                                        FlipDirection::In});
    }
    {
      std::vector<PocketEntry> script;
      for (int e = 0; e < 2; ++e) {
        script.push_back({rng() % 2 ? Side::Bottom : Side::Top,
                          static_cast<int>(rng() % gens), rng() % 2 != 0});
      }
      menu.emplace_back("pocket", PocketParams{std::move(script)});
    }

    for (const auto& [name, params] : menu) {
      Plat q = apply_move(p, params);
      std::optional<OracleValue> after = oracle_value(q, budget);
      ++applications;
      if (!after) {
        fail(out, "oracle budget blown by " + name + " on " + word_str(p));
        break;
      }
      if (*after != *base) {
        fail(out, "oracle changed by " + name + " on " + word_str(p));
        break;
      }
    }
  }
  out.detail = "200 plats, " + std::to_string(applications) +
               " move applications oracle-stable";
  return out;
}

std::vector<int> shifted_letters(const BraidWord& w, int offset) {
  std::vector<int> shifted;
  shifted.reserve(w.letters.size());
  for (int g : w.letters)
    shifted.push_back(g > 0 ? g + offset : g - offset);
  return shifted;
}

std::vector<int> twist_letters(int strand_count) {
  if (strand_count < 2) return {};
  return full_twist(strand_count).letters;
}

// Independent closed-form build of the flip word: the inward flip is the
// full twist of the first k strands followed by the inverse full twist of
// the remaining strands shifted past them; the outward flip is the inverse
// pair in the other order.
std::vector<int> closed_form(int strands, int k, FlipDirection direction) {
  std::vector<int> head;
  std::vector<int> tail;
  if (direction == FlipDirection::In) {
    head = twist_letters(k);
    if (strands - k >= 2) {
      BraidWord t{strands - k, twist_letters(strands - k)};
      tail = shifted_letters(invert(t), k);
    }
  } else {
    if (k >= 2) {
      BraidWord t{k, twist_letters(k)};
      head = invert(t).letters;
    }
    BraidWord t2{std::max(2, strands - k), twist_letters(strands - k)};
    tail = shifted_letters(t2, k);
  }
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

// The four boundary specializations, written out literally.
std::vector<int> edge_case_word(int strands, int k, FlipDirection direction) {
  std::vector<int> w;
  if (k == 1 && direction == FlipDirection::In) {
    for (int rep = 0; rep < strands - 1; ++rep)
      for (int g = strands - 1; g >= 2; --g) w.push_back(-g);
  } else if (k == 1 && direction == FlipDirection::Out) {
    for (int rep = 0; rep < strands - 1; ++rep)
      for (int g = 2; g <= strands - 1; ++g) w.push_back(g);
  } else if (k == strands - 1 && direction == FlipDirection::In) {
    for (int rep = 0; rep < strands - 1; ++rep)
      for (int g = 1; g <= strands - 2; ++g) w.push_back(g);
  } else if (k == strands - 1 && direction == FlipDirection::Out) {
    for (int rep = 0; rep < strands - 1; ++rep)
      for (int g = strands - 2; g >= 1; --g) w.push_back(-g);
  }
  return w;
}

// Criterion 2: flip words match the independent closed forms and the four
// written-out boundary specializations; flips at random splits never move
// the oracle.
Outcome criterion2() {
  Outcome out;
  std::mt19937_64 rng(202);
  const int budget = 60;
  int form_checks = 0;
  int edge_checks = 0;
  int split_checks = 0;
  for (int strands : {2, 4, 6}) {
    for (int k = 1; k < strands && out.pass; ++k) {
      for (FlipDirection dir : {FlipDirection::In, FlipDirection::Out}) {
        BraidWord ins = flip_insertion(strands, k, dir);
        std::string tag = std::to_string(strands) + " strands k=" +
                          std::to_string(k) +
                          (dir == FlipDirection::In ? " in" : " out");
        if (ins.letters != closed_form(strands, k, dir)) {
          fail(out, "closed form mismatch at " + tag);
          break;
        }
        ++form_checks;
        size_t expect_len = static_cast<size_t>(k) * (k - 1) +
                            static_cast<size_t>(strands - k) *
                                (strands - k - 1);
        if (ins.letters.size() != expect_len) {
          fail(out, "length formula mismatch at " + tag);
          break;
        }
        if (k == 1 || k == strands - 1) {
          if (ins.letters != edge_case_word(strands, k, dir)) {
            fail(out, "boundary specialization mismatch at " + tag);
            break;
          }
          ++edge_checks;
        }
        for (int i = 0; i < 50; ++i) {
          std::vector<int> letters;
          int len = static_cast<int>(rng() % 9);
          for (int j = 0; j < len; ++j) {
            int g = 1 + static_cast<int>(rng() % (strands - 1));
            letters.push_back(rng() % 2 ? g : -g);
          }
          Plat p = make_plat(strands, std::move(letters));
          int split = static_cast<int>(rng() % (p.word.letters.size() + 1));
          std::optional<OracleValue> before = oracle_value(p, budget);
          std::optional<OracleValue> after =
              oracle_value(flip(p, split, k, dir), budget);
          if (!before || !after || *before != *after) {
            fail(out, "oracle moved by flip at " + tag + " split " +
                          std::to_string(split) + " on " + word_str(p));
            break;
          }
          ++split_checks;
        }
      }
    }
  }
  out.detail = std::to_string(form_checks) + " closed forms, " +
               std::to_string(edge_checks) + " boundary words, " +
               std::to_string(split_checks) + " oracle-checked splits";
  return out;
}

std::vector<TilingTree> tiling_corpus() {
  std::mt19937_64 rng(303);
  std::vector<TilingTree> corpus;
  corpus.reserve(500);
  for (int i = 0; i < 500; ++i) {
    int bridge = 1 + static_cast<int>(rng() % 5);
    int extra = static_cast<int>(rng() % 13);
    unsigned long long seed = rng();
    corpus.push_back(random_valid_tiling(seed, bridge, extra));
  }
  return corpus;
}

// Criterion 3: 500 generated tilings (bridge <= 5, <= 12 extra tiles) pass
// validation and satisfy the euler, census, and tree invariants.
Outcome criterion3() {
  Outcome out;
  std::vector<TilingTree> corpus = tiling_corpus();
  long long checks = 0;
  for (size_t i = 0; i < corpus.size() && out.pass; ++i) {
    const TilingTree& t = corpus[i];
    std::string tag = "tiling " + std::to_string(i) + " (bridge " +
                      std::to_string(t.bridge_index) + ")";
    std::vector<std::string> viols = validate(t);
    if (!viols.empty()) {
      fail(out, tag + " invalid: " + viols.front());
      break;
    }
    if (euler_characteristic(t) != 1) {
      fail(out, tag + " euler != 1");
      break;
    }
    TileCensus c = census(t);
    if (c.t001 != c.t221 + c.t003) {
      fail(out, tag + " breaks |T001| = |T221| + |T003|");
      break;
    }
    if (!check_counting_identity(t)) {
      fail(out, tag + " counting identity helper disagrees");
      break;
    }
    if (c.t440 != t.bridge_index - 1) {
      fail(out, tag + " has |T440| != bridge - 1");
      break;
    }
    if (c.t110 != 2 * t.bridge_index) {
      fail(out, tag + " has |T110| != 2 * bridge");
      break;
    }
    if (t.edges.size() + 1 != t.tiles.size()) {
      fail(out, tag + " dual graph is not a tree");
      break;
    }
    long long slots = 0;
    for (const Tile& tile : t.tiles) slots += slot_count(tile.kind);
    if (slots != 2 * static_cast<long long>(t.edges.size())) {
      fail(out, tag + " slot count does not match gluings");
      break;
    }
    checks += 7;
  }
  out.detail = "500 tilings, " + std::to_string(checks) +
               " invariant checks";
  return out;
}

// Criterion 4: on the same corpus, a reducible tile exists whenever the
// census is nontrivial, and iterated reduction reaches the trivial tiling
// with strictly decreasing complexity.
Outcome criterion4() {
  Outcome out;
  std::vector<TilingTree> corpus = tiling_corpus();
  long long reductions = 0;
  for (size_t i = 0; i < corpus.size() && out.pass; ++i) {
    std::string tag = "tiling " + std::to_string(i);
    TilingTree cur = corpus[i];
    TileCensus c = census(cur);
    if ((c.t001 > 0 || c.t440 > 0) && !find_reducible_vertex(cur)) {
      fail(out, tag + " nontrivial but no reducible tile found");
      break;
    }
    if (!reducible_when_nontrivial(cur)) {
      fail(out, tag + " fails the reducibility guarantee");
      break;
    }
    std::pair<int, int> prev = complexity(cur);
    int guard = 0;
    while (std::optional<ReducibleVertex> v = find_reducible_vertex(cur)) {
      cur = reduce(cur, *v);
      ++reductions;
      std::pair<int, int> now = complexity(cur);
      if (!(now < prev)) {
        fail(out, tag + " complexity did not strictly decrease");
        break;
      }
      if (!validate(cur).empty()) {
        fail(out, tag + " became invalid during reduction");
        break;
      }
      prev = now;
      if (++guard > 1000) {
        fail(out, tag + " reduction did not terminate");
        break;
      }
    }
    if (!out.pass) break;
    TileCensus f = census(cur);
    if (f.t440 != 0 || f.t001 != 0 || f.t221 != 0 || f.t003 != 0 ||
        f.t110 != 2 || cur.bridge_index != 1) {
      fail(out, tag + " did not terminate at the trivial tiling");
      break;
    }
  }
  out.detail = "500 reduction chains, " + std::to_string(reductions) +
               " steps, all monotone to the trivial tiling";
  return out;
}

// Criterion 5: trivial unlink plats with up to three bridges, scrambled
// with budget <= 6, all simplify back to the standard plat with a
// certified trace and no stabilization.
Outcome criterion5() {
  Outcome out;
  std::mt19937_64 rng(505);
  int solved = 0;
  for (int bridges = 1; bridges <= 3 && out.pass; ++bridges) {
    Plat trivial = make_plat(2 * bridges, {});
    for (int i = 0; i < 100; ++i) {
      unsigned long long seed = rng();
      int budget = 1 + static_cast<int>(rng() % 6);
      Plat scrambled = scramble(trivial, seed, budget);
      std::string tag = std::to_string(bridges) + "-unlink scramble seed " +
                        std::to_string(seed) + " budget " +
                        std::to_string(budget);
      SimplificationTrace trace = simplify(scrambled, SearchConfig{});
      if (trace.outcome != SearchOutcome::ReachedStandard) {
        fail(out, tag + " not simplified");
        break;
      }
      const Plat& last = trace.steps.back().plat;
      if (!last.word.letters.empty() || last.strands() != 2 * bridges) {
        fail(out, tag + " ended off the standard plat");
        break;
      }
      bool stabilized = std::any_of(
          trace.steps.begin(), trace.steps.end(), [](const TraceStep& s) {
            return s.move &&
                   std::holds_alternative<StabilizeParams>(*s.move);
          });
      if (stabilized) {
        fail(out, tag + " used stabilization");
        break;
      }
      std::vector<std::string> viols = certify_trace(trace, std::nullopt, 80);
      if (!viols.empty()) {
        fail(out, tag + " trace rejected: " + viols.front());
        break;
      }
      ++solved;
    }
  }
  out.detail = std::to_string(solved) +
               "/300 scrambles simplified with certified traces";
  return out;
}

// Criterion 6 (fallback form: no reference diagram transcription is
// available, so a generated hard instance stands in): the bundled
// 29-crossing unknot simplifies under its own crossing cap, the trace
// uses at least one flip, and the capped trace certifies.
Outcome criterion6() {
  Outcome out;
  std::string path = std::string(PLATCALC_CORPUS_DIR) + "/hard-unknot.plat";
  std::ifstream in(path);
  if (!in) {
    fail(out, "cannot open " + path);
    return out;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  Plat p = parse_plat(buffer.str());
  int crossings = crossing_count(p);
  if (crossings < 10) {
    fail(out, "instance has only " + std::to_string(crossings) +
                  " crossings");
    return out;
  }
  std::optional<bool> unknot = unknot_evidence(p, crossings + 10);
  if (!unknot || !*unknot) {
    fail(out, "oracle does not certify the instance as an unknot");
    return out;
  }
  SearchConfig config;
  config.crossing_cap = crossings;
  SimplificationTrace trace = simplify(p, config);
  if (trace.outcome != SearchOutcome::ReachedStandard) {
    fail(out, "capped search did not reach the standard plat");
    return out;
  }
  long long flips = std::count_if(
      trace.steps.begin(), trace.steps.end(), [](const TraceStep& s) {
        return s.move && std::holds_alternative<FlipParams>(*s.move);
      });
  if (flips == 0) {
    fail(out, "trace contains no flip move");
    return out;
  }
  std::vector<std::string> viols = certify_trace(trace, crossings, 80);
  if (!viols.empty()) {
    fail(out, "capped trace rejected: " + viols.front());
    return out;
  }
  out.detail = std::to_string(crossings) +
               "-crossing unknot solved under cap " +
               std::to_string(crossings) + " in " +
               std::to_string(trace.steps.size() - 1) + " steps with " +
               std::to_string(flips) + " flips";
  return out;
}

// Criterion 7: the bracket evaluator reproduces the three hand-computed
// diagrams before anything else trusts it.
Outcome criterion7() {
  Outcome out;
  LinkDiagram loop;
  loop.free_loops = 1;
  std::optional<LaurentPolynomial> b = kauffman_bracket(loop);
  if (!b || *b != LaurentPolynomial(1))
    fail(out, "crossing-free loop bracket is not 1");

  LinkDiagram kink;
  kink.arc_count = 2;
  kink.crossings = {{0, 1, 0, 1, true}};
  b = kauffman_bracket(kink);
  if (!b || *b != LaurentPolynomial::monomial(-1, 3))
    fail(out, "one-kink bracket is not -A^3");

  LinkDiagram hopf;
  hopf.arc_count = 4;
  hopf.crossings = {{0, 1, 2, 3, true}, {2, 3, 0, 1, true}};
  b = kauffman_bracket(hopf);
  LaurentPolynomial expect = LaurentPolynomial::monomial(-1, 4) +
                             LaurentPolynomial::monomial(-1, -4);
  if (!b || *b != expect) fail(out, "two-crossing link bracket is wrong");

  out.detail = "loop = 1, kink = -A^3, two-crossing link = -A^4 - A^-4";
  return out;
}

// Criterion 8: the engine word problem agrees with an independent
// rewrite-closure oracle on every ordered pair of 3-strand words of
// length <= 4.
Outcome criterion8() {
  Outcome out;
  wordoracle::BraidThreeClosure closure(10);
  std::vector<std::vector<int>> words;
  words.push_back({});
  const int alphabet[4] = {1, -1, 2, -2};
  for (int len = 1; len <= 4; ++len) {
    std::vector<int> idx(len, 0);
    while (true) {
      std::vector<int> w(len);
      for (int i = 0; i < len; ++i) w[i] = alphabet[idx[i]];
      words.push_back(std::move(w));
      int pos = len - 1;
      while (pos >= 0 && idx[pos] == 3) idx[pos--] = 0;
      if (pos < 0) break;
      ++idx[pos];
    }
  }
  long long pairs = 0;
  long long equal_pairs = 0;
  for (const std::vector<int>& u : words) {
    for (const std::vector<int>& v : words) {
      bool brute = closure.equal(u, v);
      bool engine = words_equal(BraidWord{3, u}, BraidWord{3, v});
      ++pairs;
      if (brute != engine) {
        std::string msg = "disagreement on [";
        for (int g : u) msg += std::to_string(g) + " ";
        msg += "] vs [";
        for (int g : v) msg += std::to_string(g) + " ";
        msg += "]";
        fail(out, msg);
        if (out.notes.size() >= 8) break;
      }
      if (brute) ++equal_pairs;
    }
    if (!out.pass && out.notes.size() >= 8) break;
  }
  out.detail = std::to_string(words.size()) + " words, " +
               std::to_string(pairs) + " ordered pairs (" +
               std::to_string(equal_pairs) + " equal), verdicts agree";
  return out;
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "move soundness", 120.0, criterion1},
    {2, "flip word fidelity", 60.0, criterion2},
    {3, "tiling census and euler invariants", 30.0, criterion3},
    {4, "reducibility and monotone reduction", 60.0, criterion4},
    {5, "unlink scramble round trip", 600.0, criterion5},
    {6, "hard instance under its own crossing cap", -1.0, criterion6},
    {7, "bracket hand checks", 5.0, criterion7},
    {8, "word problem vs rewrite closure", 60.0, criterion8},
};

}  // namespace

int main() {
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      fail(out, std::string("unhandled exception: ") + e.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start)
            .count();
    if (c.limit_seconds > 0 && elapsed > c.limit_seconds) {
      fail(out, "over the " + std::to_string(c.limit_seconds) +
                    "s time limit");
    }
    std::string timing;
    {
      char buf[64];
      if (c.limit_seconds > 0)
        std::snprintf(buf, sizeof buf, "(%.1fs, limit %.0fs)", elapsed,
                      c.limit_seconds);
      else
        std::snprintf(buf, sizeof buf, "(%.1fs)", elapsed);
      timing = buf;
    }
    std::printf("criterion %d %s %s: %s %s\n", c.number,
                out.pass ? "PASS" : "FAIL", c.name, out.detail.c_str(),
                timing.c_str());
    for (const std::string& note : out.notes)
      std::printf("    note: %s\n", note.c_str());
    if (!out.pass) ++failures;
  }
  std::printf("acceptance: %d/8 criteria passed\n", 8 - failures);
  return failures;
}
