#include "platcalc/search.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>

namespace platcalc {

namespace {

template <class... Ts>
struct Overload : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

Plat normalized(Plat p) {
  p.word = isotopy_normalize(std::move(p.word));
  return p;
}

std::string state_key(const Plat& p) {
  std::ostringstream out;
  out << p.strands() << ':';
  for (int g : p.word.letters) out << g << ',';
  return out.str();
}

std::string move_key(const MoveParams& m) {
  std::ostringstream out;
  out << m.index();
  std::visit(
      Overload{
          [&](const ReduceParams&) {},
          [&](const RewriteParams& p) {
            out << ' ' << p.position << ' ' << static_cast<int>(p.relation)
                << ' ' << static_cast<int>(p.direction);
          },
          [&](const StabilizeParams&) {},
          [&](const DestabilizeParams&) {},
          [&](const DoubleCosetParams& p) {
            out << ' ' << static_cast<int>(p.side) << ' ' << p.generator_index
                << ' ' << p.inverted;
          },
          [&](const FlipParams& p) {
            out << ' ' << p.split << ' ' << p.k << ' '
                << static_cast<int>(p.direction);
          },
          [&](const MicroflipParams& p) {
            out << ' ' << p.first_strand << ' ' << p.block << ' ' << p.gap
                << ' ' << p.split << ' ' << static_cast<int>(p.direction);
          },
          [&](const PocketParams& p) {
            for (const PocketEntry& e : p.script) {
              out << ' ' << static_cast<int>(e.side) << ' '
                  << e.generator_index << ' ' << e.inverted;
            }
          },
      },
      m);
  return out.str();
}

struct Candidate {
  MoveParams move;
  Plat plat;
};

// Flip and microflip children are tried at the two ends of the word only.
// Every complexity-raising move of scramble() acts at an end, so unwinding
// never needs interior splits, and interior insertions would multiply the
// branching by the word length.  Pocket scripts are left out as well: a
// script is a composition of double coset children, so it adds no states,
// only a quadratic blowup of the fan-out.
void generate_children(const Plat& p, std::vector<Candidate>& out) {
  int len = static_cast<int>(p.word.letters.size());
  int strands = p.strands();

  if (auto d = destabilize(p)) out.push_back({DestabilizeParams{}, *d});

  for (int pos = 0; pos < len; ++pos) {
    for (RelationKind rel :
         {RelationKind::Commutation, RelationKind::BraidRelation}) {
      if (auto w =
              apply_relation(p.word, pos, rel, RewriteDirection::Forward)) {
        out.push_back({RewriteParams{pos, rel, RewriteDirection::Forward},
                       Plat{std::move(*w)}});
      }
    }
  }

  auto gens = hilden_generators(strands);
  int gen_count = static_cast<int>(gens.size());
  for (Side side : {Side::Top, Side::Bottom}) {
    for (int gi = 0; gi < gen_count; ++gi) {
      for (bool inv : {false, true}) {
        out.push_back({DoubleCosetParams{side, gi, inv},
                       double_coset_move(p, side, gi, inv)});
      }
    }
  }

  std::vector<int> splits{0};
  if (len > 0) splits.push_back(len);
  for (int split : splits) {
    for (int k = 1; k <= strands - 1; ++k) {
      for (FlipDirection dir : {FlipDirection::In, FlipDirection::Out}) {
        out.push_back({FlipParams{split, k, dir}, flip(p, split, k, dir)});
      }
    }
  }
  for (int split : splits) {
    for (int first = 1; first <= strands - 1; first += 2) {
      for (int block = 2; first + block - 1 <= strands; block += 2) {
        if (first == 1 && block == strands) continue;
        for (FlipDirection dir : {FlipDirection::In, FlipDirection::Out}) {
          out.push_back(
              {MicroflipParams{first, block, block / 2, split, dir},
               microflip(p, first, block, block / 2, split, dir)});
        }
      }
    }
  }

}

struct Node {
  Plat plat;
  int parent = -1;
  std::optional<MoveParams> move;
  int bridge = 0;
  int crossings = 0;
};

bool is_standard(const Plat& p) {
  return p.word.letters.empty() && p.bridge_index() == component_count(p);
}

SimplificationTrace reconstruct(const std::vector<Node>& arena, int node,
                                SearchOutcome outcome) {
  std::vector<int> chain;
  for (int cur = node; cur >= 0; cur = arena[cur].parent) chain.push_back(cur);
  std::reverse(chain.begin(), chain.end());
  SimplificationTrace trace;
  trace.outcome = outcome;
  for (int idx : chain) {
    trace.steps.push_back({arena[idx].move, arena[idx].plat});
  }
  return trace;
}

}  // namespace

SimplificationTrace simplify(const Plat& start, const SearchConfig& config) {
  std::vector<Node> arena;
  Plat root = normalized(start);
  arena.push_back(
      {root, -1, std::nullopt, root.bridge_index(), crossing_count(root)});
  if (is_standard(root)) {
    return reconstruct(arena, 0, SearchOutcome::ReachedStandard);
  }

  std::set<std::string> visited{state_key(root)};
  std::mt19937_64 tie_rng(config.seed);
  std::vector<int> frontier{0};
  std::vector<Candidate> cands;
  bool exhausted = false;

  while (!frontier.empty() && !exhausted) {
    std::vector<int> children;
    for (int ni : frontier) {
      cands.clear();
      generate_children(arena[ni].plat, cands);
      for (Candidate& c : cands) {
        Plat np = normalized(std::move(c.plat));
        if (!visited.insert(state_key(np)).second) continue;
        int crossings = crossing_count(np);
        if (config.crossing_cap && crossings > *config.crossing_cap) continue;
        if (static_cast<int>(arena.size()) - 1 >= config.node_budget) {
          exhausted = true;
          break;
        }
        int bridge = np.bridge_index();
        bool goal = is_standard(np);
        arena.push_back({std::move(np), ni, c.move, bridge, crossings});
        if (goal) {
          return reconstruct(arena, static_cast<int>(arena.size()) - 1,
                             SearchOutcome::ReachedStandard);
        }
        children.push_back(static_cast<int>(arena.size()) - 1);
      }
      if (exhausted) break;
    }

    if (config.seed != 0) {
      std::shuffle(children.begin(), children.end(), tie_rng);
      std::stable_sort(children.begin(), children.end(), [&](int a, int b) {
        if (arena[a].bridge != arena[b].bridge) {
          return arena[a].bridge < arena[b].bridge;
        }
        return arena[a].crossings < arena[b].crossings;
      });
    } else {
      std::sort(children.begin(), children.end(), [&](int a, int b) {
        if (arena[a].bridge != arena[b].bridge) {
          return arena[a].bridge < arena[b].bridge;
        }
        if (arena[a].crossings != arena[b].crossings) {
          return arena[a].crossings < arena[b].crossings;
        }
        if (arena[a].plat.word.letters != arena[b].plat.word.letters) {
          return arena[a].plat.word.letters < arena[b].plat.word.letters;
        }
        return move_key(*arena[a].move) < move_key(*arena[b].move);
      });
    }
    if (static_cast<int>(children.size()) > config.beam_width) {
      children.resize(config.beam_width);
    }
    frontier = std::move(children);
  }

  int best = 0;
  for (int i = 1; i < static_cast<int>(arena.size()); ++i) {
    if (arena[i].bridge < arena[best].bridge ||
        (arena[i].bridge == arena[best].bridge &&
         arena[i].crossings < arena[best].crossings)) {
      best = i;
    }
  }
  return reconstruct(arena, best, SearchOutcome::BudgetExhausted);
}

std::vector<std::string> certify_trace(const SimplificationTrace& trace,
                                       std::optional<int> crossing_cap,
                                       int oracle_budget) {
  std::vector<std::string> errors;
  if (trace.steps.empty()) {
    errors.push_back("trace has no steps");
    return errors;
  }
  if (trace.steps[0].move) {
    errors.push_back("step 0 must record the starting plat without a move");
  }
  int components = component_count(trace.steps[0].plat);
  std::optional<OracleValue> reference;
  int reference_step = -1;
  for (int i = 0; i < static_cast<int>(trace.steps.size()); ++i) {
    const TraceStep& step = trace.steps[i];
    std::string label = "step " + std::to_string(i);
    if (i > 0) {
      const TraceStep& prev = trace.steps[i - 1];
      if (!step.move) {
        errors.push_back(label + ": missing move");
      } else {
        if (move_kind(*step.move) == MoveKind::Stabilize) {
          errors.push_back(label + ": stabilization never simplifies");
        }
        try {
          Plat expect = apply_move(prev.plat, *step.move);
          expect.word = isotopy_normalize(std::move(expect.word));
          if (expect != step.plat) {
            errors.push_back(label +
                             ": recorded plat differs from the replayed move");
          }
        } catch (const MoveError& e) {
          errors.push_back(label + ": move does not apply: " + e.what());
        }
      }
      if (step.plat.bridge_index() > prev.plat.bridge_index()) {
        errors.push_back(label + ": bridge index increased");
      }
    }
    if (crossing_cap && crossing_count(step.plat) > *crossing_cap) {
      errors.push_back(label + ": " + std::to_string(crossing_count(step.plat)) +
                       " crossings exceed the cap of " +
                       std::to_string(*crossing_cap));
    }
    if (component_count(step.plat) != components) {
      errors.push_back(label + ": component count changed from " +
                       std::to_string(components) + " to " +
                       std::to_string(component_count(step.plat)));
    }
    if (crossing_count(step.plat) <= oracle_budget) {
      if (auto value = oracle_value(step.plat, oracle_budget)) {
        if (!reference) {
          reference = value;
          reference_step = i;
        } else if (!(*value == *reference)) {
          errors.push_back(label + ": invariant differs from step " +
                           std::to_string(reference_step));
        }
      }
    }
  }
  if (trace.outcome == SearchOutcome::ReachedStandard) {
    const Plat& last = trace.steps.back().plat;
    if (!last.word.letters.empty() ||
        last.bridge_index() != component_count(last)) {
      errors.push_back(
          "outcome claims the standard plat but the final step is not it");
    }
  }
  return errors;
}

Plat scramble(const Plat& start, unsigned long long seed, int move_budget) {
  constexpr int kMaxStrands = 12;
  constexpr int kMaxWord = 80;
  constexpr int kMaxInsertion = 30;
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t n) {
    return static_cast<int>(rng() % static_cast<unsigned long long>(n));
  };
  Plat p = normalized(start);
  for (int round = 0; round < move_budget; ++round) {
    for (int attempt = 0; attempt < 20; ++attempt) {
      int kind = pick(4);
      int strands = p.strands();
      int len = static_cast<int>(p.word.letters.size());
      if (kind == 0) {
        if (strands + 2 > kMaxStrands) continue;
        p = normalized(stabilize(p));
        break;
      }
      if (kind == 1) {
        auto gens = hilden_generators(strands);
        Side side = pick(2) == 0 ? Side::Top : Side::Bottom;
        int gi = pick(gens.size());
        bool inv = pick(2) == 1;
        Plat q = double_coset_move(p, side, gi, inv);
        if (static_cast<int>(q.word.letters.size()) > kMaxWord) continue;
        p = normalized(std::move(q));
        break;
      }
      if (kind == 2) {
        std::vector<int> ks;
        for (int k = 1; k <= strands - 1; ++k) {
          int ins = static_cast<int>(
              flip_insertion(strands, k, FlipDirection::In).letters.size());
          if (ins <= kMaxInsertion && len + ins <= kMaxWord) ks.push_back(k);
        }
        if (ks.empty()) continue;
        int k = ks[pick(ks.size())];
        FlipDirection dir =
            pick(2) == 0 ? FlipDirection::In : FlipDirection::Out;
        p = normalized(flip(p, 0, k, dir));
        break;
      }
      std::vector<std::pair<int, int>> blocks;
      for (int first = 1; first <= strands - 1; first += 2) {
        for (int block = 2; first + block - 1 <= strands; block += 2) {
          int ins = static_cast<int>(
              flip_insertion(block, block / 2, FlipDirection::In)
                  .letters.size());
          if (ins <= kMaxInsertion && len + ins <= kMaxWord) {
            blocks.push_back({first, block});
          }
        }
      }
      if (blocks.empty()) continue;
      auto [first, block] = blocks[pick(blocks.size())];
      FlipDirection dir = pick(2) == 0 ? FlipDirection::In : FlipDirection::Out;
      p = normalized(microflip(p, first, block, block / 2, 0, dir));
      break;
    }
  }
  return p;
}

}  // namespace platcalc
