#include "platcalc/textio.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "platcalc/movedsl.hpp"

namespace platcalc {

namespace {

struct Line {
  int number;
  std::string text;
};

[[noreturn]] void fail_at(int line, const std::string& message) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + message);
}

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ' ||
                            raw.back() == '\t')) {
      raw.pop_back();
    }
    std::size_t first = raw.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (raw[first] == '#') continue;
    lines.push_back({number, raw.substr(first)});
  }
  return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(std::move(tok));
  return tokens;
}

bool try_int(const std::string& token, int& out) {
  std::size_t pos = 0;
  try {
    out = std::stoi(token, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return !token.empty() && pos == token.size();
}

int need_int(int line, const std::string& token, const std::string& what) {
  int value = 0;
  if (!try_int(token, value)) {
    fail_at(line, what + " '" + token + "' is not an integer");
  }
  return value;
}

long long need_ll(int line, const std::string& token,
                  const std::string& what) {
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (token.empty() || pos != token.size()) {
    fail_at(line, what + " '" + token + "' is not an integer");
  }
  return value;
}

std::string value_of(int line, const std::string& token,
                     const std::string& key) {
  std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0) {
    fail_at(line, "expected " + prefix + "..., got '" + token + "'");
  }
  return token.substr(prefix.size());
}

// Reads the integers of a word= token run: the key token may carry the
// first letter, further letters follow as bare tokens until one fails to
// parse as an integer.
std::size_t read_word(int line, const std::vector<std::string>& tokens,
                      std::size_t at, std::vector<int>& letters) {
  std::string head = value_of(line, tokens[at], "word");
  ++at;
  if (!head.empty()) {
    letters.push_back(need_int(line, head, "word letter"));
  }
  while (at < tokens.size()) {
    int value = 0;
    if (!try_int(tokens[at], value)) break;
    letters.push_back(value);
    ++at;
  }
  return at;
}

}  // namespace

Plat parse_plat(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw std::invalid_argument("empty plat file");
  if (lines[0].text != "plat v1") {
    fail_at(lines[0].number, "expected 'plat v1', got '" + lines[0].text + "'");
  }
  if (lines.size() < 3) {
    throw std::invalid_argument(
        "plat file needs strands= and word= lines after the header");
  }
  auto strand_tokens = tokens_of(lines[1].text);
  int strands = need_int(lines[1].number,
                         value_of(lines[1].number, strand_tokens[0], "strands"),
                         "strand count");
  if (strand_tokens.size() > 1) {
    fail_at(lines[1].number, "unexpected token '" + strand_tokens[1] + "'");
  }
  auto word_tokens = tokens_of(lines[2].text);
  std::vector<int> letters;
  std::size_t at = read_word(lines[2].number, word_tokens, 0, letters);
  if (at != word_tokens.size()) {
    fail_at(lines[2].number, "unexpected token '" + word_tokens[at] + "'");
  }
  if (lines.size() > 3) {
    fail_at(lines[3].number, "unexpected line '" + lines[3].text + "'");
  }
  return make_plat(strands, std::move(letters));
}

std::string format_plat(const Plat& p) {
  std::ostringstream out;
  out << "plat v1\n";
  out << "strands=" << p.strands() << "\n";
  out << "word=";
  for (std::size_t i = 0; i < p.word.letters.size(); ++i) {
    if (i > 0) out << ' ';
    out << p.word.letters[i];
  }
  out << "\n";
  return out.str();
}

SimplificationTrace parse_trace(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw std::invalid_argument("empty trace file");
  auto header = tokens_of(lines[0].text);
  if (header.size() != 3 || header[0] != "trace" || header[1] != "v1") {
    fail_at(lines[0].number,
            "expected 'trace v1 outcome=...', got '" + lines[0].text + "'");
  }
  SimplificationTrace trace;
  std::string outcome = value_of(lines[0].number, header[2], "outcome");
  if (outcome == "reached-standard") {
    trace.outcome = SearchOutcome::ReachedStandard;
  } else if (outcome == "budget-exhausted") {
    trace.outcome = SearchOutcome::BudgetExhausted;
  } else {
    fail_at(lines[0].number, "outcome must be reached-standard or "
                             "budget-exhausted, got '" + outcome + "'");
  }
  for (std::size_t li = 1; li < lines.size(); ++li) {
    int line = lines[li].number;
    auto tokens = tokens_of(lines[li].text);
    if (tokens.empty() || tokens[0] != "step") {
      fail_at(line, "expected a step line, got '" + lines[li].text + "'");
    }
    if (tokens.size() < 3) fail_at(line, "step line is incomplete");
    int index = need_int(line, tokens[1], "step index");
    if (index != static_cast<int>(trace.steps.size())) {
      fail_at(line, "step index " + std::to_string(index) + " out of order, "
                    "expected " + std::to_string(trace.steps.size()));
    }
    int strands = need_int(line, value_of(line, tokens[2], "strands"),
                           "strand count");
    if (tokens.size() < 4) fail_at(line, "step line is missing word=");
    std::vector<int> letters;
    std::size_t at = read_word(line, tokens, 3, letters);
    TraceStep step;
    step.plat = make_plat(strands, std::move(letters));
    if (at < tokens.size()) {
      std::string move_text = value_of(line, tokens[at], "move");
      for (++at; at < tokens.size(); ++at) move_text += tokens[at];
      if (index == 0) {
        fail_at(line, "step 0 must not carry a move");
      }
      try {
        step.move = parse_move(move_text);
      } catch (const std::invalid_argument& e) {
        fail_at(line, e.what());
      }
    } else if (index > 0) {
      fail_at(line, "step " + std::to_string(index) + " is missing move=");
    }
    trace.steps.push_back(std::move(step));
  }
  if (trace.steps.empty()) {
    throw std::invalid_argument("trace has no steps");
  }
  return trace;
}

std::string format_trace(const SimplificationTrace& trace) {
  std::ostringstream out;
  out << "trace v1 outcome="
      << (trace.outcome == SearchOutcome::ReachedStandard
              ? "reached-standard"
              : "budget-exhausted")
      << "\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& step = trace.steps[i];
    out << "step " << i << " strands=" << step.plat.strands() << " word=";
    for (std::size_t j = 0; j < step.plat.word.letters.size(); ++j) {
      if (j > 0) out << ' ';
      out << step.plat.word.letters[j];
    }
    if (step.move) out << " move=" << format_move(*step.move);
    out << "\n";
  }
  return out.str();
}

namespace {

TileKind parse_kind(int line, const std::string& token) {
  if (token == "t440") return TileKind::T440;
  if (token == "t221") return TileKind::T221;
  if (token == "t003") return TileKind::T003;
  if (token == "t001") return TileKind::T001;
  if (token == "t110") return TileKind::T110;
  fail_at(line, "unknown tile kind '" + token + "'");
}

const char* kind_token(TileKind kind) {
  switch (kind) {
    case TileKind::T440:
      return "t440";
    case TileKind::T221:
      return "t221";
    case TileKind::T003:
      return "t003";
    case TileKind::T001:
      return "t001";
    case TileKind::T110:
      return "t110";
  }
  return "?";
}

Rational parse_rational(int line, const std::string& token) {
  std::size_t slash = token.find('/');
  long long num = 0;
  long long den = 1;
  if (slash == std::string::npos) {
    num = need_ll(line, token, "height");
  } else {
    num = need_ll(line, token.substr(0, slash), "height numerator");
    den = need_ll(line, token.substr(slash + 1), "height denominator");
  }
  try {
    return Rational(num, den);
  } catch (const std::exception& e) {
    fail_at(line, e.what());
  }
}

SlotRef parse_slot_ref(int line, const std::string& token) {
  std::size_t colon = token.find(':');
  if (colon == std::string::npos) {
    fail_at(line, "expected tile:slot, got '" + token + "'");
  }
  SlotRef ref;
  ref.tile = need_int(line, token.substr(0, colon), "tile id");
  ref.slot = need_int(line, token.substr(colon + 1), "slot");
  return ref;
}

}  // namespace

TilingTree parse_tiling(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw std::invalid_argument("empty tiling file");
  if (lines[0].text != "tiling v1") {
    fail_at(lines[0].number,
            "expected 'tiling v1', got '" + lines[0].text + "'");
  }
  if (lines.size() < 2) {
    throw std::invalid_argument("tiling file needs a bridge= line");
  }
  TilingTree t;
  {
    auto tokens = tokens_of(lines[1].text);
    t.bridge_index = need_int(lines[1].number,
                              value_of(lines[1].number, tokens[0], "bridge"),
                              "bridge index");
    if (tokens.size() > 1) {
      fail_at(lines[1].number, "unexpected token '" + tokens[1] + "'");
    }
  }
  for (std::size_t li = 2; li < lines.size(); ++li) {
    int line = lines[li].number;
    auto tokens = tokens_of(lines[li].text);
    if (tokens[0] == "tile") {
      if (tokens.size() != 5) {
        fail_at(line, "expected 'tile <id> <kind> <up|down|min|max> h=...'");
      }
      Tile tile;
      tile.id = need_int(line, tokens[1], "tile id");
      tile.kind = parse_kind(line, tokens[2]);
      const std::string& mark = tokens[3];
      if (mark == "up") {
        tile.polarity = Polarity::Up;
      } else if (mark == "down") {
        tile.polarity = Polarity::Down;
      } else if (mark == "min") {
        tile.extremum = Extremum::Min;
      } else if (mark == "max") {
        tile.extremum = Extremum::Max;
      } else {
        fail_at(line, "expected up, down, min, or max, got '" + mark + "'");
      }
      tile.height = parse_rational(line, value_of(line, tokens[4], "h"));
      t.tiles.push_back(tile);
    } else if (tokens[0] == "edge") {
      if (tokens.size() != 4 && tokens.size() != 5) {
        fail_at(line,
                "expected 'edge <tile:slot> <tile:slot> <arc|circle> "
                "[inside=<edge>]'");
      }
      GlueEdge edge;
      edge.a = parse_slot_ref(line, tokens[1]);
      edge.b = parse_slot_ref(line, tokens[2]);
      if (tokens[3] == "arc") {
        edge.label = EdgeLabel::Arc;
      } else if (tokens[3] == "circle") {
        edge.label = EdgeLabel::Circle;
      } else {
        fail_at(line, "expected arc or circle, got '" + tokens[3] + "'");
      }
      if (tokens.size() == 5) {
        edge.inside = need_int(line, value_of(line, tokens[4], "inside"),
                               "edge reference");
      }
      t.edges.push_back(edge);
    } else {
      fail_at(line, "expected a tile or edge line, got '" + tokens[0] + "'");
    }
  }
  return t;
}

std::string format_tiling(const TilingTree& t) {
  std::ostringstream out;
  out << "tiling v1\n";
  out << "bridge=" << t.bridge_index << "\n";
  for (const Tile& tile : t.tiles) {
    out << "tile " << tile.id << ' ' << kind_token(tile.kind) << ' ';
    if (tile.polarity) {
      out << (*tile.polarity == Polarity::Up ? "up" : "down");
    } else if (tile.extremum) {
      out << (*tile.extremum == Extremum::Min ? "min" : "max");
    } else {
      out << '?';
    }
    out << " h=" << tile.height.str() << "\n";
  }
  for (const GlueEdge& edge : t.edges) {
    out << "edge " << edge.a.tile << ':' << edge.a.slot << ' ' << edge.b.tile
        << ':' << edge.b.slot << ' '
        << (edge.label == EdgeLabel::Arc ? "arc" : "circle");
    if (edge.inside) out << " inside=" << *edge.inside;
    out << "\n";
  }
  return out.str();
}

std::string format_diagram(const LinkDiagram& d) {
  std::ostringstream out;
  out << "diagram v1\n";
  out << "arcs=" << d.arc_count << "\n";
  out << "free_loops=" << d.free_loops << "\n";
  for (const Crossing& c : d.crossings) {
    out << "X " << c.nw << ' ' << c.ne << ' ' << c.sw << ' ' << c.se << ' '
        << (c.over_nw_se ? "over" : "under") << "\n";
  }
  return out.str();
}

}  // namespace platcalc
