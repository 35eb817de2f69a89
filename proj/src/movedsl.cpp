#include "platcalc/movedsl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace platcalc {

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument(message);
}

int parse_int(const std::string& verb, const std::string& key,
              const std::string& value) {
  std::size_t pos = 0;
  int result = 0;
  try {
    result = std::stoi(value, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (value.empty() || pos != value.size()) {
    fail(verb + ": value '" + value + "' for " + key + " is not an integer");
  }
  return result;
}

struct Args {
  std::string verb;
  std::vector<std::pair<std::string, std::string>> pairs;

  const std::string* find(const std::string& key) const {
    for (const auto& [k, v] : pairs) {
      if (k == key) return &v;
    }
    return nullptr;
  }

  std::string need(const std::string& key) const {
    const std::string* v = find(key);
    if (!v) fail(verb + ": missing " + key + "=");
    return *v;
  }

  int need_int(const std::string& key) const {
    return parse_int(verb, key, need(key));
  }

  void check_keys(std::initializer_list<const char*> known) const {
    for (const auto& [k, v] : pairs) {
      if (std::find_if(known.begin(), known.end(), [&](const char* n) {
            return k == n;
          }) == known.end()) {
        fail(verb + ": unknown key '" + k + "'");
      }
    }
  }
};

Args split_args(const std::string& text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  Args args;
  std::size_t open = compact.find('(');
  if (open == std::string::npos) {
    args.verb = compact;
    return args;
  }
  if (compact.back() != ')') {
    fail("move '" + text + "' is missing the closing parenthesis");
  }
  args.verb = compact.substr(0, open);
  std::string body = compact.substr(open + 1, compact.size() - open - 2);
  if (body.empty()) return args;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    std::string item = body.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      fail(args.verb + ": expected key=value, got '" + item + "'");
    }
    args.pairs.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return args;
}

FlipDirection parse_flip_dir(const std::string& verb,
                             const std::string& value) {
  if (value == "in") return FlipDirection::In;
  if (value == "out") return FlipDirection::Out;
  fail(verb + ": dir must be in or out, got '" + value + "'");
}

Side parse_side(const std::string& verb, const std::string& value) {
  if (value == "top") return Side::Top;
  if (value == "bottom") return Side::Bottom;
  fail(verb + ": side must be top or bottom, got '" + value + "'");
}

bool parse_flag(const std::string& verb, const std::string& key,
                const std::string& value) {
  if (value == "0") return false;
  if (value == "1") return true;
  fail(verb + ": " + key + " must be 0 or 1, got '" + value + "'");
}

std::vector<PocketEntry> parse_script(const std::string& value) {
  std::vector<PocketEntry> script;
  std::size_t start = 0;
  while (start <= value.size()) {
    std::size_t plus = value.find('+', start);
    std::string item = value.substr(
        start, plus == std::string::npos ? std::string::npos : plus - start);
    PocketEntry entry;
    std::string rest;
    if (item.rfind("top", 0) == 0) {
      entry.side = Side::Top;
      rest = item.substr(3);
    } else if (item.rfind("bottom", 0) == 0) {
      entry.side = Side::Bottom;
      rest = item.substr(6);
    } else {
      fail("pocket: entry '" + item + "' must start with top or bottom");
    }
    entry.inverted = !rest.empty() && rest.back() == 'i';
    if (entry.inverted) rest.pop_back();
    entry.generator_index = parse_int("pocket", "script entry", rest);
    script.push_back(entry);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return script;
}

}  // namespace

MoveParams parse_move(const std::string& text) {
  Args args = split_args(text);
  const std::string& verb = args.verb;
  if (verb == "reduce") {
    args.check_keys({});
    return ReduceParams{};
  }
  if (verb == "stab") {
    args.check_keys({});
    return StabilizeParams{};
  }
  if (verb == "destab") {
    args.check_keys({});
    return DestabilizeParams{};
  }
  if (verb == "rw") {
    args.check_keys({"pos", "rel", "dir"});
    RewriteParams p;
    p.position = args.need_int("pos");
    std::string rel = args.need("rel");
    if (rel == "comm") {
      p.relation = RelationKind::Commutation;
    } else if (rel == "braid") {
      p.relation = RelationKind::BraidRelation;
    } else {
      fail("rw: rel must be comm or braid, got '" + rel + "'");
    }
    std::string dir = args.find("dir") ? *args.find("dir") : "fwd";
    if (dir == "fwd") {
      p.direction = RewriteDirection::Forward;
    } else if (dir == "rev") {
      p.direction = RewriteDirection::Reverse;
    } else {
      fail("rw: dir must be fwd or rev, got '" + dir + "'");
    }
    return p;
  }
  if (verb == "dc") {
    args.check_keys({"side", "gen", "inv"});
    DoubleCosetParams p;
    p.side = parse_side(verb, args.need("side"));
    p.generator_index = args.need_int("gen");
    p.inverted = parse_flag(verb, "inv", args.need("inv"));
    return p;
  }
  if (verb == "flip") {
    args.check_keys({"split", "k", "dir"});
    FlipParams p;
    p.split = args.need_int("split");
    p.k = args.need_int("k");
    p.direction = parse_flip_dir(verb, args.need("dir"));
    return p;
  }
  if (verb == "microflip") {
    args.check_keys({"start", "k", "gap", "split", "dir"});
    MicroflipParams p;
    p.first_strand = args.need_int("start");
    p.block = args.need_int("k");
    p.gap = args.find("gap") ? args.need_int("gap") : p.block / 2;
    p.split = args.need_int("split");
    p.direction = parse_flip_dir(verb, args.need("dir"));
    return p;
  }
  if (verb == "pocket") {
    args.check_keys({"script"});
    return PocketParams{parse_script(args.need("script"))};
  }
  fail("unknown move verb '" + verb + "'");
}

std::string format_move(const MoveParams& move) {
  std::ostringstream out;
  switch (move_kind(move)) {
    case MoveKind::Isotopy:
      if (std::holds_alternative<ReduceParams>(move)) {
        out << "reduce";
      } else {
        const auto& p = std::get<RewriteParams>(move);
        out << "rw(pos=" << p.position << ",rel="
            << (p.relation == RelationKind::Commutation ? "comm" : "braid")
            << ",dir="
            << (p.direction == RewriteDirection::Forward ? "fwd" : "rev")
            << ")";
      }
      break;
    case MoveKind::Stabilize:
      out << "stab";
      break;
    case MoveKind::Destabilize:
      out << "destab";
      break;
    case MoveKind::DoubleCoset: {
      const auto& p = std::get<DoubleCosetParams>(move);
      out << "dc(side=" << (p.side == Side::Top ? "top" : "bottom")
          << ",gen=" << p.generator_index << ",inv=" << (p.inverted ? 1 : 0)
          << ")";
      break;
    }
    case MoveKind::Flip: {
      const auto& p = std::get<FlipParams>(move);
      out << "flip(split=" << p.split << ",k=" << p.k << ",dir="
          << (p.direction == FlipDirection::In ? "in" : "out") << ")";
      break;
    }
    case MoveKind::Microflip: {
      const auto& p = std::get<MicroflipParams>(move);
      out << "microflip(start=" << p.first_strand << ",k=" << p.block
          << ",gap=" << p.gap << ",split=" << p.split << ",dir="
          << (p.direction == FlipDirection::In ? "in" : "out") << ")";
      break;
    }
    case MoveKind::Pocket: {
      const auto& p = std::get<PocketParams>(move);
      out << "pocket(script=";
      for (std::size_t i = 0; i < p.script.size(); ++i) {
        if (i > 0) out << '+';
        const PocketEntry& e = p.script[i];
        out << (e.side == Side::Top ? "top" : "bottom") << e.generator_index;
        if (e.inverted) out << 'i';
      }
      out << ")";
      break;
    }
  }
  return out.str();
}

}  // namespace platcalc
