// Command line front end.  Talks to the engine exclusively through the
// shared-library C interface, so it doubles as a smoke test for that
// boundary.
//
// Exit codes: 0 success, 1 domain failure (move not applicable, search
// budget exhausted, invalid tiling), 2 parse or usage error.

#include <platcalc/platcalc.h>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr const char* kGrammar = R"HELP(Move expressions (--move arguments and trace move fields):

  move       = "reduce" | "stab" | "destab" | rewrite | coset | flip
             | microflip | pocket ;
  rewrite    = "rw(pos=" int ",rel=" relation [",dir=" rwdir] ")" ;
  coset      = "dc(side=" side ",gen=" int ",inv=" flag ")" ;
  flip       = "flip(split=" int ",k=" int ",dir=" flipdir ")" ;
  microflip  = "microflip(start=" int ",k=" int [",gap=" int]
               ",split=" int ",dir=" flipdir ")" ;
  pocket     = "pocket(script=" entry { "+" entry } ")" ;
  relation   = "comm" | "braid" ;
  rwdir      = "fwd" | "rev" ;
  side       = "top" | "bottom" ;
  flipdir    = "in" | "out" ;
  flag       = "0" | "1" ;
  entry      = side int [ "i" ] ;
  int        = [ "-" ] digit { digit } ;

Key=value pairs may appear in any order inside the parentheses and all
whitespace is ignored.  gap defaults to k/2.  rw positions are zero
based and dir=fwd reads the relation left to right.  A pocket script
entry picks a cap generator by side and index, with a trailing i for
its inverse, for example top0+bottom2i.

Exit codes: 0 success, 1 domain failure (move not applicable, budget
exhausted, invalid tiling), 2 parse or usage error.)HELP";

struct StringOut {
  char* s = nullptr;
  ~StringOut() { platcalc_string_free(s); }
  StringOut() = default;
  StringOut(const StringOut&) = delete;
  StringOut& operator=(const StringOut&) = delete;
};

struct PlatDeleter {
  void operator()(platcalc_plat* p) const { platcalc_plat_free(p); }
};
struct TraceDeleter {
  void operator()(platcalc_trace* t) const { platcalc_trace_free(t); }
};
struct TilingDeleter {
  void operator()(platcalc_tiling* t) const { platcalc_tiling_free(t); }
};
using PlatPtr = std::unique_ptr<platcalc_plat, PlatDeleter>;
using TracePtr = std::unique_ptr<platcalc_trace, TraceDeleter>;
using TilingPtr = std::unique_ptr<platcalc_tiling, TilingDeleter>;

std::string last_error() {
  const char* e = platcalc_last_error();
  return e != nullptr && *e != '\0' ? e : "unknown error";
}

int complain(int code, const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  return code;
}

int status_exit(platcalc_status s) {
  return s == PLATCALC_ERR_PARSE ? 2 : 1;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

void print_block(const char* text) {
  if (text == nullptr) return;
  std::fputs(text, stdout);
  std::size_t len = std::char_traits<char>::length(text);
  if (len > 0 && text[len - 1] != '\n') std::fputc('\n', stdout);
}

// Loads a plat record; on failure stores the exit code in `code`.
bool load_plat(const std::string& path, PlatPtr& plat, int& code) {
  std::string text;
  if (!read_file(path, text)) {
    code = complain(2, "cannot read " + path);
    return false;
  }
  platcalc_plat* raw = nullptr;
  if (platcalc_plat_parse(text.c_str(), &raw) != PLATCALC_OK) {
    code = complain(2, path + ": " + last_error());
    return false;
  }
  plat.reset(raw);
  return true;
}

int run_info(const std::string& path, int oracle_budget) {
  PlatPtr plat;
  int code = 0;
  if (!load_plat(path, plat, code)) return code;
  std::printf("strands=%d\n", platcalc_plat_strands(plat.get()));
  std::printf("bridge=%d\n", platcalc_plat_bridge_index(plat.get()));
  std::printf("crossings=%d\n", platcalc_plat_crossings(plat.get()));
  std::printf("components=%d\n", platcalc_plat_components(plat.get()));
  StringOut oracle;
  if (platcalc_plat_oracle(plat.get(), oracle_budget, &oracle.s) ==
      PLATCALC_OK) {
    std::printf("oracle=%s\n", oracle.s);
  } else {
    std::printf("oracle=unavailable (%s)\n", last_error().c_str());
  }
  return 0;
}

int run_apply(const std::string& path, const std::string& move) {
  PlatPtr plat;
  int code = 0;
  if (!load_plat(path, plat, code)) return code;
  platcalc_plat* raw = nullptr;
  platcalc_status s = platcalc_plat_apply(plat.get(), move.c_str(), &raw);
  if (s != PLATCALC_OK) return complain(status_exit(s), last_error());
  PlatPtr result(raw);
  StringOut text;
  text.s = platcalc_plat_format(result.get());
  print_block(text.s);
  return 0;
}

int run_simplify(const std::string& path, int beam, int budget, int cap,
                 unsigned long long seed, const std::string& trace_path) {
  PlatPtr plat;
  int code = 0;
  if (!load_plat(path, plat, code)) return code;
  platcalc_search_config config{};
  config.beam_width = beam;
  config.node_budget = budget;
  config.crossing_cap = cap;
  config.seed = seed;
  platcalc_trace* raw = nullptr;
  platcalc_status s = platcalc_plat_simplify(plat.get(), &config, &raw);
  if (s != PLATCALC_OK) return complain(status_exit(s), last_error());
  TracePtr trace(raw);
  if (!trace_path.empty()) {
    StringOut text;
    text.s = platcalc_trace_format(trace.get());
    if (text.s == nullptr || !write_file(trace_path, text.s))
      return complain(1, "cannot write " + trace_path);
  }
  bool reached = platcalc_trace_reached_standard(trace.get()) != 0;
  std::printf("outcome=%s\n", reached ? "reached-standard" : "budget-exhausted");
  std::printf("steps=%zu\n", platcalc_trace_step_count(trace.get()) - 1);
  platcalc_plat* last = nullptr;
  if (platcalc_trace_step_plat(trace.get(),
                               platcalc_trace_step_count(trace.get()) - 1,
                               &last) == PLATCALC_OK) {
    PlatPtr final_plat(last);
    StringOut text;
    text.s = platcalc_plat_format(final_plat.get());
    print_block(text.s);
  }
  return reached ? 0 : 1;
}

int run_scramble(const std::string& path, unsigned long long seed, int moves) {
  PlatPtr plat;
  int code = 0;
  if (!load_plat(path, plat, code)) return code;
  platcalc_plat* raw = nullptr;
  platcalc_status s = platcalc_plat_scramble(plat.get(), seed, moves, &raw);
  if (s != PLATCALC_OK) return complain(status_exit(s), last_error());
  PlatPtr result(raw);
  StringOut text;
  text.s = platcalc_plat_format(result.get());
  print_block(text.s);
  return 0;
}

int run_tiling_check(const std::string& path) {
  std::string text;
  if (!read_file(path, text)) return complain(2, "cannot read " + path);
  platcalc_tiling* raw = nullptr;
  if (platcalc_tiling_parse(text.c_str(), &raw) != PLATCALC_OK)
    return complain(2, path + ": " + last_error());
  TilingPtr tiling(raw);
  StringOut report;
  report.s = platcalc_tiling_report(tiling.get());
  print_block(report.s);
  return platcalc_tiling_valid(tiling.get()) != 0 ? 0 : 1;
}

int run_render(const std::string& path, const std::string& format,
               const std::string& out_path) {
  PlatPtr plat;
  int code = 0;
  if (!load_plat(path, plat, code)) return code;
  StringOut text;
  platcalc_status s =
      platcalc_plat_render(plat.get(), format.c_str(), &text.s);
  if (s != PLATCALC_OK) return complain(status_exit(s), last_error());
  if (!write_file(out_path, text.s)) return complain(1, "cannot write " + out_path);
  return 0;
}

int run_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return complain(2, dir + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".plat")
      files.push_back(entry.path());
  }
  if (ec) return complain(2, "cannot list " + dir);
  std::sort(files.begin(), files.end());
  if (files.empty()) return complain(2, "no .plat records in " + dir);

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"file", "strands", "bridge", "crossings", "components",
                  "oracle"});
  int failures = 0;
  for (const auto& file : files) {
    std::string text;
    PlatPtr plat;
    std::string name = file.filename().string();
    if (!read_file(file.string(), text)) {
      rows.push_back({name, "-", "-", "-", "-", "unreadable"});
      ++failures;
      continue;
    }
    platcalc_plat* raw = nullptr;
    if (platcalc_plat_parse(text.c_str(), &raw) != PLATCALC_OK) {
      std::fprintf(stderr, "error: %s: %s\n", name.c_str(),
                   last_error().c_str());
      rows.push_back({name, "-", "-", "-", "-", "parse error"});
      ++failures;
      continue;
    }
    plat.reset(raw);
    StringOut oracle;
    std::string oracle_text =
        platcalc_plat_oracle(plat.get(), 0, &oracle.s) == PLATCALC_OK
            ? std::string(oracle.s)
            : "budget exceeded";
    rows.push_back({name, std::to_string(platcalc_plat_strands(plat.get())),
                    std::to_string(platcalc_plat_bridge_index(plat.get())),
                    std::to_string(platcalc_plat_crossings(plat.get())),
                    std::to_string(platcalc_plat_components(plat.get())),
                    oracle_text});
  }

  std::vector<std::size_t> widths(rows[0].size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      widths[i] = std::max(widths[i], row[i].size());
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size())
        line += std::string(widths[i] - row[i].size() + 2, ' ');
    }
    std::printf("%s\n", line.c_str());
  }
  std::printf("records=%zu failures=%d\n", files.size(), failures);
  return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plat calculus toolkit", "platcalc"};
  app.require_subcommand(1);
  app.footer(kGrammar);

  std::string file;
  std::string move_text;
  std::string trace_path;
  std::string format;
  std::string out_path;
  std::string dir;
  int oracle_budget = 0;
  int beam = 0;
  int node_budget = 0;
  int crossing_cap = 0;
  unsigned long long seed = 0;
  int scramble_budget = 0;

  CLI::App* info = app.add_subcommand(
      "info", "Print strand count, bridge index, crossing count, component "
              "count, and the link invariant of a plat record");
  info->add_option("plat-file", file, "plat record to inspect")->required();
  info->add_option("--budget", oracle_budget,
                   "crossing budget for the invariant (0 picks the default)");

  CLI::App* apply = app.add_subcommand(
      "apply", "Apply one move expression and print the resulting record");
  apply->add_option("plat-file", file, "plat record to transform")->required();
  apply->add_option("--move", move_text, "move expression, see the grammar")
      ->required();
  apply->footer(kGrammar);

  CLI::App* simplify = app.add_subcommand(
      "simplify", "Search for a simplification to the standard plat");
  simplify->add_option("plat-file", file, "plat record to simplify")
      ->required();
  simplify->add_option("--beam", beam, "beam width (0 picks the default)");
  simplify->add_option("--budget", node_budget,
                       "search node budget (0 picks the default)");
  simplify->add_option("--crossing-cap", crossing_cap,
                       "prune states above this crossing count (0 = none)");
  simplify->add_option("--seed", seed,
                       "nonzero randomises tie-breaking between equal states");
  simplify->add_option("--trace", trace_path, "write the move trace here");

  CLI::App* scramble = app.add_subcommand(
      "scramble", "Apply random complexity-raising moves and print the result");
  scramble->add_option("plat-file", file, "plat record to scramble")
      ->required();
  scramble->add_option("--seed", seed, "random seed")->required();
  scramble->add_option("--budget", scramble_budget, "number of moves")
      ->required();

  CLI::App* tiling_check = app.add_subcommand(
      "tiling-check", "Validate a tiling record and print its report");
  tiling_check->add_option("tiling-file", file, "tiling record to check")
      ->required();

  CLI::App* render = app.add_subcommand(
      "render", "Draw a plat record as ascii art or svg");
  render->add_option("plat-file", file, "plat record to draw")->required();
  render->add_option("--format", format, "ascii or svg")->required();
  render->add_option("--out", out_path, "output path")->required();

  CLI::App* corpus = app.add_subcommand(
      "corpus", "Summarise every plat record in a directory");
  corpus->add_option("dir", dir, "directory of .plat records")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (info->parsed()) return run_info(file, oracle_budget);
  if (apply->parsed()) return run_apply(file, move_text);
  if (simplify->parsed())
    return run_simplify(file, beam, node_budget, crossing_cap, seed,
                        trace_path);
  if (scramble->parsed()) return run_scramble(file, seed, scramble_budget);
  if (tiling_check->parsed()) return run_tiling_check(file);
  if (render->parsed()) return run_render(file, format, out_path);
  if (corpus->parsed()) return run_corpus(dir);
  return 2;
}
