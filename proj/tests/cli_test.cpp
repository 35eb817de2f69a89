#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string("\"") + PLATCALC_CLI_BIN + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
    result.output.append(buf, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// Per-process scratch directory for record files the tests write.
struct Scratch {
  fs::path dir;
  Scratch() {
    std::string tmpl = (fs::temp_directory_path() / "platcalc-cli-XXXXXX").string();
    dir = mkdtemp(tmpl.data());
  }
  ~Scratch() { fs::remove_all(dir); }

  std::string file(const std::string& name, const std::string& content) const {
    fs::path p = dir / name;
    std::ofstream out(p);
    out << content;
    return p.string();
  }
  std::string read(const std::string& name) const {
    std::ifstream in(dir / name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
};

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

const char* kUnlink2 = "plat v1\nstrands=4\nword=1 1 -3 -3\n";
const char* kTrivial2 = "plat v1\nstrands=4\nword=\n";

}  // namespace

TEST_CASE("help and usage errors") {
  RunResult help = run("--help");
  CHECK(help.exit_code == 0);
  CHECK(contains(help.output, "Move expressions"));
  CHECK(contains(help.output, "microflip(start="));
  CHECK(contains(help.output, "simplify"));

  CHECK(run("").exit_code == 2);
  CHECK(run("transmogrify x").exit_code == 2);
  CHECK(run("info").exit_code == 2);
  CHECK(run("render x.plat --format ascii").exit_code == 2);
}

TEST_CASE("info") {
  Scratch scratch;
  std::string path = scratch.file("unlink2.plat", kUnlink2);
  RunResult r = run("info \"" + path + "\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "strands=4\n"
        "bridge=2\n"
        "crossings=4\n"
        "components=2\n"
        "oracle={-A^2 - A^-2; -A^2 - A^-2}\n");

  SUBCASE("a tight budget leaves the invariant unavailable") {
    RunResult tight = run("info \"" + path + "\" --budget 2");
    CHECK(tight.exit_code == 0);
    CHECK(contains(tight.output, "oracle=unavailable ("));
  }
  SUBCASE("unreadable and malformed records") {
    CHECK(run("info \"" + (scratch.dir / "missing.plat").string() + "\"")
              .exit_code == 2);
    std::string bad = scratch.file("bad.plat", "plat v1\nstrands=oops\n");
    CHECK(run("info \"" + bad + "\"").exit_code == 2);
  }
}

TEST_CASE("apply") {
  Scratch scratch;
  std::string path = scratch.file("trivial2.plat", kTrivial2);

  RunResult r = run("apply \"" + path + "\" --move \"flip(split=0,k=2,dir=in)\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == std::string(kUnlink2));

  SUBCASE("exit 1 when the move does not apply") {
    RunResult d = run("apply \"" + path + "\" --move destab");
    CHECK(d.exit_code == 1);
    CHECK(contains(d.output, "error:"));
  }
  SUBCASE("exit 2 on move syntax errors") {
    CHECK(run("apply \"" + path + "\" --move \"warp(k=1)\"").exit_code == 2);
    CHECK(run("apply \"" + path + "\"").exit_code == 2);
  }
}

TEST_CASE("scramble then simplify round trip") {
  Scratch scratch;
  std::string start = scratch.file("trivial1.plat", "plat v1\nstrands=2\nword=\n");

  RunResult scrambled = run("scramble \"" + start + "\" --seed 5 --budget 4");
  REQUIRE(scrambled.exit_code == 0);
  std::string record = scrambled.output;
  CHECK(contains(record, "plat v1\n"));
  std::string path = scratch.file("scrambled.plat", record);

  SUBCASE("the scramble is reproducible") {
    CHECK(run("scramble \"" + start + "\" --seed 5 --budget 4").output ==
          record);
  }
  SUBCASE("seed and budget are required") {
    CHECK(run("scramble \"" + start + "\" --seed 5").exit_code == 2);
  }

  std::string trace_path = (scratch.dir / "out.trace").string();
  RunResult simplified =
      run("simplify \"" + path + "\" --trace \"" + trace_path + "\"");
  CHECK(simplified.exit_code == 0);
  CHECK(contains(simplified.output, "outcome=reached-standard\n"));
  CHECK(contains(simplified.output, "word=\n"));
  std::string trace = scratch.read("out.trace");
  CHECK(trace.rfind("trace v1 outcome=reached-standard", 0) == 0);
  CHECK(contains(trace, "step 0 "));
}

TEST_CASE("simplify reports an exhausted budget with exit 1") {
  Scratch scratch;
  std::string path = scratch.file(
      "stuck.plat", "plat v1\nstrands=6\nword=1 -5 -2 1 -2 5 -4 -2 4 2\n");
  RunResult r = run("simplify \"" + path + "\" --budget 50");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "outcome=budget-exhausted\n"));
}

TEST_CASE("render") {
  Scratch scratch;
  std::string path = scratch.file("kink.plat", "plat v1\nstrands=2\nword=1\n");
  std::string out = (scratch.dir / "kink.txt").string();

  RunResult r = run("render \"" + path + "\" --format ascii --out \"" + out + "\"");
  CHECK(r.exit_code == 0);
  CHECK(scratch.read("kink.txt") ==
        " ___\n"
        "|   |\n"
        " \\ /\n"
        "  \\\n"
        " / \\\n"
        "|___|\n");

  SUBCASE("byte-identical on a second run") {
    std::string again = (scratch.dir / "again.txt").string();
    run("render \"" + path + "\" --format ascii --out \"" + again + "\"");
    CHECK(scratch.read("again.txt") == scratch.read("kink.txt"));
  }
  SUBCASE("svg output") {
    std::string svg = (scratch.dir / "kink.svg").string();
    CHECK(run("render \"" + path + "\" --format svg --out \"" + svg + "\"")
              .exit_code == 0);
    CHECK(contains(scratch.read("kink.svg"), "</svg>"));
  }
  SUBCASE("unknown format") {
    CHECK(run("render \"" + path + "\" --format png --out \"" + out + "\"")
              .exit_code == 2);
  }
}

TEST_CASE("tiling-check") {
  Scratch scratch;
  std::string good = scratch.file("trivial.tiling",
                                  "tiling v1\n"
                                  "bridge=1\n"
                                  "tile 0 t110 max h=3/2\n"
                                  "tile 1 t110 min h=-1/2\n"
                                  "edge 0:0 1:0 arc\n");
  RunResult r = run("tiling-check \"" + good + "\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "valid: yes"));
  CHECK(contains(r.output, "census: t440=0 t221=0 t003=0 t001=0 t110=2"));

  SUBCASE("invalid tiling exits 1") {
    std::string bad = scratch.file("bad.tiling",
                                   "tiling v1\n"
                                   "bridge=1\n"
                                   "tile 0 t110 max h=-5\n"
                                   "tile 1 t110 min h=-1/2\n"
                                   "edge 0:0 1:0 arc\n");
    RunResult b = run("tiling-check \"" + bad + "\"");
    CHECK(b.exit_code == 1);
    CHECK(contains(b.output, "valid: no"));
  }
  SUBCASE("unparseable tiling exits 2") {
    std::string junk = scratch.file("junk.tiling", "tiling v1\nbridge=1\ntile x\n");
    CHECK(run("tiling-check \"" + junk + "\"").exit_code == 2);
  }
}

TEST_CASE("corpus") {
  RunResult r = run(std::string("corpus \"") + PLATCALC_CORPUS_DIR + "\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "file"));
  CHECK(contains(r.output, "failures=0"));

  SUBCASE("a local directory with one record") {
    Scratch scratch;
    scratch.file("one.plat", kTrivial2);
    RunResult local = run("corpus \"" + scratch.dir.string() + "\"");
    CHECK(local.exit_code == 0);
    CHECK(contains(local.output, "one.plat"));
    CHECK(contains(local.output, "records=1 failures=0"));
  }
  SUBCASE("an empty directory is an error") {
    Scratch scratch;
    CHECK(run("corpus \"" + scratch.dir.string() + "\"").exit_code == 2);
  }
  SUBCASE("a missing directory is an error") {
    CHECK(run("corpus /no/such/dir").exit_code == 2);
  }
}
