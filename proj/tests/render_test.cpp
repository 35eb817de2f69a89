#include <doctest.h>

#include <string>

#include "platcalc/plat.hpp"
#include "platcalc/render.hpp"

using namespace platcalc;

namespace {

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("render_ascii small pictures") {
  CHECK(render_ascii(make_plat(2, {})) ==
        " ___\n"
        "|   |\n"
        "|___|\n");
  CHECK(render_ascii(make_plat(2, {1})) ==
        " ___\n"
        "|   |\n"
        " \\ /\n"
        "  \\\n"
        " / \\\n"
        "|___|\n");
  CHECK(render_ascii(make_plat(4, {2, -1})) ==
        " ___     ___\n"
        "|   |   |   |\n"
        "|    \\ /    |\n"
        "|     \\     |\n"
        "|    / \\    |\n"
        " \\ /    |   |\n"
        "  /     |   |\n"
        " / \\    |   |\n"
        "|___|   |___|\n");
}

TEST_CASE("render_ascii marks the over strand by crossing sign") {
  std::string pos = render_ascii(make_plat(2, {1}));
  std::string neg = render_ascii(make_plat(2, {-1}));
  CHECK(pos != neg);
  CHECK(contains(pos, "  \\\n"));
  CHECK(contains(neg, "  /\n"));
}

TEST_CASE("renders are deterministic") {
  Plat p = make_plat(6, {1, -4, 3, 2, 2});
  CHECK(render_ascii(p) == render_ascii(p));
  CHECK(render_svg(p) == render_svg(p));
}

TEST_CASE("render_svg is a self-contained document") {
  std::string svg = render_svg(make_plat(4, {2}));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(contains(svg, "xmlns=\"http://www.w3.org/2000/svg\""));
  CHECK(contains(svg, "</svg>"));
  CHECK(contains(svg, "<line"));
  CHECK(contains(svg, "<path"));
  CHECK_FALSE(contains(svg, "href"));
  CHECK_FALSE(contains(svg, "url("));
  CHECK_FALSE(contains(svg, "<script"));

  SUBCASE("every crossing leaves a gap in the under strand") {
    // one crossing: the under diagonal splits into two line segments, so
    // five <line> elements in total for four strand columns
    int lines = 0;
    for (size_t at = svg.find("<line"); at != std::string::npos;
         at = svg.find("<line", at + 1))
      ++lines;
    CHECK(lines == 5);
  }
}

TEST_CASE("render scales with the word") {
  std::string small = render_svg(make_plat(2, {}));
  std::string tall = render_svg(make_plat(2, {1, 1, 1}));
  CHECK(small.size() < tall.size());
  std::string wide = render_svg(make_plat(8, {}));
  CHECK(contains(wide, "width=\"340\""));
}
