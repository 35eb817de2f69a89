#include "platcalc/render.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace platcalc {

namespace {

constexpr int kColumnPitch = 4;

int column_of(int strand) { return (strand - 1) * kColumnPitch; }

}  // namespace

std::string render_ascii(const Plat& p) {
  int strands = p.strands();
  int width = column_of(strands) + 1;
  std::vector<std::string> rows;
  auto blank = [width]() { return std::string(width, ' '); };

  // Top caps: an arc over each strand pair, then the strand mouths.
  std::string arcs = blank();
  std::string mouths = blank();
  for (int j = 1; j <= strands / 2; ++j) {
    int a = column_of(2 * j - 1);
    int b = column_of(2 * j);
    for (int x = a + 1; x < b; ++x) arcs[x] = '_';
    mouths[a] = '|';
    mouths[b] = '|';
  }
  rows.push_back(arcs);
  rows.push_back(mouths);

  for (int g : p.word.letters) {
    int i = std::abs(g);
    int a = column_of(i);
    int b = column_of(i + 1);
    int mid = (a + b) / 2;
    std::string top = blank();
    std::string center = blank();
    std::string bottom = blank();
    for (int s = 1; s <= strands; ++s) {
      if (s == i || s == i + 1) continue;
      int x = column_of(s);
      top[x] = '|';
      center[x] = '|';
      bottom[x] = '|';
    }
    top[a + 1] = '\\';
    top[b - 1] = '/';
    center[mid] = g > 0 ? '\\' : '/';
    bottom[a + 1] = '/';
    bottom[b - 1] = '\\';
    rows.push_back(top);
    rows.push_back(center);
    rows.push_back(bottom);
  }

  // Bottom caps close each pair in one row.
  std::string closing = blank();
  for (int j = 1; j <= strands / 2; ++j) {
    int a = column_of(2 * j - 1);
    int b = column_of(2 * j);
    closing[a] = '|';
    closing[b] = '|';
    for (int x = a + 1; x < b; ++x) closing[x] = '_';
  }
  rows.push_back(closing);

  std::ostringstream out;
  for (std::string& row : rows) {
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out << row << "\n";
  }
  return out.str();
}

namespace {

constexpr double kPitch = 40.0;
constexpr double kRowHeight = 40.0;
constexpr double kMargin = 30.0;

double svg_x(int strand) { return kMargin + (strand - 1) * kPitch; }

void svg_line(std::ostringstream& out, double x1, double y1, double x2,
              double y2) {
  out << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
      << "\" y2=\"" << y2 << "\"/>\n";
}

}  // namespace

std::string render_svg(const Plat& p) {
  int strands = p.strands();
  int len = static_cast<int>(p.word.letters.size());
  double top = kMargin;
  double bottom = kMargin + len * kRowHeight;
  double width = svg_x(strands) + kMargin;
  double height = bottom + kMargin;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  out << "<g fill=\"none\" stroke=\"#000\" stroke-width=\"2\" "
         "stroke-linecap=\"round\">\n";

  for (int j = 1; j <= strands / 2; ++j) {
    double a = svg_x(2 * j - 1);
    double b = svg_x(2 * j);
    double r = (b - a) / 2;
    out << "  <path d=\"M " << a << ' ' << top << " A " << r << ' ' << r
        << " 0 0 1 " << b << ' ' << top << "\"/>\n";
    out << "  <path d=\"M " << a << ' ' << bottom << " A " << r << ' ' << r
        << " 0 0 0 " << b << ' ' << bottom << "\"/>\n";
  }

  for (int row = 0; row < len; ++row) {
    int g = p.word.letters[row];
    int i = std::abs(g);
    double y0 = top + row * kRowHeight;
    double y1 = y0 + kRowHeight;
    for (int s = 1; s <= strands; ++s) {
      if (s == i || s == i + 1) continue;
      svg_line(out, svg_x(s), y0, svg_x(s), y1);
    }
    double xl = svg_x(i);
    double xr = svg_x(i + 1);
    // The strand entering at the north-west leaves at the south-east; a
    // positive letter puts it on top.
    double over_x0 = g > 0 ? xl : xr;
    double over_x1 = g > 0 ? xr : xl;
    double under_x0 = g > 0 ? xr : xl;
    double under_x1 = g > 0 ? xl : xr;
    svg_line(out, over_x0, y0, over_x1, y1);
    svg_line(out, under_x0, y0, under_x0 + (under_x1 - under_x0) * 0.38,
             y0 + kRowHeight * 0.38);
    svg_line(out, under_x0 + (under_x1 - under_x0) * 0.62,
             y0 + kRowHeight * 0.62, under_x1, y1);
  }

  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace platcalc
