#pragma once

// Chart documents as ordered lists of drawing elements and their SVG 1.1
// serialization. Coordinates are canvas pixels; all numbers are written with
// three decimals so output is byte-stable.

#include <cmath>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coevo/text.hpp"

namespace coevo {

struct Point {
  double x = 0;
  double y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Line {
  Point from, to;
  std::string stroke = "#000000";
  double width = 1;
  bool dashed = false;
};

struct Rect {
  Point origin;
  double width = 0, height = 0;
  std::string fill = "none";
  std::string stroke = "none";
};

enum class Glyph { Square, Circle, Triangle, Diamond };

// A data glyph centred on `at`. `tag` names the series or event kind.
struct Mark {
  Point at;
  double size = 4;
  Glyph glyph = Glyph::Square;
  std::string fill;
  std::string tag;
};

// Each run is drawn as its own polyline, so missing samples leave gaps.
struct Polyline {
  std::vector<std::vector<Point>> runs;
  std::string stroke;
  double width = 1.5;
  bool dashed = false;
  std::string label;

  std::size_t vertex_count() const {
    std::size_t n = 0;
    for (const auto& r : runs) n += r.size();
    return n;
  }
};

struct Text {
  Point at;
  std::string content;
  std::string anchor = "start";  // start | middle | end
  double size = 11;
  std::string fill = "#000000";
  double rotate = 0;
};

using Element = std::variant<Line, Rect, Polyline, Mark, Text>;

enum class ViewKind { ChangeHistory, GrowthHistory, CoverageEvolution, Scatter };

// Maps data coordinates onto the plot area of the canvas.
struct PlotFrame {
  double left = 0, top = 0, width = 1, height = 1;
  double x_min = 0, x_max = 1, y_min = 0, y_max = 1;

  Point to_canvas(double x, double y) const {
    return {left + (x - x_min) / (x_max - x_min) * width, top + height - (y - y_min) / (y_max - y_min) * height};
  }
  Point to_data(Point p) const {
    return {x_min + (p.x - left) / width * (x_max - x_min), y_min + (top + height - p.y) / height * (y_max - y_min)};
  }
  bool contains(Point p, double slack = 1e-9) const {
    return p.x >= left - slack && p.x <= left + width + slack && p.y >= top - slack && p.y <= top + height + slack;
  }
};

struct ViewDocument {
  ViewKind kind = ViewKind::ChangeHistory;
  double width = 0, height = 0;
  PlotFrame frame;
  std::vector<Element> elements;

  template <class T>
  std::vector<const T*> all() const {
    std::vector<const T*> out;
    for (const auto& e : elements)
      if (const T* p = std::get_if<T>(&e)) out.push_back(p);
    return out;
  }
};

namespace detail {

inline std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string attr(std::string_view name, double v) { return std::string(" ") + std::string(name) + "=\"" + text::fixed3(v) + "\""; }

inline std::string attr(std::string_view name, std::string_view v) {
  return std::string(" ") + std::string(name) + "=\"" + xml_escape(v) + "\"";
}

inline std::string points_attr(const std::vector<Point>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ' ';
    s += text::fixed3(pts[i].x) + "," + text::fixed3(pts[i].y);
  }
  return s;
}

struct SvgWriter {
  std::string& out;

  void operator()(const Line& l) const {
    out += "<line" + attr("x1", l.from.x) + attr("y1", l.from.y) + attr("x2", l.to.x) + attr("y2", l.to.y) +
           attr("stroke", l.stroke) + attr("stroke-width", l.width);
    if (l.dashed) out += attr("stroke-dasharray", "4,3");
    out += "/>\n";
  }

  void operator()(const Rect& r) const {
    out += "<rect" + attr("x", r.origin.x) + attr("y", r.origin.y) + attr("width", r.width) +
           attr("height", r.height) + attr("fill", r.fill) + attr("stroke", r.stroke) + "/>\n";
  }

  void operator()(const Polyline& p) const {
    out += "<g" + attr("class", "series") + attr("data-label", p.label) + ">\n";
    for (const auto& run : p.runs) {
      out += "<polyline" + attr("points", points_attr(run)) + attr("fill", "none") + attr("stroke", p.stroke) +
             attr("stroke-width", p.width);
      if (p.dashed) out += attr("stroke-dasharray", "6,3");
      out += "/>\n";
    }
    out += "</g>\n";
  }

  void operator()(const Mark& m) const {
    const double h = m.size / 2;
    const auto& c = m.at;
    switch (m.glyph) {
      case Glyph::Square:
        out += "<rect" + attr("x", c.x - h) + attr("y", c.y - h) + attr("width", m.size) + attr("height", m.size);
        break;
      case Glyph::Circle:
        out += "<circle" + attr("cx", c.x) + attr("cy", c.y) + attr("r", h);
        break;
      case Glyph::Triangle:
        out += "<polygon" + attr("points", points_attr({{c.x, c.y - h}, {c.x + h, c.y + h}, {c.x - h, c.y + h}}));
        break;
      case Glyph::Diamond:
        out += "<polygon" +
               attr("points", points_attr({{c.x, c.y - h}, {c.x + h, c.y}, {c.x, c.y + h}, {c.x - h, c.y}}));
        break;
    }
    out += attr("fill", m.fill) + attr("class", m.tag) + "/>\n";
  }

  void operator()(const Text& t) const {
    out += "<text" + attr("x", t.at.x) + attr("y", t.at.y) + attr("font-size", t.size) +
           attr("font-family", "sans-serif") + attr("text-anchor", t.anchor) + attr("fill", t.fill);
    if (t.rotate != 0)
      out += attr("transform", "rotate(" + text::fixed3(t.rotate) + " " + text::fixed3(t.at.x) + " " +
                                   text::fixed3(t.at.y) + ")");
    out += ">" + xml_escape(t.content) + "</text>\n";
  }
};

}  // namespace detail

inline std::string emit_svg(const ViewDocument& doc) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"" + detail::attr("width", doc.width) +
         detail::attr("height", doc.height) +
         detail::attr("viewBox", "0 0 " + text::fixed3(doc.width) + " " + text::fixed3(doc.height)) + ">\n";
  detail::SvgWriter writer{out};
  for (const auto& e : doc.elements) std::visit(writer, e);
  out += "</svg>\n";
  return out;
}

}  // namespace coevo
