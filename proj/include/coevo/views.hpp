#pragma once

// Renderers for the change history, growth history, coverage evolution and
// test-share scatter charts.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "coevo/coverage_ingest.hpp"
#include "coevo/history_model.hpp"
#include "coevo/metrics_engine.hpp"
#include "coevo/repo_ingest.hpp"
#include "coevo/stats.hpp"
#include "coevo/svg.hpp"

namespace coevo {

struct Palette {
  std::string added_production = "#CC0000";
  std::string modified_production = "#0033CC";
  std::string added_test = "#00AA00";
  std::string modified_test = "#D4C400";

  const std::string& color(ColorClass c) const {
    switch (c) {
      case ColorClass::Red: return added_production;
      case ColorClass::Blue: return modified_production;
      case ColorClass::Green: return added_test;
      case ColorClass::Yellow: return modified_test;
    }
    return added_production;
  }
};

enum class AxisMode { Index, Time };

struct ViewOptions {
  double width = 960;
  double height = 540;
  Palette palette;
  AxisMode axis = AxisMode::Index;
  // Stride-based thinning of change-history marks; exports are unaffected.
  bool downsample = false;
  std::size_t downsample_threshold = 200000;
};

namespace detail {

constexpr double kMarginLeft = 64, kMarginRight = 150, kMarginTop = 36, kMarginBottom = 56;

inline PlotFrame make_frame(const ViewOptions& o, double x_min, double x_max, double y_min, double y_max) {
  PlotFrame f;
  f.left = kMarginLeft;
  f.top = kMarginTop;
  f.width = std::max(1.0, o.width - kMarginLeft - kMarginRight);
  f.height = std::max(1.0, o.height - kMarginTop - kMarginBottom);
  f.x_min = x_min;
  f.x_max = x_max > x_min ? x_max : x_min + 1;
  f.y_min = y_min;
  f.y_max = y_max > y_min ? y_max : y_min + 1;
  return f;
}

// Steps of 1, 2 or 5 times a power of ten, at most about `target` ticks.
inline std::vector<double> nice_ticks(double lo, double hi, int target = 8) {
  std::vector<double> ticks;
  if (!(hi > lo)) return ticks;
  double raw = (hi - lo) / target;
  double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (step >= raw) break;
  }
  for (double v = std::ceil(lo / step) * step; v <= hi + step * 1e-9; v += step) ticks.push_back(std::abs(v) < step * 1e-9 ? 0.0 : v);
  return ticks;
}

inline std::string tick_label(double v) {
  if (std::abs(v - std::round(v)) < 1e-9) return std::to_string(static_cast<long long>(std::llround(v)));
  return text::shortest(std::round(v * 1000) / 1000);
}

struct Tick {
  double value;
  std::string label;
};

inline std::vector<Tick> numeric_ticks(double lo, double hi, int target = 8) {
  std::vector<Tick> out;
  for (double v : nice_ticks(lo, hi, target)) out.push_back({v, tick_label(v)});
  return out;
}

inline void add_frame(ViewDocument& doc, const std::string& title, const std::vector<Tick>& x_ticks,
                      const std::vector<Tick>& y_ticks, const std::string& x_title, const std::string& y_title) {
  const auto& f = doc.frame;
  doc.elements.emplace_back(Rect{{0, 0}, doc.width, doc.height, "#FFFFFF", "none"});
  doc.elements.emplace_back(Rect{{f.left, f.top}, f.width, f.height, "none", "#000000"});
  doc.elements.emplace_back(Text{{doc.width / 2, f.top / 2 + 5}, title, "middle", 14});
  for (const auto& t : x_ticks) {
    auto p = f.to_canvas(t.value, f.y_min);
    doc.elements.emplace_back(Line{p, {p.x, p.y + 4}});
    doc.elements.emplace_back(Text{{p.x, p.y + 16}, t.label, "middle", 10});
  }
  for (const auto& t : y_ticks) {
    auto p = f.to_canvas(f.x_min, t.value);
    doc.elements.emplace_back(Line{{p.x - 4, p.y}, p});
    doc.elements.emplace_back(Text{{p.x - 6, p.y + 3.5}, t.label, "end", 10});
  }
  doc.elements.emplace_back(Text{{f.left + f.width / 2, f.top + f.height + 40}, x_title, "middle", 12});
  doc.elements.emplace_back(Text{{16, f.top + f.height / 2}, y_title, "middle", 12, "#000000", -90});
}

inline void add_release_lines(ViewDocument& doc, const std::vector<std::pair<double, std::string>>& releases) {
  const auto& f = doc.frame;
  for (const auto& [x, label] : releases) {
    if (x < f.x_min || x > f.x_max) continue;
    auto bottom = f.to_canvas(x, f.y_min);
    auto top = f.to_canvas(x, f.y_max);
    doc.elements.emplace_back(Line{bottom, top, "#888888", 1, true});
    doc.elements.emplace_back(Text{{top.x + 2, top.y + 10}, label, "start", 9, "#444444"});
  }
}

struct LegendEntry {
  std::string label;
  std::string color;
  Glyph glyph = Glyph::Square;
  bool line = false;
  bool dashed = false;
};

inline void add_legend(ViewDocument& doc, const std::vector<LegendEntry>& entries) {
  const double x = doc.frame.left + doc.frame.width + 14;
  double y = doc.frame.top + 10;
  for (const auto& e : entries) {
    if (e.line)
      doc.elements.emplace_back(Line{{x, y}, {x + 16, y}, e.color, 2, e.dashed});
    else
      doc.elements.emplace_back(Mark{{x + 8, y}, 8, e.glyph, e.color, "legend"});
    doc.elements.emplace_back(Text{{x + 22, y + 3.5}, e.label, "start", 10});
    y += 16;
  }
}

inline double seconds(Timestamp t) { return static_cast<double>(t.time_since_epoch().count()); }

inline std::vector<Tick> time_ticks(double lo, double hi) {
  std::vector<Tick> out;
  constexpr int n = 5;
  for (int i = 0; i <= n; ++i) {
    double v = lo + (hi - lo) * i / n;
    auto t = Timestamp{std::chrono::seconds{static_cast<long long>(std::llround(v))}};
    out.push_back({v, text::format_timestamp(t).substr(0, 10)});
  }
  return out;
}

}  // namespace detail

// One mark per non-deletion event at (commit, row). Marks are ordered by
// commit, then row, then production before test, so a test mark always
// paints over a production mark in the same cell. `commit_times` holds the
// timestamp of every commit (index rev-1) and fixes the X extent.
inline ViewDocument render_change_history(const std::vector<FileEvent>& events, const RowLayout& layout,
                                          const std::vector<ReleaseMarker>& releases,
                                          const std::vector<Timestamp>& commit_times, const ViewOptions& options = {}) {
  ViewDocument doc;
  doc.kind = ViewKind::ChangeHistory;
  doc.width = options.width;
  doc.height = options.height;

  Rev max_rev = static_cast<Rev>(commit_times.size());
  for (const auto& e : events) max_rev = std::max(max_rev, e.rev);
  const bool time_axis = options.axis == AxisMode::Time && !commit_times.empty();
  auto x_of = [&](Rev rev) {
    if (!time_axis) return static_cast<double>(rev);
    auto i = std::clamp<Rev>(rev, 1, static_cast<Rev>(commit_times.size()));
    return detail::seconds(commit_times[static_cast<std::size_t>(i - 1)]);
  };

  double x_lo = 0.5, x_hi = static_cast<double>(std::max<Rev>(max_rev, 1)) + 0.5;
  if (time_axis) {
    double a = detail::seconds(commit_times.front()), b = detail::seconds(commit_times.back());
    double pad = std::max(1.0, (b - a) * 0.01);
    x_lo = a - pad;
    x_hi = b + pad;
  }
  const double rows = static_cast<double>(std::max<std::size_t>(layout.row_count, 1));
  doc.frame = detail::make_frame(options, x_lo, x_hi, -0.5, rows - 0.5);

  std::vector<detail::Tick> x_ticks = time_axis ? detail::time_ticks(x_lo, x_hi) : detail::numeric_ticks(1, x_hi - 0.5);
  std::vector<detail::Tick> y_ticks;
  for (auto& t : detail::numeric_ticks(0, rows - 1, 6))
    if (t.value == std::floor(t.value)) y_ticks.push_back(std::move(t));
  detail::add_frame(doc, "Change history", x_ticks, y_ticks, time_axis ? "time" : "commit", "entity");

  std::vector<std::pair<double, std::string>> rel;
  for (const auto& r : releases) rel.emplace_back(x_of(r.rev), r.label);
  detail::add_release_lines(doc, rel);

  struct Pending {
    Rev rev;
    std::size_t row;
    bool test;
    std::size_t seq;
    const FileEvent* event;
  };
  std::vector<Pending> pending;
  pending.reserve(events.size());
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto& e = events[i];
    if (!event_color(e.kind)) continue;
    pending.push_back({e.rev, layout.row_of.at(e.entity), is_test_event(e.kind), i, &e});
  }
  std::sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
    return std::tie(a.rev, a.row, a.test, a.seq) < std::tie(b.rev, b.row, b.test, b.seq);
  });

  std::size_t stride = 1;
  if (options.downsample && options.downsample_threshold > 0 && pending.size() > options.downsample_threshold)
    stride = (pending.size() + options.downsample_threshold - 1) / options.downsample_threshold;

  const auto& f = doc.frame;
  const double cell_w = time_axis ? f.width / std::max<double>(1, static_cast<double>(commit_times.size()))
                                  : f.width / (x_hi - x_lo);
  const double size = std::clamp(std::min(cell_w, f.height / rows), 1.0, 8.0);
  for (std::size_t i = 0; i < pending.size(); i += stride) {
    const auto& p = pending[i];
    doc.elements.emplace_back(Mark{f.to_canvas(x_of(p.rev), static_cast<double>(p.row)), size, Glyph::Square,
                                   options.palette.color(*event_color(p.event->kind)), to_string(p.event->kind)});
  }

  detail::add_legend(doc, {{"added production", options.palette.added_production},
                           {"modified production", options.palette.modified_production},
                           {"added test", options.palette.added_test},
                           {"modified test", options.palette.modified_test}});
  return doc;
}

struct GrowthLine {
  const char* label;
  const char* color;
  bool dashed;
};

inline constexpr GrowthLine kGrowthLines[] = {
    {"pLOC", "#CC0000", false},       {"tLOC", "#00AA00", false},       {"pClasses", "#E07000", false},
    {"tClasses", "#008080", false},   {"tCommands", "#7A00CC", false},  {"pClassRatio", "#666666", true},
    {"pLOCRatio", "#000000", true},
};

// Seven polylines over the commit axis: the five size metrics as cumulative
// percentages of their final values, then pClassRatio and pLOCRatio.
inline ViewDocument render_growth_history(const MetricsSeries& series, const std::vector<ReleaseMarker>& releases,
                                          const ViewOptions& options = {}) {
  ViewDocument doc;
  doc.kind = ViewKind::GrowthHistory;
  doc.width = options.width;
  doc.height = options.height;

  std::vector<std::vector<double>> values;
  for (auto m : kAllMetrics) values.push_back(cumulative_percentage(series, m).values);
  std::vector<double> pclass, ploc;
  for (const auto& s : series) {
    auto r = derived_ratios(s);
    pclass.push_back(r.p_class_ratio);
    ploc.push_back(r.p_loc_ratio);
  }
  values.push_back(std::move(pclass));
  values.push_back(std::move(ploc));

  double y_max = 100;
  for (const auto& v : values)
    for (double d : v) y_max = std::max(y_max, std::ceil(d / 10) * 10);

  double x_lo = 0.5, x_hi = 1.5;
  if (!series.empty()) {
    x_lo = static_cast<double>(series.front().rev);
    x_hi = static_cast<double>(series.back().rev);
    if (x_hi <= x_lo) {
      x_lo -= 0.5;
      x_hi += 0.5;
    }
  }
  doc.frame = detail::make_frame(options, x_lo, x_hi, 0, y_max);
  detail::add_frame(doc, "Growth history", detail::numeric_ticks(x_lo, x_hi), detail::numeric_ticks(0, y_max, 6),
                    "commit", "% of final value");

  std::vector<std::pair<double, std::string>> rel;
  for (const auto& r : releases) rel.emplace_back(static_cast<double>(r.rev), r.label);
  detail::add_release_lines(doc, rel);

  std::vector<detail::LegendEntry> legend;
  for (std::size_t k = 0; k < values.size(); ++k) {
    Polyline line;
    line.label = kGrowthLines[k].label;
    line.stroke = kGrowthLines[k].color;
    line.dashed = kGrowthLines[k].dashed;
    if (!series.empty()) {
      line.runs.emplace_back();
      for (std::size_t i = 0; i < series.size(); ++i)
        line.runs.back().push_back(doc.frame.to_canvas(static_cast<double>(series[i].rev), values[k][i]));
    }
    doc.elements.emplace_back(std::move(line));
    legend.push_back({kGrowthLines[k].label, kGrowthLines[k].color, Glyph::Square, true, kGrowthLines[k].dashed});
  }
  detail::add_legend(doc, legend);
  return doc;
}

struct LevelStyle {
  const char* color;
  Glyph glyph;
};

inline LevelStyle level_style(CoverageLevel level) {
  switch (level) {
    case CoverageLevel::Class: return {"#CC0000", Glyph::Circle};
    case CoverageLevel::Method: return {"#0033CC", Glyph::Square};
    case CoverageLevel::Block: return {"#00AA00", Glyph::Triangle};
    case CoverageLevel::Statement: return {"#E07000", Glyph::Diamond};
  }
  return {"#000000", Glyph::Circle};
}

// Releases along X in record order, coverage percentage on a fixed 0..100 Y
// axis, one polyline per level broken wherever a level was not measured.
inline ViewDocument render_coverage_evolution(const std::vector<CoverageRecord>& records,
                                              const ViewOptions& options = {}) {
  ViewDocument doc;
  doc.kind = ViewKind::CoverageEvolution;
  doc.width = options.width;
  doc.height = options.height;
  const double n = static_cast<double>(std::max<std::size_t>(records.size(), 1));
  doc.frame = detail::make_frame(options, 0.5, n + 0.5, 0, 100);

  std::vector<detail::Tick> x_ticks;
  for (std::size_t i = 0; i < records.size(); ++i)
    x_ticks.push_back({static_cast<double>(i + 1), records[i].release_label});
  detail::add_frame(doc, "Coverage evolution", x_ticks, detail::numeric_ticks(0, 100, 5), "release", "coverage %");

  std::vector<detail::LegendEntry> legend;
  for (auto level : kCoverageLevels) {
    auto style = level_style(level);
    Polyline line;
    line.label = level_name(level);
    line.stroke = style.color;
    std::vector<Mark> marks;
    bool open = false;
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto& v = records[i].at(level);
      if (!v) {
        open = false;
        continue;
      }
      if (!open) line.runs.emplace_back();
      open = true;
      auto p = doc.frame.to_canvas(static_cast<double>(i + 1), *v);
      line.runs.back().push_back(p);
      marks.push_back(Mark{p, 6, style.glyph, style.color, level_name(level)});
    }
    doc.elements.emplace_back(std::move(line));
    for (auto& m : marks) doc.elements.emplace_back(std::move(m));
    legend.push_back({level_name(level), style.color, style.glyph});
  }
  detail::add_legend(doc, legend);
  return doc;
}

// tLOCRatio on X, coverage on Y, both 0..100; glyph shape encodes the level.
inline ViewDocument render_scatter(const std::vector<ScatterPoint>& points, const ViewOptions& options = {}) {
  ViewDocument doc;
  doc.kind = ViewKind::Scatter;
  doc.width = options.width;
  doc.height = options.height;
  doc.frame = detail::make_frame(options, 0, 100, 0, 100);
  detail::add_frame(doc, "Test code share vs coverage", detail::numeric_ticks(0, 100, 10),
                    detail::numeric_ticks(0, 100, 5), "tLOCRatio %", "coverage %");
  for (const auto& p : points) {
    auto style = level_style(p.level);
    doc.elements.emplace_back(Mark{doc.frame.to_canvas(std::clamp(p.t_loc_ratio, 0.0, 100.0), std::clamp(p.coverage, 0.0, 100.0)),
                                   7, style.glyph, style.color, level_name(p.level)});
  }
  std::vector<detail::LegendEntry> legend;
  for (auto level : kCoverageLevels) legend.push_back({level_name(level), level_style(level).color, level_style(level).glyph});
  detail::add_legend(doc, legend);
  return doc;
}

}  // namespace coevo
