#pragma once

// Labels windows of a metrics series with co-evolution scenarios using a
// rulebook of per-metric trend patterns.

#include <algorithm>
#include <array>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coevo/error.hpp"
#include "coevo/metrics_engine.hpp"
#include "coevo/repo_ingest.hpp"

namespace coevo {

enum class Trend { Up, Flat, Down };

inline char trend_code(Trend t) {
  switch (t) {
    case Trend::Up: return 'U';
    case Trend::Flat: return 'F';
    case Trend::Down: return 'D';
  }
  return '?';
}

// Change relative to the final value of the analyzed range.
inline Trend trend_symbol(double start_value, double end_value, double final_value, double epsilon) {
  double delta = (end_value - start_value) / std::max(final_value, 1.0);
  if (delta > epsilon) return Trend::Up;
  if (delta < -epsilon) return Trend::Down;
  return Trend::Flat;
}

// Trends in metric order: pLOC, tLOC, pClasses, tClasses, tCommands.
using TrendVector = std::array<Trend, 5>;

struct PhaseRule {
  std::array<std::optional<Trend>, 5> pattern;  // nullopt is a wildcard
  std::string label;

  int specificity() const {
    return static_cast<int>(std::count_if(pattern.begin(), pattern.end(), [](const auto& c) { return c.has_value(); }));
  }

  bool matches(const TrendVector& trends) const {
    for (std::size_t i = 0; i < pattern.size(); ++i)
      if (pattern[i] && *pattern[i] != trends[i]) return false;
    return true;
  }
};

using Rulebook = std::vector<PhaseRule>;

inline constexpr const char* kUnclassified = "Unclassified";

// Rule line: five symbols from {U,F,D,*} then the label, whitespace separated.
inline PhaseRule parse_rule(std::string_view line, std::size_t lineno) {
  auto tokens = text::split_ws(line);
  if (tokens.size() < 6) throw line_error(lineno, "rule needs five trend symbols and a label");
  PhaseRule rule;
  for (std::size_t i = 0; i < 5; ++i) {
    auto t = tokens[i];
    if (t == "U") rule.pattern[i] = Trend::Up;
    else if (t == "F") rule.pattern[i] = Trend::Flat;
    else if (t == "D") rule.pattern[i] = Trend::Down;
    else if (t != "*") throw line_error(lineno, "trend symbol must be U, F, D or *, got '" + std::string(t) + "'");
  }
  if (rule.specificity() == 0) throw line_error(lineno, "rule must constrain at least one metric");
  auto label_start = tokens[5].data() - line.data();
  rule.label = std::string(text::trim(line.substr(static_cast<std::size_t>(label_start))));
  return rule;
}

inline Rulebook parse_rulebook(std::istream& in) {
  Rulebook book;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto body = text::trim(line);
    if (body.empty() || body.front() == '#') continue;
    book.push_back(parse_rule(body, lineno));
  }
  if (book.empty()) throw validation_error("rulebook has no rules");
  return book;
}

// The eight co-evolution scenarios. Only the pure development row is
// unambiguous; the other cells are provisional and can be overridden with
// a rulebook file.
inline const char* kDefaultRulebook =
    "U F * * * pure development\n"
    "F U * * * pure testing\n"
    "U U * * * co-evolution\n"
    "F U F F * test refinement\n"
    "F F U U * skeleton co-evolution\n"
    "F F * U F test case skeletons\n"
    "F F * F U test command skeletons\n"
    "F D * * U test refactoring\n";

inline Rulebook default_rulebook() {
  std::istringstream in(kDefaultRulebook);
  return parse_rulebook(in);
}

// Most specific rule first, rulebook order among equals.
inline std::string classify_phase(const TrendVector& trends, const Rulebook& rulebook) {
  std::vector<const PhaseRule*> order;
  for (const auto& r : rulebook) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(),
                   [](const PhaseRule* a, const PhaseRule* b) { return a->specificity() > b->specificity(); });
  for (const auto* r : order)
    if (r->matches(trends)) return r->label;
  return kUnclassified;
}

struct PhaseSegment {
  Rev rev_start = 0;
  Rev rev_end = 0;
  TrendVector trends{Trend::Flat, Trend::Flat, Trend::Flat, Trend::Flat, Trend::Flat};
  std::string label = kUnclassified;
};

struct WindowSpec {
  enum class Mode { Releases, Blocks } mode = Mode::Releases;
  std::size_t block_size = 50;
};

struct PhaseOptions {
  WindowSpec window;
  double epsilon = 0.01;
  Rulebook rulebook = default_rulebook();
};

// Windows share their boundary commits so that together they cover every
// change in the series.
inline std::vector<PhaseSegment> segment_phases(const MetricsSeries& series, const std::vector<ReleaseMarker>& releases,
                                                const PhaseOptions& options = {}) {
  if (series.size() < 2) {
    PhaseSegment only;
    if (!series.empty()) only.rev_start = only.rev_end = series.front().rev;
    return {only};
  }
  const Rev first = series.front().rev, last = series.back().rev;
  std::vector<Rev> bounds{first};
  if (options.window.mode == WindowSpec::Mode::Releases) {
    for (const auto& r : releases)
      if (r.rev > bounds.back() && r.rev < last) bounds.push_back(r.rev);
  } else {
    const auto step = static_cast<Rev>(std::max<std::size_t>(options.window.block_size, 1));
    for (Rev b = first + step; b < last; b += step) bounds.push_back(b);
  }
  bounds.push_back(last);

  auto at = [&](Rev rev) -> const MetricsSnapshot& { return series[static_cast<std::size_t>(rev - first)]; };
  std::vector<PhaseSegment> out;
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    PhaseSegment seg;
    seg.rev_start = bounds[i];
    seg.rev_end = bounds[i + 1];
    for (std::size_t m = 0; m < 5; ++m) {
      auto metric = kAllMetrics[m];
      seg.trends[m] = trend_symbol(static_cast<double>(metric_value(at(seg.rev_start), metric)),
                                   static_cast<double>(metric_value(at(seg.rev_end), metric)),
                                   static_cast<double>(metric_value(series.back(), metric)), options.epsilon);
    }
    seg.label = classify_phase(seg.trends, options.rulebook);
    out.push_back(std::move(seg));
  }
  return out;
}

}  // namespace coevo
