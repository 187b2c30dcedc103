#pragma once

// Tab-separated exports. Numbers use the shortest round-trip form and do
// not depend on the process locale.

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "coevo/coverage_ingest.hpp"
#include "coevo/error.hpp"
#include "coevo/history_model.hpp"
#include "coevo/metrics_engine.hpp"
#include "coevo/phase_detect.hpp"
#include "coevo/stats.hpp"
#include "coevo/text.hpp"

namespace coevo {

inline constexpr const char* kMetricsHeader =
    "rev\ttimestamp\tpLOC\ttLOC\tpClasses\ttClasses\ttCommands\tpClassRatio\tpLOCRatio\ttLOCRatio";

inline void emit_metrics_tsv(const MetricsSeries& series, std::ostream& out) {
  out << kMetricsHeader << '\n';
  for (const auto& s : series) {
    auto r = derived_ratios(s);
    out << s.rev << '\t' << text::format_timestamp(s.timestamp) << '\t' << s.p_loc << '\t' << s.t_loc << '\t'
        << s.p_classes << '\t' << s.t_classes << '\t' << s.t_commands << '\t' << text::shortest(r.p_class_ratio)
        << '\t' << text::shortest(r.p_loc_ratio) << '\t' << text::shortest(r.t_loc_ratio) << '\n';
  }
}

// Reads back a metrics export; the ratio columns are checked for being
// numbers but otherwise recomputed from the counts.
inline MetricsSeries parse_metrics_tsv(std::istream& in) {
  MetricsSeries series;
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line) || text::trim(line) != kMetricsHeader) throw line_error(1, "missing metrics header");
  ++lineno;
  while (std::getline(in, line)) {
    ++lineno;
    if (text::trim(line).empty()) continue;
    auto cols = text::split(text::trim(line), '\t');
    if (cols.size() != 10) throw line_error(lineno, "expected 10 columns");
    MetricsSnapshot s;
    auto num = [&](std::size_t i) {
      auto v = text::parse_int(cols[i]);
      if (!v) throw line_error(lineno, "column " + std::to_string(i + 1) + " is not an integer");
      return *v;
    };
    s.rev = num(0);
    auto ts = text::parse_timestamp(cols[1]);
    if (!ts) throw line_error(lineno, "bad timestamp");
    s.timestamp = *ts;
    s.p_loc = num(2);
    s.t_loc = num(3);
    s.p_classes = num(4);
    s.t_classes = num(5);
    s.t_commands = num(6);
    for (std::size_t i = 7; i < 10; ++i)
      if (!text::parse_double(cols[i])) throw line_error(lineno, "ratio column is not a number");
    series.push_back(s);
  }
  return series;
}

inline void emit_entities_tsv(const Timeline& timeline, const RowLayout& layout, std::ostream& out) {
  out << "entity_id\tpath\trole\tpaired_with\tintroduced_rev\tdeleted_rev\trow\torphaned\n";
  for (const auto& e : timeline.entities) {
    out << e.id << '\t' << e.path << '\t' << to_string(e.role) << '\t'
        << (e.paired_with ? std::to_string(*e.paired_with) : "-") << '\t' << e.introduced_rev << '\t'
        << (e.deleted_rev ? std::to_string(*e.deleted_rev) : "-") << '\t' << layout.row_of.at(e.id) << '\t'
        << (e.orphaned ? "yes" : "no") << '\n';
  }
}

inline void emit_phases_tsv(const std::vector<PhaseSegment>& segments, std::ostream& out) {
  out << "rev_start\trev_end\tpLOC\ttLOC\tpClasses\ttClasses\ttCommands\tlabel\n";
  for (const auto& s : segments) {
    out << s.rev_start << '\t' << s.rev_end;
    for (auto t : s.trends) out << '\t' << trend_code(t);
    out << '\t' << s.label << '\n';
  }
}

inline void emit_coverage_tsv(const std::vector<CoverageRecord>& records, std::ostream& out) {
  out << "release\tclass\tmethod\tblock\tstatement\n";
  for (const auto& r : records) {
    out << r.release_label;
    for (const auto& v : r.levels) out << '\t' << (v ? text::shortest(*v) : std::string("-"));
    out << '\n';
  }
}

inline void emit_scatter_tsv(const std::vector<ScatterPoint>& points, std::ostream& out) {
  out << "release\ttLOCRatio\tlevel\tcoverage\n";
  for (const auto& p : points)
    out << p.release_label << '\t' << text::shortest(p.t_loc_ratio) << '\t' << level_name(p.level) << '\t'
        << text::shortest(p.coverage) << '\n';
}

inline std::vector<ScatterPoint> parse_scatter_tsv(std::istream& in) {
  std::vector<ScatterPoint> out;
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line) || text::trim(line) != "release\ttLOCRatio\tlevel\tcoverage")
    throw line_error(1, "missing scatter header");
  while (std::getline(in, line)) {
    ++lineno;
    if (text::trim(line).empty()) continue;
    auto cols = text::split(text::trim(line), '\t');
    if (cols.size() != 4) throw line_error(lineno, "expected 4 columns");
    ScatterPoint p;
    p.release_label = std::string(cols[0]);
    auto share = text::parse_double(cols[1]);
    auto cov = text::parse_double(cols[3]);
    if (!share || !cov) throw line_error(lineno, "non-numeric value");
    p.t_loc_ratio = *share;
    p.coverage = *cov;
    bool found = false;
    for (auto level : kCoverageLevels)
      if (cols[2] == level_name(level)) p.level = level, found = true;
    if (!found) throw line_error(lineno, "unknown level '" + std::string(cols[2]) + "'");
    out.push_back(std::move(p));
  }
  return out;
}

inline void emit_correlation_tsv(const std::vector<CorrelationResult>& results, std::ostream& out) {
  out << "level\trho\tn\n";
  for (const auto& r : results)
    out << level_name(r.level) << '\t' << (r.rho ? text::shortest(*r.rho) : std::string("undefined")) << '\t' << r.n
        << '\n';
}

template <class Fn>
std::string to_text(Fn&& write) {
  std::ostringstream out;
  write(out);
  return std::move(out).str();
}

}  // namespace coevo
