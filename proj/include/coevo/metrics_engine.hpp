#pragma once

// Size metrics per commit, the derived production/test ratios and the
// cumulative-percentage normalization used by the growth view.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "coevo/code_classify.hpp"
#include "coevo/history_model.hpp"
#include "coevo/repo_ingest.hpp"

namespace coevo {

struct MetricsSnapshot {
  Rev rev = 0;
  Timestamp timestamp{};
  std::int64_t p_loc = 0;
  std::int64_t t_loc = 0;
  std::int64_t p_classes = 0;
  std::int64_t t_classes = 0;
  std::int64_t t_commands = 0;

  friend bool operator==(const MetricsSnapshot&, const MetricsSnapshot&) = default;
};

using MetricsSeries = std::vector<MetricsSnapshot>;

enum class Metric { PLoc, TLoc, PClasses, TClasses, TCommands };

inline constexpr Metric kAllMetrics[] = {Metric::PLoc, Metric::TLoc, Metric::PClasses, Metric::TClasses,
                                         Metric::TCommands};

inline std::int64_t metric_value(const MetricsSnapshot& s, Metric m) {
  switch (m) {
    case Metric::PLoc: return s.p_loc;
    case Metric::TLoc: return s.t_loc;
    case Metric::PClasses: return s.p_classes;
    case Metric::TClasses: return s.t_classes;
    case Metric::TCommands: return s.t_commands;
  }
  return 0;
}

inline const char* metric_name(Metric m) {
  switch (m) {
    case Metric::PLoc: return "pLOC";
    case Metric::TLoc: return "tLOC";
    case Metric::PClasses: return "pClasses";
    case Metric::TClasses: return "tClasses";
    case Metric::TCommands: return "tCommands";
  }
  return "?";
}

inline void accumulate(MetricsSnapshot& s, const FileFacts& f, int sign) {
  if (f.kind == FileKind::ProductionCode) {
    s.p_loc += sign * f.loc;
    s.p_classes += sign * f.classes;
  } else if (f.kind == FileKind::TestCode) {
    s.t_loc += sign * f.loc;
    s.t_classes += sign * f.classes;
    s.t_commands += sign * f.test_commands;
  }
}

inline MetricsSnapshot compute_snapshot(std::span<const FileFacts> live_files) {
  MetricsSnapshot s;
  for (const auto& f : live_files) accumulate(s, f, +1);
  return s;
}

struct DerivedRatios {
  double p_class_ratio = 100;
  double p_loc_ratio = 100;
  double t_loc_ratio = 0;
  // Set when the denominator was zero and the all-production value applies.
  bool class_ratio_undefined = false;
  bool loc_ratio_undefined = false;
};

inline DerivedRatios derived_ratios(const MetricsSnapshot& s) {
  DerivedRatios r;
  if (auto classes = s.p_classes + s.t_classes; classes > 0)
    r.p_class_ratio = 100.0 * static_cast<double>(s.p_classes) / static_cast<double>(classes);
  else
    r.class_ratio_undefined = true;
  if (auto loc = s.p_loc + s.t_loc; loc > 0)
    r.p_loc_ratio = 100.0 * static_cast<double>(s.p_loc) / static_cast<double>(loc);
  else
    r.loc_ratio_undefined = true;
  r.t_loc_ratio = 100.0 - r.p_loc_ratio;
  return r;
}

// Facts of every live file, updated change by change with running totals.
class LiveFileTable {
 public:
  void apply(const ClassifiedChange& change) {
    auto it = files_.find(change.path);
    if (it != files_.end()) {
      accumulate(totals_, it->second, -1);
      if (change.kind == ChangeKind::Deleted) {
        files_.erase(it);
        return;
      }
      it->second = change.facts;
    } else {
      if (change.kind == ChangeKind::Deleted) return;
      files_.emplace(change.path, change.facts);
    }
    accumulate(totals_, change.facts, +1);
  }

  MetricsSnapshot totals() const { return totals_; }
  std::size_t size() const noexcept { return files_.size(); }

 private:
  std::map<std::string, FileFacts> files_;
  MetricsSnapshot totals_;
};

// One snapshot per commit, maintained incrementally.
inline MetricsSeries compute_series(const std::vector<ClassifiedCommit>& commits) {
  MetricsSeries series;
  series.reserve(commits.size());
  LiveFileTable table;
  for (const auto& c : commits) {
    for (const auto& change : c.changes) table.apply(change);
    auto s = table.totals();
    s.rev = c.rev;
    s.timestamp = c.timestamp;
    series.push_back(s);
  }
  return series;
}

// Recomputes every snapshot from scratch: reconstructs the live tree at
// each rev, re-reads each live file at its last touching rev and sums.
// Quadratic; meant for verifying the incremental path.
inline MetricsSeries replay_series(const History& history, const ContentProvider& provider,
                                   const LanguageProfile& profile) {
  MetricsSeries series;
  for (const auto& target : history) {
    std::map<std::string, Rev> live;
    for (const auto& c : history) {
      if (c.rev > target.rev) break;
      for (const auto& pc : c.changes) {
        if (pc.kind == ChangeKind::Deleted)
          live.erase(pc.path);
        else
          live[pc.path] = c.rev;
      }
    }
    std::vector<FileFacts> facts;
    for (const auto& [path, rev] : live) {
      if (!is_source_path(path, profile)) continue;
      auto content = provider.fetch(path, rev);
      if (!content)
        throw missing_input("content not available for '" + path + "' at rev " + std::to_string(rev));
      facts.push_back(analyze_file(path, *content, profile));
    }
    auto s = compute_snapshot(facts);
    s.rev = target.rev;
    s.timestamp = target.timestamp;
    series.push_back(s);
  }
  return series;
}

struct NormalizedSeries {
  std::vector<double> values;
  // Final raw value was zero; values are all zero.
  bool zero_final = false;
};

// value(rev) / value(last) * 100. Mid-series values may exceed 100.
inline NormalizedSeries cumulative_percentage(std::span<const double> raw) {
  NormalizedSeries out;
  out.values.assign(raw.size(), 0.0);
  if (raw.empty()) return out;
  const double last = raw.back();
  if (last == 0) {
    out.zero_final = true;
    return out;
  }
  for (std::size_t i = 0; i < raw.size(); ++i) out.values[i] = raw[i] / last * 100.0;
  out.values.back() = 100.0;
  return out;
}

inline NormalizedSeries cumulative_percentage(const MetricsSeries& series, Metric metric) {
  std::vector<double> raw;
  raw.reserve(series.size());
  for (const auto& s : series) raw.push_back(static_cast<double>(metric_value(s, metric)));
  return cumulative_percentage(raw);
}

}  // namespace coevo
