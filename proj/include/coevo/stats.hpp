#pragma once

// Test-share versus coverage scatter data and Pearson correlation.

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coevo/coverage_ingest.hpp"
#include "coevo/error.hpp"
#include "coevo/metrics_engine.hpp"
#include "coevo/repo_ingest.hpp"

namespace coevo {

struct ScatterPoint {
  std::string release_label;
  double t_loc_ratio = 0;
  CoverageLevel level = CoverageLevel::Class;
  double coverage = 0;

  friend bool operator==(const ScatterPoint&, const ScatterPoint&) = default;
};

// One point per (release, measured level), pairing the tLOCRatio of the
// release commit's snapshot with that coverage value. Record order, then
// level order.
inline std::vector<ScatterPoint> build_scatter(const MetricsSeries& series, const std::vector<ReleaseMarker>& releases,
                                               const std::vector<CoverageRecord>& coverage) {
  std::vector<ScatterPoint> out;
  for (const auto& rec : coverage) {
    auto marker = std::find_if(releases.begin(), releases.end(),
                               [&](const ReleaseMarker& m) { return m.label == rec.release_label; });
    if (marker == releases.end())
      throw validation_error("coverage refers to unknown release '" + rec.release_label + "'");
    auto snap = std::find_if(series.begin(), series.end(), [&](const MetricsSnapshot& s) { return s.rev == marker->rev; });
    if (snap == series.end())
      throw validation_error("no metrics snapshot for release '" + rec.release_label + "'");
    const double share = derived_ratios(*snap).t_loc_ratio;
    for (auto level : kCoverageLevels)
      if (const auto& v = rec.at(level)) out.push_back({rec.release_label, share, level, *v});
  }
  return out;
}

class UndefinedCorrelation : public Error {
 public:
  explicit UndefinedCorrelation(const std::string& what) : Error(ErrorKind::Validation, what) {}
};

// Pearson's product-moment coefficient, accumulated in one pass with
// Welford-style co-moment updates.
inline double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw validation_error("pearson: length mismatch");
  if (xs.size() < 2) throw UndefinedCorrelation("pearson: need at least two samples");
  double mean_x = 0, mean_y = 0, m2x = 0, m2y = 0, cxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double n = static_cast<double>(i + 1);
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    mean_x += dx / n;
    mean_y += dy / n;
    const double dx2 = xs[i] - mean_x;
    const double dy2 = ys[i] - mean_y;
    m2x += dx * dx2;
    m2y += dy * dy2;
    cxy += dx * dy2;
  }
  if (m2x <= 0 || m2y <= 0) throw UndefinedCorrelation("pearson: constant variable");
  double rho = cxy / std::sqrt(m2x * m2y);
  return std::clamp(rho, -1.0, 1.0);
}

struct CorrelationResult {
  CoverageLevel level = CoverageLevel::Class;
  std::optional<double> rho;  // empty when undefined
  std::size_t n = 0;
};

// One result per coverage level, in level order.
inline std::vector<CorrelationResult> correlate(const std::vector<ScatterPoint>& points) {
  std::vector<CorrelationResult> out;
  for (auto level : kCoverageLevels) {
    std::vector<double> xs, ys;
    for (const auto& p : points) {
      if (p.level != level) continue;
      xs.push_back(p.t_loc_ratio);
      ys.push_back(p.coverage);
    }
    CorrelationResult r{level, std::nullopt, xs.size()};
    try {
      r.rho = pearson(xs, ys);
    } catch (const UndefinedCorrelation&) {
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace coevo
