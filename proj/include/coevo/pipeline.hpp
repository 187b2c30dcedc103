#pragma once

// End-to-end commands: ingest, classify, compute metrics and write the
// views and tables into an output directory.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "coevo/code_classify.hpp"
#include "coevo/coverage_ingest.hpp"
#include "coevo/error.hpp"
#include "coevo/history_model.hpp"
#include "coevo/metrics_engine.hpp"
#include "coevo/phase_detect.hpp"
#include "coevo/repo_ingest.hpp"
#include "coevo/stats.hpp"
#include "coevo/svg.hpp"
#include "coevo/tsv.hpp"
#include "coevo/views.hpp"

namespace coevo {

namespace fs = std::filesystem;

struct RunConfig {
  fs::path commit_log;
  std::optional<fs::path> releases;
  std::optional<fs::path> coverage;
  std::optional<fs::path> profile;
  std::optional<fs::path> rulebook;
  // Defaults to a `content` directory beside the commit log.
  std::optional<fs::path> content;
  fs::path out_dir = "out";
  ViewOptions view;
  WindowSpec window;
  double epsilon = 0.01;
  std::chrono::seconds skew_tolerance{0};
};

inline std::string read_input(const fs::path& path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) throw missing_input("input not found: " + path.string());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw missing_input("input not found: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

// Prefixes validation errors with the file they came from.
template <class Fn>
auto with_file(const fs::path& path, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Validation) throw;
    throw validation_error(path.string() + ": " + e.what());
  }
}

// Files to publish together: everything is written to temporaries first
// and renamed into place only once all writes succeeded.
class OutputSet {
 public:
  void add(std::string name, std::string content) { files_.emplace_back(std::move(name), std::move(content)); }

  const std::vector<std::pair<std::string, std::string>>& files() const noexcept { return files_; }

  void commit(const fs::path& dir) const {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw output_error("cannot create output directory " + dir.string());
    std::vector<fs::path> temps;
    auto cleanup = [&] {
      for (const auto& t : temps) fs::remove(t, ec);
    };
    for (const auto& [name, content] : files_) {
      fs::path tmp = dir / ("." + name + ".tmp");
      temps.push_back(tmp);
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << content;
      out.close();
      if (!out) {
        cleanup();
        throw output_error("cannot write " + (dir / name).string());
      }
    }
    for (std::size_t i = 0; i < files_.size(); ++i) {
      fs::rename(temps[i], dir / files_[i].first, ec);
      if (ec) {
        cleanup();
        throw output_error("cannot write " + (dir / files_[i].first).string());
      }
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> files_;
};

struct Analysis {
  History history;
  std::vector<ReleaseMarker> releases;
  LanguageProfile profile;
  std::vector<ClassifiedCommit> classified;
  Timeline timeline;
  RowLayout layout;
  MetricsSeries series;

  std::vector<Timestamp> commit_times() const {
    std::vector<Timestamp> t;
    for (const auto& c : history) t.push_back(c.timestamp);
    return t;
  }
};

inline History load_history(const RunConfig& cfg) {
  auto text = read_input(cfg.commit_log);
  return with_file(cfg.commit_log, [&] { return parse_commit_log(text, {cfg.skew_tolerance}); });
}

inline std::vector<ReleaseMarker> load_release_file(const RunConfig& cfg, const History& history) {
  if (!cfg.releases) return {};
  auto text = read_input(*cfg.releases);
  return with_file(*cfg.releases, [&] { return load_releases(text, history); });
}

inline std::vector<CoverageRecord> load_coverage_file(const fs::path& path) {
  auto text = read_input(path);
  return with_file(path, [&] { return parse_coverage_report(text); });
}

inline Rulebook load_rulebook_file(const RunConfig& cfg) {
  if (!cfg.rulebook) return default_rulebook();
  std::istringstream in(read_input(*cfg.rulebook));
  return with_file(*cfg.rulebook, [&] { return parse_rulebook(in); });
}

inline Analysis analyze_inputs(const RunConfig& cfg, std::ostream& diag) {
  Analysis a;
  a.history = load_history(cfg);
  a.releases = load_release_file(cfg, a.history);
  if (cfg.profile) {
    std::istringstream in(read_input(*cfg.profile));
    a.profile = with_file(*cfg.profile, [&] { return load_profile(in); });
  }
  fs::path content_root = cfg.content ? *cfg.content : cfg.commit_log.parent_path() / "content";
  DirectoryContentProvider provider(content_root, a.history);
  a.classified = classify_history(a.history, provider, a.profile);
  a.timeline = build_timeline(a.classified, a.profile);
  a.layout = assign_rows(a.timeline.entities);
  a.series = compute_series(a.classified);
  for (const auto& w : a.timeline.warnings) diag << "coevo: warning: " << w << '\n';
  return a;
}

inline void add_analysis_outputs(const Analysis& a, const RunConfig& cfg, OutputSet& out) {
  out.add("metrics.tsv", to_text([&](std::ostream& o) { emit_metrics_tsv(a.series, o); }));
  out.add("entities.tsv", to_text([&](std::ostream& o) { emit_entities_tsv(a.timeline, a.layout, o); }));
  out.add("change_history.svg",
          emit_svg(render_change_history(a.timeline.events, a.layout, a.releases, a.commit_times(), cfg.view)));
  out.add("growth_history.svg", emit_svg(render_growth_history(a.series, a.releases, cfg.view)));
}

inline void add_phase_outputs(const Analysis& a, const RunConfig& cfg, OutputSet& out) {
  PhaseOptions options{cfg.window, cfg.epsilon, load_rulebook_file(cfg)};
  if (!(options.epsilon > 0)) throw validation_error("epsilon must be positive");
  out.add("phases.tsv",
          to_text([&](std::ostream& o) { emit_phases_tsv(segment_phases(a.series, a.releases, options), o); }));
}

inline void add_coverage_outputs(const std::vector<CoverageRecord>& records, const RunConfig& cfg, OutputSet& out) {
  out.add("coverage.tsv", to_text([&](std::ostream& o) { emit_coverage_tsv(records, o); }));
  out.add("coverage_evolution.svg", emit_svg(render_coverage_evolution(records, cfg.view)));
}

inline void add_correlation_outputs(const Analysis& a, const std::vector<CoverageRecord>& records,
                                    const RunConfig& cfg, OutputSet& out, std::ostream& diag) {
  auto points = build_scatter(a.series, a.releases, records);
  auto results = correlate(points);
  for (const auto& r : results)
    if (!r.rho)
      diag << "coevo: warning: correlation undefined for " << level_name(r.level) << " coverage (n=" << r.n
           << ")\n";
  out.add("scatter.tsv", to_text([&](std::ostream& o) { emit_scatter_tsv(points, o); }));
  out.add("scatter.svg", emit_svg(render_scatter(points, cfg.view)));
  out.add("correlation.tsv", to_text([&](std::ostream& o) { emit_correlation_tsv(results, o); }));
}

template <class Fn>
int run_guarded(std::ostream& diag, Fn&& fn) {
  try {
    fn();
    return 0;
  } catch (const Error& e) {
    diag << "coevo: error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    diag << "coevo: internal error: " << e.what() << '\n';
    return static_cast<int>(ErrorKind::Internal);
  }
}

inline const fs::path& require(const std::optional<fs::path>& p, const char* what) {
  if (!p) throw missing_input(std::string("input not found: no ") + what + " given");
  return *p;
}

// metrics.tsv, entities.tsv, change_history.svg, growth_history.svg
inline int cmd_analyze(const RunConfig& cfg, std::ostream& diag = std::cerr) {
  return run_guarded(diag, [&] {
    auto a = analyze_inputs(cfg, diag);
    OutputSet out;
    add_analysis_outputs(a, cfg, out);
    out.commit(cfg.out_dir);
  });
}

// coverage.tsv, coverage_evolution.svg
inline int cmd_coverage(const RunConfig& cfg, std::ostream& diag = std::cerr) {
  return run_guarded(diag, [&] {
    auto records = load_coverage_file(require(cfg.coverage, "coverage report"));
    if (records.empty()) throw validation_error("coverage report has no records");
    OutputSet out;
    add_coverage_outputs(records, cfg, out);
    out.commit(cfg.out_dir);
  });
}

// phases.tsv
inline int cmd_phases(const RunConfig& cfg, std::ostream& diag = std::cerr) {
  return run_guarded(diag, [&] {
    load_rulebook_file(cfg);  // fail fast on a bad rulebook
    auto a = analyze_inputs(cfg, diag);
    OutputSet out;
    add_phase_outputs(a, cfg, out);
    out.commit(cfg.out_dir);
  });
}

// scatter.tsv, scatter.svg, correlation.tsv
inline int cmd_correlate(const RunConfig& cfg, std::ostream& diag = std::cerr) {
  return run_guarded(diag, [&] {
    require(cfg.releases, "releases file");
    auto records = load_coverage_file(require(cfg.coverage, "coverage report"));
    auto a = analyze_inputs(cfg, diag);
    OutputSet out;
    add_correlation_outputs(a, records, cfg, out, diag);
    out.commit(cfg.out_dir);
  });
}

// Everything the inputs allow, from a single analysis pass.
inline int cmd_run_all(const RunConfig& cfg, std::ostream& diag = std::cerr) {
  return run_guarded(diag, [&] {
    std::vector<CoverageRecord> records;
    if (cfg.coverage) records = load_coverage_file(*cfg.coverage);
    auto a = analyze_inputs(cfg, diag);
    OutputSet out;
    add_analysis_outputs(a, cfg, out);
    add_phase_outputs(a, cfg, out);
    if (!records.empty()) add_coverage_outputs(records, cfg, out);
    if (cfg.releases && cfg.coverage) add_correlation_outputs(a, records, cfg, out, diag);
    out.commit(cfg.out_dir);
  });
}

}  // namespace coevo
