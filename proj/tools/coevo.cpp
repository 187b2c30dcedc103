// coevo: test/production co-evolution analysis of a commit history.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "coevo/pipeline.hpp"

namespace {

struct Flags {
  std::string log, releases, coverage, profile, rulebook, content;
  std::string out = "out";
  std::string axis = "index";
  std::string window = "releases";
  double epsilon = 0.01;
  long long skew = 0;
  double width = 960, height = 540;
  bool downsample = false;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--log", f.log, "commit log (one JSON record per line)");
  cmd->add_option("--releases", f.releases, "releases file: label<TAB>vcs_id-or-timestamp");
  cmd->add_option("--coverage", f.coverage, "coverage report: release class method block statement");
  cmd->add_option("--profile", f.profile, "language profile (key = value)");
  cmd->add_option("--content", f.content, "content root laid out as <vcs_id>/<path> (default: content/ beside the log)");
  cmd->add_option("--out", f.out, "output directory");
  cmd->add_option("--axis", f.axis, "change history X axis")->check(CLI::IsMember({"index", "time"}));
  cmd->add_option("--window", f.window, "phase windows: 'releases' or a commit block size");
  cmd->add_option("--epsilon", f.epsilon, "relative change treated as flat");
  cmd->add_option("--rulebook", f.rulebook, "phase rulebook file");
  cmd->add_option("--skew", f.skew, "tolerated backwards clock skew in seconds");
  cmd->add_option("--width", f.width, "canvas width");
  cmd->add_option("--height", f.height, "canvas height");
  cmd->add_flag("--downsample", f.downsample, "thin change-history marks above 200k events");
}

coevo::RunConfig to_config(const Flags& f) {
  coevo::RunConfig cfg;
  cfg.commit_log = f.log;
  auto opt = [](const std::string& s) { return s.empty() ? std::nullopt : std::optional<coevo::fs::path>(s); };
  cfg.releases = opt(f.releases);
  cfg.coverage = opt(f.coverage);
  cfg.profile = opt(f.profile);
  cfg.rulebook = opt(f.rulebook);
  cfg.content = opt(f.content);
  cfg.out_dir = f.out;
  cfg.view.axis = f.axis == "time" ? coevo::AxisMode::Time : coevo::AxisMode::Index;
  cfg.view.width = f.width;
  cfg.view.height = f.height;
  cfg.view.downsample = f.downsample;
  if (f.window != "releases") {
    auto n = coevo::text::parse_int(f.window);
    if (!n || *n < 1) throw coevo::validation_error("--window must be 'releases' or a positive commit count");
    cfg.window.mode = coevo::WindowSpec::Mode::Blocks;
    cfg.window.block_size = static_cast<std::size_t>(*n);
  }
  if (!(f.epsilon > 0)) throw coevo::validation_error("--epsilon must be positive");
  cfg.epsilon = f.epsilon;
  cfg.skew_tolerance = std::chrono::seconds{f.skew};
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mine a commit history for test and production code co-evolution"};
  app.set_config("--config", "", "INI/TOML file with flag defaults; command-line flags win");
  app.require_subcommand(1);
  Flags flags;
  add_common(&app, flags);

  using Command = int (*)(const coevo::RunConfig&, std::ostream&);
  struct Entry {
    const char* name;
    const char* help;
    Command run;
  };
  const Entry entries[] = {
      {"analyze", "metrics, entity registry, change and growth history views", coevo::cmd_analyze},
      {"coverage", "coverage evolution view and table", coevo::cmd_coverage},
      {"phases", "co-evolution phase segments", coevo::cmd_phases},
      {"correlate", "test share vs coverage scatter and correlations", coevo::cmd_correlate},
      {"run-all", "every output the given inputs allow", coevo::cmd_run_all},
  };
  std::vector<std::pair<CLI::App*, Command>> commands;
  for (const auto& e : entries) {
    auto* sub = app.add_subcommand(e.name, e.help);
    sub->fallthrough();
    commands.emplace_back(sub, e.run);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(coevo::ErrorKind::Validation);
  }

  coevo::RunConfig cfg;
  try {
    cfg = to_config(flags);
  } catch (const coevo::Error& e) {
    std::cerr << "coevo: error: " << e.what() << '\n';
    return e.exit_code();
  }
  for (auto& [sub, run] : commands)
    if (sub->parsed()) {
      if (sub->get_name() != "coverage" && cfg.commit_log.empty()) {
        std::cerr << "coevo: error: input not found: --log is required\n";
        return static_cast<int>(coevo::ErrorKind::MissingInput);
      }
      return run(cfg, std::cerr);
    }
  return static_cast<int>(coevo::ErrorKind::Internal);
}
