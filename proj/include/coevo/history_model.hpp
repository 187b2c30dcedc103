#pragma once

// Replays a commit history into an entity registry and a stream of file
// events, pairing unit tests with the production units they exercise.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "coevo/code_classify.hpp"
#include "coevo/error.hpp"
#include "coevo/repo_ingest.hpp"

namespace coevo {

// A path change with the facts of the new revision attached. Deleted
// changes carry the default (Other, all zero) facts.
struct ClassifiedChange {
  std::string path;
  ChangeKind kind;
  FileFacts facts;
};

struct ClassifiedCommit {
  Rev rev = 0;
  Timestamp timestamp{};
  std::vector<ClassifiedChange> changes;  // path order
};

// Fetches and analyzes every added or modified source file revision.
// Non-source paths are classified Other without fetching content.
inline std::vector<ClassifiedCommit> classify_history(const History& history, const ContentProvider& provider,
                                                      const LanguageProfile& profile) {
  std::vector<ClassifiedCommit> out;
  out.reserve(history.size());
  for (const auto& commit : history) {
    ClassifiedCommit cc{commit.rev, commit.timestamp, {}};
    cc.changes.reserve(commit.changes.size());
    for (const auto& pc : commit.changes) {
      ClassifiedChange change{pc.path, pc.kind, {}};
      if (pc.kind != ChangeKind::Deleted && is_source_path(pc.path, profile)) {
        auto content = provider.fetch(pc.path, commit.rev);
        if (!content)
          throw missing_input("content not available for '" + pc.path + "' at rev " + std::to_string(commit.rev) +
                              " (" + commit.vcs_id + ")");
        change.facts = analyze_file(pc.path, *content, profile);
      }
      cc.changes.push_back(std::move(change));
    }
    std::sort(cc.changes.begin(), cc.changes.end(),
              [](const ClassifiedChange& a, const ClassifiedChange& b) { return a.path < b.path; });
    out.push_back(std::move(cc));
  }
  return out;
}

enum class Role { ProductionUnit, UnitTest, IntegrationTest };

using EntityId = std::size_t;

struct CodeEntity {
  EntityId id = 0;
  std::string path;
  Role role = Role::ProductionUnit;
  std::optional<EntityId> paired_with;
  Rev introduced_rev = 0;
  std::optional<Rev> deleted_rev;
  // Unit test whose production partner was deleted while the test lived on.
  bool orphaned = false;
};

enum class EventKind { AddedProduction, ModifiedProduction, AddedTest, ModifiedTest, Deleted };

struct FileEvent {
  Rev rev = 0;
  EntityId entity = 0;
  EventKind kind = EventKind::AddedProduction;

  friend bool operator==(const FileEvent&, const FileEvent&) = default;
};

struct Timeline {
  std::vector<CodeEntity> entities;  // indexed by EntityId
  std::vector<FileEvent> events;     // rev order
  std::vector<std::string> warnings;
};

namespace detail {

class TimelineBuilder {
 public:
  explicit TimelineBuilder(const LanguageProfile& profile) : profile_(profile) {}

  void apply(const ClassifiedCommit& commit) {
    rev_ = commit.rev;
    new_unit_stems_.clear();
    recheck_.clear();
    for (const auto& change : commit.changes) {
      if (change.kind == ChangeKind::Deleted) {
        remove(change.path);
      } else if (change.facts.kind != FileKind::Other) {
        touch(change.path, change.kind, change.facts.kind);
      }
    }
    rematch();
  }

  Timeline finish() && {
    for (auto& e : timeline_.entities) {
      if (kinds_[e.id] == FileKind::ProductionCode)
        e.role = Role::ProductionUnit;
      else
        e.role = e.paired_with ? Role::UnitTest : Role::IntegrationTest;
    }
    return std::move(timeline_);
  }

 private:
  void warn(std::string msg) { timeline_.warnings.push_back("rev " + std::to_string(rev_) + ": " + std::move(msg)); }

  void touch(const std::string& path, ChangeKind kind, FileKind fk) {
    auto it = live_.find(path);
    const bool is_test = fk == FileKind::TestCode;
    if (it == live_.end()) {
      if (kind == ChangeKind::Modified) warn("modification of untracked '" + path + "' treated as addition");
      EntityId id = timeline_.entities.size();
      CodeEntity e;
      e.id = id;
      e.path = path;
      e.introduced_rev = rev_;
      timeline_.entities.push_back(std::move(e));
      kinds_.push_back(fk);
      live_.emplace(path, id);
      emit(id, is_test ? EventKind::AddedTest : EventKind::AddedProduction);
      on_kind_gained(id, fk);
      return;
    }
    if (kind == ChangeKind::Added) warn("re-addition of live '" + path + "' treated as modification");
    EntityId id = it->second;
    emit(id, is_test ? EventKind::ModifiedTest : EventKind::ModifiedProduction);
    if (kinds_[id] != fk) {
      on_kind_lost(id);
      kinds_[id] = fk;
      on_kind_gained(id, fk);
    }
  }

  void remove(const std::string& path) {
    auto it = live_.find(path);
    if (it == live_.end()) return;
    EntityId id = it->second;
    live_.erase(it);
    emit(id, EventKind::Deleted);
    auto& e = timeline_.entities[id];
    e.deleted_rev = rev_;
    if (kinds_[id] == FileKind::ProductionCode) {
      erase_unit(id);
      if (e.paired_with) {
        auto& partner = timeline_.entities[*e.paired_with];
        if (!partner.deleted_rev) {
          partner.orphaned = true;
          rematchable_.insert(partner.id);
        }
      }
    } else {
      rematchable_.erase(id);
    }
  }

  void on_kind_gained(EntityId id, FileKind fk) {
    if (fk == FileKind::ProductionCode) {
      auto s = unit_stem(timeline_.entities[id].path);
      units_by_stem_[s].insert(id);
      new_unit_stems_.insert(s);
    } else {
      rematchable_.insert(id);
      recheck_.insert(id);
    }
  }

  void on_kind_lost(EntityId id) {
    auto& e = timeline_.entities[id];
    if (e.paired_with) {
      auto& partner = timeline_.entities[*e.paired_with];
      partner.paired_with.reset();
      partner.orphaned = false;
      if (kinds_[partner.id] == FileKind::TestCode && !partner.deleted_rev) {
        rematchable_.insert(partner.id);
        recheck_.insert(partner.id);
      }
      e.paired_with.reset();
      e.orphaned = false;
    }
    if (kinds_[id] == FileKind::ProductionCode)
      erase_unit(id);
    else
      rematchable_.erase(id);
  }

  void erase_unit(EntityId id) {
    auto s = unit_stem(timeline_.entities[id].path);
    auto it = units_by_stem_.find(s);
    if (it == units_by_stem_.end()) return;
    it->second.erase(id);
    if (it->second.empty()) units_by_stem_.erase(it);
  }

  // Matching sees the live production set after the whole commit applied.
  // Unpaired and orphaned tests are candidates; a unit whose test was
  // deleted may take a new one.
  void rematch() {
    std::vector<EntityId> paired;
    for (EntityId t : rematchable_) {
      auto wanted = unit_stem_for_test(timeline_.entities[t].path, profile_);
      if (!wanted) continue;
      if (!recheck_.count(t) && !new_unit_stems_.count(*wanted)) continue;
      auto units = units_by_stem_.find(*wanted);
      if (units == units_by_stem_.end()) continue;
      std::vector<std::string> candidates;
      for (EntityId u : units->second) candidates.push_back(timeline_.entities[u].path);
      std::sort(candidates.begin(), candidates.end());
      auto result = pick_unit(timeline_.entities[t].path, candidates);
      if (result.warning) warn(*result.warning);
      if (!result.unit) continue;
      EntityId unit = live_.at(*result.unit);
      auto& u = timeline_.entities[unit];
      auto& test = timeline_.entities[t];
      if (u.paired_with && !timeline_.entities[*u.paired_with].deleted_rev) {
        warn("unit '" + u.path + "' already paired; '" + test.path + "' keeps its current role");
        continue;
      }
      if (u.paired_with) timeline_.entities[*u.paired_with].paired_with.reset();
      if (test.paired_with) timeline_.entities[*test.paired_with].paired_with.reset();
      u.paired_with = t;
      test.paired_with = unit;
      test.orphaned = false;
      paired.push_back(t);
    }
    for (EntityId t : paired) rematchable_.erase(t);
  }

  void emit(EntityId id, EventKind kind) { timeline_.events.push_back({rev_, id, kind}); }

  const LanguageProfile& profile_;
  Rev rev_ = 0;
  Timeline timeline_;
  std::vector<FileKind> kinds_;
  std::unordered_map<std::string, EntityId> live_;
  std::map<std::string, std::set<EntityId>> units_by_stem_;
  std::set<EntityId> rematchable_;
  std::set<EntityId> recheck_;
  std::set<std::string> new_unit_stems_;
};

}  // namespace detail

// Deleted files stay in the registry; re-adding a path after its deletion
// starts a new entity, so moves show up as fresh introductions.
inline Timeline build_timeline(const std::vector<ClassifiedCommit>& commits, const LanguageProfile& profile) {
  detail::TimelineBuilder builder(profile);
  for (const auto& c : commits) builder.apply(c);
  return std::move(builder).finish();
}

inline Timeline build_timeline(const History& history, const ContentProvider& provider,
                               const LanguageProfile& profile) {
  return build_timeline(classify_history(history, provider, profile), profile);
}

struct RowLayout {
  std::vector<std::size_t> row_of;  // indexed by EntityId
  std::size_t row_count = 0;
};

// Row 0 is the bottom. Production units take rows in order of introduction
// and share them with their unit test; integration tests stack on top.
inline RowLayout assign_rows(const std::vector<CodeEntity>& entities) {
  RowLayout layout;
  layout.row_of.assign(entities.size(), 0);
  auto by_intro = [&](EntityId a, EntityId b) {
    return std::pair(entities[a].introduced_rev, a) < std::pair(entities[b].introduced_rev, b);
  };
  std::vector<EntityId> units, integration;
  for (const auto& e : entities) {
    if (e.role == Role::ProductionUnit) units.push_back(e.id);
    else if (e.role == Role::IntegrationTest) integration.push_back(e.id);
  }
  std::sort(units.begin(), units.end(), by_intro);
  std::sort(integration.begin(), integration.end(), by_intro);
  std::size_t row = 0;
  for (EntityId u : units) {
    layout.row_of[u] = row;
    if (auto t = entities[u].paired_with) layout.row_of[*t] = row;
    ++row;
  }
  for (EntityId t : integration) layout.row_of[t] = row++;
  layout.row_count = row;
  return layout;
}

enum class ColorClass { Red, Blue, Green, Yellow };

inline std::optional<ColorClass> event_color(EventKind kind) {
  switch (kind) {
    case EventKind::AddedProduction: return ColorClass::Red;
    case EventKind::ModifiedProduction: return ColorClass::Blue;
    case EventKind::AddedTest: return ColorClass::Green;
    case EventKind::ModifiedTest: return ColorClass::Yellow;
    case EventKind::Deleted: return std::nullopt;
  }
  return std::nullopt;
}

inline bool is_test_event(EventKind kind) {
  return kind == EventKind::AddedTest || kind == EventKind::ModifiedTest;
}

inline const char* to_string(Role r) {
  switch (r) {
    case Role::ProductionUnit: return "production";
    case Role::UnitTest: return "unit_test";
    case Role::IntegrationTest: return "integration_test";
  }
  return "?";
}

inline const char* to_string(EventKind k) {
  switch (k) {
    case EventKind::AddedProduction: return "added_production";
    case EventKind::ModifiedProduction: return "modified_production";
    case EventKind::AddedTest: return "added_test";
    case EventKind::ModifiedTest: return "modified_test";
    case EventKind::Deleted: return "deleted";
  }
  return "?";
}

}  // namespace coevo
