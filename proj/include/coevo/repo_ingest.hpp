#pragma once

// Commit history ingestion: the line-delimited commit log, release markers,
// and the content provider contract used to read file revisions.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coevo/error.hpp"
#include "coevo/text.hpp"

namespace coevo {

// Commit sequence index, 1..N in log order.
using Rev = std::int64_t;

enum class ChangeKind : char { Added = 'A', Modified = 'M', Deleted = 'D' };

struct PathChange {
  std::string path;
  ChangeKind kind;

  friend bool operator==(const PathChange&, const PathChange&) = default;
};

struct CommitRecord {
  Rev rev = 0;
  std::string vcs_id;
  Timestamp timestamp{};
  std::string author;
  std::vector<PathChange> changes;

  friend bool operator==(const CommitRecord&, const CommitRecord&) = default;
};

class History {
 public:
  History() = default;

  // Takes records in log order; assigns rev 1..N and indexes vcs ids.
  // Duplicate vcs ids are rejected.
  explicit History(std::vector<CommitRecord> commits) : commits_(std::move(commits)) {
    for (std::size_t i = 0; i < commits_.size(); ++i) {
      commits_[i].rev = static_cast<Rev>(i + 1);
      if (!index_.emplace(commits_[i].vcs_id, i).second)
        throw validation_error("duplicate vcs_id '" + commits_[i].vcs_id + "'");
    }
  }

  const std::vector<CommitRecord>& commits() const noexcept { return commits_; }
  std::size_t size() const noexcept { return commits_.size(); }
  bool empty() const noexcept { return commits_.empty(); }

  const CommitRecord& at(Rev rev) const { return commits_.at(static_cast<std::size_t>(rev - 1)); }

  const CommitRecord* find(std::string_view vcs_id) const {
    auto it = index_.find(std::string(vcs_id));
    return it == index_.end() ? nullptr : &commits_[it->second];
  }

  auto begin() const noexcept { return commits_.begin(); }
  auto end() const noexcept { return commits_.end(); }

  friend bool operator==(const History& a, const History& b) { return a.commits_ == b.commits_; }

 private:
  std::vector<CommitRecord> commits_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct LogParseOptions {
  // How far a timestamp may run backwards relative to its predecessor.
  std::chrono::seconds skew_tolerance{0};
};

namespace detail {

inline ChangeKind parse_change_kind(std::string_view s, std::size_t line) {
  if (s == "A") return ChangeKind::Added;
  if (s == "M") return ChangeKind::Modified;
  if (s == "D") return ChangeKind::Deleted;
  throw line_error(line, "change kind must be A, M or D, got '" + std::string(s) + "'");
}

inline std::string get_string(const nlohmann::json& obj, const char* key, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string())
    throw line_error(line, std::string("missing or non-string field '") + key + "'");
  return it->get<std::string>();
}

inline CommitRecord parse_record(std::string_view text, std::size_t line) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw line_error(line, std::string("malformed record: ") + e.what());
  }
  if (!obj.is_object()) throw line_error(line, "record is not an object");

  CommitRecord rec;
  rec.vcs_id = get_string(obj, "vcs_id", line);
  rec.author = get_string(obj, "author", line);
  auto ts = text::parse_timestamp(get_string(obj, "timestamp", line));
  if (!ts) throw line_error(line, "timestamp is not ISO-8601");
  rec.timestamp = *ts;

  auto changes = obj.find("changes");
  if (changes == obj.end() || !changes->is_array())
    throw line_error(line, "missing 'changes' array");
  if (changes->empty()) throw line_error(line, "commit has no changes");
  for (const auto& c : *changes) {
    if (!c.is_object()) throw line_error(line, "change entry is not an object");
    PathChange pc{get_string(c, "path", line), parse_change_kind(get_string(c, "kind", line), line)};
    if (pc.path.empty()) throw line_error(line, "empty path");
    for (const auto& prev : rec.changes)
      if (prev.path == pc.path) throw line_error(line, "path '" + pc.path + "' listed twice");
    rec.changes.push_back(std::move(pc));
  }
  return rec;
}

}  // namespace detail

// Reads the canonical commit log: one JSON object per line with fields
// vcs_id, timestamp, author and changes[{path, kind}]. Blank lines are skipped.
inline History parse_commit_log(std::istream& in, const LogParseOptions& options = {}) {
  std::vector<CommitRecord> records;
  std::unordered_map<std::string, std::size_t> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (text::trim(line).empty()) continue;
    CommitRecord rec = detail::parse_record(line, lineno);
    if (!seen.emplace(rec.vcs_id, lineno).second)
      throw line_error(lineno, "duplicate vcs_id '" + rec.vcs_id + "'");
    if (!records.empty() && rec.timestamp + options.skew_tolerance < records.back().timestamp)
      throw line_error(lineno, "timestamp decreases beyond skew tolerance");
    records.push_back(std::move(rec));
  }
  return History(std::move(records));
}

inline History parse_commit_log(std::string_view text, const LogParseOptions& options = {}) {
  std::istringstream in{std::string(text)};
  return parse_commit_log(in, options);
}

inline void serialize_commit_log(const History& history, std::ostream& out) {
  for (const auto& c : history) {
    nlohmann::json changes = nlohmann::json::array();
    for (const auto& pc : c.changes)
      changes.push_back({{"path", pc.path}, {"kind", std::string(1, static_cast<char>(pc.kind))}});
    nlohmann::json obj = {{"vcs_id", c.vcs_id},
                          {"timestamp", text::format_timestamp(c.timestamp)},
                          {"author", c.author},
                          {"changes", std::move(changes)}};
    out << obj.dump() << '\n';
  }
}

struct ReleaseMarker {
  std::string label;
  Rev rev = 0;

  friend bool operator==(const ReleaseMarker&, const ReleaseMarker&) = default;
};

// Releases file: `label<TAB>vcs_id-or-timestamp` per line; `#` lines and
// blank lines are ignored. A vcs_id match takes precedence; otherwise a
// timestamp snaps to the last commit at or before it.
inline std::vector<ReleaseMarker> load_releases(std::istream& in, const History& history) {
  std::vector<ReleaseMarker> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto body = text::trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto tab = body.find('\t');
    if (tab == std::string_view::npos) throw line_error(lineno, "expected label<TAB>vcs_id-or-timestamp");
    std::string label(text::trim(body.substr(0, tab)));
    std::string where(text::trim(body.substr(tab + 1)));
    if (label.empty() || where.empty()) throw line_error(lineno, "empty release label or position");
    for (const auto& m : out)
      if (m.label == label) throw line_error(lineno, "duplicate release label '" + label + "'");

    if (const auto* c = history.find(where)) {
      out.push_back({label, c->rev});
      continue;
    }
    auto ts = text::parse_timestamp(where);
    if (!ts) throw line_error(lineno, "unknown vcs_id '" + where + "'");
    if (history.empty() || *ts < history.commits().front().timestamp)
      throw line_error(lineno, "release '" + label + "' precedes the first commit");
    auto it = std::upper_bound(history.begin(), history.end(), *ts,
                               [](Timestamp t, const CommitRecord& c) { return t < c.timestamp; });
    out.push_back({label, std::prev(it)->rev});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const ReleaseMarker& a, const ReleaseMarker& b) { return a.rev < b.rev; });
  return out;
}

inline std::vector<ReleaseMarker> load_releases(std::string_view text, const History& history) {
  std::istringstream in{std::string(text)};
  return load_releases(in, history);
}

// Supplies file text at a given revision. Implementations must be
// deterministic and safe to call from several threads.
class ContentProvider {
 public:
  virtual ~ContentProvider() = default;
  virtual std::optional<std::string> fetch(std::string_view path, Rev rev) const = 0;
};

class MemoryContentProvider final : public ContentProvider {
 public:
  void put(std::string path, Rev rev, std::string content) {
    files_[{std::move(path), rev}] = std::move(content);
  }

  std::optional<std::string> fetch(std::string_view path, Rev rev) const override {
    auto it = files_.find({std::string(path), rev});
    if (it == files_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::map<std::pair<std::string, Rev>, std::string> files_;
};

// Reads <root>/<vcs_id>/<path>, the layout written by the repository adapters.
class DirectoryContentProvider final : public ContentProvider {
 public:
  DirectoryContentProvider(std::filesystem::path root, const History& history) : root_(std::move(root)) {
    vcs_ids_.reserve(history.size());
    for (const auto& c : history) vcs_ids_.push_back(c.vcs_id);
  }

  std::optional<std::string> fetch(std::string_view path, Rev rev) const override {
    if (rev < 1 || static_cast<std::size_t>(rev) > vcs_ids_.size()) return std::nullopt;
    std::filesystem::path rel{std::string(path)};
    for (const auto& part : rel)
      if (part == "..") return std::nullopt;
    if (rel.is_absolute()) return std::nullopt;
    std::ifstream in(root_ / vcs_ids_[static_cast<std::size_t>(rev - 1)] / rel, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
  }

 private:
  std::filesystem::path root_;
  std::vector<std::string> vcs_ids_;
};

}  // namespace coevo
