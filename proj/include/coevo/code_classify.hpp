#pragma once

// Lexical classification of source files into production code, test code
// and everything else, plus the per-file size counts.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/regex.hpp>

#include "coevo/error.hpp"
#include "coevo/text.hpp"

namespace coevo {

enum class FileKind { ProductionCode, TestCode, Other };

enum class LocPolicy { Raw, NonBlank, NonBlankNonComment };

// A compiled Perl-syntax regular expression that remembers its source.
class Pattern {
 public:
  Pattern() = default;

  explicit Pattern(std::string source) : source_(std::move(source)) {
    try {
      regex_.assign(source_, boost::regex::perl);
    } catch (const boost::regex_error& e) {
      throw validation_error("pattern '" + source_ + "' does not compile: " + e.what());
    }
  }

  const std::string& source() const noexcept { return source_; }
  const boost::regex& regex() const noexcept { return regex_; }

  bool search(std::string_view text) const {
    return !source_.empty() && boost::regex_search(text.begin(), text.end(), regex_);
  }

 private:
  std::string source_;
  boost::regex regex_;
};

struct LanguageProfile {
  std::vector<std::string> source_extensions{".java"};
  std::vector<std::string> test_suffixes{"Test"};
  Pattern test_base_class_pattern{R"(\bextends\s+(?:junit\.framework\.)?TestCase\b)"};
  Pattern test_import_pattern{R"(\bimport\s+(?:static\s+)?org\.junit\.)"};
  Pattern setup_pattern{R"(\bvoid\s+setUp\s*\()"};
  // Group 1 is the method name; the trailing `{` anchors on declaration sites.
  Pattern test_command_pattern{
      R"([A-Za-z_$][\w$.]*(?:<[^;{}()]*>)?(?:\[\])*\s+(test[\w$]*)\s*\([^;{}()]*\)\s*(?:throws\s+[\w$.,\s]+)?\{)"};
  Pattern annotation_pattern{
      R"(@Test\b(?:\s*\([^)]*\))?\s+(?:(?:public|protected|private|static|final|synchronized)\s+)*[A-Za-z_$][\w$.<>\[\]]*\s+([A-Za-z_$][\w$]*)\s*\()"};
  Pattern class_decl_pattern{R"((?<![\w$.@])(?:class|interface|enum)\s+[A-Za-z_$][\w$]*)"};
  // Count annotation-marked methods in addition to the naming convention.
  bool annotation_mode = false;
  LocPolicy loc_policy = LocPolicy::NonBlankNonComment;
};

struct FileFacts {
  FileKind kind = FileKind::Other;
  std::int64_t loc = 0;
  std::int64_t classes = 0;
  std::int64_t test_commands = 0;

  friend bool operator==(const FileFacts&, const FileFacts&) = default;
};

// Replaces comments with spaces and string/char literal bodies with '_',
// keeping every newline so line structure survives.
inline std::string strip_comments(std::string_view src) {
  std::string out(src);
  std::size_t i = 0;
  const std::size_t n = src.size();
  auto blank = [&](std::size_t pos, char fill) {
    if (out[pos] != '\n' && out[pos] != '\r') out[pos] = fill;
  };
  while (i < n) {
    char c = src[i];
    if (c == '/' && i + 1 < n && src[i + 1] == '/') {
      while (i < n && src[i] != '\n') blank(i++, ' ');
    } else if (c == '/' && i + 1 < n && src[i + 1] == '*') {
      blank(i++, ' ');
      blank(i++, ' ');
      while (i < n && !(src[i] == '*' && i + 1 < n && src[i + 1] == '/')) blank(i++, ' ');
      if (i < n) {
        blank(i++, ' ');
        blank(i++, ' ');
      }
    } else if (c == '"' && src.substr(i, 3) == "\"\"\"") {
      i += 3;
      while (i < n && src.substr(i, 3) != "\"\"\"") {
        if (src[i] == '\\' && i + 1 < n) blank(i++, '_');
        blank(i++, '_');
      }
      i = std::min(n, i + 3);
    } else if (c == '"' || c == '\'') {
      ++i;
      while (i < n && src[i] != c && src[i] != '\n') {
        if (src[i] == '\\' && i + 1 < n && src[i + 1] != '\n') blank(i++, '_');
        blank(i++, '_');
      }
      if (i < n && src[i] == c) ++i;
    } else {
      ++i;
    }
  }
  return out;
}

namespace detail {

inline std::string_view basename(std::string_view path) {
  auto slash = path.find_last_of('/');
  return slash == std::string_view::npos ? path : path.substr(slash + 1);
}

inline std::string_view stem(std::string_view path) {
  auto base = basename(path);
  auto dot = base.find_last_of('.');
  return dot == std::string_view::npos || dot == 0 ? base : base.substr(0, dot);
}

inline std::size_t count_lines_if(std::string_view text, auto&& keep) {
  std::size_t count = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    auto end = nl == std::string_view::npos ? text.size() : nl;
    if (keep(text.substr(start, end - start))) ++count;
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return count;
}

inline std::int64_t count_matches(const Pattern& p, std::string_view text) {
  if (p.source().empty()) return 0;
  boost::cregex_iterator it(text.data(), text.data() + text.size(), p.regex()), end;
  return std::distance(it, end);
}

// Positions of the first capture group (or whole match) for every match.
inline void collect_sites(const Pattern& p, std::string_view text, std::set<std::ptrdiff_t>& sites) {
  if (p.source().empty()) return;
  boost::cregex_iterator it(text.data(), text.data() + text.size(), p.regex()), end;
  for (; it != end; ++it) {
    const auto& m = *it;
    sites.insert(m.size() > 1 && m[1].matched ? m[1].first - text.data() : m[0].first - text.data());
  }
}

inline bool is_test_code(std::string_view code, const LanguageProfile& profile) {
  if (profile.test_base_class_pattern.search(code)) return true;
  return profile.test_import_pattern.search(code) && profile.setup_pattern.search(code);
}

inline std::int64_t test_commands_in(std::string_view code, const LanguageProfile& profile) {
  std::set<std::ptrdiff_t> sites;
  collect_sites(profile.test_command_pattern, code, sites);
  if (profile.annotation_mode) collect_sites(profile.annotation_pattern, code, sites);
  return static_cast<std::int64_t>(sites.size());
}

inline std::int64_t loc_in(std::string_view raw, std::string_view code, LocPolicy policy) {
  auto non_blank = [](std::string_view line) { return !text::trim(line).empty(); };
  switch (policy) {
    case LocPolicy::Raw:
      return static_cast<std::int64_t>(count_lines_if(raw, [](std::string_view) { return true; }));
    case LocPolicy::NonBlank:
      return static_cast<std::int64_t>(count_lines_if(raw, non_blank));
    case LocPolicy::NonBlankNonComment:
      return static_cast<std::int64_t>(count_lines_if(code, non_blank));
  }
  return 0;
}

}  // namespace detail

inline bool is_source_path(std::string_view path, const LanguageProfile& profile) {
  auto base = detail::basename(path);
  return std::any_of(profile.source_extensions.begin(), profile.source_extensions.end(),
                     [&](const std::string& ext) { return base.size() > ext.size() && base.ends_with(ext); });
}

inline FileKind classify_file(std::string_view path, std::string_view content, const LanguageProfile& profile) {
  if (!is_source_path(path, profile)) return FileKind::Other;
  return detail::is_test_code(strip_comments(content), profile) ? FileKind::TestCode : FileKind::ProductionCode;
}

inline std::int64_t count_test_commands(std::string_view content, const LanguageProfile& profile) {
  return detail::test_commands_in(strip_comments(content), profile);
}

inline std::int64_t count_classes(std::string_view content, const LanguageProfile& profile) {
  return detail::count_matches(profile.class_decl_pattern, strip_comments(content));
}

inline std::int64_t count_loc(std::string_view content, const LanguageProfile& profile) {
  if (profile.loc_policy != LocPolicy::NonBlankNonComment) return detail::loc_in(content, content, profile.loc_policy);
  return detail::loc_in(content, strip_comments(content), profile.loc_policy);
}

// All counts for one file revision, stripping comments once.
inline FileFacts analyze_file(std::string_view path, std::string_view content, const LanguageProfile& profile) {
  FileFacts facts;
  if (!is_source_path(path, profile)) return facts;
  std::string code = strip_comments(content);
  facts.kind = detail::is_test_code(code, profile) ? FileKind::TestCode : FileKind::ProductionCode;
  facts.loc = detail::loc_in(content, code, profile.loc_policy);
  facts.classes = detail::count_matches(profile.class_decl_pattern, code);
  if (facts.kind == FileKind::TestCode) facts.test_commands = detail::test_commands_in(code, profile);
  return facts;
}

// Basename stem of a test file with its first matching test suffix removed,
// or nothing when no suffix applies.
inline std::optional<std::string> unit_stem_for_test(std::string_view test_path, const LanguageProfile& profile) {
  auto s = detail::stem(test_path);
  for (const auto& suffix : profile.test_suffixes) {
    if (!suffix.empty() && s.size() > suffix.size() && s.ends_with(suffix))
      return std::string(s.substr(0, s.size() - suffix.size()));
  }
  return std::nullopt;
}

inline std::string unit_stem(std::string_view production_path) { return std::string(detail::stem(production_path)); }

struct MatchResult {
  std::optional<std::string> unit;  // empty means integration test
  std::optional<std::string> warning;

  bool integration() const noexcept { return !unit.has_value(); }
};

// Number of leading directory components two paths share.
inline std::size_t common_directory_depth(std::string_view a, std::string_view b) {
  auto da = text::split(a, '/'), db = text::split(b, '/');
  da.pop_back();
  db.pop_back();
  std::size_t k = 0;
  while (k < da.size() && k < db.size() && da[k] == db[k]) ++k;
  return k;
}

// Chooses among production paths whose stem already equals the test's unit
// stem: the deepest shared directory wins, a tie is ambiguous.
inline MatchResult pick_unit(std::string_view test_path, std::span<const std::string> candidates) {
  if (candidates.empty()) return {};
  if (candidates.size() == 1) return {candidates.front(), std::nullopt};
  std::size_t best_depth = 0, winners = 0;
  const std::string* best = nullptr;
  for (const auto& c : candidates) {
    auto depth = common_directory_depth(test_path, c);
    if (!best || depth > best_depth) {
      best = &c;
      best_depth = depth;
      winners = 1;
    } else if (depth == best_depth) {
      ++winners;
    }
  }
  if (winners == 1) return {*best, std::nullopt};
  return {std::nullopt, "ambiguous unit for '" + std::string(test_path) + "': " +
                            std::to_string(winners) + " candidates at equal directory depth"};
}

inline MatchResult match_test_to_unit(std::string_view test_path, std::span<const std::string> live_production_paths,
                                      const LanguageProfile& profile) {
  auto wanted = unit_stem_for_test(test_path, profile);
  if (!wanted) return {};
  std::vector<std::string> candidates;
  for (const auto& p : live_production_paths)
    if (detail::stem(p) == *wanted) candidates.push_back(p);
  return pick_unit(test_path, candidates);
}

// Profile configuration: `key = value` lines, `#` comments. List values are
// comma separated. Unset keys keep their defaults.
inline LanguageProfile load_profile(std::istream& in) {
  LanguageProfile profile;
  std::string line;
  std::size_t lineno = 0;
  auto list = [](std::string_view v) {
    std::vector<std::string> out;
    for (auto item : text::split(v, ','))
      if (auto t = text::trim(item); !t.empty()) out.emplace_back(t);
    return out;
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto body = text::trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto eq = body.find('=');
    if (eq == std::string_view::npos) throw line_error(lineno, "expected key = value");
    std::string key(text::trim(body.substr(0, eq)));
    std::string value(text::trim(body.substr(eq + 1)));
    try {
      if (key == "source_extensions") {
        profile.source_extensions = list(value);
      } else if (key == "test_suffixes") {
        profile.test_suffixes = list(value);
        if (profile.test_suffixes.empty()) throw line_error(lineno, "test_suffixes must not be empty");
      } else if (key == "test_base_class_pattern") {
        profile.test_base_class_pattern = Pattern(value);
      } else if (key == "test_import_pattern") {
        profile.test_import_pattern = Pattern(value);
      } else if (key == "setup_pattern") {
        profile.setup_pattern = Pattern(value);
      } else if (key == "test_command_pattern") {
        profile.test_command_pattern = Pattern(value);
      } else if (key == "annotation_pattern") {
        profile.annotation_pattern = Pattern(value);
      } else if (key == "class_decl_pattern") {
        profile.class_decl_pattern = Pattern(value);
      } else if (key == "annotation_mode") {
        if (value != "true" && value != "false") throw line_error(lineno, "annotation_mode must be true or false");
        profile.annotation_mode = value == "true";
      } else if (key == "loc_policy") {
        if (value == "raw") profile.loc_policy = LocPolicy::Raw;
        else if (value == "non_blank") profile.loc_policy = LocPolicy::NonBlank;
        else if (value == "non_blank_non_comment") profile.loc_policy = LocPolicy::NonBlankNonComment;
        else throw line_error(lineno, "unknown loc_policy '" + value + "'");
      } else {
        throw line_error(lineno, "unknown profile key '" + key + "'");
      }
    } catch (const Error& e) {
      if (std::string_view(e.what()).starts_with("line ")) throw;
      throw line_error(lineno, e.what());
    }
  }
  return profile;
}

}  // namespace coevo
