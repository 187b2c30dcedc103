#pragma once

// Per-release coverage measurements at class, method, block and statement
// level, read from a whitespace-separated report.

#include <array>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "coevo/error.hpp"
#include "coevo/text.hpp"

namespace coevo {

// File column order.
enum class CoverageLevel { Class = 0, Method = 1, Block = 2, Statement = 3 };

inline constexpr CoverageLevel kCoverageLevels[] = {CoverageLevel::Class, CoverageLevel::Method, CoverageLevel::Block,
                                                    CoverageLevel::Statement};

inline const char* level_name(CoverageLevel level) {
  switch (level) {
    case CoverageLevel::Class: return "class";
    case CoverageLevel::Method: return "method";
    case CoverageLevel::Block: return "block";
    case CoverageLevel::Statement: return "statement";
  }
  return "?";
}

struct CoverageRecord {
  std::string release_label;
  std::array<std::optional<double>, 4> levels;  // nullopt = not measured

  const std::optional<double>& at(CoverageLevel l) const { return levels[static_cast<std::size_t>(l)]; }
  std::optional<double>& at(CoverageLevel l) { return levels[static_cast<std::size_t>(l)]; }

  friend bool operator==(const CoverageRecord&, const CoverageRecord&) = default;
};

// Lines: `release class method block statement`, each a percentage or `-`.
// Text after `#` is ignored.
inline std::vector<CoverageRecord> parse_coverage_report(std::istream& in) {
  std::vector<CoverageRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = line;
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    auto tokens = text::split_ws(body);
    if (tokens.empty()) continue;
    if (tokens.size() != 5) throw line_error(lineno, "expected release label and four coverage values");
    CoverageRecord rec;
    rec.release_label = std::string(tokens[0]);
    for (const auto& prev : out)
      if (prev.release_label == rec.release_label)
        throw line_error(lineno, "duplicate release '" + rec.release_label + "'");
    for (std::size_t i = 0; i < 4; ++i) {
      auto tok = tokens[i + 1];
      if (tok == "-") continue;
      auto v = text::parse_double(tok);
      if (!v) throw line_error(lineno, "'" + std::string(tok) + "' is not a number");
      if (!(*v >= 0.0 && *v <= 100.0)) throw line_error(lineno, "percentage " + std::string(tok) + " outside [0,100]");
      rec.levels[i] = *v;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

inline std::vector<CoverageRecord> parse_coverage_report(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_coverage_report(in);
}

inline void serialize_coverage_report(const std::vector<CoverageRecord>& records, std::ostream& out) {
  for (const auto& r : records) {
    out << r.release_label;
    for (const auto& v : r.levels) out << ' ' << (v ? text::shortest(*v) : std::string("-"));
    out << '\n';
  }
}

}  // namespace coevo
