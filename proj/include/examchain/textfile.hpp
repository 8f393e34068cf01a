#pragma once

#include <optional>
#include <string>
#include <vector>

namespace examchain {

// Minimal sectioned text format shared by genesis configs, scenario files
// and device schedules:
//
//   # comment
//   [section]
//   key = value
//   bare directive line
//
// Sections keep their lines in file order; repeated keys are allowed.
struct SectionedFile {
  struct Line {
    std::string key;    // empty for bare directive lines
    std::string value;  // full line text for bare directive lines
    int line_no = 0;
  };
  struct Section {
    std::string name;
    std::vector<Line> lines;
  };

  std::vector<Section> sections;

  static SectionedFile parse(std::string_view text);      // throws std::runtime_error
  static SectionedFile load(const std::string& path);     // throws std::runtime_error

  const Section* find(std::string_view name) const;
  std::optional<std::string> value(std::string_view section, std::string_view key) const;
  std::string value_or(std::string_view section, std::string_view key,
                       std::string_view fallback) const;
};

std::vector<std::string> split_tokens(std::string_view line);
std::string trim(std::string_view s);

}  // namespace examchain
