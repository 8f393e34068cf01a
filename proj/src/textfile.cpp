#include "examchain/textfile.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace examchain {

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

SectionedFile SectionedFile::parse(std::string_view text) {
  SectionedFile file;
  Section* current = nullptr;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view raw =
        eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    std::string line = trim(raw);
    if (size_t hash = line.find('#'); hash != std::string::npos) line = trim(line.substr(0, hash));
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw std::runtime_error("line " + std::to_string(line_no) +
                                                       ": unterminated section header");
      file.sections.push_back({trim(line.substr(1, line.size() - 2)), {}});
      current = &file.sections.back();
      continue;
    }
    if (current == nullptr)
      throw std::runtime_error("line " + std::to_string(line_no) + ": content before any section");

    Line entry;
    entry.line_no = line_no;
    if (size_t eq = line.find('='); eq != std::string::npos) {
      entry.key = trim(line.substr(0, eq));
      entry.value = trim(line.substr(eq + 1));
    } else {
      entry.value = line;
    }
    current->lines.push_back(std::move(entry));
  }
  return file;
}

SectionedFile SectionedFile::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const SectionedFile::Section* SectionedFile::find(std::string_view name) const {
  for (const Section& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

std::optional<std::string> SectionedFile::value(std::string_view section,
                                                std::string_view key) const {
  const Section* s = find(section);
  if (s == nullptr) return std::nullopt;
  for (const Line& l : s->lines)
    if (l.key == key) return l.value;
  return std::nullopt;
}

std::string SectionedFile::value_or(std::string_view section, std::string_view key,
                                    std::string_view fallback) const {
  auto v = value(section, key);
  return v ? *v : std::string(fallback);
}

}  // namespace examchain
