#include "edalab/ini.hpp"

#include <fstream>
#include <stdexcept>

namespace edalab {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

IniFile IniFile::parse(std::istream& in) {
  IniFile f;
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw std::runtime_error("config: bad section header at line " +
                                 std::to_string(lineno));
      section = trim(t.substr(1, t.size() - 2));
      if (section.empty())
        throw std::runtime_error("config: empty section name at line " +
                                 std::to_string(lineno));
      f.section_names_.insert(section);
      f.data_[section];
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config: expected key = value at line " +
                               std::to_string(lineno));
    if (section.empty())
      throw std::runtime_error("config: key outside any section at line " +
                               std::to_string(lineno));
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty())
      throw std::runtime_error("config: empty key at line " +
                               std::to_string(lineno));
    if (!f.data_[section].emplace(key, value).second)
      throw std::runtime_error("config: duplicate key '" + key + "' at line " +
                               std::to_string(lineno));
  }
  return f;
}

IniFile IniFile::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot read '" + path + "'");
  return parse(in);
}

bool IniFile::has(const std::string& section, const std::string& key) const {
  const auto s = data_.find(section);
  return s != data_.end() && s->second.count(key) > 0;
}

std::string IniFile::take(const std::string& section, const std::string& key) {
  const auto s = data_.find(section);
  if (s == data_.end() || !s->second.count(key))
    throw std::runtime_error("config: missing key '" + section + "." + key +
                             "'");
  const std::string v = s->second.at(key);
  s->second.erase(key);
  return v;
}

std::string IniFile::take_or(const std::string& section, const std::string& key,
                             const std::string& fallback) {
  if (!has(section, key)) return fallback;
  return take(section, key);
}

void IniFile::finish() const {
  std::string extra;
  for (const auto& [section, kv] : data_) {
    for (const auto& [key, value] : kv) {
      if (!extra.empty()) extra += ", ";
      extra += section + "." + key;
    }
  }
  if (!extra.empty())
    throw std::runtime_error("config: unknown keys: " + extra);
}

}  // namespace edalab
