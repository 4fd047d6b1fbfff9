#pragma once

#include <istream>
#include <map>
#include <set>
#include <string>

namespace edalab {

/// Minimal INI reader: [section] headers, key = value lines, # or ;
/// comments, no nesting. Consumers take() the keys they understand and then
/// call finish(); anything left over is an error (fail-closed).
class IniFile {
 public:
  static IniFile parse(std::istream& in);
  static IniFile parse_file(const std::string& path);

  bool has(const std::string& section, const std::string& key) const;

  /// Removes and returns a key; throws if absent.
  std::string take(const std::string& section, const std::string& key);

  /// Removes and returns a key, or fallback if absent.
  std::string take_or(const std::string& section, const std::string& key,
                      const std::string& fallback);

  const std::set<std::string>& sections() const { return section_names_; }

  /// Throws listing every unconsumed section.key.
  void finish() const;

 private:
  std::map<std::string, std::map<std::string, std::string>> data_;
  std::set<std::string> section_names_;
};

}  // namespace edalab
