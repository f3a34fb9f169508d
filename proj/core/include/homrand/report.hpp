#pragma once

#include <string>
#include <utility>
#include <vector>

namespace homrand {

/// Ordered key/value document: human-readable, machine-parseable, diffs
/// cleanly. Serialization round-trips losslessly.
class Report {
 public:
  static constexpr int kSchemaVersion = 1;

  Report() { add("schema_version", std::to_string(kSchemaVersion)); }

  void add(const std::string& key, const std::string& value) { lines_.emplace_back(key, value); }
  void add(const std::string& key, const char* value) { add(key, std::string(value)); }
  void add(const std::string& key, double value);
  void add(const std::string& key, bool value) { add(key, std::string(value ? "true" : "false")); }
  void add(const std::string& key, int value) { add(key, std::to_string(value)); }

  const std::vector<std::pair<std::string, std::string>>& lines() const { return lines_; }
  std::string serialize() const;
  static Report parse(const std::string& text);

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

}  // namespace homrand
