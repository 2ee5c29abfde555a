#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace npeskin::cli {

/// Writes content to path atomically (temp file in the same directory, then
/// rename).
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// RFC-4180 field quoting: quotes only when the field needs it.
std::string csv_field(const std::string& raw);

/// Shortest round-trippable decimal form of a double, stable across runs.
std::string format_double(double v);

/// Accumulates "key = value" lines plus file and check lists, then writes the
/// run manifest.
class Manifest {
 public:
  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, double value);
  void set(const std::string& key, long long value);
  void add_output(const std::filesystem::path& path);
  void add_check(const std::string& name, bool pass, const std::string& detail = "");
  void add_skipped_check(const std::string& name, const std::string& why);
  bool all_checks_pass() const;
  void write(const std::filesystem::path& path) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
  std::vector<std::string> outputs_;
  struct Check {
    std::string name, detail;
    int state;  // 1 pass, 0 fail, -1 skipped
  };
  std::vector<Check> checks_;
};

}  // namespace npeskin::cli
