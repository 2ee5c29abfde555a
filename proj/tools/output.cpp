#include "output.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace npeskin::cli {

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
    out << content;
    if (!out.good()) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void Manifest::set(const std::string& key, const std::string& value) { entries_.emplace_back(key, value); }
void Manifest::set(const std::string& key, double value) { entries_.emplace_back(key, format_double(value)); }
void Manifest::set(const std::string& key, long long value) { entries_.emplace_back(key, std::to_string(value)); }
void Manifest::add_output(const std::filesystem::path& path) { outputs_.push_back(path.string()); }

void Manifest::add_check(const std::string& name, bool pass, const std::string& detail) {
  checks_.push_back({name, detail, pass ? 1 : 0});
}

void Manifest::add_skipped_check(const std::string& name, const std::string& why) {
  checks_.push_back({name, why, -1});
}

bool Manifest::all_checks_pass() const {
  for (const auto& c : checks_)
    if (c.state == 0) return false;
  return true;
}

void Manifest::write(const std::filesystem::path& path) const {
  std::string body = "npeskin-manifest v1\n";
  for (const auto& [k, v] : entries_) body += k + " = " + v + "\n";
  for (std::size_t i = 0; i < outputs_.size(); ++i)
    body += "output." + std::to_string(i) + " = " + outputs_[i] + "\n";
  for (const auto& c : checks_) {
    body += "check." + c.name + " = " + (c.state == 1 ? "pass" : c.state == 0 ? "fail" : "skipped");
    if (!c.detail.empty()) body += " (" + c.detail + ")";
    body += "\n";
  }
  write_file_atomic(path, body);
}

}  // namespace npeskin::cli
