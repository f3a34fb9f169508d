#include "homrand/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace homrand {

void Report::add(const std::string& key, double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  add(key, std::string(buf));
}

std::string Report::serialize() const {
  std::ostringstream out;
  for (const auto& [k, v] : lines_) out << k << ": " << v << "\n";
  return out.str();
}

Report Report::parse(const std::string& text) {
  Report r;
  r.lines_.clear();
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto pos = line.find(": ");
    if (pos == std::string::npos) throw std::runtime_error("Report::parse: malformed line: " + line);
    r.lines_.emplace_back(line.substr(0, pos), line.substr(pos + 2));
  }
  return r;
}

}  // namespace homrand
