#include "hopfpi/report.hpp"

#include <sstream>

namespace hopfpi {

void Report::add(const std::string& name, bool pass, const std::string& detail) {
  checks_.push_back({name, pass, pass ? "" : detail});
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks_) checks_.push_back(c);
}

bool Report::ok() const {
  for (const auto& c : checks_) {
    if (!c.pass) return false;
  }
  return true;
}

std::vector<Check> Report::failures() const {
  std::vector<Check> out;
  for (const auto& c : checks_) {
    if (!c.pass) out.push_back(c);
  }
  return out;
}

bool Report::fails_at(const std::string& fragment) const {
  for (const auto& c : checks_) {
    if (!c.pass && c.name.find(fragment) != std::string::npos) return true;
  }
  return false;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << (title_.empty() ? "report" : title_) << ": " << (ok() ? "pass" : "FAIL") << " ("
      << checks_.size() << " checks)\n";
  for (const auto& c : checks_) {
    out << "  " << (c.pass ? "ok   " : "FAIL ") << c.name;
    if (!c.pass && !c.detail.empty()) out << "  [" << c.detail << "]";
    out << "\n";
  }
  return out.str();
}

std::string check_label(const std::string& base, const std::vector<std::string>& args) {
  std::string s = base + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ",";
    s += args[i];
  }
  return s + ")";
}

}  // namespace hopfpi
