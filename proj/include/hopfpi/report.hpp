#pragma once

#include <string>
#include <vector>

namespace hopfpi {

/// One named diagram or condition check. `name` identifies the diagram and
/// the component indices it was instantiated at, e.g. "coassoc(t,t^2,1)".
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on pass; first mismatch location otherwise
};

/// Outcome of a verification run. Total: every check is recorded, passing
/// or not; callers never see a short-circuited prefix.
class Report {
 public:
  explicit Report(std::string title = "") : title_(std::move(title)) {}

  void add(const std::string& name, bool pass, const std::string& detail = "");
  void merge(const Report& other);

  bool ok() const;
  const std::string& title() const { return title_; }
  const std::vector<Check>& checks() const { return checks_; }
  std::vector<Check> failures() const;

  /// True when some failing check's name contains `fragment`.
  bool fails_at(const std::string& fragment) const;

  std::string to_text() const;

 private:
  std::string title_;
  std::vector<Check> checks_;
};

/// Convenience for building "name(a,b,...)" check labels from element names.
std::string check_label(const std::string& base, const std::vector<std::string>& args);

}  // namespace hopfpi
