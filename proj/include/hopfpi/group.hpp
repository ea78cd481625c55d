#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace hopfpi {

/// A finite group given by its Cayley table. Element 0 is always the
/// identity; constructors enforce this. Most code works with indices and
/// only touches names at the serialization boundary.
class GroupTable {
 public:
  /// Throws std::invalid_argument unless the table is a group with
  /// elements[0] as identity.
  GroupTable(std::vector<std::string> elements, std::vector<std::vector<int>> table);

  static GroupTable trivial();
  static GroupTable cyclic(int n, const std::string& stem = "t");

  int order() const { return static_cast<int>(elements_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int identity() const { return 0; }

  const std::string& name(int a) const { return elements_[a]; }
  /// Index of a named element; -1 when absent.
  int index_of(const std::string& name) const;

  const std::vector<std::string>& elements() const { return elements_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  bool operator==(const GroupTable& other) const {
    return elements_ == other.elements_ && table_ == other.table_;
  }

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::unordered_map<std::string, int> index_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// Full check of the group axioms on a candidate table; returns a
/// human-readable description of the first violation, or empty on success.
std::string validate_group(const std::vector<std::string>& elements,
                           const std::vector<std::vector<int>>& table);

}  // namespace hopfpi
