#include "hopfpi/group.hpp"

#include <set>
#include <stdexcept>

namespace hopfpi {

std::string validate_group(const std::vector<std::string>& elements,
                           const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(elements.size());
  if (n == 0) return "group must be nonempty";
  {
    std::set<std::string> seen(elements.begin(), elements.end());
    if (static_cast<int>(seen.size()) != n) return "duplicate element names";
  }
  if (static_cast<int>(table.size()) != n) return "table must have one row per element";
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) {
      return "table row for '" + elements[a] + "' has wrong length";
    }
    for (int b = 0; b < n; ++b) {
      if (table[a][b] < 0 || table[a][b] >= n) {
        return "table entry (" + elements[a] + "," + elements[b] + ") out of range";
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    if (table[0][a] != a) return "element 0 ('" + elements[0] + "') is not a left identity";
    if (table[a][0] != a) return "element 0 ('" + elements[0] + "') is not a right identity";
  }
  for (int a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n; ++b) {
      if (table[a][b] == 0 && table[b][a] == 0) {
        has_inverse = true;
        break;
      }
    }
    if (!has_inverse) return "element '" + elements[a] + "' has no two-sided inverse";
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          return "associativity fails at (" + elements[a] + "," + elements[b] + "," + elements[c] +
                 ")";
        }
      }
    }
  }
  return "";
}

GroupTable::GroupTable(std::vector<std::string> elements, std::vector<std::vector<int>> table)
    : elements_(std::move(elements)), table_(std::move(table)) {
  std::string err = validate_group(elements_, table_);
  if (!err.empty()) throw std::invalid_argument("not a group: " + err);
  const int n = order();
  inverse_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table_[a][b] == 0) {
        inverse_[a] = b;
        break;
      }
    }
    index_[elements_[a]] = a;
  }
}

GroupTable GroupTable::trivial() { return cyclic(1); }

GroupTable GroupTable::cyclic(int n, const std::string& stem) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      names.push_back("1");
    } else if (i == 1) {
      names.push_back(stem);
    } else {
      names.push_back(stem + "^" + std::to_string(i));
    }
  }
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return GroupTable(std::move(names), std::move(table));
}

int GroupTable::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

}  // namespace hopfpi
