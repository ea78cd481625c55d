#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "hopfpi/group.hpp"

using namespace hopfpi;

TEST_CASE("cyclic group tables") {
  GroupTable z4 = GroupTable::cyclic(4, "t");
  CHECK(z4.order() == 4);
  CHECK(z4.name(0) == "1");
  CHECK(z4.name(1) == "t");
  CHECK(z4.name(3) == "t^3");
  CHECK(z4.mul(2, 3) == 1);
  CHECK(z4.inv(1) == 3);
  CHECK(z4.inv(0) == 0);
  CHECK(z4.index_of("t^2") == 2);
  CHECK(z4.index_of("u") == -1);

  GroupTable e = GroupTable::trivial();
  CHECK(e.order() == 1);
  CHECK(e.mul(0, 0) == 0);
}

TEST_CASE("klein four group from an explicit table") {
  GroupTable v({"1", "a", "b", "ab"},
               {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  for (int g = 0; g < 4; ++g) CHECK(v.inv(g) == g);
  CHECK(v.mul(1, 2) == 3);
}

TEST_CASE("group validation pinpoints the first defect") {
  // Identity not at index 0.
  CHECK(validate_group({"a", "1"}, {{1, 0}, {0, 1}}) != "");
  // Row not a bijection.
  CHECK(validate_group({"1", "a"}, {{0, 1}, {1, 1}}) != "");
  // Non-associative magma (a*a = 1, rest like Z_3 scrambled).
  std::string msg = validate_group({"1", "a", "b"}, {{0, 1, 2}, {1, 0, 0}, {2, 0, 1}});
  CHECK(msg != "");
  // Duplicate names rejected.
  CHECK(validate_group({"1", "1"}, {{0, 1}, {1, 0}}) != "");
  // A correct table passes.
  CHECK(validate_group({"1", "a"}, {{0, 1}, {1, 0}}) == "");
  CHECK_THROWS_AS(GroupTable({"a", "1"}, {{1, 0}, {0, 1}}), std::invalid_argument);
}
