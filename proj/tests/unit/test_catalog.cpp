#include <doctest.h>

#include "phmon/catalog.hpp"

using namespace phmon;

TEST_CASE("catalog covers the seventeen types plus the alternative presentation") {
  CHECK(catalog_types().size() == 18);
  for (const auto& t : catalog_types()) CHECK(catalog_has(t));
  CHECK_THROWS_AS(catalog_lookup("Z_ix"), std::invalid_argument);
}

TEST_CASE("every catalog relation is homogeneous") {
  for (const auto& t : catalog_types()) {
    const auto p = catalog_lookup(t);
    for (const auto& r : p.relations()) {
      CHECK(r.lhs.length() == r.rhs.length());
      CHECK(r.lhs.length() >= 1);
      CHECK(r.lhs != r.rhs);
    }
  }
}

TEST_CASE("relation counts match the defining lists") {
  CHECK(catalog_lookup("B_ii").relations().size() == 3);
  CHECK(catalog_lookup("A_ii").relations().size() == 2);
  CHECK(catalog_lookup("B_vi").relations().size() == 19);   // chains split into pairs
  CHECK(catalog_lookup("H_iii").relations().size() == 19);
  CHECK(catalog_lookup("H_ii").relations().size() == 79);
  CHECK(catalog_lookup("B_ii_alt").relations().size() == 3);
}

TEST_CASE("the fifth-power chains are present") {
  for (const char* type : {"B_vi", "H_iii"}) {
    const auto p = catalog_lookup(type);
    int fifth = 0;
    for (const auto& r : p.relations())
      if (r.lhs.length() == 5 && p.word_to_string(r.lhs).find_first_not_of(
                                     p.word_to_string(r.lhs).substr(0, 1)) == std::string::npos)
        ++fifth;
    CHECK(fifth == 2);  // a^5 = b^5 and b^5 = c^5
  }
}

TEST_CASE("H_ii relation lengths stay within the packed window") {
  const auto p = catalog_lookup("H_ii");
  for (const auto& r : p.relations()) {
    CHECK(r.lhs.length() >= 3);
    CHECK(r.lhs.length() <= 9);
  }
}

TEST_CASE("the free-abelian types normalize to at most two classes") {
  for (const char* type : {"B_iii", "B_v", "B_vii", "H_iv", "H_v", "H_vi", "H_vii", "H_viii"}) {
    const auto p = normalize(catalog_lookup(type));
    CHECK(p.class_count() <= 2);
    for (const auto& r : p.relations()) {
      // only commutation relations xy = yx may remain
      REQUIRE(r.lhs.length() == 2);
      CHECK(r.lhs[0] == r.rhs[1]);
      CHECK(r.lhs[1] == r.rhs[0]);
    }
  }
}

TEST_CASE("the alternative three-generator presentation merges b and c") {
  const auto p = normalize(catalog_lookup("B_ii_alt"));
  CHECK(p.class_count() == 2);
  CHECK(p.relations().size() == 2);
}
