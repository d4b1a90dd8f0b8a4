#include "knotforge/census.hpp"
#include "knotforge/invariants.hpp"
#include "knotforge/moves.hpp"
#include "knotforge/notation.hpp"

#include <doctest.h>

#include <set>

using namespace knotforge;

namespace {

LaurentPoly zp(std::initializer_list<std::pair<long, long>> terms) {
  LaurentPoly p("z");
  for (auto [e, c] : terms) p.set_coeff(e, Int(c));
  return p;
}

}  // namespace

TEST_CASE("census is well formed") {
  const auto& all = census();
  CHECK(all.size() == 10);
  std::set<std::string> names;
  for (const auto& e : all) {
    CAPTURE(e.name);
    CHECK(names.insert(e.name).second);
    CHECK(validate(e.diagram, true).empty());
    CHECK(component_count(e.diagram) == 1);
    CHECK(crossing_count(e.diagram) >= 3);
  }
  CHECK(census_entry("3_1").word == std::vector<int>{1, 1, 1});
  CHECK(census_entry("granny").summand_a == "3_1");
  CHECK(census_entry("square").summand_b == "3_1m");
  CHECK_THROWS_AS(census_entry("8_19"), std::out_of_range);
  CHECK(census_diagrams().size() == all.size());
}

TEST_CASE("census determinants match the classical table") {
  auto det = [](const char* n) { return determinant(census_entry(n).diagram); };
  CHECK(det("3_1") == 3);
  CHECK(det("4_1") == 5);
  CHECK(det("5_1") == 5);
  CHECK(det("5_2") == 7);
  CHECK(det("6_1") == 9);
  CHECK(det("6_2") == 11);
  CHECK(det("6_3") == 13);
  CHECK(det("3_1m") == 3);
  CHECK(det("granny") == 9);
  CHECK(det("square") == 9);
}

TEST_CASE("census conway polynomials match the classical table") {
  auto cw = [](const char* n) { return conway(census_entry(n).diagram); };
  CHECK(cw("3_1") == zp({{0, 1}, {2, 1}}));
  CHECK(cw("4_1") == zp({{0, 1}, {2, -1}}));
  CHECK(cw("5_1") == zp({{0, 1}, {2, 3}, {4, 1}}));
  CHECK(cw("5_2") == zp({{0, 1}, {2, 2}}));
  CHECK(cw("6_1") == zp({{0, 1}, {2, -2}}));
  CHECK(cw("6_2") == zp({{0, 1}, {2, -1}, {4, -1}}));
  // det(6_3) = 13 forces the z^4 sign: |1 - 4 + 16| = 13.
  CHECK(cw("6_3") == zp({{0, 1}, {2, 1}, {4, 1}}));
  CHECK(cw("3_1m") == zp({{0, 1}, {2, 1}}));
  CHECK(cw("granny") == zp({{0, 1}, {2, 1}}) * zp({{0, 1}, {2, 1}}));
  CHECK(cw("square") == zp({{0, 1}, {2, 1}}) * zp({{0, 1}, {2, 1}}));
}

TEST_CASE("determinant is the conway polynomial at z = 2i in disguise") {
  // |sum c_2k (-4)^k| equals the determinant on every census knot.
  for (const auto& e : census()) {
    LaurentPoly c = conway(e.diagram);
    Int acc = 0, pw = 1;
    for (long k = 0; 2 * k <= c.max_exp(); ++k) {
      acc += c.coeff(2 * k) * pw;
      pw *= -4;
    }
    if (acc < 0) acc = -acc;
    CAPTURE(e.name);
    CHECK(acc == determinant(e.diagram));
  }
}

TEST_CASE("jones separates granny from square") {
  LaurentPoly g = jones(census_entry("granny").diagram);
  LaurentPoly s = jones(census_entry("square").diagram);
  CHECK(g != s);
  CHECK(g == jones(census_entry("3_1").diagram) *
                 jones(census_entry("3_1").diagram));
  CHECK(s == jones(census_entry("3_1").diagram) *
                 jones(census_entry("3_1m").diagram));
}

TEST_CASE("pinned expected values recompute") {
  for (const auto& e : census()) {
    CHECK(!e.expected.empty());
    for (const auto& [inv, want] : e.expected) {
      CAPTURE(e.name);
      CAPTURE(inv);
      CHECK(lookup_invariant(inv).eval(e.diagram).to_text() == want);
    }
  }
}
