#include "knotforge/invariants.hpp"
#include "knotforge/moves.hpp"
#include "knotforge/notation.hpp"

#include <doctest.h>

#include <random>

using namespace knotforge;

namespace {

Diagram trefoil() { return braid_closure(2, {1, 1, 1}); }
Diagram trefoil_m() { return braid_closure(2, {-1, -1, -1}); }
Diagram figure8() { return braid_closure(3, {1, -2, 1, -2}); }
Diagram unknot() { return parse_pd(" / (1)"); }

LaurentPoly poly(const std::string& v,
                 std::initializer_list<std::pair<long, long>> terms) {
  LaurentPoly p(v);
  for (auto [e, c] : terms) p.set_coeff(e, Int(c));
  return p;
}

}  // namespace

TEST_CASE("bracket of small diagrams") {
  // One positive kink: -A^3.  One negative kink: -A^-3.
  CHECK(kauffman_bracket(parse_pd("X[1,1,2,2] / (1,2)")) ==
        poly("A", {{3, -1}}));
  CHECK(kauffman_bracket(parse_pd("X[1,2,2,1] / (1,2)")) ==
        poly("A", {{-3, -1}}));

  // Closure of the positive 2-braid cubed, computed by hand over all
  // eight states: -A^5 - A^-3 + A^-7.
  CHECK(kauffman_bracket(trefoil()) ==
        poly("A", {{5, -1}, {-3, -1}, {-7, 1}}));

  CHECK(kauffman_bracket(unknot()) == poly("A", {{0, 1}}));
  // Each extra circle multiplies by the loop value.
  CHECK(kauffman_bracket(parse_pd(" / (1)(2)")) ==
        poly("A", {{2, -1}, {-2, -1}}));
}

TEST_CASE("jones pins chirality") {
  // Right trefoil in u = A^-1: u^4 + u^12 - u^16.
  CHECK(jones(trefoil()) == poly("u", {{4, 1}, {12, 1}, {16, -1}}));
  // In the classical variable: t + t^3 - t^4.
  CHECK(jones_t(trefoil()) == poly("t", {{1, 1}, {3, 1}, {4, -1}}));
  // Mirror image swaps t and 1/t.
  CHECK(jones_t(trefoil_m()) == poly("t", {{-1, 1}, {-3, 1}, {-4, -1}}));
  // Figure eight is amphichiral.
  CHECK(jones_t(figure8()) ==
        poly("t", {{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}}));
  CHECK(jones(unknot()) == poly("u", {{0, 1}}));
  // Links land on u-exponents that are 2 mod 4, so jones_t refuses.
  CHECK_THROWS(jones_t(braid_closure(2, {1, 1})));
}

TEST_CASE("jones is invariant under reidemeister moves") {
  Diagram t = figure8();
  LaurentPoly j = jones(t);
  RSite kink;
  kink.arc_a = 2;
  kink.kink_sign = -1;
  CHECK(jones(apply_reidemeister(t, RMove::R1Plus, kink)) == j);
  auto sites = r2_plus_sites(t);
  REQUIRE(!sites.empty());
  CHECK(jones(apply_reidemeister(t, RMove::R2Plus, sites[0])) == j);
  Diagram d = braid_closure(3, {1, 2, 1});
  auto tri = r3_sites(d);
  REQUIRE(!tri.empty());
  CHECK(jones(apply_reidemeister(d, RMove::R3, tri[0])) == jones(d));
}

TEST_CASE("conway values on small knots and links") {
  CHECK(conway(unknot()) == poly("z", {{0, 1}}));
  CHECK(conway(trefoil()) == poly("z", {{0, 1}, {2, 1}}));
  CHECK(conway(trefoil_m()) == poly("z", {{0, 1}, {2, 1}}));
  CHECK(conway(figure8()) == poly("z", {{0, 1}, {2, -1}}));
  CHECK(conway(braid_closure(2, {1, 1, 1, 1, 1})) ==
        poly("z", {{0, 1}, {2, 3}, {4, 1}}));
  // Split diagrams vanish.
  CHECK(conway(parse_pd(" / (1)(2)")).is_zero());
  // Hopf link: single z term, sign tracks the clasp.
  CHECK(conway(braid_closure(2, {1, 1})) == poly("z", {{1, 1}}));
  CHECK(conway(braid_closure(2, {-1, -1})) == poly("z", {{1, -1}}));
}

TEST_CASE("matrix and skein conway paths agree") {
  std::vector<Diagram> ds = {unknot(), trefoil(), trefoil_m(), figure8(),
                             braid_closure(2, {1, 1, 1, 1, 1}),
                             braid_closure(3, {1, 1, 1, -2, 1, -2}),
                             connected_sum(trefoil(), 1, figure8(), 2)};
  for (const auto& d : ds) {
    CAPTURE(emit_pd(d));
    CHECK(conway(d) == conway_skein(d));
  }
}

TEST_CASE("capped coefficient extraction matches the full polynomial") {
  // conway_coefficient prunes the skein tree at the requested degree; the
  // full expansion is the oracle.
  std::vector<Diagram> ds = {trefoil(), figure8(),
                             braid_closure(2, {1, 1}),
                             braid_closure(3, {1, -2, 1, -2}),
                             braid_closure(2, {1, 1, 1, 1, 1}),
                             connected_sum(trefoil(), 1, figure8(), 2)};
  for (const auto& d : ds) {
    LaurentPoly full = conway(d);
    for (int k = 0; k <= 6; ++k) {
      CAPTURE(emit_pd(d));
      CAPTURE(k);
      CHECK(conway_coefficient(k, d) == full.coeff(k));
    }
  }
}

TEST_CASE("conway is multiplicative under connected sum") {
  Diagram g = connected_sum(trefoil(), 1, figure8(), 2);
  CHECK(conway(g) == poly("z", {{0, 1}, {2, 1}}) *
                         poly("z", {{0, 1}, {2, -1}}));
}

TEST_CASE("determinant and colorings by smith reduction") {
  CHECK(determinant(unknot()) == 1);
  CHECK(determinant(trefoil()) == 3);
  CHECK(determinant(figure8()) == 5);
  CHECK(determinant(braid_closure(2, {1, 1, 1, 1, 1})) == 5);
  CHECK(determinant(parse_pd(" / (1)(2)")) == 0);

  // 3-colorings: trefoil 9, figure eight only the 3 constant ones.
  CHECK(colorings(trefoil(), 3) == 9);
  CHECK(colorings(figure8(), 3) == 3);
  CHECK(colorings(unknot(), 3) == 3);
  // Determinant divisibility shows up as extra colorings mod 5.
  CHECK(colorings(figure8(), 5) == 25);
  CHECK(colorings(trefoil(), 5) == 5);
}

TEST_CASE("brute force coloring count agrees with the matrix count") {
  std::vector<Diagram> ds = {trefoil(), figure8(), braid_closure(2, {1, 1}),
                             braid_closure(3, {1, 2, 1}),
                             braid_closure(2, {1, 1, 1, 1, 1}),
                             connected_sum(trefoil(), 1, trefoil(), 1)};
  for (const auto& d : ds) {
    for (long m : {2L, 3L, 4L, 5L, 6L, 7L}) {
      CAPTURE(emit_pd(d));
      CAPTURE(m);
      CHECK(colorings(d, Int(m)) == colorings_bruteforce(d, m));
    }
  }
}

TEST_CASE("arf from the conway coefficient") {
  CHECK(arf(unknot()) == 0);
  CHECK(arf(trefoil()) == 1);
  CHECK(arf(trefoil_m()) == 1);
  CHECK(arf(figure8()) == 1);
  CHECK(arf(braid_closure(2, {1, 1, 1, 1, 1})) == 1);
  CHECK(arf(connected_sum(trefoil(), 1, trefoil(), 1)) == 0);
}

TEST_CASE("low order expansion coefficients") {
  CHECK(vassiliev_coefficient(0, trefoil()) == Rat(1));
  CHECK(vassiliev_coefficient(1, trefoil()) == Rat(0));
  CHECK(vassiliev_coefficient(2, trefoil()) == Rat(-3));
  CHECK(vassiliev_coefficient(2, trefoil_m()) == Rat(-3));
  CHECK(vassiliev_coefficient(2, figure8()) == Rat(3));
  // Order 3 separates mirrors.
  Rat a3 = vassiliev_coefficient(3, trefoil());
  CHECK(a3 == Rat(-6));
  CHECK(vassiliev_coefficient(3, trefoil_m()) == Rat(6));
}

TEST_CASE("state sum guard fires before expanding") {
  Diagram seven = braid_closure(2, {1, 1, 1, 1, 1, 1, 1});
  int old = state_sum_limit();
  set_state_sum_limit(5);
  CHECK_THROWS_AS(jones(seven), GuardExceeded);
  set_state_sum_limit(old);
  CHECK(jones_t(seven) ==
        poly("t", {{3, 1}, {5, 1}, {6, -1}, {7, 1}, {8, -1}, {9, 1}, {10, -1}}));
}

TEST_CASE("invariant registry") {
  Diagram t = trefoil();
  CHECK(lookup_invariant("det").eval(t) == InvariantValue(Int(3)));
  CHECK(lookup_invariant("components").eval(t) == InvariantValue(Int(1)));
  CHECK(lookup_invariant("colorings:3").eval(t) == InvariantValue(Int(9)));
  CHECK(lookup_invariant("arf").eval(t) == InvariantValue(Int(1)));
  CHECK(lookup_invariant("c:2").eval(t) == InvariantValue(Int(1)));
  CHECK(lookup_invariant("a:2").eval(t) == InvariantValue(Rat(-3)));
  CHECK(lookup_invariant("jones").eval(t) == InvariantValue(jones(t)));
  CHECK(lookup_invariant("conway").eval(t) == InvariantValue(conway(t)));
  CHECK_THROWS_AS(lookup_invariant("volume"), UnknownInvariant);
  CHECK_THROWS_AS(lookup_invariant("colorings:x"), UnknownInvariant);
  CHECK_THROWS_AS(lookup_invariant("colorings:1"), UnknownInvariant);
  CHECK(registered_invariant_names().size() >= 10);
  for (const auto& n : registered_invariant_names()) {
    CAPTURE(n);
    CHECK_NOTHROW(lookup_invariant(n));
  }
}

TEST_CASE("a crossing change may move values") {
  Diagram t = trefoil();
  Diagram u = crossing_change(t, 0);  // unknots the trefoil
  CHECK(jones(u) == jones(unknot()));
  CHECK(conway(u) == conway(unknot()));
  CHECK(determinant(u) == 1);
}

TEST_CASE("random move storm keeps every invariant fixed") {
  std::mt19937 rng(99);
  std::vector<Diagram> seeds = {trefoil(), figure8(),
                                braid_closure(2, {1, 1})};
  for (const Diagram& seed : seeds) {
    LaurentPoly j0 = jones(seed);
    LaurentPoly c0 = conway(seed);
    Int d0 = determinant(seed);
    Diagram d = seed;
    for (int step = 0; step < 6; ++step) {
      std::vector<std::pair<RMove, RSite>> options;
      if (crossing_count(d) < 9) {
        for (const RSite& s : r2_plus_sites(d))
          options.push_back({RMove::R2Plus, s});
        DiagramIndex idx(d);
        for (int arc : idx.all_arcs())
          for (int k : {+1, -1}) {
            RSite s;
            s.arc_a = arc;
            s.kink_sign = k;
            options.push_back({RMove::R1Plus, s});
          }
      }
      for (const RSite& s : r1_minus_sites(d))
        options.push_back({RMove::R1Minus, s});
      for (const RSite& s : r2_minus_sites(d))
        options.push_back({RMove::R2Minus, s});
      for (const RSite& s : r3_sites(d))
        options.push_back({RMove::R3, s});
      REQUIRE(!options.empty());
      auto [mv, site] = options[rng() % options.size()];
      d = apply_reidemeister(d, mv, site);
      CAPTURE(step);
      CAPTURE(emit_pd(d));
      CHECK(jones(d) == j0);
    }
    CHECK(conway(d) == c0);
    CHECK(determinant(d) == d0);
  }
}
