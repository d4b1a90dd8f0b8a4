#include "knotforge/finitetype.hpp"
#include "knotforge/moves.hpp"
#include "knotforge/notation.hpp"

#include <doctest.h>

#include <set>

using namespace knotforge;

namespace {

Diagram trefoil() {
  return parse_pd("X[1,5,2,4];X[3,1,4,6];X[5,3,6,2] / (1..6)");
}

Diagram hopf() {
  return parse_pd("X[1,3,2,4];X[3,1,4,2] / (1,2)(3,4)");
}

bool same_diagram(const Diagram& a, const Diagram& b) {
  return canonical_form(a) == canonical_form(b);
}

}  // namespace

TEST_CASE("braid closures") {
  Diagram t = braid_closure(2, {1, 1, 1});
  CHECK(same_diagram(t, trefoil()));
  CHECK(writhe(t) == 3);

  Diagram circles = braid_closure(3, {});
  CHECK(component_count(circles) == 3);
  CHECK(crossing_count(circles) == 0);

  Diagram h = braid_closure(2, {1, 1});
  CHECK(same_diagram(h, hopf()));
  CHECK(linking_number(h) == 1);
  CHECK(linking_number(braid_closure(2, {-1, -1})) == -1);

  // One letter per gap merges everything into an unknot.
  Diagram u = braid_closure(4, {1, 2, 3});
  CHECK(component_count(u) == 1);
}

TEST_CASE("crossing change flips one sign") {
  Diagram t = trefoil();
  Diagram c = crossing_change(t, 0);
  CHECK(writhe(c) == 1);
  CHECK(crossing_count(c) == 3);
  CHECK(validate(c, true).empty());
  // The result is renumbered, so hunt for the switched crossing.
  bool restored = false;
  for (int j = 0; j < 3; ++j)
    restored = restored || same_diagram(crossing_change(c, j), t);
  CHECK(restored);
}

TEST_CASE("crossing change set matches iterated changes") {
  Diagram t = trefoil();
  Diagram both = crossing_change_set(t, {0, 2});
  Diagram step = crossing_change(crossing_change(t, 0), 2);
  CHECK(same_diagram(both, step));
  CHECK(writhe(both) == -1);
}

TEST_CASE("oriented smoothing splits a knot crossing") {
  Diagram t = trefoil();
  Diagram s = oriented_smoothing(t, 0);
  CHECK(crossing_count(s) == 2);
  CHECK(component_count(s) == 2);
  CHECK(validate(s, true).empty());
  // Smoothing the trefoil leaves a Hopf link.
  CHECK(linking_number(s) == 1);
}

TEST_CASE("connected sum concatenates and stays planar") {
  Diagram g = connected_sum(trefoil(), 1, trefoil(), 1);
  CHECK(crossing_count(g) == 6);
  CHECK(component_count(g) == 1);
  CHECK(writhe(g) == 6);
  CHECK(validate(g, true).empty());
}

TEST_CASE("connected sum with a bare circle is absorption") {
  Diagram circle = parse_pd(" / (1)");
  CHECK(same_diagram(connected_sum(circle, 1, trefoil(), 2), trefoil()));
  CHECK(same_diagram(connected_sum(trefoil(), 3, circle, 1), trefoil()));
  Diagram two = connected_sum(circle, 1, circle, 1);
  CHECK(component_count(two) == 1);
  CHECK(crossing_count(two) == 0);
}

TEST_CASE("full twists on a two strand bundle") {
  Diagram h = hopf();
  // Arcs 1 and 3 run through a shared face, one from each component.
  auto regions = enumerate_regions(h, RegionEnumOptions{2, 4096, 2, true});
  REQUIRE(!regions.empty());
  bool tested_cross = false;
  for (const auto& r : regions) {
    if (r.strands.size() != 2) continue;
    DiagramIndex idx(h);
    int ca = idx.comp_of(r.strands[0].first);
    int cb = idx.comp_of(r.strands[1].first);
    if (ca == cb) continue;
    tested_cross = true;
    for (int n : {1, -1, 2}) {
      Diagram out = insert_full_twists(h, r, n);
      CHECK(crossing_count(out) == 2 + 2 * std::abs(n));
      CHECK(validate(out, true).empty());
      // Parallel strands from distinct components shift the linking
      // number by exactly the number of full twists.
      CHECK(linking_number(out) == 1 + n);
    }
  }
  CHECK(tested_cross);
}

TEST_CASE("twist of zero is the identity") {
  Diagram t = trefoil();
  auto regions = enumerate_regions(t, RegionEnumOptions{2, 64, -1, false});
  REQUIRE(!regions.empty());
  CHECK(same_diagram(insert_full_twists(t, regions[0], 0), t));
}

TEST_CASE("twist composition via the transported region") {
  Diagram t = trefoil();
  auto regions = enumerate_regions(t, RegionEnumOptions{3, 64, -1, false});
  REQUIRE(regions.size() >= 3);
  int checked = 0;
  for (const auto& r : regions) {
    if (checked == 5) break;
    ++checked;
    TwistResult once = insert_full_twists_tracked(t, r, 1);
    Diagram twice = insert_full_twists(once.diagram, once.below, 1);
    Diagram direct = insert_full_twists(t, r, 2);
    CAPTURE(checked);
    CHECK(same_diagram(twice, direct));
  }
}

TEST_CASE("same arc may carry two strands of a region") {
  Diagram circle = parse_pd(" / (1)");
  TwistRegion clasp{{{1, +1}, {1, -1}}};
  CHECK(clasp.q() == 0);
  Diagram out = insert_full_twists(circle, clasp, 1);
  CHECK(crossing_count(out) == 2);
  CHECK(component_count(out) == 1);
  CHECK(validate(out, true).empty());
}

TEST_CASE("incoherent bundles are rejected") {
  Diagram circle = parse_pd(" / (1)");
  // A circle cut twice must thread the box once up and once down.
  TwistRegion coil{{{1, +1}, {1, +1}}};
  CHECK_THROWS_AS(insert_full_twists(circle, coil, 1), DiagramError);
}

TEST_CASE("multi region twisting matches sequential transport") {
  Diagram h = hopf();
  auto regions = enumerate_regions(h, RegionEnumOptions{2, 64, -1, false});
  // Find two regions with no arc in common.
  for (size_t i = 0; i < regions.size(); ++i) {
    for (size_t j = i + 1; j < regions.size(); ++j) {
      auto arcs_of = [](const TwistRegion& r) {
        std::set<int> s;
        for (auto [a, dir] : r.strands) s.insert(a);
        return s;
      };
      auto sa = arcs_of(regions[i]), sb = arcs_of(regions[j]);
      bool disjoint = true;
      for (int a : sa) disjoint = disjoint && !sb.count(a);
      if (!disjoint) continue;
      Diagram multi = insert_full_twists_multi(h, {regions[i], regions[j]},
                                               {1, 1});
      CHECK(validate(multi, true).empty());
      int added = 0;
      for (const auto& r : {regions[i], regions[j]}) {
        int k = int(r.strands.size());
        added += k * (k - 1);
      }
      CHECK(crossing_count(multi) == 2 + added);
      return;
    }
  }
  FAIL("no pair of disjoint regions found");
}

TEST_CASE("reidemeister one both ways") {
  Diagram t = trefoil();
  for (int kink : {+1, -1}) {
    for (int arc = 1; arc <= 6; ++arc) {
      RSite site;
      site.arc_a = arc;
      site.kink_sign = kink;
      Diagram big = apply_reidemeister(t, RMove::R1Plus, site);
      CHECK(crossing_count(big) == 4);
      CHECK(writhe(big) == 3 + kink);
      CHECK(validate(big, true).empty());
      // Some kink removal restores the original picture.
      bool restored = false;
      for (const RSite& s : r1_minus_sites(big)) {
        Diagram back = apply_reidemeister(big, RMove::R1Minus, s);
        restored = restored || same_diagram(back, t);
      }
      CHECK(restored);
    }
  }
}

TEST_CASE("reidemeister two both ways") {
  Diagram t = trefoil();
  auto sites = r2_plus_sites(t);
  REQUIRE(!sites.empty());
  int tried = 0;
  for (const RSite& site : sites) {
    if (tried == 6) break;
    ++tried;
    Diagram big = apply_reidemeister(t, RMove::R2Plus, site);
    CHECK(crossing_count(big) == 5);
    CHECK(writhe(big) == 3);
    CHECK(validate(big, true).empty());
    bool restored = false;
    for (const RSite& s : r2_minus_sites(big)) {
      Diagram back = apply_reidemeister(big, RMove::R2Minus, s);
      restored = restored || same_diagram(back, t);
    }
    CAPTURE(tried);
    CHECK(restored);
  }
}

TEST_CASE("reidemeister three preserves the crossing data") {
  Diagram d = braid_closure(3, {1, 2, 1});
  auto sites = r3_sites(d);
  REQUIRE(!sites.empty());
  Diagram moved = apply_reidemeister(d, RMove::R3, sites[0]);
  CHECK(crossing_count(moved) == 3);
  CHECK(writhe(moved) == writhe(d));
  CHECK(component_count(moved) == component_count(d));
  CHECK(validate(moved, true).empty());
  // The move is an involution at the same triangle.
  auto back_sites = r3_sites(moved);
  bool restored = false;
  for (const RSite& s : back_sites) {
    Diagram back = apply_reidemeister(moved, RMove::R3, s);
    restored = restored || same_diagram(back, d);
  }
  CHECK(restored);
}
