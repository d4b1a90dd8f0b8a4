#pragma once

#include "knotforge/diagram.hpp"

namespace knotforge {

int writhe(const Diagram& d);

// Switches over- and under-strand at one crossing (indices refer to d).
Diagram crossing_change(const Diagram& d, int ci);
Diagram crossing_change_set(const Diagram& d, const std::vector<int>& cs);

// Replaces a crossing by the smoothing compatible with both orientations.
Diagram oriented_smoothing(const Diagram& d, int ci);

// Joins the components containing arc1/arc2 by cutting both arcs and
// splicing the free ends together, respecting orientations.
Diagram connected_sum(const Diagram& d1, int arc1, const Diagram& d2,
                      int arc2);

// Plat-free closure of a braid word on `strands` strands.  Letter +i crosses
// position i under position i+1; -i crosses it over.  Positive letters give
// positive crossings.
Diagram braid_closure(int strands, const std::vector<int>& word);

// A bundle of strand passes through an embedded disc, each with a direction
// relative to the bundle (+1 with, -1 against).  The same arc may be listed
// more than once when a strand threads the disc repeatedly; list order is
// the order of the cut points along the arc's orientation.
struct TwistRegion {
  std::vector<std::pair<int, int>> strands;
  int q() const {
    int s = 0;
    for (auto& [a, dir] : strands) { (void)a; s += dir; }
    return s < 0 ? -s : s;
  }
  bool operator==(const TwistRegion& o) const { return strands == o.strands; }
  bool operator<(const TwistRegion& o) const { return strands < o.strands; }
};

// Inserts n full twists on the bundle.  Adds |n|*k*(k-1) crossings for k
// strands; n = 0 returns the diagram unchanged (renumbered).  Throws
// DiagramError when the strand data is not coherently embeddable.
Diagram insert_full_twists(const Diagram& d, const TwistRegion& r, int n);

// Same, with the transported region returned so twists can be stacked.
struct TwistResult {
  Diagram diagram;
  TwistRegion below;  // the same disc, relabelled into the new diagram
};
TwistResult insert_full_twists_tracked(const Diagram& d, const TwistRegion& r,
                                       int n);

// Simultaneous insertion into pairwise arc-disjoint regions; turns[j] full
// twists go into regions[j].
Diagram insert_full_twists_multi(const Diagram& d,
                                 const std::vector<TwistRegion>& rs,
                                 const std::vector<int>& turns);

// Half the signed count of crossings between two components.
int linking_number(const Diagram& d, int comp1, int comp2);
// Total over all unordered component pairs.
int linking_number(const Diagram& d);

enum class RMove { R1Plus, R1Minus, R2Plus, R2Minus, R3 };

struct RSite {
  int arc_a = 0, arc_b = 0;   // R1+: arc_a; R2+: both
  int kink_sign = +1;         // R1+
  bool a_over = true;         // R2+
  std::vector<int> crossings;  // R1-: {kink}; R2-: {c1,c2}; R3: {t1,t2,t3}
};

Diagram apply_reidemeister(const Diagram& d, RMove m, const RSite& site);

std::vector<RSite> r1_minus_sites(const Diagram& d);
std::vector<RSite> r2_minus_sites(const Diagram& d);
std::vector<RSite> r2_plus_sites(const Diagram& d);
std::vector<RSite> r3_sites(const Diagram& d);

}  // namespace knotforge
