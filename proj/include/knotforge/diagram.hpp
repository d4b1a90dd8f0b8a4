#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotforge {

// A crossing stores the four arc labels around it, counterclockwise starting
// from the incoming under-arc: s[0] under-in, s[2] under-out, s[1]/s[3] the
// over-strand.  The over direction (hence the sign) is recovered from the
// component cycles; sign is +1 exactly when the over-strand runs s[3]->s[1].
struct Crossing {
  std::array<int, 4> s{};
  int& operator[](int i) { return s[size_t(i)]; }
  int operator[](int i) const { return s[size_t(i)]; }
  bool operator==(const Crossing& o) const { return s == o.s; }
};

// Oriented link diagram: crossings plus the arc cycle of every component.
// Arc labels are arbitrary distinct positive ints until renumber() is called.
struct Diagram {
  std::vector<Crossing> crossings;
  std::vector<std::vector<int>> components;

  bool operator==(const Diagram& o) const {
    return crossings == o.crossings && components == o.components;
  }
  bool operator<(const Diagram& o) const;
};

struct DiagramError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EndRef {
  int crossing = -1;
  int slot = -1;
  bool operator==(const EndRef& o) const {
    return crossing == o.crossing && slot == o.slot;
  }
  bool operator<(const EndRef& o) const {
    return crossing != o.crossing ? crossing < o.crossing : slot < o.slot;
  }
  bool valid() const { return crossing >= 0; }
};

// Resolved incidence data for a structurally sound diagram.  Built once per
// query; diagrams are treated as immutable values.
class DiagramIndex {
 public:
  explicit DiagramIndex(const Diagram& d);  // throws DiagramError

  const Diagram& diagram() const { return *d_; }
  int sign(int ci) const { return sign_.at(size_t(ci)); }
  int over_in_slot(int ci) const { return over_in_.at(size_t(ci)); }
  int over_out_slot(int ci) const { return over_in_slot(ci) == 1 ? 3 : 1; }

  int succ(int arc) const;             // next arc along its component
  int pred(int arc) const;
  int comp_of(int arc) const;          // component index
  bool has_ends(int arc) const { return head(arc).valid(); }
  EndRef head(int arc) const;          // where the arc terminates
  EndRef tail(int arc) const;          // where it begins
  int arc_at(EndRef e) const { return d_->crossings[size_t(e.crossing)][e.slot]; }

  int writhe() const;
  std::vector<int> all_arcs() const;

 private:
  const Diagram* d_;
  std::vector<int> sign_, over_in_;
  std::map<int, int> succ_, pred_, comp_;
  std::map<int, EndRef> head_, tail_;
  friend std::vector<std::string> validate(const Diagram&, bool);
};

// Structural and orientation checks; returns human-readable violations,
// empty when the diagram is well formed.  check_planar additionally runs
// the genus test below.
std::vector<std::string> validate(const Diagram& d, bool check_planar = true);

// True when every connected piece of the underlying 4-valent graph embeds in
// the plane with the rotation given by the crossing slots (Euler test).
bool planarity_check(const Diagram& d);

// One step of a face walk: traverse `arc` from `from` to `to`.  forward
// means the walk agrees with the arc's orientation.
struct Dart {
  int arc;
  EndRef from, to;
  bool forward;
};
using Face = std::vector<Dart>;

// Complementary regions of the diagram, as orbits of the corner-turn map.
// Crossingless circles bound no corners and contribute no faces here.
std::vector<Face> faces(const Diagram& d);

// Relabels arcs 1..n walking each component from its lowest current label,
// orders components (crossed ones first by lowest label, then circles) and
// sorts crossings by s[0].  Deterministic; the result depends on the input
// labelling.
Diagram renumber(const Diagram& d);

// Labelling-independent canonical form: lexicographic minimum of renumber()
// over all component rotations and orderings.  Two diagrams are related by a
// relabelling iff their canonical forms are equal.
Diagram canonical_form(const Diagram& d);

// Serializes to the bracket notation "X[a,b,c,d];... / (1..6)(7)".
std::string encode(const Diagram& d);

int component_count(const Diagram& d);
int crossing_count(const Diagram& d);

}  // namespace knotforge
