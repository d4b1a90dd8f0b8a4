#include "knotforge/moves.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace knotforge {

namespace {

// Map-keyed union-find over arc labels.
struct ArcDsu {
  std::map<int, int> p;
  int find(int x) {
    auto it = p.find(x);
    if (it == p.end() || it->second == x) return x;
    int r = find(it->second);
    p[x] = r;
    return r;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p[b] = a;  // keep the smaller label
  }
};

// Assembles a diagram from a successor map and a crossing list, gluing every
// junction listed in `frees` (junctions that no longer sit at a crossing).
// `label_out`, when given, receives old-arc -> final-arc for all arcs.
Diagram rebuild(std::vector<Crossing> crossings, const std::map<int, int>& succ,
                const std::vector<std::pair<int, int>>& frees,
                std::map<int, int>* label_out = nullptr) {
  ArcDsu dsu;
  std::set<std::pair<int, int>> free_set;
  for (auto& [x, y] : frees) {
    free_set.insert({x, y});
    if (x != y) dsu.unite(x, y);
  }
  for (auto& x : crossings)
    for (int i = 0; i < 4; ++i) x[i] = dsu.find(x[i]);

  std::map<int, int> succ2;
  std::set<int> roots;
  for (const auto& [x, y] : succ) roots.insert(dsu.find(x));
  for (const auto& [x, y] : succ) {
    if (free_set.count({x, y})) continue;
    int rx = dsu.find(x), ry = dsu.find(y);
    if (succ2.count(rx))
      throw DiagramError("junction conflict while regluing arcs");
    succ2[rx] = ry;
  }

  Diagram out;
  out.crossings = std::move(crossings);
  std::set<int> seen;
  for (int r : roots) {
    if (seen.count(r)) continue;
    if (!succ2.count(r)) {  // every junction merged away: a free circle
      out.components.push_back({r});
      seen.insert(r);
      continue;
    }
    std::vector<int> cyc;
    int a = r;
    do {
      if (seen.count(a))
        throw DiagramError("successor map is not a permutation");
      seen.insert(a);
      cyc.push_back(a);
      a = succ2.at(a);
    } while (a != r);
    out.components.push_back(std::move(cyc));
  }

  if (label_out) {
    // Replay renumber's walk (crossed components by lowest label, then
    // circles) to expose the final labelling of the old arcs.
    DiagramIndex idx(out);
    std::vector<std::vector<int>> crossed;
    std::vector<int> circles;
    for (const auto& cyc : out.components) {
      if (cyc.size() == 1 && !idx.has_ends(cyc[0])) {
        circles.push_back(cyc[0]);
      } else {
        int start = *std::min_element(cyc.begin(), cyc.end());
        std::vector<int> w;
        int a = start;
        for (size_t i = 0; i < cyc.size(); ++i) {
          w.push_back(a);
          a = idx.succ(a);
        }
        crossed.push_back(std::move(w));
      }
    }
    std::sort(crossed.begin(), crossed.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    std::sort(circles.begin(), circles.end());
    std::map<int, int> m;
    int nxt = 1;
    for (const auto& w : crossed)
      for (int a : w) m[a] = nxt++;
    for (int c : circles) m[c] = nxt++;
    label_out->clear();
    for (const auto& [x, y] : succ) {
      (void)y;
      (*label_out)[x] = m.at(dsu.find(x));
    }
  }
  return renumber(out);
}

std::map<int, int> succ_map(const DiagramIndex& idx) {
  std::map<int, int> m;
  for (int a : idx.all_arcs()) m[a] = idx.succ(a);
  return m;
}

int max_arc(const Diagram& d) {
  int m = 0;
  for (const auto& c : d.components)
    for (int a : c) m = std::max(m, a);
  return m;
}

Crossing make_crossing(int u_in, int u_out, int o_in, int o_out, int sign) {
  Crossing x;
  x[0] = u_in;
  x[2] = u_out;
  if (sign > 0) {
    x[1] = o_out;
    x[3] = o_in;
  } else {
    x[1] = o_in;
    x[3] = o_out;
  }
  return x;
}

struct Pass {
  int in, out;
};

void passes_of(const DiagramIndex& idx, int ci, Pass& under, Pass& over) {
  const Crossing& x = idx.diagram().crossings[size_t(ci)];
  under = {x[0], x[2]};
  over = {x[idx.over_in_slot(ci)], x[idx.over_out_slot(ci)]};
}

}  // namespace

int writhe(const Diagram& d) { return DiagramIndex(d).writhe(); }

Diagram crossing_change_set(const Diagram& d, const std::vector<int>& cs) {
  DiagramIndex idx(d);
  Diagram e = d;
  for (int ci : cs) {
    if (ci < 0 || ci >= int(d.crossings.size()))
      throw DiagramError("crossing index out of range");
    const Crossing& x = d.crossings[size_t(ci)];
    int k = idx.sign(ci) > 0 ? 3 : 1;  // new under-in is the old over-in
    Crossing y;
    for (int i = 0; i < 4; ++i) y[i] = x[(i + k) % 4];
    e.crossings[size_t(ci)] = y;
  }
  return renumber(e);
}

Diagram crossing_change(const Diagram& d, int ci) {
  return crossing_change_set(d, {ci});
}

Diagram oriented_smoothing(const Diagram& d, int ci) {
  DiagramIndex idx(d);
  if (ci < 0 || ci >= int(d.crossings.size()))
    throw DiagramError("crossing index out of range");
  Pass under, over;
  passes_of(idx, ci, under, over);
  std::vector<Crossing> xs;
  for (int i = 0; i < int(d.crossings.size()); ++i)
    if (i != ci) xs.push_back(d.crossings[size_t(i)]);
  auto succ = succ_map(idx);
  succ[under.in] = over.out;
  succ[over.in] = under.out;
  return rebuild(std::move(xs), succ,
                 {{under.in, over.out}, {over.in, under.out}});
}

Diagram connected_sum(const Diagram& d1, int arc1, const Diagram& d2,
                      int arc2) {
  DiagramIndex i1(d1);
  int off = max_arc(d1);
  Diagram d2r = d2;
  for (auto& c : d2r.crossings)
    for (int i = 0; i < 4; ++i) c[i] += off;
  for (auto& comp : d2r.components)
    for (auto& a : comp) a += off;
  int a2 = arc2 + off;
  DiagramIndex i2(d2r);

  std::vector<Crossing> xs = d1.crossings;
  for (const auto& c : d2r.crossings) xs.push_back(c);

  auto succ = succ_map(i1);
  for (const auto& [a, b] : succ_map(i2)) succ[a] = b;

  int x2 = succ.at(arc1);  // equal to arc1 when that component is a circle
  int y2 = succ.at(a2);
  succ[arc1] = y2;
  succ[a2] = x2;

  std::vector<std::pair<int, int>> frees;
  if (i1.has_ends(arc1)) {
    EndRef h = i1.head(arc1);
    xs[size_t(h.crossing)][h.slot] = a2;
  } else {
    frees.push_back({a2, x2});
  }
  if (i2.has_ends(a2)) {
    EndRef h = i2.head(a2);
    xs[size_t(h.crossing) + d1.crossings.size()][h.slot] = arc1;
  } else {
    frees.push_back({arc1, y2});
  }
  return rebuild(std::move(xs), succ, frees);
}

Diagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw DiagramError("braid needs at least one strand");
  std::vector<int> cur(size_t(strands) + 1), top(size_t(strands) + 1);
  for (int i = 1; i <= strands; ++i) cur[size_t(i)] = top[size_t(i)] = i;
  int next = strands + 1;
  std::vector<Crossing> xs;
  std::map<int, int> succ;
  for (int letter : word) {
    int i = letter > 0 ? letter : -letter;
    if (i < 1 || i >= strands) throw DiagramError("braid letter out of range");
    int x = cur[size_t(i)], y = cur[size_t(i) + 1];
    int xn = next++, yn = next++;
    if (letter > 0)
      xs.push_back(make_crossing(x, xn, y, yn, +1));
    else
      xs.push_back(make_crossing(y, yn, x, xn, -1));
    succ[x] = xn;
    succ[y] = yn;
    cur[size_t(i)] = yn;
    cur[size_t(i) + 1] = xn;
  }
  std::vector<std::pair<int, int>> frees;
  for (int i = 1; i <= strands; ++i) {
    succ[cur[size_t(i)]] = top[size_t(i)];
    frees.push_back({cur[size_t(i)], top[size_t(i)]});
  }
  return rebuild(std::move(xs), succ, frees);
}

namespace {

// Shared splice engine: cuts every region's strand passes and sews one braid
// box per region (positions = listed strand order, letter +i puts position i
// under position i+1).  All cuts happen in one pass, so the regions must be
// pairwise arc-disjoint; within a region an arc may repeat.  Only pure words
// (trivial strand permutation) are accepted.
Diagram splice_words(const Diagram& d, const std::vector<TwistRegion>& regions,
                     const std::vector<std::vector<int>>& words,
                     std::vector<TwistRegion>* transported) {
  if (regions.size() != words.size())
    throw DiagramError("one word per region required");
  DiagramIndex idx(d);
  {
    std::set<int> used;
    for (const auto& r : regions) {
      if (r.strands.empty()) throw DiagramError("empty strand bundle");
      std::set<int> mine;
      for (auto& [a, dir] : r.strands) {
        idx.comp_of(a);  // throws for unknown arcs
        if (dir != 1 && dir != -1)
          throw DiagramError("strand direction must be +-1");
        mine.insert(a);
      }
      for (int a : mine)
        if (!used.insert(a).second)
          throw DiagramError("twist regions share arc " + std::to_string(a));
    }
  }

  std::vector<Crossing> xs = d.crossings;
  auto succ = succ_map(idx);
  std::vector<std::pair<int, int>> frees;
  int next = max_arc(d) + 1;

  // Global strand ids: region j's strands are consecutive.
  std::vector<std::pair<int, int>> gstrands;  // (arc, dir)
  std::vector<size_t> base(regions.size());
  for (size_t j = 0; j < regions.size(); ++j) {
    base[j] = gstrands.size();
    for (auto& s : regions[j].strands) gstrands.push_back(s);
  }

  // Cut the arcs.  Repeats cut one arc at consecutive points, listed order.
  std::map<int, std::vector<int>> cuts;  // arc -> global strand ids
  for (size_t g = 0; g < gstrands.size(); ++g)
    cuts[gstrands[g].first].push_back(int(g));
  std::vector<int> entry(gstrands.size()), exit_(gstrands.size());
  for (auto& [a, ss] : cuts) {
    int old_target = succ.at(a);
    std::vector<int> piece{a};
    for (size_t t = 0; t < ss.size(); ++t) piece.push_back(next++);
    int last = piece.back();
    if (idx.has_ends(a)) {
      EndRef h = idx.head(a);
      xs[size_t(h.crossing)][h.slot] = last;
    } else {
      frees.push_back({last, old_target});
    }
    succ[last] = old_target;
    for (size_t t = 0; t < ss.size(); ++t) {
      entry[size_t(ss[t])] = piece[t];
      exit_[size_t(ss[t])] = piece[t + 1];
    }
  }

  // One braid box per region.
  for (size_t j = 0; j < regions.size(); ++j) {
    const int k = int(regions[j].strands.size());
    const size_t kk = size_t(k);
    std::vector<int> pos_seg(kk), pos_dir(kk), pos_strand(kk), top_seg(kk);
    for (int i = 0; i < k; ++i) {
      top_seg[size_t(i)] = next++;
      pos_seg[size_t(i)] = top_seg[size_t(i)];
      // Region direction +1 crosses an arc from its backward-dart side to
      // its forward-dart side, which is the arc's right side; with box
      // positions laid along the path that strand climbs, so the internal
      // top-to-bottom sense is the negation.
      pos_dir[size_t(i)] = -regions[j].strands[size_t(i)].second;
      pos_strand[size_t(i)] = i;
    }
    for (int letter : words[j]) {
      int i = (letter > 0 ? letter : -letter) - 1;  // 0-based left position
      if (i < 0 || i + 1 >= k) throw DiagramError("box letter out of range");
      int xa = pos_seg[size_t(i)], ya = pos_seg[size_t(i) + 1];
      int xb = next++, yb = next++;
      int dx = pos_dir[size_t(i)], dy = pos_dir[size_t(i) + 1];
      int ua, ub, du, oa, ob, dov;
      if (letter > 0) {
        ua = xa; ub = xb; du = dx;
        oa = ya; ob = yb; dov = dy;
      } else {
        ua = ya; ub = yb; du = dy;
        oa = xa; ob = xb; dov = dx;
      }
      int u_in = du > 0 ? ua : ub, u_out = du > 0 ? ub : ua;
      int o_in = dov > 0 ? oa : ob, o_out = dov > 0 ? ob : oa;
      int sign = (letter > 0 ? 1 : -1) * du * dov;
      xs.push_back(make_crossing(u_in, u_out, o_in, o_out, sign));
      succ[u_in] = u_out;
      succ[o_in] = o_out;
      pos_seg[size_t(i)] = yb;
      pos_seg[size_t(i) + 1] = xb;
      std::swap(pos_dir[size_t(i)], pos_dir[size_t(i) + 1]);
      std::swap(pos_strand[size_t(i)], pos_strand[size_t(i) + 1]);
    }
    for (int i = 0; i < k; ++i)
      if (pos_strand[size_t(i)] != i)
        throw DiagramError("spliced word does not return strands to place");
    for (int i = 0; i < k; ++i) {
      size_t g = base[j] + size_t(i);
      int ts = top_seg[size_t(i)], bs = pos_seg[size_t(i)];
      int dir = -regions[j].strands[size_t(i)].second;  // internal sense
      int first = dir > 0 ? ts : bs, last = dir > 0 ? bs : ts;
      succ[entry[g]] = first;
      frees.push_back({entry[g], first});
      succ[last] = exit_[g];
      frees.push_back({last, exit_[g]});
    }
  }

  std::map<int, int> labels;
  Diagram out = rebuild(std::move(xs), succ, frees, &labels);
  if (!planarity_check(out))
    throw DiagramError("strand bundle is not coherently embedded");
  if (transported) {
    transported->clear();
    for (size_t j = 0; j < regions.size(); ++j) {
      TwistRegion t;
      for (size_t i = 0; i < regions[j].strands.size(); ++i) {
        int dir = regions[j].strands[i].second;
        // The segment on the underside of the box: an internally downward
        // strand (dir -1) exits there, an upward one enters.  Cutting mixed
        // sides would thread the next box through this one.
        int seg = dir > 0 ? entry[base[j] + i] : exit_[base[j] + i];
        t.strands.push_back({labels.at(seg), dir});
      }
      transported->push_back(std::move(t));
    }
  }
  return out;
}

std::vector<int> full_twist_word(int k, int n) {
  std::vector<int> w;
  if (k < 2 || n == 0) return w;
  int reps = k * (n > 0 ? n : -n);
  for (int r = 0; r < reps; ++r) {
    if (n > 0)
      for (int i = 1; i < k; ++i) w.push_back(i);
    else
      for (int i = k - 1; i >= 1; --i) w.push_back(-i);
  }
  return w;
}

}  // namespace

Diagram insert_full_twists(const Diagram& d, const TwistRegion& r, int n) {
  return splice_words(d, {r}, {full_twist_word(int(r.strands.size()), n)},
                      nullptr);
}

TwistResult insert_full_twists_tracked(const Diagram& d, const TwistRegion& r,
                                       int n) {
  TwistResult res;
  std::vector<TwistRegion> ts;
  res.diagram = splice_words(
      d, {r}, {full_twist_word(int(r.strands.size()), n)}, &ts);
  res.below = ts.at(0);
  return res;
}

Diagram insert_full_twists_multi(const Diagram& d,
                                 const std::vector<TwistRegion>& rs,
                                 const std::vector<int>& turns) {
  if (rs.size() != turns.size())
    throw DiagramError("one turn count per region required");
  std::vector<TwistRegion> active;
  std::vector<std::vector<int>> words;
  for (size_t j = 0; j < rs.size(); ++j) {
    if (turns[j] == 0) continue;
    active.push_back(rs[j]);
    words.push_back(full_twist_word(int(rs[j].strands.size()), turns[j]));
  }
  if (active.empty()) return renumber(d);
  return splice_words(d, active, words, nullptr);
}

int linking_number(const Diagram& d, int comp1, int comp2) {
  if (comp1 == comp2)
    throw DiagramError("linking number needs two distinct components");
  DiagramIndex idx(d);
  int total = 0;
  for (int ci = 0; ci < int(d.crossings.size()); ++ci) {
    int cu = idx.comp_of(d.crossings[size_t(ci)][0]);
    int co = idx.comp_of(d.crossings[size_t(ci)][idx.over_in_slot(ci)]);
    if ((cu == comp1 && co == comp2) || (cu == comp2 && co == comp1))
      total += idx.sign(ci);
  }
  if (total % 2 != 0) throw DiagramError("odd signed crossing count");
  return total / 2;
}

int linking_number(const Diagram& d) {
  DiagramIndex idx(d);
  int total = 0;
  for (int ci = 0; ci < int(d.crossings.size()); ++ci) {
    int cu = idx.comp_of(d.crossings[size_t(ci)][0]);
    int co = idx.comp_of(d.crossings[size_t(ci)][idx.over_in_slot(ci)]);
    if (cu != co) total += idx.sign(ci);
  }
  if (total % 2 != 0) throw DiagramError("odd signed crossing count");
  return total / 2;
}

namespace {

// Slot of the single occurrence of arc at crossing ci, or -1 if none/two.
int sole_slot(const Diagram& d, int ci, int arc) {
  int found = -1;
  for (int sl = 0; sl < 4; ++sl)
    if (d.crossings[size_t(ci)][sl] == arc) {
      if (found >= 0) return -1;
      found = sl;
    }
  return found;
}

bool is_over_slot(int sl) { return sl == 1 || sl == 3; }

Diagram do_r1_plus(const Diagram& d, int arc, int kink_sign) {
  DiagramIndex idx(d);
  int next = max_arc(d) + 1;
  int loop = next, after = next + 1;
  auto succ = succ_map(idx);
  int old_target = succ.at(arc);
  std::vector<Crossing> xs = d.crossings;
  std::vector<std::pair<int, int>> frees;
  if (idx.has_ends(arc)) {
    EndRef h = idx.head(arc);
    xs[size_t(h.crossing)][h.slot] = after;
  } else {
    frees.push_back({after, old_target});
  }
  succ[arc] = loop;
  succ[loop] = after;
  succ[after] = old_target;
  if (kink_sign > 0)
    xs.push_back(make_crossing(arc, loop, loop, after, +1));
  else
    xs.push_back(make_crossing(arc, loop, loop, after, -1));
  Diagram out = rebuild(std::move(xs), succ, frees);
  if (!planarity_check(out)) throw DiagramError("kink broke planarity");
  return out;
}

Diagram do_r1_minus(const Diagram& d, int ci) {
  DiagramIndex idx(d);
  const Crossing& x = d.crossings[size_t(ci)];
  int loop = -1;
  for (int sl = 0; sl < 4; ++sl)
    if (x[sl] == x[(sl + 1) % 4]) loop = x[sl];
  if (loop < 0) throw DiagramError("crossing is not a kink");
  auto succ = succ_map(idx);
  int before = idx.pred(loop), after = succ.at(loop);
  std::vector<Crossing> xs;
  for (int i = 0; i < int(d.crossings.size()); ++i)
    if (i != ci) xs.push_back(d.crossings[size_t(i)]);
  return rebuild(std::move(xs), succ, {{before, loop}, {loop, after}});
}

Diagram do_r2_plus(const Diagram& d, int arc_a, int arc_b, bool a_over) {
  if (arc_a == arc_b)
    throw DiagramError("slide needs two distinct arcs");
  // Find a face bounded by both arcs to read off their relative direction.
  std::optional<bool> fa, fb;
  for (const auto& f : faces(d)) {
    std::optional<bool> da, db;
    for (const auto& dart : f) {
      if (dart.arc == arc_a && !da) da = dart.forward;
      if (dart.arc == arc_b && !db) db = dart.forward;
    }
    if (da && db) {
      fa = da;
      fb = db;
      break;
    }
  }
  if (!fa) {
    // Crossingless circles bound no face walk; treat a circle as sharing a
    // face with everything, running either way (direction fixed below).
    DiagramIndex idx(d);
    if (!(idx.has_ends(arc_a) && idx.has_ends(arc_b)) ||
        d.crossings.empty()) {
      fa = true;
      fb = false;
    } else {
      throw DiagramError("arcs do not bound a common face");
    }
  }
  // The face walk runs antiparallel strands the same way: equal flags mean
  // the strands point against each other across the face.
  int dir_b = (*fa != *fb) ? +1 : -1;
  TwistRegion r;
  r.strands = {{arc_a, +1}, {arc_b, dir_b}};
  std::vector<int> word =
      a_over ? std::vector<int>{-1, +1} : std::vector<int>{+1, -1};
  try {
    return splice_words(d, {r}, {word}, nullptr);
  } catch (const DiagramError&) {
    // The bundle order may be mirrored relative to the shared face.
    TwistRegion r2;
    r2.strands = {{arc_b, dir_b}, {arc_a, +1}};
    std::vector<int> word2 =
        a_over ? std::vector<int>{+1, -1} : std::vector<int>{-1, +1};
    return splice_words(d, {r2}, {word2}, nullptr);
  }
}

Diagram do_r2_minus(const Diagram& d, int c1, int c2) {
  if (c1 == c2) throw DiagramError("bigon needs two crossings");
  DiagramIndex idx(d);
  Pass u1, o1, u2, o2;
  passes_of(idx, c1, u1, o1);
  passes_of(idx, c2, u2, o2);
  std::vector<Crossing> xs;
  for (int i = 0; i < int(d.crossings.size()); ++i)
    if (i != c1 && i != c2) xs.push_back(d.crossings[size_t(i)]);
  return rebuild(std::move(xs), succ_map(idx),
                 {{u1.in, u1.out}, {o1.in, o1.out},
                  {u2.in, u2.out}, {o2.in, o2.out}});
}

Diagram do_r3(const Diagram& d, const std::vector<int>& corners) {
  if (corners.size() != 3) throw DiagramError("triangle needs three crossings");
  DiagramIndex idx(d);
  // Recover the triangle: a three-sided face whose corners are exactly the
  // requested crossings.  Scanning arcs by endpoints instead would overcount
  // on small diagrams where unrelated arcs also join two corners.
  std::set<int> cset(corners.begin(), corners.end());
  if (cset.size() != 3) throw DiagramError("triangle corners must be distinct");
  std::vector<int> edges;
  for (const auto& f : faces(d)) {
    if (f.size() != 3) continue;
    std::set<int> fc{f[0].to.crossing, f[1].to.crossing, f[2].to.crossing};
    if (fc != cset) continue;
    std::set<int> arcs{f[0].arc, f[1].arc, f[2].arc};
    if (arcs.size() != 3) continue;
    bool loops = false;
    for (int a : arcs)
      if (idx.head(a).crossing == idx.tail(a).crossing) loops = true;
    if (loops) continue;
    edges.assign(arcs.begin(), arcs.end());
    break;
  }
  if (edges.size() != 3)
    throw DiagramError("corners do not bound a triangle");
  {
    // Every corner pair must be joined by exactly one of the edges.
    std::set<std::pair<int, int>> pairs;
    for (int a : edges) {
      int hc = idx.head(a).crossing, tc = idx.tail(a).crossing;
      pairs.insert({std::min(hc, tc), std::max(hc, tc)});
    }
    if (pairs.size() != 3) throw DiagramError("corners do not bound a triangle");
  }

  // A strand must run clear over or clear under the triangle for the slide
  // to exist.
  bool has_over = false, has_under = false;
  for (int a : edges) {
    int s1 = sole_slot(d, idx.tail(a).crossing, a);
    int s2 = sole_slot(d, idx.head(a).crossing, a);
    if (s1 < 0 || s2 < 0) throw DiagramError("degenerate triangle corner");
    if (is_over_slot(s1) && is_over_slot(s2)) has_over = true;
    if (!is_over_slot(s1) && !is_over_slot(s2)) has_under = true;
  }
  if (!has_over || !has_under)
    throw DiagramError("triangle admits no slide");

  // Each strand swaps the order of its two corner passes; crossings keep
  // their strand pair, roles and sign.
  struct NewPass {
    int in, out;
    bool over;
  };
  std::map<int, std::vector<NewPass>> at;  // crossing -> its new passes
  for (int a : edges) {
    int before = idx.pred(a), after = idx.succ(a);
    EndRef t = idx.tail(a), h = idx.head(a);
    bool over_first = is_over_slot(t.slot), over_second = is_over_slot(h.slot);
    // First corner now hosts the outgoing pass, second the incoming one.
    at[t.crossing].push_back({a, after, over_first});
    at[h.crossing].push_back({before, a, over_second});
  }
  std::vector<Crossing> xs = d.crossings;
  for (int c : corners) {
    auto& ps = at[c];
    if (ps.size() != 2 || ps[0].over == ps[1].over)
      throw DiagramError("degenerate triangle corner");
    const NewPass& ov = ps[0].over ? ps[0] : ps[1];
    const NewPass& un = ps[0].over ? ps[1] : ps[0];
    xs[size_t(c)] = make_crossing(un.in, un.out, ov.in, ov.out, idx.sign(c));
  }
  Diagram out = renumber(Diagram{xs, d.components});
  if (!planarity_check(out)) throw DiagramError("slide broke planarity");
  return out;
}

}  // namespace

Diagram apply_reidemeister(const Diagram& d, RMove m, const RSite& site) {
  switch (m) {
    case RMove::R1Plus:
      return do_r1_plus(d, site.arc_a, site.kink_sign);
    case RMove::R1Minus:
      return do_r1_minus(d, site.crossings.at(0));
    case RMove::R2Plus:
      return do_r2_plus(d, site.arc_a, site.arc_b, site.a_over);
    case RMove::R2Minus:
      return do_r2_minus(d, site.crossings.at(0), site.crossings.at(1));
    case RMove::R3:
      return do_r3(d, site.crossings);
  }
  throw DiagramError("unknown move");
}

std::vector<RSite> r1_minus_sites(const Diagram& d) {
  std::vector<RSite> out;
  for (int ci = 0; ci < int(d.crossings.size()); ++ci) {
    const Crossing& x = d.crossings[size_t(ci)];
    for (int sl = 0; sl < 4; ++sl)
      if (x[sl] == x[(sl + 1) % 4]) {
        RSite s;
        s.crossings = {ci};
        out.push_back(s);
        break;
      }
  }
  return out;
}

std::vector<RSite> r2_minus_sites(const Diagram& d) {
  std::vector<RSite> out;
  if (d.crossings.empty()) return out;
  for (const auto& f : faces(d)) {
    if (f.size() != 2) continue;
    int u = f[0].arc, v = f[1].arc;
    if (u == v) continue;
    int c1 = f[0].to.crossing, c2 = f[1].to.crossing;
    if (c1 == c2) continue;
    int u1 = sole_slot(d, c1, u), u2 = sole_slot(d, c2, u);
    int v1 = sole_slot(d, c1, v), v2 = sole_slot(d, c2, v);
    if (u1 < 0 || u2 < 0 || v1 < 0 || v2 < 0) continue;
    // The same strand must run over at both ends (else the bigon is a
    // clasp and removing it would change the link).
    if (is_over_slot(u1) != is_over_slot(u2)) continue;
    if (is_over_slot(v1) != is_over_slot(v2)) continue;
    if (is_over_slot(u1) == is_over_slot(v1)) continue;
    RSite s;
    s.crossings = {c1, c2};
    out.push_back(s);
  }
  return out;
}

std::vector<RSite> r2_plus_sites(const Diagram& d) {
  std::vector<RSite> out;
  for (const auto& f : faces(d)) {
    std::set<int> arcs;
    for (const auto& dart : f) arcs.insert(dart.arc);
    std::vector<int> v(arcs.begin(), arcs.end());
    for (size_t i = 0; i < v.size(); ++i)
      for (size_t j = i + 1; j < v.size(); ++j)
        for (bool over : {true, false}) {
          RSite s;
          s.arc_a = v[i];
          s.arc_b = v[j];
          s.a_over = over;
          out.push_back(s);
        }
  }
  return out;
}

std::vector<RSite> r3_sites(const Diagram& d) {
  std::vector<RSite> out;
  if (d.crossings.empty()) return out;
  DiagramIndex idx(d);
  for (const auto& f : faces(d)) {
    if (f.size() != 3) continue;
    std::set<int> arcs{f[0].arc, f[1].arc, f[2].arc};
    if (arcs.size() != 3) continue;
    std::set<int> corners{f[0].to.crossing, f[1].to.crossing,
                          f[2].to.crossing};
    if (corners.size() != 3) continue;
    bool has_over = false, has_under = false, bad = false;
    for (int a : arcs) {
      int s1 = sole_slot(d, idx.tail(a).crossing, a);
      int s2 = sole_slot(d, idx.head(a).crossing, a);
      if (s1 < 0 || s2 < 0) { bad = true; break; }
      if (is_over_slot(s1) && is_over_slot(s2)) has_over = true;
      if (!is_over_slot(s1) && !is_over_slot(s2)) has_under = true;
    }
    if (bad || !has_over || !has_under) continue;
    RSite s;
    s.crossings = std::vector<int>(corners.begin(), corners.end());
    out.push_back(s);
  }
  return out;
}

}  // namespace knotforge
