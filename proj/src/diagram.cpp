#include "knotforge/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace knotforge {

namespace {

struct Resolution {
  std::vector<int> sign, over_in;
  std::map<int, int> succ, pred, comp;
  std::map<int, std::vector<EndRef>> occ;
  std::map<int, EndRef> head, tail;
  std::vector<std::string> errors;

  void err(const std::string& m) { errors.push_back(m); }

  void assign_head(int arc, EndRef e) {
    auto it = head.find(arc);
    if (it != head.end()) {
      if (!(it->second == e))
        err("arc " + std::to_string(arc) + " terminates at two crossings");
      return;
    }
    head[arc] = e;
  }
  void assign_tail(int arc, EndRef e) {
    auto it = tail.find(arc);
    if (it != tail.end()) {
      if (!(it->second == e))
        err("arc " + std::to_string(arc) + " starts at two crossings");
      return;
    }
    tail[arc] = e;
  }
};

Resolution resolve(const Diagram& d) {
  Resolution r;
  r.sign.assign(d.crossings.size(), 0);
  r.over_in.assign(d.crossings.size(), 0);

  for (size_t k = 0; k < d.components.size(); ++k) {
    const auto& cyc = d.components[k];
    if (cyc.empty()) {
      r.err("component " + std::to_string(k) + " is empty");
      continue;
    }
    for (size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i];
      if (r.comp.count(a)) {
        r.err("arc " + std::to_string(a) + " listed twice in components");
        continue;
      }
      r.comp[a] = int(k);
      r.succ[a] = cyc[(i + 1) % cyc.size()];
      r.pred[a] = cyc[(i + cyc.size() - 1) % cyc.size()];
    }
  }

  for (size_t ci = 0; ci < d.crossings.size(); ++ci)
    for (int sl = 0; sl < 4; ++sl) {
      int a = d.crossings[ci][sl];
      if (!r.comp.count(a)) {
        r.err("crossing " + std::to_string(ci) + " references arc " +
              std::to_string(a) + " missing from components");
        continue;
      }
      r.occ[a].push_back({int(ci), sl});
    }
  if (!r.errors.empty()) return r;

  for (const auto& [a, ends] : r.occ)
    if (ends.size() != 2)
      r.err("arc " + std::to_string(a) + " has " +
            std::to_string(ends.size()) + " crossing ends (want 2)");
  for (const auto& [a, k] : r.comp)
    if (d.components[size_t(k)].size() >= 2 && !r.occ.count(a))
      r.err("arc " + std::to_string(a) +
            " meets no crossing but is not a free circle");
  if (!r.errors.empty()) return r;

  // Under-strands: s[0] -> s[2] must follow the component cycle.
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    const Crossing& x = d.crossings[ci];
    if (r.succ.at(x[0]) != x[2]) {
      r.err("crossing " + std::to_string(ci) + ": under-strand " +
            std::to_string(x[0]) + "->" + std::to_string(x[2]) +
            " is not a component step");
      continue;
    }
    r.assign_head(x[0], {int(ci), 0});
    r.assign_tail(x[2], {int(ci), 2});
  }
  if (!r.errors.empty()) return r;

  auto set_over = [&](int ci, int in_slot) {
    const Crossing& x = d.crossings[size_t(ci)];
    r.over_in[size_t(ci)] = in_slot;
    if (in_slot == 1) {
      r.sign[size_t(ci)] = -1;
      r.assign_head(x[1], {ci, 1});
      r.assign_tail(x[3], {ci, 3});
    } else {
      r.sign[size_t(ci)] = +1;
      r.assign_head(x[3], {ci, 3});
      r.assign_tail(x[1], {ci, 1});
    }
  };

  std::vector<int> deferred;
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    const Crossing& x = d.crossings[ci];
    int p = x[1], q = x[3];
    if (p == q) {
      r.err("crossing " + std::to_string(ci) + ": over-strand crosses itself");
      continue;
    }
    bool p2q = r.succ.at(p) == q;
    bool q2p = r.succ.at(q) == p;
    if (!p2q && !q2p)
      r.err("crossing " + std::to_string(ci) + ": over-strand " +
            std::to_string(p) + "/" + std::to_string(q) +
            " is not a component step");
    else if (p2q && !q2p)
      set_over(int(ci), 1);
    else if (q2p && !p2q)
      set_over(int(ci), 3);
    else
      deferred.push_back(int(ci));  // two-arc component, both steps exist
  }
  if (!r.errors.empty()) return r;

  // For a two-arc component crossed by two over-passes the cycle alone does
  // not say which pass is inbound; settle by the already-known end of either
  // arc, or deterministically when the component never goes under.
  while (!deferred.empty()) {
    bool progress = false;
    std::vector<int> still;
    for (int ci : deferred) {
      const Crossing& x = d.crossings[size_t(ci)];
      int p = x[1], q = x[3];
      int in_slot = 0;
      if (auto it = r.head.find(p); it != r.head.end())
        in_slot = (it->second == EndRef{ci, 1}) ? 1 : 3;
      else if (auto it2 = r.tail.find(p); it2 != r.tail.end())
        in_slot = (it2->second == EndRef{ci, 1}) ? 3 : 1;
      else if (auto it3 = r.head.find(q); it3 != r.head.end())
        in_slot = (it3->second == EndRef{ci, 3}) ? 3 : 1;
      else if (auto it4 = r.tail.find(q); it4 != r.tail.end())
        in_slot = (it4->second == EndRef{ci, 3}) ? 1 : 3;
      if (in_slot) {
        set_over(ci, in_slot);
        progress = true;
      } else {
        still.push_back(ci);
      }
    }
    deferred = std::move(still);
    if (!deferred.empty() && !progress) {
      int ci = deferred.front();
      int p = d.crossings[size_t(ci)][1];
      auto ends = r.occ.at(p);
      std::sort(ends.begin(), ends.end());
      r.assign_head(p, ends.front());
    }
  }

  for (const auto& [a, ends] : r.occ) {
    auto hit = r.head.find(a);
    auto tit = r.tail.find(a);
    if (hit == r.head.end() || tit == r.tail.end()) {
      r.err("arc " + std::to_string(a) + " has undetermined direction");
      continue;
    }
    if (hit->second == tit->second)
      r.err("arc " + std::to_string(a) + " starts and ends at the same slot");
  }
  return r;
}

std::string join_errors(const std::vector<std::string>& v) {
  std::string s = "invalid diagram:";
  for (const auto& e : v) s += "\n  " + e;
  return s;
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(size_t(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[size_t(x)] == x ? x : p[size_t(x)] = find(p[size_t(x)]); }
  void unite(int a, int b) { p[size_t(find(a))] = find(b); }
};

}  // namespace

bool Diagram::operator<(const Diagram& o) const {
  auto key = [](const Diagram& d) {
    std::vector<int> k;
    for (const auto& c : d.components) {
      k.push_back(int(c.size()));
      for (int a : c) k.push_back(a);
    }
    k.push_back(-1);
    for (const auto& x : d.crossings)
      for (int i = 0; i < 4; ++i) k.push_back(x[i]);
    return k;
  };
  return key(*this) < key(o);
}

DiagramIndex::DiagramIndex(const Diagram& d) : d_(&d) {
  Resolution r = resolve(d);
  if (!r.errors.empty()) throw DiagramError(join_errors(r.errors));
  sign_ = std::move(r.sign);
  over_in_ = std::move(r.over_in);
  succ_ = std::move(r.succ);
  pred_ = std::move(r.pred);
  comp_ = std::move(r.comp);
  head_ = std::move(r.head);
  tail_ = std::move(r.tail);
}

int DiagramIndex::succ(int arc) const {
  auto it = succ_.find(arc);
  if (it == succ_.end()) throw DiagramError("unknown arc " + std::to_string(arc));
  return it->second;
}

int DiagramIndex::pred(int arc) const {
  auto it = pred_.find(arc);
  if (it == pred_.end()) throw DiagramError("unknown arc " + std::to_string(arc));
  return it->second;
}

int DiagramIndex::comp_of(int arc) const {
  auto it = comp_.find(arc);
  if (it == comp_.end()) throw DiagramError("unknown arc " + std::to_string(arc));
  return it->second;
}

EndRef DiagramIndex::head(int arc) const {
  auto it = head_.find(arc);
  return it == head_.end() ? EndRef{} : it->second;
}

EndRef DiagramIndex::tail(int arc) const {
  auto it = tail_.find(arc);
  return it == tail_.end() ? EndRef{} : it->second;
}

int DiagramIndex::writhe() const {
  int w = 0;
  for (int s : sign_) w += s;
  return w;
}

std::vector<int> DiagramIndex::all_arcs() const {
  std::vector<int> v;
  v.reserve(comp_.size());
  for (const auto& [a, k] : comp_) { (void)k; v.push_back(a); }
  return v;
}

std::vector<std::string> validate(const Diagram& d, bool check_planar) {
  Resolution r = resolve(d);
  if (!r.errors.empty()) return r.errors;
  if (check_planar && !planarity_check(d))
    return {"diagram is not planar with the given crossing rotations"};
  return {};
}

std::vector<Face> faces(const Diagram& d) {
  DiagramIndex idx(d);
  std::set<EndRef> used;
  std::vector<Face> out;
  for (size_t ci = 0; ci < d.crossings.size(); ++ci)
    for (int sl = 0; sl < 4; ++sl) {
      EndRef start{int(ci), sl};
      if (used.count(start)) continue;
      Face f;
      EndRef e = start;
      do {
        used.insert(e);
        int a = idx.arc_at(e);
        bool fwd = idx.tail(a) == e;
        EndRef to = fwd ? idx.head(a) : idx.tail(a);
        f.push_back({a, e, to, fwd});
        e = {to.crossing, (to.slot + 1) % 4};
      } while (!(e == start));
      out.push_back(std::move(f));
    }
  return out;
}

bool planarity_check(const Diagram& d) {
  if (d.crossings.empty()) return true;
  DiagramIndex idx(d);
  Dsu dsu(int(d.crossings.size()));
  int edges_total = 0;
  std::vector<int> arcs = idx.all_arcs();
  for (int a : arcs)
    if (idx.has_ends(a)) {
      dsu.unite(idx.head(a).crossing, idx.tail(a).crossing);
      ++edges_total;
    }
  std::map<int, long> v_cnt, e_cnt, f_cnt;
  for (int i = 0; i < int(d.crossings.size()); ++i) ++v_cnt[dsu.find(i)];
  for (int a : arcs)
    if (idx.has_ends(a)) ++e_cnt[dsu.find(idx.head(a).crossing)];
  for (const auto& f : faces(d)) ++f_cnt[dsu.find(f.front().from.crossing)];
  for (const auto& [root, v] : v_cnt)
    if (v - e_cnt[root] + f_cnt[root] != 2) return false;
  return true;
}

namespace {

// Walks one component as a cyclic arc list starting from `start`.
std::vector<int> walk(const DiagramIndex& idx, int start, size_t len) {
  std::vector<int> out;
  out.reserve(len);
  int a = start;
  for (size_t i = 0; i < len; ++i) {
    out.push_back(a);
    a = idx.succ(a);
  }
  return out;
}

Diagram relabel_with(const Diagram& d,
                     const std::vector<std::vector<int>>& ordered_comps) {
  std::map<int, int> m;
  int next = 1;
  Diagram out;
  for (const auto& cyc : ordered_comps) {
    std::vector<int> nc;
    for (int a : cyc) {
      m[a] = next;
      nc.push_back(next);
      ++next;
    }
    out.components.push_back(std::move(nc));
  }
  for (const auto& x : d.crossings) {
    Crossing y;
    for (int i = 0; i < 4; ++i) y[i] = m.at(x[i]);
    out.crossings.push_back(y);
  }
  std::sort(out.crossings.begin(), out.crossings.end(),
            [](const Crossing& a, const Crossing& b) { return a[0] < b[0]; });
  return out;
}

std::vector<int> flat_key(const Diagram& d) {
  std::vector<int> k;
  for (const auto& c : d.components) k.push_back(int(c.size()));
  k.push_back(-1);
  for (const auto& x : d.crossings)
    for (int i = 0; i < 4; ++i) k.push_back(x[i]);
  return k;
}

void split_comps(const Diagram& d, const DiagramIndex& idx,
                 std::vector<std::vector<int>>& crossed,
                 std::vector<int>& circles) {
  for (const auto& cyc : d.components) {
    if (cyc.size() == 1 && !idx.has_ends(cyc[0]))
      circles.push_back(cyc[0]);
    else {
      int start = *std::min_element(cyc.begin(), cyc.end());
      crossed.push_back(walk(idx, start, cyc.size()));
    }
  }
  std::sort(crossed.begin(), crossed.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  std::sort(circles.begin(), circles.end());
}

}  // namespace

Diagram renumber(const Diagram& d) {
  DiagramIndex idx(d);
  std::vector<std::vector<int>> crossed;
  std::vector<int> circles;
  split_comps(d, idx, crossed, circles);
  for (int c : circles) crossed.push_back({c});
  return relabel_with(d, crossed);
}

Diagram canonical_form(const Diagram& d) {
  DiagramIndex idx(d);
  std::vector<std::vector<int>> crossed;
  std::vector<int> circles;
  split_comps(d, idx, crossed, circles);

  // Circles carry no structure beyond their count; only crossed components
  // need to be searched.  Past 6 of them fall back to the stable order (the
  // result is still deterministic, just not relabelling-free).
  std::vector<int> perm(crossed.size());
  std::iota(perm.begin(), perm.end(), 0);
  bool search_perms = crossed.size() <= 6;

  std::optional<Diagram> best;
  std::vector<int> best_key;
  do {
    // All rotation choices for this component order, odometer style.
    std::vector<size_t> rot(crossed.size(), 0);
    while (true) {
      std::vector<std::vector<int>> cand;
      for (size_t i = 0; i < perm.size(); ++i) {
        const auto& cyc = crossed[size_t(perm[i])];
        std::vector<int> rotated;
        for (size_t j = 0; j < cyc.size(); ++j)
          rotated.push_back(cyc[(rot[i] + j) % cyc.size()]);
        cand.push_back(std::move(rotated));
      }
      for (int c : circles) cand.push_back({c});
      Diagram cd = relabel_with(d, cand);
      std::vector<int> key = flat_key(cd);
      if (!best || key < best_key) {
        best = std::move(cd);
        best_key = std::move(key);
      }
      size_t i = 0;
      for (; i < rot.size(); ++i) {
        if (++rot[i] < crossed[size_t(perm[i])].size()) break;
        rot[i] = 0;
      }
      if (i == rot.size()) break;
      if (rot.empty()) break;
    }
    if (crossed.empty()) break;
  } while (search_perms && std::next_permutation(perm.begin(), perm.end()));
  if (!best) {  // no components at all
    return Diagram{};
  }
  return *best;
}

std::string encode(const Diagram& d) {
  std::ostringstream os;
  for (size_t i = 0; i < d.crossings.size(); ++i) {
    if (i) os << ";";
    const Crossing& x = d.crossings[i];
    os << "X[" << x[0] << "," << x[1] << "," << x[2] << "," << x[3] << "]";
  }
  if (!d.crossings.empty()) os << " ";
  os << "/ ";
  for (const auto& c : d.components) {
    bool consecutive = true;
    for (size_t i = 1; i < c.size(); ++i)
      if (c[i] != c[i - 1] + 1) { consecutive = false; break; }
    os << "(";
    if (c.size() == 1)
      os << c[0];
    else if (consecutive)
      os << c.front() << ".." << c.back();
    else
      for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ")";
  }
  return os.str();
}

int component_count(const Diagram& d) { return int(d.components.size()); }
int crossing_count(const Diagram& d) { return int(d.crossings.size()); }

}  // namespace knotforge
