#include "knotforge/invariants.hpp"

#include "knotforge/moves.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace knotforge {

namespace {

int g_state_sum_limit = 20;

struct FlatDsu {
  std::vector<int> p;
  void reset(int n) {
    p.resize(size_t(n));
    std::iota(p.begin(), p.end(), 0);
  }
  int find(int x) {
    while (p[size_t(x)] != x) {
      p[size_t(x)] = p[size_t(p[size_t(x)])];
      x = p[size_t(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[size_t(a)] = b;
  }
};

}  // namespace

int state_sum_limit() { return g_state_sum_limit; }
void set_state_sum_limit(int v) { g_state_sum_limit = v; }

LaurentPoly kauffman_bracket(const Diagram& d) {
  static std::map<Diagram, LaurentPoly> memo;
  Diagram key = canonical_form(d);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int c = int(key.crossings.size());
  if (c > g_state_sum_limit)
    throw GuardExceeded("state sum over " + std::to_string(c) +
                        " crossings exceeds the limit of " +
                        std::to_string(g_state_sum_limit));
  // Dense arc ids.
  std::map<int, int> id;
  for (const auto& comp : key.components)
    for (int a : comp) {
      int nid = int(id.size());
      id[a] = nid;
    }
  const int n = int(id.size());
  std::vector<std::array<int, 4>> slots(size_t(c), std::array<int, 4>{});
  for (int i = 0; i < c; ++i)
    for (int k = 0; k < 4; ++k)
      slots[size_t(i)][size_t(k)] = id.at(key.crossings[size_t(i)][k]);

  // loops[state] bucketed by (#A - #B); counts fit in long for c <= 30.
  std::vector<std::vector<long>> hist(size_t(2 * c + 1));
  for (auto& h : hist) h.assign(size_t(n + 2), 0);
  FlatDsu dsu;
  for (long mask = 0; mask < (1L << c); ++mask) {
    dsu.reset(n);
    int a_cnt = 0;
    for (int i = 0; i < c; ++i) {
      const auto& s = slots[size_t(i)];
      if (mask >> i & 1) {
        ++a_cnt;
        dsu.unite(s[0], s[1]);
        dsu.unite(s[2], s[3]);
      } else {
        dsu.unite(s[0], s[3]);
        dsu.unite(s[1], s[2]);
      }
    }
    int loops = 0;
    for (int v = 0; v < n; ++v)
      if (dsu.find(v) == v) ++loops;
    ++hist[size_t(2 * a_cnt)][size_t(loops)];
  }

  LaurentPoly delta("A");
  delta.set_coeff(2, Int(-1));
  delta.set_coeff(-2, Int(-1));
  std::vector<LaurentPoly> dpow{LaurentPoly::constant("A", Int(1))};
  for (int k = 1; k <= n; ++k) dpow.push_back(dpow.back() * delta);

  LaurentPoly out("A");
  for (int twice_a = 0; twice_a <= 2 * c; twice_a += 2) {
    int exp = twice_a - c;  // #A - #B
    for (int loops = 1; loops <= n + 1; ++loops) {
      long cnt = loops <= n ? hist[size_t(twice_a)][size_t(loops)] : 0;
      if (!cnt) continue;
      LaurentPoly term = dpow[size_t(loops - 1)];
      LaurentPoly mono = LaurentPoly::monomial("A", exp, Int(cnt));
      out = out + mono * term;
    }
  }
  memo[key] = out;
  return out;
}

LaurentPoly jones(const Diagram& d) {
  LaurentPoly br = kauffman_bracket(d);
  int w = writhe(d);
  // (-A^3)^(-w) * <D>, then A = 1/u.
  LaurentPoly norm = LaurentPoly::monomial("A", -3 * w, (w % 2) ? Int(-1) : Int(1));
  return (norm * br).stretch(-1, "u");
}

LaurentPoly jones_t(const Diagram& d) {
  LaurentPoly ju = jones(d);
  LaurentPoly out("t");
  for (const auto& [e, cf] : ju.terms()) {
    if (e % 4 != 0)
      throw DiagramError("u-exponent " + std::to_string(e) +
                         " is not divisible by 4; no t form");
    out.set_coeff(e / 4, cf);
  }
  return out;
}

namespace {

// First crossing met on its under-strand when walking the components in
// listed order, or -1 when the diagram is descending.
int first_bad_crossing(const Diagram& d, const DiagramIndex& idx) {
  std::set<int> visited;
  for (const auto& comp : d.components)
    for (int a : comp) {
      EndRef h = idx.head(a);
      if (!h.valid()) continue;
      if (visited.insert(h.crossing).second && h.slot == 0) return h.crossing;
    }
  return -1;
}

// cap = highest z-degree still wanted; kUncapped computes the full
// polynomial.  Every smoothing costs one degree, so subtrees past the cap
// are dead and the capped tree is polynomial in the crossing number.
constexpr int kUncapped = std::numeric_limits<int>::max();

LaurentPoly conway_rec(const Diagram& d, int cap,
                       std::map<int, std::map<Diagram, LaurentPoly>>& memos) {
  if (cap < 0) return LaurentPoly("z");
  auto& memo = memos[cap];
  Diagram key = canonical_form(d);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  DiagramIndex idx(d);
  int bad = first_bad_crossing(d, idx);
  LaurentPoly result("z");
  if (bad < 0) {
    // Descending diagrams are unknots or split stacks of them.
    if (d.components.size() == 1) result.set_coeff(0, Int(1));
  } else {
    int sgn = idx.sign(bad);
    Diagram switched = d;  // same labels so the walk resumes further along
    {
      const Crossing& x = d.crossings[size_t(bad)];
      int k = sgn > 0 ? 3 : 1;
      Crossing y;
      for (int i = 0; i < 4; ++i) y[i] = x[(i + k) % 4];
      switched.crossings[size_t(bad)] = y;
    }
    int child = cap == kUncapped ? kUncapped : cap - 1;
    LaurentPoly z = LaurentPoly::monomial("z", 1, Int(1));
    LaurentPoly smooth_part =
        z * conway_rec(oriented_smoothing(d, bad), child, memos);
    LaurentPoly switch_part = conway_rec(switched, cap, memos);
    result = sgn > 0 ? switch_part + smooth_part : switch_part - smooth_part;
  }
  memo[key] = result;
  return result;
}

std::map<int, std::map<Diagram, LaurentPoly>>& conway_memos() {
  static std::map<int, std::map<Diagram, LaurentPoly>> memos;
  return memos;
}

}  // namespace

LaurentPoly conway_skein(const Diagram& d) {
  return conway_rec(renumber(d), kUncapped, conway_memos());
}

Int arf(const Diagram& d) {
  if (d.components.size() != 1)
    throw DiagramError("arf needs a one-component diagram");
  Int c2 = conway_coefficient(2, d);
  Int r = c2 % 2;
  return r < 0 ? r + 2 : r;
}

namespace {

// Strands: arcs glued across over-passes (the Wirtinger generators).
struct StrandCols {
  int strands = 0;
  std::vector<std::array<int, 3>> cols;  // per crossing: over, in, out
  std::vector<int> sign;
};

StrandCols strand_cols(const Diagram& d) {
  DiagramIndex idx(d);
  std::map<int, int> id;
  std::vector<int> arcs = idx.all_arcs();
  FlatDsu dsu;
  dsu.reset(int(arcs.size()));
  for (size_t i = 0; i < arcs.size(); ++i) id[arcs[i]] = int(i);
  for (int ci = 0; ci < int(d.crossings.size()); ++ci) {
    int oi = d.crossings[size_t(ci)][idx.over_in_slot(ci)];
    int oo = d.crossings[size_t(ci)][idx.over_out_slot(ci)];
    dsu.unite(id.at(oi), id.at(oo));
  }
  std::map<int, int> root_col;
  for (size_t i = 0; i < arcs.size(); ++i) {
    int r = dsu.find(int(i));
    if (!root_col.count(r)) {
      int col = int(root_col.size());
      root_col[r] = col;
    }
  }
  StrandCols sc;
  sc.strands = int(root_col.size());
  for (int ci = 0; ci < int(d.crossings.size()); ++ci) {
    const Crossing& x = d.crossings[size_t(ci)];
    sc.cols.push_back({root_col.at(dsu.find(id.at(x[idx.over_in_slot(ci)]))),
                       root_col.at(dsu.find(id.at(x[0]))),
                       root_col.at(dsu.find(id.at(x[2])))});
    sc.sign.push_back(idx.sign(ci));
  }
  return sc;
}

// Coloring relation matrix, rows = crossings: 2*over - in - out.
IntMatrix strand_matrix(const Diagram& d, int* strand_count) {
  StrandCols sc = strand_cols(d);
  *strand_count = sc.strands;
  IntMatrix m(int(d.crossings.size()), sc.strands);
  for (int ci = 0; ci < int(d.crossings.size()); ++ci) {
    m.at(ci, sc.cols[size_t(ci)][0]) += 2;
    m.at(ci, sc.cols[size_t(ci)][1]) -= 1;
    m.at(ci, sc.cols[size_t(ci)][2]) -= 1;
  }
  return m;
}

// One-component diagrams only.  Fox calculus on the Wirtinger presentation
// gives rows (1-t)|over + t|in - 1|out at positive crossings and, after
// scaling by the unit t, (t-1)|over + 1|in - t|out at negative ones.  The
// determinant of the matrix with one row and one column deleted is the
// Alexander polynomial up to +-t^k; every entry has degree <= 1, so the
// determinant has degree < c and c integer samples pin it down.
LaurentPoly conway_alexander(const Diagram& d) {
  const int c = int(d.crossings.size());
  LaurentPoly one = LaurentPoly::constant("z", Int(1));
  if (c == 0) return one;
  StrandCols sc = strand_cols(d);
  if (sc.strands != c)
    throw DiagramError("strand count does not match crossings");
  if (c == 1) return one;  // the minor is 1x1 with unit entry

  std::vector<Rat> xs, ys;
  for (int v = 2; v < c + 2; ++v) {
    IntMatrix m(c - 1, c - 1);
    Int t(v);
    for (int ci = 0; ci + 1 < c; ++ci) {
      const auto& [over, in, out] = sc.cols[size_t(ci)];
      auto add = [&](int col, const Int& val) {
        if (col + 1 < c) m.at(ci, col) += val;
      };
      if (sc.sign[size_t(ci)] > 0) {
        add(over, 1 - t);
        add(in, t);
        add(out, -1);
      } else {
        add(over, t - 1);
        add(in, 1);
        add(out, -t);
      }
    }
    xs.push_back(Rat(v));
    ys.push_back(Rat(bareiss_det(m)));
  }

  // Newton interpolation, degree < c.
  std::vector<Rat> coef = ys;
  for (size_t j = 1; j < coef.size(); ++j)
    for (size_t i = coef.size(); i-- > j;)
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  LaurentPoly p("t");
  for (size_t i = coef.size(); i-- > 0;) {
    LaurentPoly shifted("t");
    for (const auto& [e, cf] : p.terms()) {
      shifted.set_coeff(e + 1, shifted.coeff(e + 1) + cf);
      shifted.set_coeff(e, shifted.coeff(e) - cf * numerator(xs[i]));
    }
    Rat c0 = coef[i];
    if (denominator(c0) != 1)
      throw DiagramError("alexander interpolation left a fraction");
    shifted.set_coeff(0, shifted.coeff(0) + numerator(c0));
    p = shifted;
  }
  if (p.is_zero())
    throw DiagramError("alexander determinant vanished on a knot");

  // Normalize to the symmetric representative with value 1 at t = 1.
  long span = p.max_exp() - p.min_exp();
  if (span % 2)
    throw DiagramError("alexander polynomial has odd span");
  LaurentPoly t_shift =
      LaurentPoly::monomial("t", -(p.max_exp() + p.min_exp()) / 2, Int(1));
  p = p * t_shift;
  Rat at1 = p.eval(Rat(1));
  if (at1 == -1) p = -p;
  else if (at1 != 1)
    throw DiagramError("alexander polynomial is not 1 at t=1");
  for (const auto& [e, cf] : p.terms())
    if (p.coeff(-e) != cf)
      throw DiagramError("alexander polynomial is not symmetric");

  // t + 1/t = w + 2 with w = z^2: rewrite a_0 + sum a_k (t^k + t^-k) using
  // p_k = (w+2) p_{k-1} - p_{k-2}, p_0 = 2, p_1 = w + 2.
  LaurentPoly pk_prev = LaurentPoly::constant("w", Int(2));
  LaurentPoly pk = LaurentPoly::monomial("w", 1, Int(1)) +
                   LaurentPoly::constant("w", Int(2));
  LaurentPoly acc = LaurentPoly::constant("w", p.coeff(0));
  for (long k = 1; k <= p.max_exp(); ++k) {
    Int ak = p.coeff(k);
    if (ak != 0) acc = acc + LaurentPoly::constant("w", ak) * pk;
    LaurentPoly next = (LaurentPoly::monomial("w", 1, Int(1)) +
                        LaurentPoly::constant("w", Int(2))) *
                           pk -
                       pk_prev;
    pk_prev = pk;
    pk = next;
  }
  return acc.stretch(2, "z");
}

std::map<Diagram, LaurentPoly>& alexander_memo() {
  static std::map<Diagram, LaurentPoly> memo;
  return memo;
}

LaurentPoly conway_knot(const Diagram& d) {
  auto& memo = alexander_memo();
  Diagram key = canonical_form(d);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  LaurentPoly out = conway_alexander(key);
  memo[key] = out;
  return out;
}

}  // namespace

LaurentPoly conway(const Diagram& d) {
  if (d.components.size() == 1) return conway_knot(d);
  return conway_skein(d);
}

Int conway_coefficient(int n, const Diagram& d) {
  if (d.components.size() == 1) return conway_knot(d).coeff(n);
  return conway_rec(renumber(d), n, conway_memos()).coeff(n);
}

Int determinant(const Diagram& d) {
  int strands = 0;
  IntMatrix m = strand_matrix(d, &strands);
  if (int(d.crossings.size()) == 0)
    return d.components.size() == 1 ? Int(1) : Int(0);
  if (strands != m.rows) return 0;  // a component floats free: split diagram
  IntMatrix minor(m.rows - 1, m.cols - 1);
  for (int i = 0; i + 1 < m.rows; ++i)
    for (int j = 0; j + 1 < m.cols; ++j) minor.at(i, j) = m.at(i, j);
  Int det = bareiss_det(minor);
  return det < 0 ? -det : det;
}

Int colorings(const Diagram& d, const Int& m) {
  int strands = 0;
  IntMatrix mat = strand_matrix(d, &strands);
  return count_solutions_mod(mat, m);
}

Int colorings_bruteforce(const Diagram& d, long m) {
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  int strands = 0;
  IntMatrix mat = strand_matrix(d, &strands);
  if (strands > 24) throw GuardExceeded("too many strands for brute force");
  // Group relations by the highest strand they mention so each DFS level
  // checks everything newly decided.
  std::vector<std::vector<int>> by_level(size_t(strands), std::vector<int>{});
  for (int r = 0; r < mat.rows; ++r) {
    int hi = -1;
    for (int c = 0; c < mat.cols; ++c)
      if (mat.at(r, c) != 0) hi = c;
    if (hi < 0) continue;  // all-zero relation holds trivially
    by_level[size_t(hi)].push_back(r);
  }
  std::vector<long> color(size_t(strands), 0);
  Int count(0);
  std::function<void(int)> dfs = [&](int lvl) {
    if (lvl == strands) {
      count += 1;
      return;
    }
    for (long v = 0; v < m; ++v) {
      color[size_t(lvl)] = v;
      bool ok = true;
      for (int r : by_level[size_t(lvl)]) {
        long acc = 0;
        for (int c = 0; c <= lvl; ++c)
          acc += long(mat.at(r, c)) * color[size_t(c)] % m;
        if (acc % m != 0) { ok = false; break; }
      }
      if (ok) dfs(lvl + 1);
    }
  };
  dfs(0);
  return count;
}

Rat vassiliev_coefficient(int n, const Diagram& d) {
  if (d.components.size() != 1)
    throw DiagramError("coefficient defined for one-component diagrams");
  return substitute_exp(jones(d), Rat(1, 4), n).coeff(n);
}

bool InvariantValue::is_zero() const {
  if (std::holds_alternative<Int>(v_)) return std::get<Int>(v_) == 0;
  if (std::holds_alternative<Rat>(v_)) return std::get<Rat>(v_) == 0;
  return std::get<LaurentPoly>(v_).is_zero();
}

InvariantValue InvariantValue::operator+(const InvariantValue& o) const {
  if (v_.index() != o.v_.index())
    throw std::invalid_argument("mixed value kinds");
  if (std::holds_alternative<Int>(v_))
    return InvariantValue(std::get<Int>(v_) + std::get<Int>(o.v_));
  if (std::holds_alternative<Rat>(v_))
    return InvariantValue(std::get<Rat>(v_) + std::get<Rat>(o.v_));
  return InvariantValue(std::get<LaurentPoly>(v_) +
                        std::get<LaurentPoly>(o.v_));
}

InvariantValue InvariantValue::operator-() const {
  if (std::holds_alternative<Int>(v_))
    return InvariantValue(-std::get<Int>(v_));
  if (std::holds_alternative<Rat>(v_))
    return InvariantValue(-std::get<Rat>(v_));
  return InvariantValue(-std::get<LaurentPoly>(v_));
}

InvariantValue InvariantValue::operator-(const InvariantValue& o) const {
  return *this + (-o);
}

std::string InvariantValue::to_text() const {
  std::ostringstream os;
  if (std::holds_alternative<Int>(v_)) os << std::get<Int>(v_);
  else if (std::holds_alternative<Rat>(v_)) os << std::get<Rat>(v_);
  else os << std::get<LaurentPoly>(v_).to_text();
  return os.str();
}

std::string InvariantValue::kind() const {
  if (std::holds_alternative<Int>(v_)) return "int";
  if (std::holds_alternative<Rat>(v_)) return "rational";
  return "laurent";
}

Invariant lookup_invariant(const std::string& name) {
  auto starts = [&](const char* p) {
    return name.rfind(p, 0) == 0;
  };
  auto suffix_int = [&](size_t at, long lo, long hi) {
    try {
      size_t used = 0;
      long v = std::stol(name.substr(at), &used);
      if (used != name.size() - at || v < lo || v > hi)
        throw std::invalid_argument("");
      return v;
    } catch (...) {
      throw UnknownInvariant("bad parameter in '" + name + "'");
    }
  };
  if (name == "jones")
    return {name, [](const Diagram& d) { return InvariantValue(jones(d)); }};
  if (name == "conway")
    return {name, [](const Diagram& d) { return InvariantValue(conway(d)); }};
  if (name == "det")
    return {name,
            [](const Diagram& d) { return InvariantValue(determinant(d)); }};
  if (name == "arf")
    return {name, [](const Diagram& d) { return InvariantValue(arf(d)); }};
  if (name == "components")
    return {name, [](const Diagram& d) {
              return InvariantValue(Int(component_count(d)));
            }};
  if (starts("colorings:")) {
    long m = suffix_int(10, 2, 1000000);
    return {name, [m](const Diagram& d) {
              return InvariantValue(colorings(d, Int(m)));
            }};
  }
  if (starts("a:")) {
    long n = suffix_int(2, 0, 16);
    return {name, [n](const Diagram& d) {
              return InvariantValue(vassiliev_coefficient(int(n), d));
            }};
  }
  if (starts("c:")) {
    long n = suffix_int(2, 0, 64);
    return {name, [n](const Diagram& d) {
              return InvariantValue(conway_coefficient(int(n), d));
            }};
  }
  throw UnknownInvariant("unknown invariant '" + name + "'");
}

std::vector<std::string> registered_invariant_names() {
  return {"jones",       "conway",      "det",         "arf",
          "components",  "colorings:2", "colorings:3", "colorings:4",
          "colorings:5", "colorings:6", "colorings:7", "a:2",
          "a:3",         "c:2",         "c:3"};
}

}  // namespace knotforge
