#include "knotforge/finitetype.hpp"

#include "knotforge/notation.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace knotforge {

namespace {

struct BudgetExhausted {};

long popcount(unsigned long x) {
  long n = 0;
  while (x) {
    n += long(x & 1);
    x >>= 1;
  }
  return n;
}

}  // namespace

InvariantValue alternating_sum_crossings(const Invariant& f, const Diagram& d,
                                         const std::vector<int>& crossings,
                                         long* evaluations) {
  {
    std::set<int> s(crossings.begin(), crossings.end());
    if (s.size() != crossings.size())
      throw DiagramError("crossing list has repeats");
  }
  const size_t k = crossings.size();
  std::optional<InvariantValue> acc;
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    std::vector<int> subset;
    for (size_t i = 0; i < k; ++i)
      if (mask >> i & 1) subset.push_back(crossings[i]);
    InvariantValue term = f.eval(crossing_change_set(d, subset));
    if (evaluations) ++*evaluations;
    if (popcount(mask) % 2) term = -term;
    acc = acc ? *acc + term : term;
  }
  return *acc;
}

InvariantValue alternating_sum_twists(const Invariant& f, const Diagram& d,
                                      const std::vector<TwistRegion>& regions,
                                      int n, long* evaluations) {
  const size_t k = regions.size();
  std::optional<InvariantValue> acc;
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    std::vector<int> turns(k, 0);
    for (size_t i = 0; i < k; ++i)
      if (mask >> i & 1) turns[i] = n;
    InvariantValue term = f.eval(insert_full_twists_multi(d, regions, turns));
    if (evaluations) ++*evaluations;
    if (popcount(mask) % 2) term = -term;
    acc = acc ? *acc + term : term;
  }
  return *acc;
}

namespace {

bool q_matches(const TwistRegion& r, const RegionEnumOptions& opt) {
  if (opt.q < 0) return true;
  int q = r.q();
  if (opt.strict || opt.q == 0) return q == opt.q;
  return q % opt.q == 0;
}

// A face path region is only kept if the splice engine can actually embed
// it; this settles cut-order questions for arcs crossed twice.
bool splices(const Diagram& d, const TwistRegion& r) {
  try {
    insert_full_twists(d, r, 1);
    return true;
  } catch (const DiagramError&) {
    return false;
  }
}

void enumerate_circle_regions(const Diagram& d, const RegionEnumOptions& opt,
                              std::set<TwistRegion>& out) {
  std::vector<int> circles;
  for (const auto& c : d.components)
    if (c.size() == 1) circles.push_back(c[0]);
  std::sort(circles.begin(), circles.end());
  // Chords across side-by-side circles: pick per circle a multiplicity
  // (0, 1 or 2 passes) and directions, in label order.
  std::function<void(size_t, TwistRegion&)> rec = [&](size_t i,
                                                      TwistRegion& cur) {
    if (long(out.size()) >= opt.max_regions) return;
    if (int(cur.strands.size()) >= 2 && q_matches(cur, opt) && splices(d, cur))
      out.insert(cur);
    if (i >= circles.size() || int(cur.strands.size()) >= opt.max_strands)
      return;
    for (size_t j = i; j < circles.size(); ++j) {
      int a = circles[j];
      for (int dir : {+1, -1}) {
        cur.strands.push_back({a, dir});
        rec(j + 1, cur);
        if (int(cur.strands.size()) < opt.max_strands) {
          // same circle pierced twice: the return pass runs opposite
          cur.strands.push_back({a, -dir});
          rec(j + 1, cur);
          cur.strands.pop_back();
        }
        cur.strands.pop_back();
      }
    }
  };
  TwistRegion cur;
  rec(0, cur);
}

}  // namespace

std::vector<TwistRegion> enumerate_regions(const Diagram& d,
                                           const RegionEnumOptions& opt) {
  std::set<TwistRegion> out;
  if (d.crossings.empty()) {
    enumerate_circle_regions(d, opt, out);
    return {out.begin(), out.end()};
  }

  DiagramIndex idx(d);
  std::vector<Face> fs = faces(d);
  // Arc -> the faces holding its forward / backward dart.
  std::map<int, int> fwd_face, bwd_face;
  for (size_t fi = 0; fi < fs.size(); ++fi)
    for (const auto& dart : fs[fi]) {
      if (dart.forward) fwd_face[dart.arc] = int(fi);
      else bwd_face[dart.arc] = int(fi);
    }
  std::vector<int> arcs;
  for (int a : idx.all_arcs())
    if (idx.has_ends(a)) arcs.push_back(a);
  std::sort(arcs.begin(), arcs.end());

  // Transverse paths: crossing an arc with dir +1 means moving from the
  // side of its backward dart to the side of its forward dart.
  std::function<void(TwistRegion&, int, std::map<int, int>&)> extend =
      [&](TwistRegion& cur, int face, std::map<int, int>& mult) {
        if (long(out.size()) >= opt.max_regions) return;
        if (int(cur.strands.size()) >= 2 && q_matches(cur, opt) &&
            splices(d, cur))
          out.insert(cur);
        if (int(cur.strands.size()) >= opt.max_strands) return;
        for (const auto& dart : fs[size_t(face)]) {
          int b = dart.arc;
          if (mult[b] >= 2) continue;
          int dir = dart.forward ? -1 : +1;
          int nxt = dart.forward ? bwd_face.at(b) : fwd_face.at(b);
          cur.strands.push_back({b, dir});
          ++mult[b];
          extend(cur, nxt, mult);
          --mult[b];
          cur.strands.pop_back();
        }
      };
  for (int a : arcs) {
    for (int dir : {+1, -1}) {
      TwistRegion cur;
      cur.strands.push_back({a, dir});
      int face = dir > 0 ? fwd_face.at(a) : bwd_face.at(a);
      std::map<int, int> mult;
      mult[a] = 1;
      extend(cur, face, mult);
    }
  }
  return {out.begin(), out.end()};
}

namespace {

void fill_common(ProbeReport& rep, const std::string& invariant,
                 const ProbeOptions& opt, const std::string& mode) {
  rep.invariant = invariant;
  rep.mode = mode;
  rep.order = opt.order;
  rep.n = opt.n;
  rep.q = opt.q;
  rep.strict = opt.strict;
  rep.budget = opt.budget;
}

// Walks all size-k index subsets of [0, n) in lexicographic order.
bool next_combination(std::vector<int>& c, int n) {
  int k = int(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[size_t(i)] < n - (k - i)) {
      ++c[size_t(i)];
      for (int j = i + 1; j < k; ++j) c[size_t(j)] = c[size_t(j) - 1] + 1;
      return true;
    }
  }
  return false;
}

bool reverify_crossings(const Invariant& f, const Diagram& d,
                        const std::vector<int>& subset, Certificate& cert) {
  // Re-walk the sum backwards with freshly built diagrams.
  const size_t k = subset.size();
  std::optional<InvariantValue> acc;
  bool brute = cert.reverify_method == "coloring-bruteforce";
  long m = 0;
  if (brute) m = std::stol(f.name.substr(f.name.find(':') + 1));
  for (long mask = long(1ul << k) - 1; mask >= 0; --mask) {
    std::vector<int> sel;
    for (size_t i = 0; i < k; ++i)
      if (mask >> i & 1) sel.push_back(subset[i]);
    Diagram e = crossing_change_set(d, sel);
    InvariantValue term =
        brute ? InvariantValue(colorings_bruteforce(e, m)) : f.eval(e);
    if (popcount(static_cast<unsigned long>(mask)) % 2) term = -term;
    acc = acc ? *acc + term : term;
  }
  return acc->to_text() == cert.value;
}

bool reverify_twists(const Invariant& f, const Diagram& d,
                     const std::vector<TwistRegion>& regions, int n,
                     Certificate& cert) {
  const size_t k = regions.size();
  std::optional<InvariantValue> acc;
  bool brute = cert.reverify_method == "coloring-bruteforce";
  long m = 0;
  if (brute) m = std::stol(f.name.substr(f.name.find(':') + 1));
  for (long mask = long(1ul << k) - 1; mask >= 0; --mask) {
    std::vector<int> turns(k, 0);
    for (size_t i = 0; i < k; ++i)
      if (mask >> i & 1) turns[i] = n;
    Diagram e = insert_full_twists_multi(d, regions, turns);
    InvariantValue term =
        brute ? InvariantValue(colorings_bruteforce(e, m)) : f.eval(e);
    if (popcount(static_cast<unsigned long>(mask)) % 2) term = -term;
    acc = acc ? *acc + term : term;
  }
  return acc->to_text() == cert.value;
}

std::string reverify_method_for(const std::string& invariant) {
  if (invariant.rfind("colorings:", 0) == 0) return "coloring-bruteforce";
  return "independent-resum";
}

}  // namespace

ProbeReport probe_finite_type(const std::string& invariant,
                              const std::vector<Diagram>& corpus,
                              const ProbeOptions& opt) {
  Invariant f = lookup_invariant(invariant);
  ProbeReport rep;
  fill_common(rep, invariant, opt, "crossings");
  rep.n = 0;
  rep.q = -1;
  const int k = opt.order + 1;
  try {
    for (const Diagram& d0 : corpus) {
      Diagram d = renumber(d0);
      int c = int(d.crossings.size());
      if (c < k) continue;
      std::vector<int> comb(static_cast<size_t>(k), 0);
      for (int i = 0; i < k; ++i) comb[size_t(i)] = i;
      do {
        if (rep.evaluation_count + (1L << k) > opt.budget)
          throw BudgetExhausted{};
        InvariantValue sum =
            alternating_sum_crossings(f, d, comb, &rep.evaluation_count);
        ++rep.tested_count;
        if (!sum.is_zero()) {
          Certificate cert;
          cert.diagram_pd = encode(d);
          cert.crossings = comb;
          cert.value = sum.to_text();
          cert.reverify_method = reverify_method_for(invariant);
          cert.reverified = reverify_crossings(f, d, comb, cert);
          rep.certificate = cert;
          rep.status = "certificate";
          return rep;
        }
      } while (next_combination(comb, c));
    }
    rep.status = "vanished";
  } catch (const BudgetExhausted&) {
    rep.status = "budget_exhausted";
  }
  return rep;
}

ProbeReport probe_nq_finite(const std::string& invariant,
                            const std::vector<Diagram>& corpus,
                            const ProbeOptions& opt) {
  Invariant f = lookup_invariant(invariant);
  ProbeReport rep;
  fill_common(rep, invariant, opt, "twists");
  const int k = opt.order + 1;
  RegionEnumOptions ropt;
  ropt.max_strands = opt.max_strands;
  ropt.q = opt.q;
  ropt.strict = opt.strict;
  try {
    for (const Diagram& d0 : corpus) {
      Diagram d = renumber(d0);
      std::vector<TwistRegion> regions = enumerate_regions(d, ropt);
      int r = int(regions.size());
      if (r < k) continue;
      // Disjointness pre-check data.
      std::vector<std::set<int>> arcs_of;
      arcs_of.resize(size_t(r));
      for (int i = 0; i < r; ++i)
        for (auto& [a, dir] : regions[size_t(i)].strands) {
          (void)dir;
          arcs_of[size_t(i)].insert(a);
        }
      std::vector<int> comb(static_cast<size_t>(k), 0);
      for (int i = 0; i < k; ++i) comb[size_t(i)] = i;
      long collections = 0;
      do {
        bool disjoint = true;
        for (int i = 0; i < k && disjoint; ++i)
          for (int j = i + 1; j < k && disjoint; ++j)
            for (int a : arcs_of[size_t(comb[size_t(i)])])
              if (arcs_of[size_t(comb[size_t(j)])].count(a)) {
                disjoint = false;
                break;
              }
        if (!disjoint) continue;
        std::vector<TwistRegion> sel;
        for (int i = 0; i < k; ++i) sel.push_back(regions[size_t(comb[size_t(i)])]);
        // Arc-disjoint regions may still have crossing transverse paths; such
        // a family has no simultaneous embedding and is not a valid move
        // collection.  If all boxes embed at once, every subset does.
        try {
          insert_full_twists_multi(d, sel, std::vector<int>(size_t(k), opt.n));
        } catch (const DiagramError&) {
          continue;
        }
        if (++collections > opt.max_collections) break;
        if (rep.evaluation_count + (1L << k) > opt.budget)
          throw BudgetExhausted{};
        InvariantValue sum =
            alternating_sum_twists(f, d, sel, opt.n, &rep.evaluation_count);
        ++rep.tested_count;
        if (!sum.is_zero()) {
          Certificate cert;
          cert.diagram_pd = encode(d);
          cert.regions = sel;
          cert.n = opt.n;
          cert.value = sum.to_text();
          cert.reverify_method = reverify_method_for(invariant);
          cert.reverified = reverify_twists(f, d, sel, opt.n, cert);
          rep.certificate = cert;
          rep.status = "certificate";
          return rep;
        }
      } while (next_combination(comb, r));
    }
    rep.status = "vanished";
  } catch (const BudgetExhausted&) {
    rep.status = "budget_exhausted";
  }
  return rep;
}

std::string ProbeReport::to_json() const {
  nlohmann::json j;
  j["tool"] = "knotforge";
  j["version"] = kVersion;
  j["invariant"] = invariant;
  j["mode"] = mode;
  j["order"] = order;
  if (mode == "twists") {
    j["n"] = n;
    j["q"] = q;
    j["strict"] = strict;
  }
  j["tested_count"] = tested_count;
  j["evaluation_count"] = evaluation_count;
  j["budget"] = budget;
  j["status"] = status;
  if (certificate) {
    nlohmann::json c;
    c["diagram"] = certificate->diagram_pd;
    if (mode == "crossings") {
      c["crossings"] = certificate->crossings;
    } else {
      nlohmann::json regions = nlohmann::json::array();
      for (const auto& r : certificate->regions) {
        nlohmann::json strands = nlohmann::json::array();
        for (auto& [a, dir] : r.strands) strands.push_back({a, dir});
        regions.push_back(strands);
      }
      c["regions"] = regions;
      c["n"] = certificate->n;
    }
    c["value"] = certificate->value;
    c["reverified"] = certificate->reverified;
    c["reverify_method"] = certificate->reverify_method;
    j["certificate"] = c;
  }
  return j.dump(2);
}

}  // namespace knotforge
