#pragma once

#include "knotforge/invariants.hpp"
#include "knotforge/moves.hpp"

#include <optional>

namespace knotforge {

inline constexpr const char* kVersion = "0.1.0";

// Sum over subsets T of the listed crossings of (-1)^|T| f(d with T
// switched).  Indices refer to d; they must be distinct.
InvariantValue alternating_sum_crossings(const Invariant& f, const Diagram& d,
                                         const std::vector<int>& crossings,
                                         long* evaluations = nullptr);

// Sum over subsets T of the regions of (-1)^|T| f(d with n full twists
// inserted in every region of T).  Regions must be pairwise arc-disjoint.
InvariantValue alternating_sum_twists(const Invariant& f, const Diagram& d,
                                      const std::vector<TwistRegion>& regions,
                                      int n, long* evaluations = nullptr);

struct RegionEnumOptions {
  int max_strands = 3;     // bundle size cap (>= 2)
  long max_regions = 4096; // hard cap on results
  int q = -1;              // -1: no filter; else see strict
  bool strict = false;     // strict: q() == q; lax: q() % q == 0 (q=0: == 0)
};

// Candidate twist bundles: transverse face paths of the diagram (and, for
// crossingless diagrams, chords through the circles).  Every returned region
// splices planarly.
std::vector<TwistRegion> enumerate_regions(const Diagram& d,
                                           const RegionEnumOptions& opt);

struct ProbeOptions {
  int order = 0;              // vanishing order to test (m)
  long budget = 200000;       // max invariant evaluations
  int n = 1;                  // full twists per selected region
  int q = 0;                  // required linking magnitude (see strict)
  bool strict = false;
  int max_strands = 3;
  long max_collections = 2000;  // per corpus diagram
};

struct Certificate {
  std::string diagram_pd;
  std::vector<int> crossings;          // crossing mode
  std::vector<TwistRegion> regions;    // twist mode
  int n = 0;
  std::string value;                   // the nonvanishing sum
  bool reverified = false;
  std::string reverify_method;
};

struct ProbeReport {
  std::string invariant;
  std::string mode;  // "crossings" | "twists"
  int order = 0;
  int n = 0, q = -1;
  bool strict = false;
  long tested_count = 0;     // alternating sums evaluated
  long evaluation_count = 0; // invariant evaluations consumed
  long budget = 0;
  std::string status;  // "vanished" | "certificate" | "budget_exhausted"
  std::optional<Certificate> certificate;
  std::string to_json() const;
};

// Tests whether the invariant vanishes on all (order+1)-fold switch sums
// over the corpus.
ProbeReport probe_finite_type(const std::string& invariant,
                              const std::vector<Diagram>& corpus,
                              const ProbeOptions& opt);

// Same for (order+1)-fold twist-insertion sums over disjoint regions whose
// linking magnitudes satisfy the q constraint.
ProbeReport probe_nq_finite(const std::string& invariant,
                            const std::vector<Diagram>& corpus,
                            const ProbeOptions& opt);

}  // namespace knotforge
