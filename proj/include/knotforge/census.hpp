#pragma once

#include "knotforge/diagram.hpp"

#include <map>
#include <string>
#include <vector>

namespace knotforge {

// Small fixed table of low-crossing knots built from braid words (plus two
// connected sums).  `expected` pins invariant values as emitted by the
// engines; `census --verify` and the tests recompute and compare.
struct CensusEntry {
  std::string name;
  int strands = 0;
  std::vector<int> word;       // empty for composites
  std::string summand_a, summand_b;
  Diagram diagram;
  std::map<std::string, std::string> expected;
};

const std::vector<CensusEntry>& census();
const CensusEntry& census_entry(const std::string& name);

// All census diagrams (for corpus-style sweeps).
std::vector<Diagram> census_diagrams();

}  // namespace knotforge
