#pragma once

#include "knotforge/diagram.hpp"

#include <string>

namespace knotforge {

struct ParseError : std::runtime_error {
  size_t offset;
  int line, col;
  ParseError(const std::string& msg, size_t off, int ln, int cl)
      : std::runtime_error(msg + " at " + std::to_string(ln) + ":" +
                           std::to_string(cl)),
        offset(off), line(ln), col(cl) {}
};

// "X[1,4,2,5];X[3,6,4,1] / (1..6)" -- crossings then component arc lists.
// Component entries are single labels, comma lists or inclusive ranges.
Diagram parse_pd(const std::string& text);

// emit side lives in diagram.hpp as encode(); this is its round-trip mate.
std::string emit_pd(const Diagram& d);

// "O1+U2+O3+U1+O2+U3+" -- signed Gauss code, components ';'-separated.
// The empty component "()" form is not used here; circles are not
// expressible and parse as errors.
Diagram parse_gauss(const std::string& text);
std::string emit_gauss(const Diagram& d);

// "s=3 w=[1,-2,1,-2]"
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;
};
BraidWord parse_braid(const std::string& text);

// {"crossings":[[a,b,c,d],...],"components":[[...],...]}
Diagram parse_diagram_json(const std::string& text);
std::string emit_diagram_json(const Diagram& d);

}  // namespace knotforge
