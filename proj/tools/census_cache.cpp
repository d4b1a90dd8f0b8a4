// Prints the expected_table() body for src/census.cpp.  Run after any
// change to an invariant engine and paste the output over the old table.
#include "knotforge/census.hpp"
#include "knotforge/invariants.hpp"

#include <iostream>

using namespace knotforge;

int main() {
  const char* pinned[] = {"det",  "conway",      "jones", "arf",
                          "c:2",  "colorings:3", "components"};
  std::cout << "std::map<std::string, std::map<std::string, std::string>>\n"
               "expected_table() {\n  return {\n";
  for (const auto& e : census()) {
    std::cout << "      {\"" << e.name << "\",\n       {";
    bool first = true;
    for (const char* inv : pinned) {
      if (!first) std::cout << ",\n        ";
      first = false;
      std::cout << "{\"" << inv << "\", \""
                << lookup_invariant(inv).eval(e.diagram).to_text() << "\"}";
    }
    std::cout << "}},\n";
  }
  std::cout << "  };\n}\n";
  return 0;
}
