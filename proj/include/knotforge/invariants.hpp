#pragma once

#include "knotforge/algebra.hpp"
#include "knotforge/diagram.hpp"

#include <functional>
#include <variant>

namespace knotforge {

// Raised when a computation would exceed a configured size guard.
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// State-sum crossing cap shared by the bracket-based invariants.
int state_sum_limit();
void set_state_sum_limit(int);

// Bracket state sum in the variable A; loop value -A^2 - A^-2, empty-loop
// normalization <unknot> = 1.
LaurentPoly kauffman_bracket(const Diagram& d);

// Writhe-normalized bracket written in u = A^-1 (so integer knots land on
// u-exponents divisible by 4; the classical variable is t = u^4).
LaurentPoly jones(const Diagram& d);

// Same polynomial in t when every u-exponent is divisible by 4.
LaurentPoly jones_t(const Diagram& d);

// Conway polynomial in z.  Knots go through the Alexander matrix
// determinant; links fall back to skein resolution.
LaurentPoly conway(const Diagram& d);

// Skein-relation evaluation regardless of component count; kept as the
// independent oracle for the matrix path.
LaurentPoly conway_skein(const Diagram& d);

Int conway_coefficient(int n, const Diagram& d);
Int arf(const Diagram& d);  // conway z^2 coefficient mod 2

// |first minor| of the coloring relation matrix (2*over = in + out).
Int determinant(const Diagram& d);

// Number of colorings of the strands by Z/m satisfying every crossing
// relation (counts the trivial ones; m >= 1).
Int colorings(const Diagram& d, const Int& m);

// Independent recount by exhaustive search with constraint pruning.
Int colorings_bruteforce(const Diagram& d, long m);

// Coefficient of x^n after substituting u = e^(x/4) into jones().
Rat vassiliev_coefficient(int n, const Diagram& d);

class InvariantValue {
 public:
  InvariantValue() : v_(Int(0)) {}
  explicit InvariantValue(Int i) : v_(std::move(i)) {}
  explicit InvariantValue(Rat r) : v_(std::move(r)) {}
  explicit InvariantValue(LaurentPoly p) : v_(std::move(p)) {}

  bool is_zero() const;
  InvariantValue operator+(const InvariantValue& o) const;
  InvariantValue operator-(const InvariantValue& o) const;
  InvariantValue operator-() const;
  bool operator==(const InvariantValue& o) const { return v_ == o.v_; }
  bool operator!=(const InvariantValue& o) const { return !(*this == o); }

  std::string to_text() const;
  std::string kind() const;  // "int" | "rational" | "laurent"
  const std::variant<Int, Rat, LaurentPoly>& raw() const { return v_; }

 private:
  std::variant<Int, Rat, LaurentPoly> v_;
};

struct UnknownInvariant : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Invariant {
  std::string name;
  std::function<InvariantValue(const Diagram&)> eval;
};

// Resolves "jones", "conway", "det", "arf", "components", "colorings:m",
// "a:n" (exp-substituted coefficient) and "c:n" (conway coefficient).
Invariant lookup_invariant(const std::string& name);

// The concrete instances exercised by the move-invariance suites.
std::vector<std::string> registered_invariant_names();

}  // namespace knotforge
