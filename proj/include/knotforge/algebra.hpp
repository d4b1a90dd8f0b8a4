#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

namespace knotforge {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Laurent polynomial over Int in one named variable.  Zero coefficients are
// never stored; the zero polynomial has an empty term map.
class LaurentPoly {
 public:
  explicit LaurentPoly(std::string var = "t") : var_(std::move(var)) {}

  static LaurentPoly monomial(const std::string& var, long exp, Int coeff);
  static LaurentPoly constant(const std::string& var, Int c) {
    return monomial(var, 0, std::move(c));
  }

  const std::string& var() const { return var_; }
  bool is_zero() const { return terms_.empty(); }
  Int coeff(long exp) const;
  void set_coeff(long exp, Int c);
  long min_exp() const;  // requires nonzero
  long max_exp() const;
  const std::map<long, Int>& terms() const { return terms_; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const {
    return var_ == o.var_ && terms_ == o.terms_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
  bool operator<(const LaurentPoly& o) const;  // lexicographic, for map keys

  // Exponent substitution v -> w^k (k may be negative but not zero).
  LaurentPoly stretch(long k, const std::string& new_var) const;

  // Evaluation at an integer point.
  Rat eval(const Rat& x) const;

  std::string to_text() const;
  std::string to_json() const;
  static LaurentPoly from_text(const std::string& s);

 private:
  std::string var_;
  std::map<long, Int> terms_;
};

// Power series truncated at a fixed order: c_0 + c_1 x + ... + c_N x^N with
// rational coefficients.  Binary operations require matching orders.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = 0) : c_(order + 1, Rat(0)) {}

  int order() const { return int(c_.size()) - 1; }
  const Rat& coeff(int n) const { return c_.at(n); }
  void set_coeff(int n, Rat v) { c_.at(n) = std::move(v); }

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

  // exp(rate * x) truncated at `order`.
  static TruncatedSeries exponential(const Rat& rate, int order);

  std::string to_text() const;

 private:
  std::vector<Rat> c_;
};

// Substitute v = e^(scale*x) into a Laurent polynomial and expand to the
// given order.  A term c*v^e contributes c*exp(e*scale*x).
TruncatedSeries substitute_exp(const LaurentPoly& p, const Rat& scale,
                               int order);

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> a;  // row major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c, Int(0)) {}

  Int& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[size_t(i) * cols + j]; }

  static IntMatrix identity(int n);
  IntMatrix mul(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

struct SnfResult {
  IntMatrix d;  // diagonal, d_i >= 0, d_i | d_{i+1}
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix v;  // unimodular, cols x cols; u*a*v == d
};

SnfResult smith_normal_form(const IntMatrix& m);

// Fraction-free determinant (square matrices).
Int bareiss_det(const IntMatrix& m);

// Number of x in (Z/m)^cols with A x == 0 (mod m).  m >= 1.
Int count_solutions_mod(const IntMatrix& m_in, const Int& modulus);

}  // namespace knotforge
