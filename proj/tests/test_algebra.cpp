#include "knotforge/algebra.hpp"

#include <doctest.h>

#include <random>

using namespace knotforge;

namespace {

LaurentPoly mono(const std::string& v, long e, long c) {
  return LaurentPoly::monomial(v, e, Int(c));
}

}  // namespace

TEST_CASE("laurent arithmetic") {
  LaurentPoly t = mono("t", 1, 1);
  LaurentPoly tinv = mono("t", -1, 1);
  CHECK((t + tinv) * (t - tinv) == mono("t", 2, 1) - mono("t", -2, 1));
  CHECK((t - t).is_zero());
  CHECK(t * LaurentPoly("t") == LaurentPoly("t"));

  LaurentPoly p = t * t - LaurentPoly::constant("t", 3) + tinv;
  CHECK(p.coeff(2) == 1);
  CHECK(p.coeff(0) == -3);
  CHECK(p.coeff(-1) == 1);
  CHECK(p.coeff(5) == 0);
  CHECK(p.min_exp() == -1);
  CHECK(p.max_exp() == 2);
  CHECK(p.eval(2) == Rat(4) - 3 + Rat(1, 2));
}

TEST_CASE("laurent text round trip") {
  LaurentPoly p = mono("u", 16, -1) + mono("u", 12, 1) + mono("u", 4, 1);
  CHECK(LaurentPoly::from_text(p.to_text()) == p);
  CHECK(LaurentPoly::from_text("0").is_zero());
  CHECK(LaurentPoly::from_text("1*z^0 + 1*z^2") ==
        LaurentPoly::constant("z", 1) + mono("z", 2, 1));
  CHECK(LaurentPoly::from_text("1*z^0 - 1*z^2") ==
        LaurentPoly::constant("z", 1) - mono("z", 2, 1));
  CHECK_THROWS(LaurentPoly::from_text("1*z^0 + 1*w^2"));
}

TEST_CASE("laurent stretch") {
  // stretch(-1): mirror in the exponent, used for A -> u^-1.
  LaurentPoly a = mono("A", 3, 2) + mono("A", -4, -1);
  LaurentPoly u = a.stretch(-1, "u");
  CHECK(u.coeff(-3) == 2);
  CHECK(u.coeff(4) == -1);
  CHECK(u.var() == "u");
  // stretch(4) realizes t = u^4.
  CHECK(mono("u", 1, 5).stretch(4, "t") == mono("t", 4, 5));
}

TEST_CASE("exp substitution keeps only low-order data") {
  // With t = e^x, t + t^-1 = 2 + x^2 + O(x^3).
  LaurentPoly p = mono("t", 1, 1) + mono("t", -1, 1);
  TruncatedSeries s = substitute_exp(p, Rat(1), 2);
  CHECK(s.coeff(0) == Rat(2));
  CHECK(s.coeff(1) == Rat(0));
  CHECK(s.coeff(2) == Rat(1));

  // Scaled exponent: t = e^(x/4) gives x^2/16.
  TruncatedSeries s4 = substitute_exp(p, Rat(1, 4), 2);
  CHECK(s4.coeff(2) == Rat(1, 16));
}

TEST_CASE("series multiplication truncates") {
  TruncatedSeries a = TruncatedSeries::exponential(Rat(1), 4);
  TruncatedSeries b = TruncatedSeries::exponential(Rat(-1), 4);
  TruncatedSeries prod = a * b;
  CHECK(prod.coeff(0) == Rat(1));
  for (int k = 1; k <= 4; ++k) CHECK(prod.coeff(k) == Rat(0));
}

TEST_CASE("smith normal form fixed example") {
  IntMatrix a(2, 2);
  a.at(0, 0) = 2;
  a.at(0, 1) = 4;
  a.at(1, 0) = 6;
  a.at(1, 1) = 10;
  SnfResult r = smith_normal_form(a);
  CHECK(r.d.at(0, 0) == 2);
  CHECK(r.d.at(1, 1) == 2);
  CHECK(r.d.at(0, 1) == 0);
  CHECK(r.d.at(1, 0) == 0);
  // U a V = D with unimodular transforms.
  IntMatrix uav = r.u.mul(a).mul(r.v);
  CHECK(uav == r.d);
  Int du = bareiss_det(r.u), dv = bareiss_det(r.v);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
}

TEST_CASE("smith normal form random property") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> entry(-6, 6), dim(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix a(dim(rng), dim(rng));
    for (int i = 0; i < a.rows; ++i)
      for (int j = 0; j < a.cols; ++j) a.at(i, j) = entry(rng);
    SnfResult r = smith_normal_form(a);
    CAPTURE(trial);
    CHECK(r.u.mul(a).mul(r.v) == r.d);
    int lim = a.rows < a.cols ? a.rows : a.cols;
    for (int k = 0; k < lim; ++k) {
      CHECK(r.d.at(k, k) >= 0);
      if (k + 1 < lim && r.d.at(k, k) != 0)
        CHECK(r.d.at(k + 1, k + 1) % r.d.at(k, k) == 0);
    }
    for (int i = 0; i < r.d.rows; ++i)
      for (int j = 0; j < r.d.cols; ++j)
        if (i != j) CHECK(r.d.at(i, j) == 0);
    Int du = bareiss_det(r.u), dv = bareiss_det(r.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
  }
}

namespace {

Int brute_count_mod(const IntMatrix& a, long m) {
  // Enumerate (Z/m)^cols directly.  Only usable for tiny systems.
  std::vector<long> x(size_t(a.cols), 0);
  Int count = 0;
  while (true) {
    bool ok = true;
    for (int i = 0; i < a.rows && ok; ++i) {
      Int s = 0;
      for (int j = 0; j < a.cols; ++j) s += a.at(i, j) * x[size_t(j)];
      if (s % m != 0) ok = false;
    }
    if (ok) ++count;
    int j = 0;
    while (j < a.cols && ++x[size_t(j)] == m) {
      x[size_t(j)] = 0;
      ++j;
    }
    if (j == a.cols) break;
  }
  return count;
}

}  // namespace

TEST_CASE("solution counting matches enumeration") {
  std::mt19937 rng(20260814);
  std::uniform_int_distribution<int> entry(-5, 5), dim(1, 4), mod(2, 9);
  for (int trial = 0; trial < 120; ++trial) {
    IntMatrix a(dim(rng), dim(rng));
    for (int i = 0; i < a.rows; ++i)
      for (int j = 0; j < a.cols; ++j) a.at(i, j) = entry(rng);
    long m = mod(rng);
    CAPTURE(trial);
    CAPTURE(m);
    CHECK(count_solutions_mod(a, Int(m)) == brute_count_mod(a, m));
  }
}

TEST_CASE("solution counting handles degenerate shapes") {
  IntMatrix one(1, 1);
  one.at(0, 0) = 3;
  CHECK(count_solutions_mod(one, Int(6)) == 3);

  IntMatrix zero(2, 3);
  CHECK(count_solutions_mod(zero, Int(5)) == 125);

  IntMatrix wide(1, 2);
  wide.at(0, 0) = 2;
  wide.at(0, 1) = 2;
  CHECK(count_solutions_mod(wide, Int(4)) == 8);
  CHECK(count_solutions_mod(wide, Int(1)) == 1);
}

TEST_CASE("bareiss determinant") {
  IntMatrix a(3, 3);
  long vals[9] = {2, 0, 1, -1, 3, 2, 4, 1, -2};
  for (int i = 0; i < 9; ++i) a.at(i / 3, i % 3) = vals[i];
  CHECK(bareiss_det(a) == -29);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix m(4, 4), mt(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        m.at(i, j) = entry(rng);
        mt.at(j, i) = m.at(i, j);
      }
    CHECK(bareiss_det(m) == bareiss_det(mt));
  }
}
