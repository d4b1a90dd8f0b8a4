#include "knotforge/algebra.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace knotforge {

LaurentPoly LaurentPoly::monomial(const std::string& var, long exp, Int coeff) {
  LaurentPoly p(var);
  if (coeff != 0) p.terms_[exp] = std::move(coeff);
  return p;
}

Int LaurentPoly::coeff(long exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::set_coeff(long exp, Int c) {
  if (c == 0)
    terms_.erase(exp);
  else
    terms_[exp] = std::move(c);
}

long LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

static void check_vars(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.var() != b.var())
    throw std::invalid_argument("variable mismatch: " + a.var() + " vs " +
                                b.var());
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_vars(*this, o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.set_coeff(e, r.coeff(e) + c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  check_vars(*this, o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.set_coeff(e, r.coeff(e) - c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_vars(*this, o);
  LaurentPoly r(var_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_)
      r.set_coeff(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
  return r;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
  if (var_ != o.var_) return var_ < o.var_;
  return terms_ < o.terms_;
}

LaurentPoly LaurentPoly::stretch(long k, const std::string& new_var) const {
  if (k == 0) throw std::invalid_argument("stretch factor must be nonzero");
  LaurentPoly r(new_var);
  for (const auto& [e, c] : terms_) r.terms_[e * k] = c;
  return r;
}

Rat LaurentPoly::eval(const Rat& x) const {
  if (x == 0) {
    if (!terms_.empty() && min_exp() < 0)
      throw std::domain_error("pole at 0");
    return coeff(0) == 0 ? Rat(0) : Rat(coeff(0));
  }
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat pw(1);
    long n = e >= 0 ? e : -e;
    for (long i = 0; i < n; ++i) pw *= x;
    if (e < 0) pw = Rat(1) / pw;
    acc += Rat(c) * pw;
  }
  return acc;
}

std::string LaurentPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*" << var_ << "^" << e;
  }
  return os.str();
}

std::string LaurentPoly::to_json() const {
  std::ostringstream os;
  os << "{\"var\":\"" << var_ << "\",\"terms\":[";
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << ",";
    first = false;
    os << "[" << e << ",\"" << c << "\"]";
  }
  os << "]}";
  return os.str();
}

LaurentPoly LaurentPoly::from_text(const std::string& s) {
  // Accepts the to_text format: "<int>*<var>^<int>" terms joined by " + ",
  // or "0".
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
  auto parse_int = [&]() -> Int {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
    if (i == start) throw std::invalid_argument("expected integer at position " + std::to_string(start));
    return Int(s.substr(start, i - start));
  };
  skip_ws();
  if (i < s.size() && s[i] == '0' && (i + 1 == s.size() || s.find_first_not_of(" \t", i + 1) == std::string::npos))
    return LaurentPoly("t");
  std::string var;
  LaurentPoly r("t");
  bool have_var = false;
  bool negate = false;
  while (true) {
    Int c = parse_int();
    if (negate) c = -c;
    skip_ws();
    if (i >= s.size() || s[i] != '*') throw std::invalid_argument("expected '*' at position " + std::to_string(i));
    ++i;
    skip_ws();
    size_t vstart = i;
    while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
    if (i == vstart) throw std::invalid_argument("expected variable at position " + std::to_string(vstart));
    std::string v = s.substr(vstart, i - vstart);
    if (!have_var) {
      var = v;
      r = LaurentPoly(var);
      have_var = true;
    } else if (v != var) {
      throw std::invalid_argument("mixed variables '" + var + "' and '" + v + "'");
    }
    skip_ws();
    if (i >= s.size() || s[i] != '^') throw std::invalid_argument("expected '^' at position " + std::to_string(i));
    ++i;
    Int e = parse_int();
    long el = long(e);
    r.set_coeff(el, r.coeff(el) + c);
    skip_ws();
    if (i >= s.size()) break;
    if (s[i] == '+') { negate = false; ++i; }
    else if (s[i] == '-') { negate = true; ++i; }
    else throw std::invalid_argument("expected '+' or '-' at position " + std::to_string(i));
  }
  return r;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  if (order() != o.order()) throw std::invalid_argument("order mismatch");
  TruncatedSeries r(order());
  for (int n = 0; n <= order(); ++n) r.c_[n] = c_[n] + o.c_[n];
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  if (order() != o.order()) throw std::invalid_argument("order mismatch");
  TruncatedSeries r(order());
  for (int n = 0; n <= order(); ++n) r.c_[n] = c_[n] - o.c_[n];
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  if (order() != o.order()) throw std::invalid_argument("order mismatch");
  TruncatedSeries r(order());
  for (int i = 0; i <= order(); ++i)
    for (int j = 0; i + j <= order(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  return r;
}

TruncatedSeries TruncatedSeries::exponential(const Rat& rate, int order) {
  TruncatedSeries r(order);
  Rat term(1);
  r.c_[0] = term;
  for (int n = 1; n <= order; ++n) {
    term = term * rate / n;
    r.c_[n] = term;
  }
  return r;
}

std::string TruncatedSeries::to_text() const {
  std::ostringstream os;
  bool first = true;
  for (int n = 0; n <= order(); ++n) {
    if (c_[n] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[n] << "*x^" << n;
  }
  if (first) os << "0";
  os << " (order " << order() << ")";
  return os.str();
}

TruncatedSeries substitute_exp(const LaurentPoly& p, const Rat& scale,
                               int order) {
  TruncatedSeries r(order);
  for (const auto& [e, c] : p.terms()) {
    TruncatedSeries t = TruncatedSeries::exponential(scale * e, order);
    for (int n = 0; n <= order; ++n)
      r.set_coeff(n, r.coeff(n) + Rat(c) * t.coeff(n));
  }
  return r;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("shape mismatch in mul");
  IntMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

namespace {

void swap_rows(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int k = 0; k < m.cols; ++k) std::swap(m.at(i, k), m.at(j, k));
}

void swap_cols(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int k = 0; k < m.rows; ++k) std::swap(m.at(k, i), m.at(k, j));
}

// row_i -= q * row_t
void row_op(IntMatrix& m, int i, int t, const Int& q) {
  if (q == 0) return;
  for (int k = 0; k < m.cols; ++k) m.at(i, k) -= q * m.at(t, k);
}

void col_op(IntMatrix& m, int j, int t, const Int& q) {
  if (q == 0) return;
  for (int k = 0; k < m.rows; ++k) m.at(k, j) -= q * m.at(k, t);
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m_in) {
  SnfResult res;
  res.d = m_in;
  res.u = IntMatrix::identity(m_in.rows);
  res.v = IntMatrix::identity(m_in.cols);
  IntMatrix& d = res.d;

  int t = 0;
  const int lim = std::min(d.rows, d.cols);
  while (t < lim) {
    // Locate the entry of least absolute value in the working submatrix.
    int pi = -1, pj = -1;
    Int best(0);
    for (int i = t; i < d.rows; ++i)
      for (int j = t; j < d.cols; ++j) {
        if (d.at(i, j) == 0) continue;
        Int mag = abs(d.at(i, j));
        if (pi < 0 || mag < best) {
          best = mag;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // submatrix is zero
    swap_rows(d, t, pi);
    swap_rows(res.u, t, pi);
    swap_cols(d, t, pj);
    swap_cols(res.v, t, pj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < d.rows; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);
        row_op(d, i, t, q);
        row_op(res.u, i, t, q);
        if (d.at(i, t) != 0) {
          // Remainder is strictly smaller; promote it to the pivot.
          swap_rows(d, t, i);
          swap_rows(res.u, t, i);
          dirty = true;
        }
      }
      for (int j = t + 1; j < d.cols; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        col_op(d, j, t, q);
        col_op(res.v, j, t, q);
        if (d.at(t, j) != 0) {
          swap_cols(d, t, j);
          swap_cols(res.v, t, j);
          dirty = true;
        }
      }
    }

    // Pivot must divide every remaining entry to keep the divisibility
    // chain; fold an offending row in and redo the elimination.
    bool redo = false;
    for (int i = t + 1; i < d.rows && !redo; ++i)
      for (int j = t + 1; j < d.cols && !redo; ++j)
        if (d.at(i, j) % d.at(t, t) != 0) {
          row_op(d, t, i, Int(-1));
          row_op(res.u, t, i, Int(-1));
          redo = true;
        }
    if (!redo) ++t;
  }

  for (int i = 0; i < lim; ++i)
    if (d.at(i, i) < 0) {
      for (int k = 0; k < d.cols; ++k) d.at(i, k) = -d.at(i, k);
      for (int k = 0; k < res.u.cols; ++k) res.u.at(i, k) = -res.u.at(i, k);
    }
  return res;
}

Int bareiss_det(const IntMatrix& m_in) {
  if (m_in.rows != m_in.cols) throw std::invalid_argument("det of non-square");
  int n = m_in.rows;
  if (n == 0) return 1;
  IntMatrix m = m_in;
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      swap_rows(m, k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

Int count_solutions_mod(const IntMatrix& m_in, const Int& modulus) {
  if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
  if (modulus == 1) return 1;
  SnfResult s = smith_normal_form(m_in);
  Int count(1);
  int r = 0;
  const int lim = std::min(m_in.rows, m_in.cols);
  for (int i = 0; i < lim; ++i) {
    if (s.d.at(i, i) == 0) break;
    count *= gcd(s.d.at(i, i), modulus);
    ++r;
  }
  for (int j = r; j < m_in.cols; ++j) count *= modulus;
  return count;
}

}  // namespace knotforge
