#include "knotforge/notation.hpp"

#include <json.hpp>

#include <cctype>
#include <map>
#include <sstream>

namespace knotforge {

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;

  explicit Cursor(const std::string& text) : s(text) {}

  [[noreturn]] void fail(const std::string& msg, size_t at) const {
    int line = 1, col = 1;
    for (size_t k = 0; k < at && k < s.size(); ++k) {
      if (s[k] == '\n') { ++line; col = 1; }
      else ++col;
    }
    throw ParseError(msg, at, line, col);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, i); }

  void ws() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool done() {
    ws();
    return i >= s.size();
  }
  char peek() {
    ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) { ++i; return true; }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool eat_word(const char* w) {
    ws();
    size_t j = i, k = 0;
    while (w[k] && j < s.size() && s[j] == w[k]) { ++j; ++k; }
    if (w[k]) return false;
    i = j;
    return true;
  }
  long integer() {
    ws();
    size_t start = i;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    size_t digits = i;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
    if (i == digits) fail("expected integer", start);
    long v = 0;
    for (size_t k = digits; k < i; ++k) {
      v = v * 10 + (s[k] - '0');
      if (v > 1000000000L) fail("integer too large", start);
    }
    return neg ? -v : v;
  }
};

}  // namespace

Diagram parse_pd(const std::string& text) {
  Cursor c(text);
  Diagram d;
  c.ws();
  while (c.peek() == 'X') {
    c.expect('X');
    c.expect('[');
    Crossing x;
    for (int k = 0; k < 4; ++k) {
      if (k) c.expect(',');
      long v = c.integer();
      if (v < 1) c.fail("arc labels are positive");
      x[k] = int(v);
    }
    c.expect(']');
    d.crossings.push_back(x);
    if (!c.eat(';')) break;
  }
  c.expect('/');
  while (c.eat('(')) {
    std::vector<int> comp;
    while (true) {
      long a = c.integer();
      if (a < 1) c.fail("arc labels are positive");
      if (c.eat('.')) {
        c.expect('.');
        long b = c.integer();
        if (b < a) c.fail("descending range");
        if (b - a > 100000) c.fail("range too large");
        for (long v = a; v <= b; ++v) comp.push_back(int(v));
      } else {
        comp.push_back(int(a));
      }
      if (!c.eat(',')) break;
    }
    c.expect(')');
    d.components.push_back(std::move(comp));
  }
  if (d.components.empty()) c.fail("expected at least one component");
  if (!c.done()) c.fail("trailing input");
  return d;
}

std::string emit_pd(const Diagram& d) { return encode(d); }

Diagram parse_gauss(const std::string& text) {
  Cursor c(text);
  struct Event {
    bool over;
    int id;
    int sign;
  };
  std::vector<std::vector<Event>> comps(1);
  while (!c.done()) {
    char ch = c.peek();
    if (ch == ';') {
      c.expect(';');
      comps.push_back({});
      continue;
    }
    if (ch != 'O' && ch != 'U') c.fail("expected 'O' or 'U'");
    ++c.i;
    long id = c.integer();
    if (id < 1) c.fail("crossing ids are positive");
    c.ws();
    int sign;
    if (c.eat('+')) sign = +1;
    else if (c.eat('-')) sign = -1;
    else c.fail("expected '+' or '-'");
    comps.back().push_back({ch == 'O', int(id), sign});
  }
  for (const auto& comp : comps)
    if (comp.empty()) c.fail("empty component");

  Diagram d;
  int next_arc = 1;
  struct Passes {
    int u_in = 0, u_out = 0, o_in = 0, o_out = 0;
    int sign = 0;
    int seen_u = 0, seen_o = 0;
  };
  std::map<int, Passes> xs;
  for (auto& comp : comps) {
    int m = int(comp.size());
    std::vector<int> arcs(size_t(m), 0);
    for (int k = 0; k < m; ++k) arcs[size_t(k)] = next_arc++;
    d.components.push_back(arcs);
    for (int k = 0; k < m; ++k) {
      const Event& e = comp[size_t(k)];
      int in = arcs[size_t((k + m - 1) % m)];
      int out = arcs[size_t(k)];
      Passes& p = xs[e.id];
      if (p.sign == 0) p.sign = e.sign;
      else if (p.sign != e.sign)
        c.fail("crossing " + std::to_string(e.id) + " has conflicting signs",
               0);
      if (e.over) {
        ++p.seen_o;
        p.o_in = in;
        p.o_out = out;
      } else {
        ++p.seen_u;
        p.u_in = in;
        p.u_out = out;
      }
    }
  }
  for (auto& [id, p] : xs) {
    if (p.seen_u != 1 || p.seen_o != 1)
      c.fail("crossing " + std::to_string(id) +
             " needs exactly one O and one U visit", 0);
    Crossing x;
    x[0] = p.u_in;
    x[2] = p.u_out;
    if (p.sign > 0) {
      x[1] = p.o_out;
      x[3] = p.o_in;
    } else {
      x[1] = p.o_in;
      x[3] = p.o_out;
    }
    d.crossings.push_back(x);
  }
  auto problems = validate(d, true);
  if (!problems.empty()) c.fail("code is not realizable: " + problems[0], 0);
  return renumber(d);
}

std::string emit_gauss(const Diagram& d) {
  Diagram r = renumber(d);
  DiagramIndex idx(r);
  std::ostringstream os;
  bool first_comp = true;
  for (const auto& comp : r.components) {
    if (!first_comp) os << ";";
    first_comp = false;
    for (int a : comp) {
      // Token k describes the pass where arc k begins, matching the
      // in/out convention used by parse_gauss.
      EndRef t = idx.tail(a);
      if (!t.valid())
        throw DiagramError("crossingless circle has no Gauss form");
      os << (t.slot == 2 ? 'U' : 'O') << (t.crossing + 1)
         << (idx.sign(t.crossing) > 0 ? '+' : '-');
    }
  }
  return os.str();
}

BraidWord parse_braid(const std::string& text) {
  Cursor c(text);
  BraidWord w;
  if (!c.eat_word("s=")) c.fail("expected 's='");
  long s = c.integer();
  if (s < 1 || s > 1000) c.fail("strand count out of range");
  w.strands = int(s);
  if (!c.eat_word("w=")) c.fail("expected 'w='");
  c.expect('[');
  if (!c.eat(']')) {
    while (true) {
      long v = c.integer();
      if (v == 0 || v >= s || -v >= s) c.fail("letter out of range");
      w.letters.push_back(int(v));
      if (!c.eat(',')) break;
    }
    c.expect(']');
  }
  if (!c.done()) c.fail("trailing input");
  return w;
}

Diagram parse_diagram_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0, 1, 1);
  }
  Diagram d;
  try {
    for (const auto& row : j.at("crossings")) {
      Crossing x;
      for (int k = 0; k < 4; ++k) x[k] = row.at(size_t(k)).get<int>();
      d.crossings.push_back(x);
    }
    for (const auto& comp : j.at("components"))
      d.components.push_back(comp.get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0, 1, 1);
  }
  return d;
}

std::string emit_diagram_json(const Diagram& d) {
  nlohmann::json j;
  j["crossings"] = nlohmann::json::array();
  for (const auto& x : d.crossings)
    j["crossings"].push_back({x[0], x[1], x[2], x[3]});
  j["components"] = d.components;
  return j.dump();
}

}  // namespace knotforge
