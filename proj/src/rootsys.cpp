#include "g2chev/rootsys.hpp"

#include <stdexcept>

namespace g2chev {

const std::array<Root, 12>& all_roots() {
  static const std::array<Root, 12> roots = {{
      {-3, -2}, {-3, -1}, {-2, -1}, {-1, -1}, {-1, 0}, {0, -1},
      {1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2},
  }};
  return roots;
}

bool is_root(const Root& v) {
  for (const Root& r : all_roots())
    if (r == v) return true;
  return false;
}

int canonical_index(const Root& r) {
  const auto& roots = all_roots();
  for (int i = 0; i < 12; ++i)
    if (roots[i] == r) return i;
  throw std::invalid_argument("canonical_index: (" + std::to_string(r.m) + "," +
                              std::to_string(r.n) + ") is not a root");
}

bool root_less(const Root& x, const Root& y) {
  return canonical_index(x) < canonical_index(y);
}

int height(const Root& r) { return r.m + r.n; }

long long inner_raw(int m1, int n1, int m2, int n2) {
  // Gram matrix [[2,-3],[-3,6]].
  return 2LL * m1 * m2 - 3LL * (m1 * n2 + n1 * m2) + 6LL * n1 * n2;
}

long long inner(const Root& r, const Root& s) { return inner_raw(r.m, r.n, s.m, s.n); }

std::array<int, 3> euclidean(const Root& r) {
  return {r.m - 2 * r.n, -r.m + r.n, r.n};
}

std::optional<Root> sum(const Root& r, const Root& s) {
  Root t = r + s;
  if (is_root(t)) return t;
  return std::nullopt;
}

int chain_p(const Root& r, const Root& s) {
  if (!is_root(r) || !is_root(s)) throw std::invalid_argument("chain_p: arguments must be roots");
  if (s == r || s == -r) throw std::invalid_argument("chain_p: requires s != r and s != -r");
  int p = 0;
  while (is_root(s - Root{(p + 1) * r.m, (p + 1) * r.n})) ++p;
  return p;
}

const std::array<RootPair, 4>& extraspecial_pairs() {
  static const std::array<RootPair, 4> pairs = {{
      {kSimpleA, kSimpleB},
      {kSimpleA, {1, 1}},
      {kSimpleA, {2, 1}},
      {kSimpleB, {3, 1}},
  }};
  return pairs;
}

std::string to_string(const Root& r) {
  if (!is_root(r)) throw std::invalid_argument("to_string: not a root");
  std::string out;
  if (r.m != 0) {
    if (r.m == -1) out += "-";
    else if (r.m != 1) out += std::to_string(r.m);
    out += "a";
  }
  if (r.n != 0) {
    if (r.n < 0) out += "-";
    else if (r.m != 0) out += "+";
    int mag = r.n < 0 ? -r.n : r.n;
    if (mag != 1) out += std::to_string(mag);
    out += "b";
  }
  return out;
}

namespace {

// Parses "[-][k]a" or "[-][k]b" starting at pos; returns the coefficient via out.
// Leading '+' is consumed by the caller.
bool parse_term(const std::string& s, size_t& pos, char letter, int& out) {
  size_t p = pos;
  int sign = 1;
  if (p < s.size() && s[p] == '-') { sign = -1; ++p; }
  int mag = 1;
  if (p < s.size() && s[p] >= '1' && s[p] <= '9') { mag = s[p] - '0'; ++p; }
  if (p >= s.size() || s[p] != letter) return false;
  ++p;
  pos = p;
  out = sign * mag;
  return true;
}

}  // namespace

Root parse_root(const std::string& text) {
  size_t pos = 0;
  Root r{0, 0};
  bool have_a = parse_term(text, pos, 'a', r.m);
  if (have_a && pos < text.size()) {
    size_t p = pos;
    if (text[p] == '+') ++p;  // "a+b"; "a-b" keeps its sign inside the term
    if (!parse_term(text, p, 'b', r.n)) throw std::invalid_argument("parse_root: '" + text + "'");
    pos = p;
  } else if (!have_a) {
    if (!parse_term(text, pos, 'b', r.n)) throw std::invalid_argument("parse_root: '" + text + "'");
  }
  if (pos != text.size() || !is_root(r))
    throw std::invalid_argument("parse_root: '" + text + "' is not a root");
  return r;
}

}  // namespace g2chev
