#include "g2chev/constants.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace g2chev {

namespace {

int idx(const Root& r) { return canonical_index(r); }

long long len2(const Root& r) { return inner(r, r); }

}  // namespace

const SignCoefficient& ConstantTable::entry(const Root& r, const Root& s) const {
  return cells_[idx(r)][idx(s)];
}

void ConstantTable::set(const Root& r, const Root& s, const SignCoefficient& value) {
  if (!sum(r, s))
    throw std::invalid_argument("ConstantTable::set: position (" + to_string(r) + "," + to_string(s) +
                                ") is structurally zero");
  cells_[idx(r)][idx(s)] = value;
}

int ConstantTable::nonzero_count() const {
  int count = 0;
  for (const auto& row : cells_)
    for (const auto& cell : row)
      if (!cell.is_zero()) ++count;
  return count;
}

std::vector<std::tuple<Root, Root, SignCoefficient>> ConstantTable::nonzero_entries() const {
  std::vector<std::tuple<Root, Root, SignCoefficient>> out;
  const auto& roots = all_roots();
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j)
      if (!cells_[i][j].is_zero()) out.push_back({roots[i], roots[j], cells_[i][j]});
  return out;
}

Seeds Seeds::symbolic() {
  return {{SignCoefficient(1, kMonoE1), SignCoefficient(2, kMonoE2),
           SignCoefficient(3, kMonoE3), SignCoefficient(1, kMonoE4)}};
}

namespace {

// Zero-sum multisets of four roots (canonical indices, ascending, repeats
// allowed) containing no opposite pair. Shared by the solver and the checker.
const std::vector<std::array<int, 4>>& zero_sum_quads() {
  static const std::vector<std::array<int, 4>> quads = [] {
    std::vector<std::array<int, 4>> out;
    const auto& roots = all_roots();
    for (int i = 0; i < 12; ++i)
      for (int j = i; j < 12; ++j)
        for (int k = j; k < 12; ++k)
          for (int l = k; l < 12; ++l) {
            std::array<int, 4> q{i, j, k, l};
            Root total{0, 0};
            for (int x : q) total = total + roots[x];
            if (!(total == Root{0, 0})) continue;
            bool opposite = false;
            for (int x = 0; x < 4 && !opposite; ++x)
              for (int y = x + 1; y < 4 && !opposite; ++y)
                if (roots[q[x]] + roots[q[y]] == Root{0, 0}) opposite = true;
            if (!opposite) out.push_back(q);
          }
    return out;
  }();
  return quads;
}

// The three pairings (12)(34), (23)(14), (31)(24) of a quadruple; factor
// order inside each pair matters for the signs.
constexpr int kPairings[3][2][2] = {{{0, 1}, {2, 3}}, {{1, 2}, {0, 3}}, {{2, 0}, {1, 3}}};

struct Candidate {
  int ri, si;
  SignCoefficient v;
  const char* rule;
};

}  // namespace

ConstantTable solve(const Seeds& seeds, std::optional<std::uint64_t> shuffle_seed) {
  static const long long required_magnitude[4] = {1, 2, 3, 1};
  for (int k = 0; k < 4; ++k)
    if (!(seeds.value[k].c.abs() == Rational(required_magnitude[k])))
      throw std::invalid_argument("solve: seed " + std::to_string(k) + " must have magnitude " +
                                  std::to_string(required_magnitude[k]));

  const auto& roots = all_roots();
  std::array<std::array<std::optional<SignCoefficient>, 12>, 12> known{};

  bool progress = false;
  auto set_checked = [&](int ri, int si, const SignCoefficient& v, const char* rule) {
    if (v.is_zero())
      throw std::logic_error(std::string("solve: ") + rule + " derived zero for N[" +
                             to_string(roots[ri]) + "," + to_string(roots[si]) + "]");
    auto& cell = known[ri][si];
    if (cell) {
      if (!(*cell == v))
        throw std::logic_error(std::string("solve: conflict at N[") + to_string(roots[ri]) + "," +
                               to_string(roots[si]) + "]: " + render(*cell, CoeffStyle::ascii) +
                               " vs " + render(v, CoeffStyle::ascii) + " from " + rule);
    } else {
      cell = v;
      progress = true;
    }
  };

  progress = true;  // make the seed insertions count
  for (int k = 0; k < 4; ++k) {
    const RootPair& p = extraspecial_pairs()[k];
    set_checked(idx(p.r), idx(p.s), seeds.value[k], "seed");
  }

  for (int pass = 0; pass < 100 && progress; ++pass) {
    std::vector<Candidate> cands;

    for (int ri = 0; ri < 12; ++ri)
      for (int si = 0; si < 12; ++si) {
        if (!known[ri][si]) continue;
        const SignCoefficient v = *known[ri][si];
        cands.push_back({si, ri, -v, "antisymmetry"});
        cands.push_back({idx(-roots[ri]), idx(-roots[si]), -v, "negation"});
        if (auto t = sum(roots[ri], roots[si])) {
          // cycle (r, s, r3) with r3 = -(r+s); the common value is v/(r3,r3)
          Root r3 = -*t;
          Rational w(1, len2(r3));
          cands.push_back({si, idx(r3), (w * len2(roots[ri])) * v, "triple"});
          cands.push_back({idx(r3), ri, (w * len2(roots[si])) * v, "triple"});
        }
      }

    for (const auto& q : zero_sum_quads()) {
      // Unknown occurrences across the three live terms; solvable when there
      // is exactly one and its partner factor is known.
      int unknown_count = 0;
      int ux = -1, uy = -1;         // position of the unknown factor
      SignCoefficient upartner;     // its known cofactor
      Rational ulen;                // squared length of its pair sum
      SignCoefficient known_sum;    // sum of fully known live terms
      bool skip = false;
      for (const auto& pairing : kPairings) {
        int x = q[pairing[0][0]], y = q[pairing[0][1]];
        int z = q[pairing[1][0]], w = q[pairing[1][1]];
        Root sxy = roots[x] + roots[y];
        if (!is_root(sxy)) continue;  // structurally dead term
        Rational d(1, inner_raw(sxy.m, sxy.n, sxy.m, sxy.n));
        const auto& f1 = known[x][y];
        const auto& f2 = known[z][w];
        if (f1 && f2) {
          known_sum = known_sum + d * (*f1 * *f2);
        } else if (f1 || f2) {
          if (++unknown_count > 1) { skip = true; break; }
          ux = f1 ? z : x;
          uy = f1 ? w : y;
          upartner = f1 ? *f1 : *f2;
          ulen = Rational(1) / d;
        } else {
          skip = true;  // two unknown factors in one term
          break;
        }
      }
      if (skip) continue;
      if (unknown_count == 1) {
        cands.push_back({ux, uy, -(ulen * known_sum) / upartner, "quadruple"});
      } else if (!known_sum.is_zero()) {
        throw std::logic_error("solve: quadruple identity violated at {" + to_string(roots[q[0]]) +
                               "," + to_string(roots[q[1]]) + "," + to_string(roots[q[2]]) + "," +
                               to_string(roots[q[3]]) + "}");
      }
    }

    if (shuffle_seed) {
      std::mt19937_64 rng(*shuffle_seed + 0x9e3779b97f4a7c15ULL * pass);
      std::shuffle(cands.begin(), cands.end(), rng);
    }
    progress = false;
    for (const Candidate& c : cands) set_checked(c.ri, c.si, c.v, c.rule);
  }

  std::string missing;
  ConstantTable table;
  for (int ri = 0; ri < 12; ++ri)
    for (int si = 0; si < 12; ++si) {
      if (!sum(roots[ri], roots[si])) continue;
      if (known[ri][si]) {
        table.set(roots[ri], roots[si], *known[ri][si]);
      } else {
        missing += " (" + to_string(roots[ri]) + "," + to_string(roots[si]) + ")";
      }
    }
  if (!missing.empty()) throw std::logic_error("solve: closure rules stalled; unknown:" + missing);
  return table;
}

std::vector<std::string> relation_violations(const ConstantTable& table, const SignAssignment& sigma) {
  const auto& roots = all_roots();
  auto n = [&](int ri, int si) { return table.entry(roots[ri], roots[si]).specialize(sigma); };
  auto name = [&](int ri, int si) {
    return "N[" + to_string(roots[ri]) + "," + to_string(roots[si]) + "]";
  };
  std::vector<std::string> out;

  for (int ri = 0; ri < 12; ++ri)
    for (int si = 0; si < 12; ++si)
      if (!(n(ri, si) == -n(si, ri)))
        out.push_back("antisymmetry: " + name(ri, si) + " = " + n(ri, si).to_string() + " but " +
                      name(si, ri) + " = " + n(si, ri).to_string());

  for (int ri = 0; ri < 12; ++ri)
    for (int si = 0; si < 12; ++si) {
      auto t = sum(roots[ri], roots[si]);
      if (!t) continue;
      int i3 = idx(-*t);
      Rational v1 = n(ri, si) / len2(roots[i3]);
      Rational v2 = n(si, i3) / len2(roots[ri]);
      Rational v3 = n(i3, ri) / len2(roots[si]);
      if (!(v1 == v2 && v2 == v3))
        out.push_back("triple {" + to_string(roots[ri]) + "," + to_string(roots[si]) + "," +
                      to_string(roots[i3]) + "}: weighted values " + v1.to_string() + ", " +
                      v2.to_string() + ", " + v3.to_string() + " differ");
    }

  for (int ri = 0; ri < 12; ++ri)
    for (int si = 0; si < 12; ++si) {
      if (!sum(roots[ri], roots[si])) continue;
      long long p = chain_p(roots[ri], roots[si]);
      Rational lhs = n(ri, si) * n(idx(-roots[ri]), idx(-roots[si]));
      Rational rhs = Rational(-(p + 1) * (p + 1));
      if (!(lhs == rhs))
        out.push_back("product rule: " + name(ri, si) + " * " + name(idx(-roots[ri]), idx(-roots[si])) +
                      " = " + lhs.to_string() + ", expected " + rhs.to_string());
    }

  for (const auto& q : zero_sum_quads()) {
    Rational total = 0;
    for (const auto& pairing : kPairings) {
      int x = q[pairing[0][0]], y = q[pairing[0][1]];
      int z = q[pairing[1][0]], w = q[pairing[1][1]];
      Root sxy = roots[x] + roots[y];
      if (!is_root(sxy)) continue;
      total += n(x, y) * n(z, w) / inner_raw(sxy.m, sxy.n, sxy.m, sxy.n);
    }
    if (!total.is_zero())
      out.push_back("quadruple {" + to_string(roots[q[0]]) + "," + to_string(roots[q[1]]) + "," +
                    to_string(roots[q[2]]) + "," + to_string(roots[q[3]]) + "}: sum " +
                    total.to_string());
  }

  return out;
}

std::array<std::array<long long, 12>, 12> specialize_table(const ConstantTable& table,
                                                           const SignAssignment& sigma) {
  const auto& roots = all_roots();
  std::array<std::array<long long, 12>, 12> out{};
  for (int ri = 0; ri < 12; ++ri)
    for (int si = 0; si < 12; ++si)
      out[ri][si] = table.entry(roots[ri], roots[si]).specialize(sigma).as_integer();
  return out;
}

namespace {

std::string cell_text(const ConstantTable& table, const Root& r, const Root& s,
                      const SignAssignment* sigma, CoeffStyle style) {
  const SignCoefficient& v = table.entry(r, s);
  if (v.is_zero()) return "";
  if (sigma) return std::to_string(v.specialize(*sigma).as_integer());
  return render(v, style);
}

}  // namespace

std::string table_to_json(const ConstantTable& table, const SignAssignment* sigma) {
  nlohmann::ordered_json j;
  j["signs"] = sigma ? sigma->to_string() : "symbolic";
  nlohmann::ordered_json entries = nlohmann::ordered_json::object();
  for (const auto& [r, s, v] : table.nonzero_entries()) {
    std::string key = to_string(r) + "|" + to_string(s);
    if (sigma)
      entries[key] = v.specialize(*sigma).as_integer();
    else
      entries[key] = render(v, CoeffStyle::ascii);
  }
  j["entries"] = entries;
  return j.dump(2) + "\n";
}

std::string table_to_csv(const ConstantTable& table, const SignAssignment* sigma) {
  const auto& roots = all_roots();
  std::string out = "r\\s";
  for (const Root& s : roots) out += "," + to_string(s);
  out += "\n";
  for (const Root& r : roots) {
    out += to_string(r);
    for (const Root& s : roots) out += "," + cell_text(table, r, s, sigma, CoeffStyle::ascii);
    out += "\n";
  }
  return out;
}

std::string table_to_ascii(const ConstantTable& table, const SignAssignment* sigma) {
  const auto& roots = all_roots();
  std::vector<std::vector<std::string>> grid(13, std::vector<std::string>(13));
  grid[0][0] = "r\\s";
  for (int i = 0; i < 12; ++i) {
    grid[0][i + 1] = to_string(roots[i]);
    grid[i + 1][0] = to_string(roots[i]);
    for (int j = 0; j < 12; ++j)
      grid[i + 1][j + 1] = cell_text(table, roots[i], roots[j], sigma, CoeffStyle::ascii);
  }
  std::vector<size_t> width(13, 0);
  for (const auto& row : grid)
    for (int c = 0; c < 13; ++c) width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (const auto& row : grid) {
    for (int c = 0; c < 13; ++c) {
      if (c > 0) out += "  ";
      out += std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    out += "\n";
  }
  return out;
}

std::string table_to_latex(const ConstantTable& table, const SignAssignment* sigma) {
  const auto& roots = all_roots();
  std::string out =
      "\\documentclass{article}\n"
      "\\usepackage{amsmath}\n"
      "\\begin{document}\n"
      "\\[\n"
      "\\begin{array}{r|*{12}{c}}\n";
  for (const Root& s : roots) out += " & " + to_string(s);
  out += " \\\\\n\\hline\n";
  for (const Root& r : roots) {
    out += to_string(r);
    for (const Root& s : roots) {
      const SignCoefficient& v = table.entry(r, s);
      out += " & ";
      if (!v.is_zero())
        out += sigma ? std::to_string(v.specialize(*sigma).as_integer())
                     : render(v, CoeffStyle::latex);
    }
    out += " \\\\\n";
  }
  out +=
      "\\end{array}\n"
      "\\]\n"
      "\\end{document}\n";
  return out;
}

}  // namespace g2chev
