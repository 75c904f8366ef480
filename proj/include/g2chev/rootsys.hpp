#pragma once

#include <array>
#include <optional>
#include <string>

namespace g2chev {

/// A root of the G2 root system written over the simple roots: m*a + n*b,
/// where a is the short simple root and b the long one.
struct Root {
  int m = 0;
  int n = 0;

  friend constexpr bool operator==(const Root&, const Root&) = default;
  constexpr Root operator-() const { return {-m, -n}; }
  friend constexpr Root operator+(const Root& x, const Root& y) { return {x.m + y.m, x.n + y.n}; }
  friend constexpr Root operator-(const Root& x, const Root& y) { return {x.m - y.m, x.n - y.n}; }
};

inline constexpr Root kSimpleA{1, 0};
inline constexpr Root kSimpleB{0, 1};

/// The 12 roots in canonical order: negatives by descending height of the
/// negated root, then positives by ascending height; height ties put the
/// a-side first (-a before -b, a before b).
const std::array<Root, 12>& all_roots();

bool is_root(const Root& v);

/// Position of r in all_roots(); throws std::invalid_argument if r is not a root.
int canonical_index(const Root& r);

/// Strict canonical order (both arguments must be roots).
bool root_less(const Root& x, const Root& y);

/// Height m + n. Positive roots have positive height.
int height(const Root& r);

/// Inner product from the Gram matrix of (a, b): (a,a)=2, (a,b)=-3, (b,b)=6.
/// Always an integer on the root lattice; short roots have inner(r,r)=2, long 6.
long long inner(const Root& r, const Root& s);

/// Inner product of arbitrary lattice vectors m*a + n*b (the arguments need
/// not be roots); used for squared lengths of pair sums.
long long inner_raw(int m1, int n1, int m2, int n2);

/// Euclidean coordinates of r under a = (1,-1,0), b = (-2,1,1); only used to
/// cross-check the Gram matrix.
std::array<int, 3> euclidean(const Root& r);

/// r + s if that is again a root, otherwise nullopt (in particular for s = -r).
std::optional<Root> sum(const Root& r, const Root& s);

/// Largest p >= 0 with s - p*r still a root (start of the r-chain through s).
/// Requires r, s roots with s != r and s != -r.
int chain_p(const Root& r, const Root& s);

struct RootPair {
  Root r;
  Root s;
  friend constexpr bool operator==(const RootPair&, const RootPair&) = default;
};

/// The four extraspecial pairs in fixed order:
/// (a,b), (a,a+b), (a,2a+b), (b,3a+b).
/// Pair k sums to the k-th non-simple positive root, with the canonically
/// smallest possible first component.
const std::array<RootPair, 4>& extraspecial_pairs();

/// Renders in the table grammar: "a", "-b", "a+b", "3a+2b", "-2a-b".
std::string to_string(const Root& r);

/// Inverse of to_string; throws std::invalid_argument on anything that is not
/// one of the 12 roots in that exact grammar.
Root parse_root(const std::string& text);

}  // namespace g2chev
