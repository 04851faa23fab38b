#pragma once

#include <map>
#include <string>

#include "locolor/rational.hpp"

namespace locolor {

// n <= k(2^{k-1} - 1) for graphs without isolated vertices.
long long general_max_order(int k);

// n <= k * sum_{j=1}^{Delta} C(k-1, j); requires Delta <= k-1.
long long max_order_nl_maxdeg(int k, int max_degree);

// n <= (k^3 + k^2 - 2k)/2 + 2(c - 1) for connected graphs of cycle rank c.
long long cycle_rank_max_order(int k, long long cycle_rank);

struct AvgDegBound {
  long long value = 0;
  bool strict = false;      // case (i) is a strict inequality
  std::string case_tag;     // "i" or "ii"

  bool admits(long long n) const { return strict ? n < value : n <= value; }
};

// Order bound for graphs with NL chromatic number k and average degree <= d:
// case (i) when k <= ceil(d): n < ceil(d) * k^{ceil(d)-1};
// case (ii) when k >= ceil(d)+1: n <= k * sum_{i=1}^{a} (a+1-i) C(k-1,i)
// with a = ceil(d).
AvgDegBound max_order_nl_avgdeg(int k, const Rational& avg_degree);

struct ExtremalProfile {
  std::map<int, long long> count_by_degree;  // i -> k*C(k-1,i), i = 1..a
  int max_degree_cap = 0;                    // extremal graphs have Delta <= a+1
};

ExtremalProfile extremal_degree_profile(int k, int a);

// chi_NL of the path P_n; the 3 <= n <= 9 range is a small-case extension of
// the k >= 4 formula (k-1)^2(k-2)/2 < n <= k^2(k-1)/2.
int path_nl_chromatic(long long n);

// Odd cycle length making chi_NL(C_n) = r: n = r(r-1)(r-2)/2, minus one if
// that is even. Requires r >= 4.
long long suitable_odd_cycle_length(int r);

// Vertex count n_i = ((i+1)/2) s^{i-1} n_1 of the level-i family member,
// with n_1 = 4*floor(s^2(s-1)/8). Requires s >= 4, i >= 1.
long long family_order_formula(int s, int level);

// floor((Delta/4)(s^{Delta+1} - s^Delta - 8 s^{Delta-2})).
long long family_lower_bound(int max_degree, int s);

}  // namespace locolor
