#include "locolor/bounds.hpp"

#include <stdexcept>

namespace locolor {

namespace {

long long binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  long long result = 1;
  for (int i = 1; i <= r; ++i) result = result * (n - r + i) / i;
  return result;
}

long long ipow(long long base, int exp) {
  long long result = 1;
  for (int i = 0; i < exp; ++i) result *= base;
  return result;
}

}  // namespace

long long general_max_order(int k) {
  if (k < 1) throw std::invalid_argument("general_max_order: k must be >= 1");
  return static_cast<long long>(k) * ((1LL << (k - 1)) - 1);
}

long long max_order_nl_maxdeg(int k, int max_degree) {
  if (k < 1) throw std::invalid_argument("max_order_nl_maxdeg: k must be >= 1");
  if (max_degree < 1)
    throw std::invalid_argument("max_order_nl_maxdeg: Delta must be >= 1");
  if (max_degree >= k)
    throw std::invalid_argument("max_order_nl_maxdeg: requires Delta <= k-1");
  long long sum = 0;
  for (int j = 1; j <= max_degree; ++j) sum += binomial(k - 1, j);
  return k * sum;
}

long long cycle_rank_max_order(int k, long long cycle_rank) {
  if (k < 1) throw std::invalid_argument("cycle_rank_max_order: k must be >= 1");
  if (cycle_rank < 0)
    throw std::invalid_argument("cycle_rank_max_order: negative cycle rank");
  long long kk = k;
  return (kk * kk * kk + kk * kk - 2 * kk) / 2 + 2 * (cycle_rank - 1);
}

AvgDegBound max_order_nl_avgdeg(int k, const Rational& avg_degree) {
  if (k < 2) throw std::invalid_argument("max_order_nl_avgdeg: k must be >= 2");
  if (avg_degree < Rational(1))
    throw std::invalid_argument("max_order_nl_avgdeg: d must be >= 1");
  const long long a = avg_degree.ceil();
  AvgDegBound report;
  if (k <= a) {
    report.case_tag = "i";
    report.strict = true;
    report.value = a * ipow(k, static_cast<int>(a) - 1);
  } else {
    report.case_tag = "ii";
    report.strict = false;
    long long sum = 0;
    for (long long i = 1; i <= a; ++i)
      sum += (a + 1 - i) * binomial(k - 1, static_cast<int>(i));
    report.value = k * sum;
  }
  return report;
}

ExtremalProfile extremal_degree_profile(int k, int a) {
  if (a < 1 || a > k - 1)
    throw std::invalid_argument("extremal_degree_profile: requires 1 <= a <= k-1");
  ExtremalProfile profile;
  for (int i = 1; i <= a; ++i)
    profile.count_by_degree[i] = static_cast<long long>(k) * binomial(k - 1, i);
  profile.max_degree_cap = a + 1;
  return profile;
}

int path_nl_chromatic(long long n) {
  if (n < 1) throw std::invalid_argument("path_nl_chromatic: n must be >= 1");
  if (n == 1) return 1;
  if (n == 2) return 2;
  if (n <= 9) return 3;  // solver-derived extension of the k >= 4 formula
  for (int k = 4;; ++k) {
    long long kk = k;
    if (n <= kk * kk * (kk - 1) / 2) return k;  // lower end follows from k-1
  }
}

long long suitable_odd_cycle_length(int r) {
  if (r < 4) throw std::invalid_argument("suitable_odd_cycle_length: r must be >= 4");
  long long k = static_cast<long long>(r) * (r - 1) * (r - 2) / 2;
  return k % 2 == 1 ? k : k - 1;
}

long long family_order_formula(int s, int level) {
  if (s < 4) throw std::invalid_argument("family_order_formula: s must be >= 4");
  if (level < 1) throw std::invalid_argument("family_order_formula: level must be >= 1");
  long long s2 = static_cast<long long>(s) * s;
  long long n1 = 4 * (s2 * (s - 1) / 8);
  // n_i = ((i+1)/2) s^{i-1} n_1, always integral because n_1 is divisible by 4
  return (level + 1) * ipow(s, level - 1) * n1 / 2;
}

long long family_lower_bound(int max_degree, int s) {
  if (max_degree < 2)
    throw std::invalid_argument("family_lower_bound: Delta must be >= 2");
  if (s < 4) throw std::invalid_argument("family_lower_bound: s must be >= 4");
  Rational value = Rational(max_degree, 4) *
                   Rational(ipow(s, max_degree + 1) - ipow(s, max_degree) -
                            8 * ipow(s, max_degree - 2));
  return value.floor();
}

}  // namespace locolor
