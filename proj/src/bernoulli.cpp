#include "dirforms/bernoulli.hpp"

#include <vector>

namespace dirforms {

namespace {

// Tangent numbers T_1..T_m: tan x = sum_k T_k x^(2k-1)/(2k-1)!.
// Classical in-place triangle recurrence; all entries are positive integers.
std::vector<Integer> tangent_numbers(unsigned m) {
  std::vector<Integer> T(m + 1);
  if (m == 0) return T;
  T[1] = 1;
  for (unsigned k = 2; k <= m; ++k) T[k] = (k - 1) * T[k - 1];
  for (unsigned k = 2; k <= m; ++k)
    for (unsigned j = k; j <= m; ++j) T[j] = (j - k) * T[j - 1] + (j - k + 2) * T[j];
  return T;
}

}  // namespace

const Rational& bernoulli_2k(unsigned k) {
  static std::vector<Rational> cache;  // cache[i] = B_{2(i+1)}
  if (k == 0) {
    static const Rational one(1);
    return one;  // convention: not used; B_0 = 1
  }
  if (k > cache.size()) {
    unsigned target = std::max(k, static_cast<unsigned>(cache.size() * 2 + 16));
    std::vector<Integer> T = tangent_numbers(target);
    std::vector<Rational> next(target);
    Integer four_n(4);  // 4^n
    for (unsigned nn = 1; nn <= target; ++nn) {
      // |B_{2n}| = 2n * T_n / (4^n (4^n - 1)), sign (-1)^(n+1)
      Rational v(Integer(2 * nn) * T[nn], four_n * (four_n - 1));
      v.canonicalize();
      if (nn % 2 == 0) v = -v;
      next[nn - 1] = v;
      four_n *= 4;
    }
    cache.swap(next);
  }
  return cache[k - 1];
}

}  // namespace dirforms
