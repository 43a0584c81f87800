#ifndef NILMULT_WITT_HPP
#define NILMULT_WITT_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "nilmult/bigint.hpp"

namespace nilmult {

// Moebius function: 1 at 1, 0 when a square divides k, (-1)^s for a
// product of s distinct primes.
int mobius(std::int64_t k);

// Number of basic commutators of weight w on d generators,
// (1/w) * sum over m | w of mobius(m) * d^(w/m). The divisor sum is always
// divisible by w; this is asserted before dividing.
Int chi(std::int64_t w, const Int& d);
Int chi(std::int64_t w, std::int64_t d);

enum class RankBranch { c_ge_n, c_le_n, polynilpotent_c1 };

const char* to_string(RankBranch branch);

// Rank of a multiplier of the free nilpotent group of class n on m
// generators, together with the per-weight Witt counts it sums.
struct RankReport {
  int n = 0;
  int c = 0;
  int m = 0;
  RankBranch branch = RankBranch::c_ge_n;
  Int rank;
  // (weight, chi(weight, m)) in increasing weight; for the polynilpotent
  // branch the rank is chi(2, sum of the counts), not the plain sum.
  std::vector<std::pair<int, Int>> summands;

  friend bool operator==(const RankReport&, const RankReport&) = default;
};

// Rank of the c-nilpotent multiplier: sum of chi(i, m) for i in
// [c+1, c+n] when c >= n, and in [n+1, c+n] when c <= n. Both ranges agree
// at c == n; that equality is asserted there.
RankReport nilpotent_multiplier_rank(int n, int c, int m);

// Rank of the class-row (c,1) polynilpotent multiplier,
// chi(2, chi(c+1, m) + ... + chi(c+n, m)). Established only for c > 2n-2;
// anything else is a DomainError, never an extrapolation.
RankReport polynilpotent_c1_rank(int n, int c, int m);

}  // namespace nilmult

#endif  // NILMULT_WITT_HPP
