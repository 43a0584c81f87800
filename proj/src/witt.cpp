#include "nilmult/witt.hpp"

#include <stdexcept>
#include <string>

#include "nilmult/errors.hpp"

namespace nilmult {

int mobius(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("mobius: argument must be >= 1");
  int sign = 1;
  for (std::int64_t p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    k /= p;
    if (k % p == 0) return 0;
    sign = -sign;
  }
  if (k > 1) sign = -sign;
  return sign;
}

Int chi(std::int64_t w, const Int& d) {
  if (w < 1) throw std::invalid_argument("chi: weight must be >= 1");
  if (d < 0) throw std::invalid_argument("chi: generator count must be >= 0");
  Int sum = 0;
  for (std::int64_t m = 1; m * m <= w; ++m) {
    if (w % m != 0) continue;
    sum += mobius(m) * boost::multiprecision::pow(d, static_cast<unsigned>(w / m));
    if (std::int64_t q = w / m; q != m)
      sum += mobius(q) * boost::multiprecision::pow(d, static_cast<unsigned>(m));
  }
  if (sum % w != 0)
    throw InternalError("chi: divisor sum " + sum.str() + " not divisible by " +
                        std::to_string(w));
  return sum / w;
}

Int chi(std::int64_t w, std::int64_t d) { return chi(w, Int(d)); }

const char* to_string(RankBranch branch) {
  switch (branch) {
    case RankBranch::c_ge_n: return "c_ge_n";
    case RankBranch::c_le_n: return "c_le_n";
    case RankBranch::polynilpotent_c1: return "polynilpotent_c1";
  }
  throw std::invalid_argument("unknown rank branch");
}

namespace {

void require_positive(int n, int c, int m) {
  if (n < 1 || c < 1 || m < 1)
    throw std::invalid_argument("rank parameters must satisfy n, c, m >= 1");
}

Int weight_window_sum(int lo, int hi, int m, std::vector<std::pair<int, Int>>& summands) {
  Int total = 0;
  for (int i = lo; i <= hi; ++i) {
    Int value = chi(i, static_cast<std::int64_t>(m));
    total += value;
    summands.emplace_back(i, std::move(value));
  }
  return total;
}

}  // namespace

RankReport nilpotent_multiplier_rank(int n, int c, int m) {
  require_positive(n, c, m);
  RankReport report;
  report.n = n;
  report.c = c;
  report.m = m;
  if (c >= n) {
    report.branch = RankBranch::c_ge_n;
    report.rank = weight_window_sum(c + 1, c + n, m, report.summands);
    if (c == n) {
      std::vector<std::pair<int, Int>> other;
      if (report.rank != weight_window_sum(n + 1, c + n, m, other))
        throw InternalError("nilpotent_multiplier_rank: branch mismatch at c == n");
    }
  } else {
    report.branch = RankBranch::c_le_n;
    report.rank = weight_window_sum(n + 1, c + n, m, report.summands);
  }
  return report;
}

RankReport polynilpotent_c1_rank(int n, int c, int m) {
  require_positive(n, c, m);
  if (c <= 2 * n - 2)
    throw DomainError("polynilpotent rank is only established for c > 2n-2 (got n=" +
                      std::to_string(n) + ", c=" + std::to_string(c) + ")");
  RankReport report;
  report.n = n;
  report.c = c;
  report.m = m;
  report.branch = RankBranch::polynilpotent_c1;
  Int window = weight_window_sum(c + 1, c + n, m, report.summands);
  report.rank = chi(2, window);
  return report;
}

}  // namespace nilmult
