#include <doctest.h>

#include <numeric>
#include <string>
#include <vector>

#include "nilmult/errors.hpp"
#include "nilmult/witt.hpp"

using namespace nilmult;

namespace {

// Independent count of weight-w basics on d letters: Lyndon words, i.e.
// strings strictly smaller than every proper rotation.
long lyndon_count(int w, int d) {
  long count = 0;
  std::vector<int> word(w, 0);
  const long total = [&] {
    long t = 1;
    for (int i = 0; i < w; ++i) t *= d;
    return t;
  }();
  for (long code = 0; code < total; ++code) {
    long rest = code;
    for (int i = 0; i < w; ++i) {
      word[i] = static_cast<int>(rest % d);
      rest /= d;
    }
    bool lyndon = true;
    for (int shift = 1; shift < w && lyndon; ++shift) {
      for (int i = 0; i < w; ++i) {
        const int a = word[i];
        const int b = word[(i + shift) % w];
        if (a != b) {
          lyndon = a < b;
          break;
        }
        if (i == w - 1) lyndon = false;  // equal to a proper rotation
      }
    }
    if (lyndon) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("mobius values") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(3) == -1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(5) == -1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK(mobius(210) == 1);
  CHECK_THROWS_AS(mobius(0), std::invalid_argument);
  CHECK_THROWS_AS(mobius(-4), std::invalid_argument);
}

TEST_CASE("mobius is multiplicative on coprime arguments") {
  for (std::int64_t a = 1; a <= 60; ++a)
    for (std::int64_t b = 1; b <= 60; ++b) {
      if (std::gcd(a, b) != 1) continue;
      CHECK(mobius(a * b) == mobius(a) * mobius(b));
    }
}

TEST_CASE("chi on two letters") {
  const std::vector<int> expected{2, 1, 2, 3, 6, 9};
  for (int w = 1; w <= 6; ++w) CHECK(chi(w, 2) == expected[w - 1]);
  CHECK(chi(12, 2) == 335);
}

TEST_CASE("chi examples") {
  CHECK(chi(1, 7) == 7);
  CHECK(chi(2, 3) == 3);
  CHECK(chi(2, 9) == 36);
  CHECK(chi(2, 4) == 6);
  CHECK(chi(2, 6) == 15);
  CHECK(chi(2, 10) == 45);
  CHECK(chi(3, 3) == 8);
  CHECK(chi(1, 0) == 0);
  CHECK(chi(5, 1) == 0);
  CHECK_THROWS_AS(chi(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(chi(2, Int(-1)), std::invalid_argument);
}

TEST_CASE("chi matches the Lyndon-word count") {
  for (int d = 1; d <= 3; ++d)
    for (int w = 1; w <= 8; ++w) CHECK(chi(w, d) == lyndon_count(w, d));
  CHECK(chi(2, 9) == lyndon_count(2, 9));
}

TEST_CASE("chi of weight 2 is a binomial") {
  for (int d = 0; d <= 40; ++d) CHECK(chi(2, d) == Int(d) * (d - 1) / 2);
  const Int big("1000000000000");
  CHECK(chi(2, big) == big * (big - 1) / 2);
}

TEST_CASE("nilpotent multiplier ranks") {
  RankReport r = nilpotent_multiplier_rank(2, 2, 2);
  CHECK(r.rank == 5);
  CHECK(r.branch == RankBranch::c_ge_n);
  CHECK(r.summands == std::vector<std::pair<int, Int>>{{3, Int(2)}, {4, Int(3)}});

  CHECK(nilpotent_multiplier_rank(1, 1, 2).rank == 1);

  r = nilpotent_multiplier_rank(3, 1, 2);
  CHECK(r.rank == 3);
  CHECK(r.branch == RankBranch::c_le_n);
  CHECK(r.summands == std::vector<std::pair<int, Int>>{{4, Int(3)}});

  CHECK_THROWS_AS(nilpotent_multiplier_rank(0, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(nilpotent_multiplier_rank(1, 1, -2), std::invalid_argument);
}

TEST_CASE("both rank branches agree at c == n") {
  // the seam is asserted inside nilpotent_multiplier_rank; also pin one value
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) {
      RankReport r = nilpotent_multiplier_rank(n, n, m);
      CHECK(r.branch == RankBranch::c_ge_n);
      Int sum = 0;
      for (int i = n + 1; i <= 2 * n; ++i) sum += chi(i, m);
      CHECK(r.rank == sum);
    }
}

TEST_CASE("polynilpotent ranks") {
  CHECK(polynilpotent_c1_rank(1, 1, 3).rank == 3);
  CHECK(polynilpotent_c1_rank(2, 3, 2).rank == 36);
  CHECK(polynilpotent_c1_rank(1, 1, 3).branch == RankBranch::polynilpotent_c1);

  const std::vector<int> row{0, 3, 15, 45};
  for (int m = 2; m <= 5; ++m) CHECK(polynilpotent_c1_rank(1, 1, m).rank == row[m - 2]);

  // chi(2, sum of the window counts), with the window reported as summands
  RankReport r = polynilpotent_c1_rank(2, 3, 2);
  CHECK(r.summands == std::vector<std::pair<int, Int>>{{4, Int(3)}, {5, Int(6)}});
  CHECK(r.rank == chi(2, Int(9)));
}

TEST_CASE("polynilpotent rank refuses c <= 2n-2") {
  CHECK_THROWS_AS(polynilpotent_c1_rank(2, 2, 2), DomainError);
  CHECK_THROWS_AS(polynilpotent_c1_rank(2, 1, 3), DomainError);
  CHECK_THROWS_AS(polynilpotent_c1_rank(3, 4, 2), DomainError);
  try {
    polynilpotent_c1_rank(2, 2, 2);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("c > 2n-2") != std::string::npos);
  }
  CHECK(polynilpotent_c1_rank(3, 5, 2).branch == RankBranch::polynilpotent_c1);
}
