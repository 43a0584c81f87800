#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <vector>

#include "nilmult/errors.hpp"
#include "nilmult/hall_basis.hpp"
#include "nilmult/magnus.hpp"

using namespace nilmult;

namespace {

MagnusElement::Word word(std::initializer_list<int> letters) {
  MagnusElement::Word w;
  for (int i : letters) w.push_back(static_cast<char>(i));
  return w;
}

// Product of random generator powers: a generic group element.
MagnusElement random_group_element(std::mt19937_64& rng, int d, int truncation) {
  MagnusElement out = MagnusElement::identity(d, truncation);
  const int factors = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < factors; ++i) {
    const int g = 1 + static_cast<int>(rng() % d);
    const long e = static_cast<long>(rng() % 7) - 3;
    out = out * MagnusElement::generator(g, d, truncation).pow(e);
  }
  return out;
}

// Plain Gaussian elimination over exact rationals: the oracle for
// matrix_rank.
int rational_rank(const std::vector<std::vector<Int>>& matrix) {
  using Rat = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Rat>> rows;
  for (const auto& row : matrix) rows.emplace_back(row.begin(), row.end());
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rat factor = rows[r][col] / rows[rank][col];
      for (std::size_t k = col; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("generator embedding") {
  MagnusElement x1 = MagnusElement::generator(1, 2, 3);
  CHECK(x1.coefficient(word({})) == 1);
  CHECK(x1.coefficient(word({1})) == 1);
  CHECK(x1.coefficient(word({2})) == 0);
  CHECK(x1.coefficient(word({1, 1})) == 0);
  CHECK(x1.valuation() == 1);
  CHECK(x1.is_group_element());
  CHECK_FALSE(x1.is_identity());
  CHECK(MagnusElement::identity(2, 3).valuation() == std::nullopt);
}

TEST_CASE("inverse is the alternating geometric series") {
  MagnusElement inv = MagnusElement::generator(1, 1, 5).inverse();
  CHECK(inv.coefficient(word({})) == 1);
  CHECK(inv.coefficient(word({1})) == -1);
  CHECK(inv.coefficient(word({1, 1})) == 1);
  CHECK(inv.coefficient(word({1, 1, 1})) == -1);
  CHECK(inv.coefficient(word({1, 1, 1, 1, 1})) == -1);
}

TEST_CASE("commutator of two generators") {
  MagnusElement x1 = MagnusElement::generator(1, 2, 3);
  MagnusElement x2 = MagnusElement::generator(2, 2, 3);
  MagnusElement c = group_commutator(x2, x1);  // [x2, x1]
  CHECK(c.coefficient(word({})) == 1);
  CHECK(c.coefficient(word({1})) == 0);
  CHECK(c.coefficient(word({2})) == 0);
  CHECK(c.coefficient(word({2, 1})) == 1);
  CHECK(c.coefficient(word({1, 2})) == -1);
  CHECK(c.coefficient(word({1, 1})) == 0);
  CHECK(c.coefficient(word({2, 2})) == 0);
  CHECK(c.valuation() == 2);

  LeadingTermVector lead = leading_term(c);
  CHECK(lead.weight == 2);
  CHECK(lead.coords ==
        std::map<MagnusElement::Word, Int>{{word({1, 2}), Int(-1)}, {word({2, 1}), Int(1)}});
}

TEST_CASE("powers") {
  MagnusElement x1 = MagnusElement::generator(1, 1, 4);
  CHECK(x1.pow(0) == MagnusElement::identity(1, 4));
  CHECK(x1.pow(3) == x1 * x1 * x1);
  CHECK(x1.pow(-2) == x1.inverse() * x1.inverse());
  CHECK(x1.pow(3).coefficient(word({1})) == 3);
  CHECK(x1.pow(3).coefficient(word({1, 1})) == 3);
  CHECK(x1.pow(3).coefficient(word({1, 1, 1})) == 1);
  CHECK(x1.pow(3).coefficient(word({1, 1, 1, 1})) == 0);
}

TEST_CASE("mixed dimensions are rejected") {
  MagnusElement a = MagnusElement::generator(1, 2, 3);
  CHECK_THROWS_AS(a * MagnusElement::generator(1, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(a * MagnusElement::generator(1, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(MagnusElement::generator(3, 2, 3), std::invalid_argument);
}

TEST_CASE("group axioms on random elements") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const int truncation = 2 + static_cast<int>(rng() % 7);
    MagnusElement a = random_group_element(rng, d, truncation);
    MagnusElement b = random_group_element(rng, d, truncation);
    MagnusElement c = random_group_element(rng, d, truncation);
    MagnusElement e = MagnusElement::identity(d, truncation);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * e == a);
    CHECK(e * a == a);
    CHECK(a * a.inverse() == e);
    CHECK(a.inverse() * a == e);
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
  }
}

TEST_CASE("valuation bounds under products and commutators") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2;
    const int truncation = 6;
    MagnusElement a = random_group_element(rng, d, truncation);
    MagnusElement b = random_group_element(rng, d, truncation);
    auto va = a.valuation();
    auto vb = b.valuation();
    if (!va || !vb) continue;
    auto vab = (a * b).valuation();
    if (vab) CHECK(*vab >= std::min(*va, *vb));
    auto vc = group_commutator(a, b).valuation();
    if (vc) CHECK(*vc >= *va + *vb);
  }
}

TEST_CASE("basic commutators witness their weight") {
  HallBasis basis = enumerate_hall_basis(2, 6);
  CommutatorEvaluator eval(2, 6);
  for (const Commutator& c : basis.elements()) {
    const MagnusElement& value = eval(c);
    REQUIRE(value.valuation().has_value());
    CHECK(*value.valuation() == c.weight());
    CHECK(value == eval_commutator(c, 2, 6));
    CHECK(leading_term(value).weight == c.weight());
  }
}

TEST_CASE("leading terms of one weight are independent") {
  HallBasis basis = enumerate_hall_basis(2, 6);
  CommutatorEvaluator eval(2, 6);
  for (int w = 1; w <= 6; ++w) {
    std::vector<LeadingTermVector> terms;
    for (const Commutator& c : basis.weight_stratum(w)) terms.push_back(leading_term(eval(c)));
    CHECK(integer_rank(terms) == static_cast<int>(terms.size()));
  }
}

TEST_CASE("integer_rank flags duplicates and mixed weights") {
  CommutatorEvaluator eval(2, 4);
  HallBasis basis = enumerate_hall_basis(2, 4);
  auto stratum = basis.weight_stratum(3);
  std::vector<LeadingTermVector> terms{leading_term(eval(stratum[0])),
                                       leading_term(eval(stratum[0]))};
  CHECK(integer_rank(terms) == 1);
  terms[1] = leading_term(eval(basis.weight_stratum(2)[0]));
  CHECK_THROWS_AS(integer_rank(terms), std::invalid_argument);
  CHECK(integer_rank(std::vector<LeadingTermVector>{}) == 0);
}

TEST_CASE("matrix_rank on pinned matrices") {
  CHECK(matrix_rank({{Int(1), Int(0)}, {Int(0), Int(1)}}) == 2);
  CHECK(matrix_rank({{Int(1), Int(2)}, {Int(2), Int(4)}}) == 1);
  CHECK(matrix_rank({{Int(0), Int(0)}, {Int(0), Int(0)}}) == 0);
  CHECK(matrix_rank({{Int(2), Int(3), Int(5)},
                     {Int(7), Int(11), Int(13)},
                     {Int(9), Int(14), Int(18)}}) == 2);
  CHECK(matrix_rank({}) == 0);
  // entries large enough that naive integer elimination would overflow
  // fixed-width arithmetic
  const Int big = Int(1) << 200;
  CHECK(matrix_rank({{big, big + 1}, {big - 1, big}}) == 2);
}

TEST_CASE("matrix_rank agrees with rational elimination") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng() % 6;
    const std::size_t cols = 1 + rng() % 6;
    std::vector<std::vector<Int>> matrix(rows, std::vector<Int>(cols));
    for (auto& row : matrix)
      for (auto& entry : row) entry = static_cast<long>(rng() % 7) - 3;
    // plant a dependency now and then
    if (rows >= 2 && trial % 3 == 0) matrix[rows - 1] = matrix[0];
    CHECK(matrix_rank(matrix) == rational_rank(matrix));
  }
}

TEST_CASE("evaluation guards") {
  const Commutator x1 = Commutator::generator(1);
  const Commutator x3 = Commutator::generator(3);
  const Commutator c = Commutator::bracket(Commutator::generator(2), x1);
  CHECK_THROWS_AS(eval_commutator(x3, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(eval_commutator(Commutator::bracket(c, x1), 2, 2), TruncationError);
  CHECK_THROWS_AS(leading_term(MagnusElement::identity(2, 3)), std::invalid_argument);
}
