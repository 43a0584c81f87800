#ifndef NILMULT_MAGNUS_HPP
#define NILMULT_MAGNUS_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "nilmult/bigint.hpp"
#include "nilmult/commutator.hpp"

namespace nilmult {

// A free-group element under x_i -> 1 + X_i, held as a noncommutative
// integer polynomial truncated beyond degree D. Arithmetic is exact, so for
// any element of the free group the image decides membership in gamma_w(F)
// for every w <= D+1: the element lies in gamma_w iff every nonconstant
// term below degree w vanishes.
class MagnusElement {
 public:
  // A monomial X_{i1} X_{i2} ... X_{ik} stored as the byte string i1 i2...
  // Letters are 1..alphabet_size (so the oracle handles at most 255 letters).
  using Word = std::string;

  static MagnusElement identity(int d, int truncation);
  static MagnusElement generator(int i, int d, int truncation);

  int alphabet_size() const { return d_; }
  int truncation() const { return truncation_; }

  // Coefficient of a monomial; zero when absent.
  Int coefficient(const Word& word) const;
  const std::map<Word, Int>& degree_terms(int k) const { return by_degree_[k]; }

  bool is_group_element() const;  // constant term == 1
  bool is_identity() const;

  // Truncated noncommutative product; operands must share (d, truncation).
  MagnusElement operator*(const MagnusElement& other) const;

  // The unique truncated series b with (*this) * b == identity. Requires a
  // group element (constant term 1).
  MagnusElement inverse() const;

  // Integer powers, negative via inverse().
  MagnusElement pow(long exponent) const;

  // Smallest degree >= 1 carrying a nonzero coefficient; nullopt for the
  // identity (valuation infinity).
  std::optional<int> valuation() const;

  friend bool operator==(const MagnusElement&, const MagnusElement&) = default;

 private:
  MagnusElement(int d, int truncation);

  int d_ = 0;
  int truncation_ = 0;
  std::vector<std::map<Word, Int>> by_degree_;  // index = monomial length, 0..truncation
};

// a^{-1} b^{-1} a b.
MagnusElement group_commutator(const MagnusElement& a, const MagnusElement& b);

// The homogeneous component of an element at its valuation.
struct LeadingTermVector {
  int weight = 0;
  std::map<MagnusElement::Word, Int> coords;

  friend bool operator==(const LeadingTermVector&, const LeadingTermVector&) = default;
};

// Requires a non-identity group element.
LeadingTermVector leading_term(const MagnusElement& element);

// Maps generators through the embedding and brackets through
// group_commutator. Requires max_generator <= d and weight <= truncation.
MagnusElement eval_commutator(const Commutator& c, int d, int truncation);

// Same, but caches by shared subtree so batches over a common basis reuse
// their evaluations.
class CommutatorEvaluator {
 public:
  CommutatorEvaluator(int d, int truncation) : d_(d), truncation_(truncation) {}

  const MagnusElement& operator()(const Commutator& c);

  int alphabet_size() const { return d_; }
  int truncation() const { return truncation_; }

 private:
  int d_;
  int truncation_;
  std::unordered_map<const void*, MagnusElement> cache_;
};

// Rank over the rationals of the matrix whose rows are the given vectors,
// by fraction-free Gaussian elimination in exact integers. All vectors must
// share one weight.
int integer_rank(std::span<const LeadingTermVector> vectors);

// Exact rank of an arbitrary integer matrix (rows of equal length).
int matrix_rank(std::vector<std::vector<Int>> matrix);

}  // namespace nilmult

#endif  // NILMULT_MAGNUS_HPP
