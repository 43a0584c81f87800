#ifndef NILMULT_HALL_BASIS_HPP
#define NILMULT_HALL_BASIS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "nilmult/commutator.hpp"

namespace nilmult {

inline constexpr std::size_t kDefaultMaxBasisElements = 10'000'000;

// All basic commutators on d letters up to a weight bound, in the total
// order of compare(): stratified by weight, lexicographic within a weight.
class HallBasis {
 public:
  int alphabet_size() const { return alphabet_size_; }
  int max_weight() const { return max_weight_; }
  const std::vector<Commutator>& elements() const { return elements_; }
  std::span<const Commutator> weight_stratum(int w) const;
  std::size_t size() const { return elements_.size(); }

 private:
  friend HallBasis enumerate_hall_basis(int, int, std::size_t);

  int alphabet_size_ = 0;
  int max_weight_ = 0;
  std::vector<Commutator> elements_;
  std::vector<std::size_t> stratum_begin_;  // index of first weight-w element, w = 1..max+1
};

// Enumerates weight by weight: a weight-w element is [b, a] with b, a
// already enumerated, weight(b) + weight(a) = w, b > a, and b.right() <= a
// when b is a bracket. Throws ResourceLimitError if the Witt counts predict
// more than max_elements elements (checked before any allocation).
HallBasis enumerate_hall_basis(int d, int max_weight,
                               std::size_t max_elements = kDefaultMaxBasisElements);

// The weight-[w_lo, w_hi] slice of the basis on d letters, order preserved.
std::vector<Commutator> basic_commutators_of_weight_range(
    int d, int w_lo, int w_hi, std::size_t max_elements = kDefaultMaxBasisElements);

}  // namespace nilmult

#endif  // NILMULT_HALL_BASIS_HPP
