#include "nilmult/hall_basis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "nilmult/errors.hpp"
#include "nilmult/witt.hpp"

namespace nilmult {

std::span<const Commutator> HallBasis::weight_stratum(int w) const {
  if (w < 1 || w > max_weight_) return {};
  return std::span<const Commutator>(elements_).subspan(
      stratum_begin_[w - 1], stratum_begin_[w] - stratum_begin_[w - 1]);
}

HallBasis enumerate_hall_basis(int d, int max_weight, std::size_t max_elements) {
  if (d < 1) throw std::invalid_argument("enumerate_hall_basis: need d >= 1");
  if (max_weight < 1) throw std::invalid_argument("enumerate_hall_basis: need max_weight >= 1");

  Int predicted = 0;
  for (int w = 1; w <= max_weight; ++w) predicted += chi(w, static_cast<std::int64_t>(d));
  if (predicted > max_elements)
    throw ResourceLimitError("basis on " + std::to_string(d) + " letters up to weight " +
                             std::to_string(max_weight) + " has " + predicted.str() +
                             " elements, over the cap of " + std::to_string(max_elements));

  HallBasis basis;
  basis.alphabet_size_ = d;
  basis.max_weight_ = max_weight;
  basis.elements_.reserve(static_cast<std::size_t>(predicted));
  basis.stratum_begin_.assign(static_cast<std::size_t>(max_weight) + 1, 0);

  for (int i = 1; i <= d; ++i) basis.elements_.push_back(Commutator::generator(i));
  basis.stratum_begin_[1] = basis.elements_.size();

  for (int w = 2; w <= max_weight; ++w) {
    std::vector<Commutator> stratum;
    for (int wb = w - 1; wb >= 1; --wb) {
      const int wa = w - wb;
      if (wa > wb) break;  // b > a forces weight(b) >= weight(a)
      auto bs = basis.weight_stratum(wb);
      auto as = basis.weight_stratum(wa);
      for (const Commutator& b : bs) {
        // Valid right parts a form a comparator range: a >= b.right() when b
        // is a bracket, and a < b.
        auto lo = as.begin();
        if (!b.is_generator()) {
          const int wr = b.right().weight();
          if (wr > wa) continue;
          if (wr == wa) lo = std::lower_bound(as.begin(), as.end(), b.right());
        }
        auto hi = wa == wb ? std::lower_bound(lo, as.end(), b) : as.end();
        for (auto it = lo; it != hi; ++it)
          stratum.push_back(Commutator::bracket(b, *it));
      }
    }
    std::sort(stratum.begin(), stratum.end());
    basis.elements_.insert(basis.elements_.end(), stratum.begin(), stratum.end());
    basis.stratum_begin_[w] = basis.elements_.size();
  }
  return basis;
}

std::vector<Commutator> basic_commutators_of_weight_range(int d, int w_lo, int w_hi,
                                                          std::size_t max_elements) {
  if (w_lo < 1 || w_lo > w_hi)
    throw std::invalid_argument("basic_commutators_of_weight_range: need 1 <= w_lo <= w_hi");
  HallBasis basis = enumerate_hall_basis(d, w_hi, max_elements);
  std::vector<Commutator> out;
  for (int w = w_lo; w <= w_hi; ++w) {
    auto stratum = basis.weight_stratum(w);
    out.insert(out.end(), stratum.begin(), stratum.end());
  }
  return out;
}

}  // namespace nilmult
