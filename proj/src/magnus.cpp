#include "nilmult/magnus.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "nilmult/errors.hpp"

namespace nilmult {

MagnusElement::MagnusElement(int d, int truncation) : d_(d), truncation_(truncation) {
  if (d < 1 || d > 255)
    throw std::invalid_argument("MagnusElement: alphabet size must be in [1, 255]");
  if (truncation < 1) throw std::invalid_argument("MagnusElement: truncation must be >= 1");
  by_degree_.resize(static_cast<std::size_t>(truncation) + 1);
}

MagnusElement MagnusElement::identity(int d, int truncation) {
  MagnusElement e(d, truncation);
  e.by_degree_[0][Word()] = 1;
  return e;
}

MagnusElement MagnusElement::generator(int i, int d, int truncation) {
  if (i < 1 || i > d) throw std::invalid_argument("MagnusElement: generator index out of range");
  MagnusElement e = identity(d, truncation);
  e.by_degree_[1][Word(1, static_cast<char>(i))] = 1;
  return e;
}

Int MagnusElement::coefficient(const Word& word) const {
  if (word.size() > static_cast<std::size_t>(truncation_)) return 0;
  const auto& bucket = by_degree_[word.size()];
  auto it = bucket.find(word);
  return it == bucket.end() ? Int(0) : it->second;
}

bool MagnusElement::is_group_element() const {
  auto it = by_degree_[0].find(Word());
  return it != by_degree_[0].end() && it->second == 1;
}

bool MagnusElement::is_identity() const {
  if (!is_group_element()) return false;
  for (int k = 1; k <= truncation_; ++k)
    if (!by_degree_[k].empty()) return false;
  return true;
}

MagnusElement MagnusElement::operator*(const MagnusElement& other) const {
  if (d_ != other.d_ || truncation_ != other.truncation_)
    throw std::invalid_argument("MagnusElement: operands have mismatched alphabet or truncation");
  MagnusElement out(d_, truncation_);
  for (int i = 0; i <= truncation_; ++i) {
    if (by_degree_[i].empty()) continue;
    for (int j = 0; i + j <= truncation_; ++j) {
      if (other.by_degree_[j].empty()) continue;
      auto& bucket = out.by_degree_[i + j];
      for (const auto& [u, cu] : by_degree_[i])
        for (const auto& [v, cv] : other.by_degree_[j]) {
          Int& slot = bucket[u + v];
          slot += cu * cv;
          if (slot == 0) bucket.erase(u + v);
        }
    }
  }
  return out;
}

MagnusElement MagnusElement::inverse() const {
  if (!is_group_element())
    throw std::invalid_argument("MagnusElement: inverse of a non-group element");
  // a = 1 + u with val(u) >= 1, so a^{-1} is the truncated geometric series
  // 1 - u + u^2 - ...; u^k dies past degree truncation_.
  MagnusElement u(d_, truncation_);
  for (int k = 1; k <= truncation_; ++k) u.by_degree_[k] = by_degree_[k];
  MagnusElement out = identity(d_, truncation_);
  MagnusElement power = identity(d_, truncation_);
  for (int k = 1; k <= truncation_; ++k) {
    power = power * u;
    const int sign = k % 2 == 0 ? 1 : -1;
    for (int deg = k; deg <= truncation_; ++deg)
      for (const auto& [word, coeff] : power.by_degree_[deg]) {
        Int& slot = out.by_degree_[deg][word];
        slot += sign * coeff;
        if (slot == 0) out.by_degree_[deg].erase(word);
      }
  }
  return out;
}

MagnusElement MagnusElement::pow(long exponent) const {
  MagnusElement base = exponent < 0 ? inverse() : *this;
  long reps = exponent < 0 ? -exponent : exponent;
  MagnusElement out = identity(d_, truncation_);
  for (long k = 0; k < reps; ++k) out = out * base;
  return out;
}

std::optional<int> MagnusElement::valuation() const {
  for (int k = 1; k <= truncation_; ++k)
    if (!by_degree_[k].empty()) return k;
  return std::nullopt;
}

MagnusElement group_commutator(const MagnusElement& a, const MagnusElement& b) {
  return a.inverse() * b.inverse() * a * b;
}

LeadingTermVector leading_term(const MagnusElement& element) {
  auto val = element.valuation();
  if (!val) throw std::invalid_argument("leading_term: element is the identity");
  return LeadingTermVector{*val, element.degree_terms(*val)};
}

MagnusElement eval_commutator(const Commutator& c, int d, int truncation) {
  CommutatorEvaluator eval(d, truncation);
  return eval(c);
}

const MagnusElement& CommutatorEvaluator::operator()(const Commutator& c) {
  if (auto it = cache_.find(c.node_id()); it != cache_.end()) return it->second;
  if (c.max_generator() > d_)
    throw std::invalid_argument("eval_commutator: generator index exceeds alphabet size");
  if (c.weight() > truncation_)
    throw TruncationError("eval_commutator: weight " + std::to_string(c.weight()) +
                          " exceeds truncation " + std::to_string(truncation_));
  MagnusElement value =
      c.is_generator()
          ? MagnusElement::generator(c.generator_index(), d_, truncation_)
          : group_commutator((*this)(c.left()), (*this)(c.right()));
  return cache_.emplace(c.node_id(), std::move(value)).first->second;
}

int integer_rank(std::span<const LeadingTermVector> vectors) {
  if (vectors.empty()) return 0;
  const int weight = vectors.front().weight;
  std::set<MagnusElement::Word> support;
  for (const auto& v : vectors) {
    if (v.weight != weight)
      throw std::invalid_argument("integer_rank: vectors must share one weight");
    for (const auto& [word, coeff] : v.coords)
      if (coeff != 0) support.insert(word);
  }
  std::map<MagnusElement::Word, std::size_t> column;
  std::size_t next = 0;
  for (const auto& word : support) column[word] = next++;

  std::vector<std::vector<Int>> matrix(vectors.size(), std::vector<Int>(support.size()));
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (const auto& [word, coeff] : vectors[r].coords)
      if (coeff != 0) matrix[r][column[word]] = coeff;
  return matrix_rank(std::move(matrix));
}

int matrix_rank(std::vector<std::vector<Int>> matrix) {
  const std::size_t rows = matrix.size();
  if (rows == 0) return 0;
  const std::size_t cols = matrix[0].size();
  for (const auto& row : matrix)
    if (row.size() != cols) throw std::invalid_argument("matrix_rank: ragged matrix");

  // Bareiss fraction-free elimination: every division below is exact and
  // intermediate entries stay minors of the input.
  Int previous_pivot = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && matrix[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(matrix[pivot], matrix[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        matrix[i][j] = (matrix[r][c] * matrix[i][j] - matrix[i][c] * matrix[r][j]) / previous_pivot;
      matrix[i][c] = 0;
    }
    previous_pivot = matrix[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace nilmult
