#include "nilmult/commutator.hpp"

#include <stdexcept>
#include <utility>

namespace nilmult {

Commutator Commutator::generator(int index) {
  if (index < 1) throw std::invalid_argument("generator index must be >= 1");
  auto node = std::make_shared<const Node>(Node{1, index, index, nullptr, nullptr});
  return Commutator(std::move(node));
}

Commutator Commutator::bracket(const Commutator& left, const Commutator& right) {
  auto node = std::make_shared<const Node>(
      Node{left.weight() + right.weight(),
           std::max(left.max_generator(), right.max_generator()), 0, left.node_, right.node_});
  return Commutator(std::move(node));
}

int Commutator::generator_index() const {
  if (!is_generator()) throw std::logic_error("generator_index() on a bracket");
  return node_->generator_index;
}

Commutator Commutator::left() const {
  if (is_generator()) throw std::logic_error("left() on a generator");
  return Commutator(node_->left_child);
}

Commutator Commutator::right() const {
  if (is_generator()) throw std::logic_error("right() on a generator");
  return Commutator(node_->right_child);
}

bool operator==(const Commutator& a, const Commutator& b) {
  if (a.node_ == b.node_) return true;
  return compare(a, b) == 0;
}

int compare(const Commutator& a, const Commutator& b) {
  if (a.node_id() == b.node_id()) return 0;
  if (a.weight() != b.weight()) return a.weight() < b.weight() ? -1 : 1;
  const bool la = a.is_generator(), lb = b.is_generator();
  if (la && lb) {
    const int ia = a.generator_index(), ib = b.generator_index();
    return ia == ib ? 0 : (ia < ib ? -1 : 1);
  }
  // Equal weight mixes a generator with a bracket only at weight 1, which a
  // bracket cannot have; kept total anyway.
  if (la != lb) return la ? -1 : 1;
  if (int c = compare(a.left(), b.left()); c != 0) return c;
  return compare(a.right(), b.right());
}

bool is_basic(const Commutator& c) {
  if (c.is_generator()) return true;
  const Commutator& b = c.left();
  const Commutator& a = c.right();
  if (!is_basic(b) || !is_basic(a)) return false;
  if (compare(b, a) <= 0) return false;
  if (!b.is_generator() && compare(b.right(), a) > 0) return false;
  return true;
}

std::string to_string(const Commutator& c) {
  if (c.is_generator()) return "x" + std::to_string(c.generator_index());
  return "[" + to_string(c.left()) + "," + to_string(c.right()) + "]";
}

}  // namespace nilmult
