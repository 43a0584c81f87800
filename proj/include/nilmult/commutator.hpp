#ifndef NILMULT_COMMUTATOR_HPP
#define NILMULT_COMMUTATOR_HPP

#include <memory>
#include <string>

namespace nilmult {

// A generator x_i of the ambient free group, 1-based.
struct Generator {
  int index;

  friend bool operator==(const Generator&, const Generator&) = default;
};

// An immutable bracketed word over the generators: either a single
// generator or a bracket [left, right] of two commutators. Subtrees are
// shared, so copies are cheap and values are safe to pass around freely.
//
// weight() counts generator occurrences and is cached per node.
class Commutator {
 public:
  static Commutator generator(int index);
  static Commutator bracket(const Commutator& left, const Commutator& right);

  bool is_generator() const { return node_->generator_index != 0; }
  int generator_index() const;
  Commutator left() const;
  Commutator right() const;

  int weight() const { return node_->weight; }
  // Largest generator index occurring anywhere in the tree.
  int max_generator() const { return node_->max_generator; }

  // Stable identity of the underlying node; usable as a cache key for
  // evaluators that want to exploit subtree sharing.
  const void* node_id() const { return node_.get(); }

  friend bool operator==(const Commutator& a, const Commutator& b);
  friend bool operator!=(const Commutator& a, const Commutator& b) { return !(a == b); }

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Node {
    int weight;
    int max_generator;
    int generator_index;  // > 0 for a leaf, 0 for a bracket
    NodePtr left_child;
    NodePtr right_child;
  };

  explicit Commutator(NodePtr node) : node_(std::move(node)) {}

  NodePtr node_;
};

// Total order on commutators: lower weight first; equal-weight generators
// by index; equal-weight brackets lexicographically on (left, right).
// Returns -1, 0 or 1. Zero exactly for structurally identical trees.
int compare(const Commutator& a, const Commutator& b);

inline bool operator<(const Commutator& a, const Commutator& b) { return compare(a, b) < 0; }
inline bool operator>(const Commutator& a, const Commutator& b) { return compare(a, b) > 0; }
inline bool operator<=(const Commutator& a, const Commutator& b) { return compare(a, b) <= 0; }
inline bool operator>=(const Commutator& a, const Commutator& b) { return compare(a, b) >= 0; }

// A commutator c is basic iff it is a generator, or c = [b, a] with b and a
// basic, b > a, and, when b = [b1, b2], additionally b2 <= a.
bool is_basic(const Commutator& c);

// Nested-bracket rendering over x1..xd, e.g. "[[x2,x1],x1]".
std::string to_string(const Commutator& c);

}  // namespace nilmult

#endif  // NILMULT_COMMUTATOR_HPP
