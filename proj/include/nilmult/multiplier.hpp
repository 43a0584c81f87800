#ifndef NILMULT_MULTIPLIER_HPP
#define NILMULT_MULTIPLIER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilmult/commutator.hpp"
#include "nilmult/hall_basis.hpp"

namespace nilmult {

// The three commutator families behind the class-row (c,1) multiplier of
// the free nilpotent group of class n on m generators:
//   window         basics on x1..xm of weights c+1..c+n, hall order
//   pair_basis     brackets [b, a] with b, a in window and b > a
//   cross_brackets brackets [b, a] of basics with weight(b) >= c+n+1,
//                  weight(a) >= c+1 and weight(b)+weight(a) <= 2c+2n+1
// pair_basis and cross_brackets are ordered lexicographically in (b, a).
struct MultiplierSets {
  int n = 0;
  int c = 0;
  int m = 0;
  std::vector<Commutator> window;
  std::vector<Commutator> pair_basis;
  std::vector<Commutator> cross_brackets;
};

MultiplierSets build_multiplier_sets(int n, int c, int m,
                                     std::size_t max_elements = kDefaultMaxBasisElements);

// Coset representatives of the free basis of the (c,1) polynilpotent
// multiplier: exactly pair_basis. Requires c > 2n-2.
std::vector<Commutator> multiplier_basis(int n, int c, int m,
                                         std::size_t max_elements = kDefaultMaxBasisElements);

enum class VerificationStatus { pass, fail, hypothesis_violation };

const char* to_string(VerificationStatus status);

// Outcome of one machine check, with enough parameters to reproduce it.
struct VerificationReport {
  std::string target;  // CLI target id: "lemma2.2", ..., "thm2.6", "hall"
  int n = 0;
  int c = 0;
  int m = 0;
  std::optional<int> truncation;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  VerificationStatus status = VerificationStatus::pass;
  std::optional<std::string> counterexample;  // present exactly when status == fail
  std::map<std::string, std::string> details;

  bool passed() const { return status == VerificationStatus::pass; }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// Every pair_basis element is again basic on the base alphabet
// (needs c >= n-1).
VerificationReport verify_pair_basis_basic(const MultiplierSets& sets);

// Every cross_brackets element is again basic on the base alphabet
// (needs c > 2n-2).
VerificationReport verify_cross_brackets_basic(const MultiplierSets& sets);

// Randomized check that a bracket of two window-generated elements reduces
// to the corresponding product of window brackets: for seeded random
// alpha, beta built from window factors (plus deeper tails), the residual
// [alpha, beta] * (prod of factor brackets)^{-1} has valuation
// >= 2c+n+2, at truncation 2c+2n+1. Needs c >= n-1.
VerificationReport verify_pair_reduction(int n, int c, int m, int trials, std::uint64_t seed);

// Same shape one level deeper: brackets of depth-(c+n+1) by depth-(c+1)
// elements reduce to cross_brackets factors; the residual must vanish
// entirely at truncation 2c+2n+1. Needs c >= n-1.
VerificationReport verify_cross_reduction(int n, int c, int m, int trials, std::uint64_t seed);

// Exhaustive independence check for the multiplier basis: every element of
// pair_basis and cross_brackets has Magnus valuation equal to its weight,
// inside [2c+2, 2c+2n+1]; the two lists are disjoint; and per weight the
// leading terms have full integer rank. Needs c > 2n-2.
VerificationReport verify_basis_independence(
    int n, int c, int m, std::size_t max_elements = kDefaultMaxBasisElements);

// Freeness of the lower-central quotients at desk scale: per-weight counts
// match the Witt formula, every basic commutator has valuation equal to its
// weight, and per-weight leading terms have full rank.
VerificationReport verify_hall_freeness(
    int d, int max_weight, std::size_t max_elements = kDefaultMaxBasisElements);

}  // namespace nilmult

#endif  // NILMULT_MULTIPLIER_HPP
