#include "nilmult/multiplier.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>

#include "nilmult/errors.hpp"
#include "nilmult/magnus.hpp"
#include "nilmult/witt.hpp"

namespace nilmult {

const char* to_string(VerificationStatus status) {
  switch (status) {
    case VerificationStatus::pass: return "pass";
    case VerificationStatus::fail: return "fail";
    case VerificationStatus::hypothesis_violation: return "hypothesis_violation";
  }
  throw std::invalid_argument("unknown verification status");
}

namespace {

void require_positive(int n, int c, int m) {
  if (n < 1 || c < 1 || m < 1)
    throw std::invalid_argument("multiplier parameters must satisfy n, c, m >= 1");
}

Int predicted_window(int n, int c, int m) {
  Int total = 0;
  for (int i = c + 1; i <= c + n; ++i) total += chi(i, static_cast<std::int64_t>(m));
  return total;
}

Int predicted_cross(int n, int c, int m) {
  Int total = 0;
  for (int wb = c + n + 1; wb <= c + 2 * n; ++wb)
    for (int wa = c + 1; wa <= 2 * c + 2 * n + 1 - wb; ++wa)
      total += chi(wb, static_cast<std::int64_t>(m)) * chi(wa, static_cast<std::int64_t>(m));
  return total;
}

VerificationReport make_report(std::string target, int n, int c, int m) {
  VerificationReport report;
  report.target = std::move(target);
  report.n = n;
  report.c = c;
  report.m = m;
  return report;
}

VerificationReport hypothesis_report(std::string target, int n, int c, int m,
                                     const std::string& hypothesis) {
  VerificationReport report = make_report(std::move(target), n, c, m);
  report.status = VerificationStatus::hypothesis_violation;
  report.details["hypothesis"] = hypothesis;
  return report;
}

}  // namespace

MultiplierSets build_multiplier_sets(int n, int c, int m, std::size_t max_elements) {
  require_positive(n, c, m);
  if (predicted_window(n, c, m) > max_elements || chi(2, predicted_window(n, c, m)) > max_elements ||
      predicted_cross(n, c, m) > max_elements)
    throw ResourceLimitError("multiplier sets for n=" + std::to_string(n) + ", c=" +
                             std::to_string(c) + ", m=" + std::to_string(m) +
                             " exceed the cap of " + std::to_string(max_elements) + " elements");

  HallBasis basis = enumerate_hall_basis(m, c + 2 * n, max_elements);

  MultiplierSets sets;
  sets.n = n;
  sets.c = c;
  sets.m = m;
  for (int w = c + 1; w <= c + n; ++w) {
    auto stratum = basis.weight_stratum(w);
    sets.window.insert(sets.window.end(), stratum.begin(), stratum.end());
  }
  for (std::size_t i = 0; i < sets.window.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      sets.pair_basis.push_back(Commutator::bracket(sets.window[i], sets.window[j]));

  const int weight_cap = 2 * c + 2 * n + 1;
  for (int wb = c + n + 1; wb <= c + 2 * n; ++wb)
    for (const Commutator& b : basis.weight_stratum(wb))
      for (int wa = c + 1; wa <= weight_cap - wb; ++wa)
        for (const Commutator& a : basis.weight_stratum(wa))
          sets.cross_brackets.push_back(Commutator::bracket(b, a));
  return sets;
}

std::vector<Commutator> multiplier_basis(int n, int c, int m, std::size_t max_elements) {
  require_positive(n, c, m);
  if (c <= 2 * n - 2)
    throw DomainError("the multiplier basis is only established for c > 2n-2 (got n=" +
                      std::to_string(n) + ", c=" + std::to_string(c) + ")");
  MultiplierSets sets = build_multiplier_sets(n, c, m, max_elements);
  if (Int(sets.pair_basis.size()) != chi(2, Int(sets.window.size())))
    throw InternalError("multiplier_basis: pair count disagrees with the Witt formula");
  return std::move(sets.pair_basis);
}

VerificationReport verify_pair_basis_basic(const MultiplierSets& sets) {
  if (sets.c < sets.n - 1)
    return hypothesis_report("lemma2.2", sets.n, sets.c, sets.m, "requires c >= n-1");
  VerificationReport report = make_report("lemma2.2", sets.n, sets.c, sets.m);
  report.details["pair_basis"] = std::to_string(sets.pair_basis.size());
  for (const Commutator& z : sets.pair_basis)
    if (!is_basic(z)) {
      report.status = VerificationStatus::fail;
      report.counterexample = to_string(z) + " is not basic";
      return report;
    }
  return report;
}

VerificationReport verify_cross_brackets_basic(const MultiplierSets& sets) {
  if (sets.c <= 2 * sets.n - 2)
    return hypothesis_report("lemma2.4", sets.n, sets.c, sets.m, "requires c > 2n-2");
  VerificationReport report = make_report("lemma2.4", sets.n, sets.c, sets.m);
  report.details["cross_brackets"] = std::to_string(sets.cross_brackets.size());
  for (const Commutator& w : sets.cross_brackets)
    if (!is_basic(w)) {
      report.status = VerificationStatus::fail;
      report.counterexample = to_string(w) + " is not basic";
      return report;
    }
  return report;
}

namespace {

struct SampledFactor {
  Commutator base;
  int exponent;  // in [-2, 2]
};

// A random element of the subgroup generated by `pool` modulo deeper
// terms: pool factors first, then tail factors from deeper strata.
struct SampledElement {
  std::vector<SampledFactor> factors;
  std::vector<SampledFactor> tail;
};

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

int pick_exponent(std::mt19937_64& rng) { return static_cast<int>(pick(rng, 5)) - 2; }

SampledElement sample_element(std::mt19937_64& rng, std::span<const Commutator> pool,
                              std::span<const Commutator> tail_pool) {
  SampledElement out;
  if (!pool.empty()) {
    const std::uint64_t count = 1 + pick(rng, 3);
    for (std::uint64_t i = 0; i < count; ++i)
      out.factors.push_back({pool[pick(rng, pool.size())], pick_exponent(rng)});
  }
  if (!tail_pool.empty()) {
    const std::uint64_t count = pick(rng, 3);
    for (std::uint64_t i = 0; i < count; ++i)
      out.tail.push_back({tail_pool[pick(rng, tail_pool.size())], pick_exponent(rng)});
  }
  return out;
}

MagnusElement realize(CommutatorEvaluator& eval, const SampledElement& element) {
  MagnusElement out = MagnusElement::identity(eval.alphabet_size(), eval.truncation());
  for (const SampledFactor& f : element.factors) out = out * eval(f.base).pow(f.exponent);
  for (const SampledFactor& f : element.tail) out = out * eval(f.base).pow(f.exponent);
  return out;
}

std::string describe(const SampledElement& element) {
  std::ostringstream os;
  bool first = true;
  for (const SampledFactor& f : element.factors) {
    if (!first) os << " * ";
    os << to_string(f.base) << "^" << f.exponent;
    first = false;
  }
  for (const SampledFactor& f : element.tail) {
    if (!first) os << " * ";
    os << to_string(f.base) << "^" << f.exponent << "(tail)";
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

// Bracket-by-bracket reduction of [alpha, beta]: the product over factor
// pairs of [a_i, b_j]^(e_i * f_j), restricted to pairs whose weights sum to
// at most weight_cap (no cap when 0).
MagnusElement factor_bracket_product(CommutatorEvaluator& eval, const SampledElement& alpha,
                                     const SampledElement& beta, int weight_cap) {
  MagnusElement out = MagnusElement::identity(eval.alphabet_size(), eval.truncation());
  for (const SampledFactor& fa : alpha.factors)
    for (const SampledFactor& fb : beta.factors) {
      if (weight_cap > 0 && fa.base.weight() + fb.base.weight() > weight_cap) continue;
      const long e = static_cast<long>(fa.exponent) * fb.exponent;
      if (e == 0) continue;
      out = out * group_commutator(eval(fa.base), eval(fb.base)).pow(e);
    }
  return out;
}

struct ReductionPlan {
  std::string target;
  int factor_lo_a, factor_hi_a;  // weight range of alpha factors
  int tail_lo_a;                 // alpha tail weights start here
  int factor_lo_b, factor_hi_b;
  int tail_lo_b;
  int bracket_weight_cap;  // 0 = keep every factor bracket
  int residual_threshold;  // residual valuation must reach this
};

VerificationReport run_reduction_check(const ReductionPlan& plan, int n, int c, int m, int trials,
                                       std::uint64_t seed) {
  require_positive(n, c, m);
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (c < n - 1) return hypothesis_report(plan.target, n, c, m, "requires c >= n-1");

  const int truncation = 2 * c + 2 * n + 1;
  if (truncation < plan.residual_threshold - 1)
    throw TruncationError("truncation " + std::to_string(truncation) +
                          " cannot witness valuation " + std::to_string(plan.residual_threshold));

  VerificationReport report = make_report(plan.target, n, c, m);
  report.truncation = truncation;
  report.trials = trials;
  report.seed = seed;

  HallBasis basis = enumerate_hall_basis(m, truncation);
  auto slice = [&](int lo, int hi) {
    std::span<const Commutator> all(basis.elements());
    if (lo > hi) return all.subspan(0, 0);
    std::size_t begin = 0;
    while (begin < all.size() && all[begin].weight() < lo) ++begin;
    std::size_t end = begin;
    while (end < all.size() && all[end].weight() <= hi) ++end;
    return all.subspan(begin, end - begin);
  };
  auto pool_a = slice(plan.factor_lo_a, plan.factor_hi_a);
  auto tail_a = slice(plan.tail_lo_a, truncation);
  auto pool_b = slice(plan.factor_lo_b, plan.factor_hi_b);
  auto tail_b = slice(plan.tail_lo_b, truncation);
  report.details["factor_pool"] =
      std::to_string(pool_a.size()) + "/" + std::to_string(pool_b.size());
  report.details["residual_threshold"] = std::to_string(plan.residual_threshold);

  CommutatorEvaluator eval(m, truncation);
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    SampledElement alpha = sample_element(rng, pool_a, tail_a);
    SampledElement beta = sample_element(rng, pool_b, tail_b);
    MagnusElement bracket = group_commutator(realize(eval, alpha), realize(eval, beta));
    MagnusElement reduction = factor_bracket_product(eval, alpha, beta, plan.bracket_weight_cap);
    auto residual_valuation = (bracket * reduction.inverse()).valuation();
    if (residual_valuation && *residual_valuation < plan.residual_threshold) {
      report.status = VerificationStatus::fail;
      std::ostringstream os;
      os << "trial " << trial << ": residual valuation " << *residual_valuation << " < "
         << plan.residual_threshold << "; alpha = " << describe(alpha)
         << "; beta = " << describe(beta);
      report.counterexample = os.str();
      return report;
    }
  }
  return report;
}

}  // namespace

VerificationReport verify_pair_reduction(int n, int c, int m, int trials, std::uint64_t seed) {
  ReductionPlan plan;
  plan.target = "lemma2.3";
  plan.factor_lo_a = c + 1;
  plan.factor_hi_a = c + n;
  plan.tail_lo_a = c + n + 1;
  plan.factor_lo_b = c + 1;
  plan.factor_hi_b = c + n;
  plan.tail_lo_b = c + n + 1;
  plan.bracket_weight_cap = 0;
  plan.residual_threshold = 2 * c + n + 2;
  return run_reduction_check(plan, n, c, m, trials, seed);
}

VerificationReport verify_cross_reduction(int n, int c, int m, int trials, std::uint64_t seed) {
  ReductionPlan plan;
  plan.target = "lemma2.5";
  plan.factor_lo_a = c + n + 1;
  plan.factor_hi_a = c + 2 * n;
  plan.tail_lo_a = c + 2 * n + 1;
  plan.factor_lo_b = c + 1;
  plan.factor_hi_b = c + n;
  plan.tail_lo_b = c + n + 1;
  plan.bracket_weight_cap = 2 * c + 2 * n + 1;
  plan.residual_threshold = 2 * c + 2 * n + 2;  // vanishes at this truncation
  return run_reduction_check(plan, n, c, m, trials, seed);
}

VerificationReport verify_basis_independence(int n, int c, int m, std::size_t max_elements) {
  require_positive(n, c, m);
  if (c <= 2 * n - 2) return hypothesis_report("thm2.6", n, c, m, "requires c > 2n-2");

  MultiplierSets sets = build_multiplier_sets(n, c, m, max_elements);
  const int truncation = 2 * c + 2 * n + 1;
  const int window_lo = 2 * c + 2;

  VerificationReport report = make_report("thm2.6", n, c, m);
  report.truncation = truncation;
  report.details["window"] = std::to_string(sets.window.size());
  report.details["pair_basis"] = std::to_string(sets.pair_basis.size());
  report.details["cross_brackets"] = std::to_string(sets.cross_brackets.size());

  std::set<Commutator> seen(sets.pair_basis.begin(), sets.pair_basis.end());
  for (const Commutator& w : sets.cross_brackets)
    if (seen.contains(w)) {
      report.status = VerificationStatus::fail;
      report.counterexample = "pair_basis and cross_brackets share " + to_string(w);
      return report;
    }

  CommutatorEvaluator eval(m, truncation);
  std::map<int, std::vector<LeadingTermVector>> buckets;
  auto place = [&](const Commutator& element) -> bool {
    const MagnusElement& value = eval(element);
    auto valuation = value.valuation();
    if (!valuation || *valuation != element.weight() || *valuation < window_lo) {
      report.status = VerificationStatus::fail;
      report.counterexample = to_string(element) + " has valuation " +
                              (valuation ? std::to_string(*valuation) : "infinity") +
                              ", expected its weight " + std::to_string(element.weight()) +
                              " within [" + std::to_string(window_lo) + ", " +
                              std::to_string(truncation) + "]";
      return false;
    }
    buckets[*valuation].push_back(leading_term(value));
    return true;
  };
  for (const Commutator& z : sets.pair_basis)
    if (!place(z)) return report;
  for (const Commutator& w : sets.cross_brackets)
    if (!place(w)) return report;

  std::size_t total = 0;
  std::ostringstream per_weight;
  bool first = true;
  for (const auto& [weight, vectors] : buckets) {
    const int rank = integer_rank(vectors);
    if (!first) per_weight << ", ";
    per_weight << weight << ":" << rank << "/" << vectors.size();
    first = false;
    if (rank != static_cast<int>(vectors.size())) {
      report.status = VerificationStatus::fail;
      report.counterexample = "weight " + std::to_string(weight) + " leading terms have rank " +
                              std::to_string(rank) + " over " + std::to_string(vectors.size()) +
                              " elements";
      return report;
    }
    total += static_cast<std::size_t>(rank);
  }
  report.details["per_weight_rank"] = per_weight.str();
  report.details["total_rank"] = std::to_string(total);
  if (total != sets.pair_basis.size() + sets.cross_brackets.size())
    throw InternalError("verify_basis_independence: bucket sizes disagree with set sizes");
  return report;
}

VerificationReport verify_hall_freeness(int d, int max_weight, std::size_t max_elements) {
  if (d < 1 || max_weight < 1)
    throw std::invalid_argument("verify_hall_freeness: need d >= 1 and max_weight >= 1");

  HallBasis basis = enumerate_hall_basis(d, max_weight, max_elements);
  VerificationReport report = make_report("hall", 0, 0, d);
  report.truncation = max_weight;
  report.details["max_weight"] = std::to_string(max_weight);
  report.details["elements"] = std::to_string(basis.size());

  CommutatorEvaluator eval(d, max_weight);
  std::ostringstream per_weight;
  for (int w = 1; w <= max_weight; ++w) {
    auto stratum = basis.weight_stratum(w);
    const Int expected = chi(w, static_cast<std::int64_t>(d));
    if (Int(stratum.size()) != expected) {
      report.status = VerificationStatus::fail;
      report.counterexample = "weight " + std::to_string(w) + " has " +
                              std::to_string(stratum.size()) + " basics, Witt formula gives " +
                              expected.str();
      return report;
    }
    std::vector<LeadingTermVector> terms;
    terms.reserve(stratum.size());
    for (const Commutator& element : stratum) {
      const MagnusElement& value = eval(element);
      auto valuation = value.valuation();
      if (!valuation || *valuation != w) {
        report.status = VerificationStatus::fail;
        report.counterexample = to_string(element) + " has valuation " +
                                (valuation ? std::to_string(*valuation) : "infinity") +
                                ", expected " + std::to_string(w);
        return report;
      }
      terms.push_back(leading_term(value));
    }
    const int rank = integer_rank(terms);
    if (w > 1) per_weight << ", ";
    per_weight << w << ":" << rank << "/" << stratum.size();
    if (rank != static_cast<int>(stratum.size())) {
      report.status = VerificationStatus::fail;
      report.counterexample = "weight " + std::to_string(w) + " leading terms have rank " +
                              std::to_string(rank) + " over " + std::to_string(stratum.size()) +
                              " basics";
      return report;
    }
  }
  report.details["per_weight_rank"] = per_weight.str();
  return report;
}

}  // namespace nilmult
