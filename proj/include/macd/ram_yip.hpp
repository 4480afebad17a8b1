#pragma once

/**
 * Macdonald P via the alcove-walk (Ram-Yip) formula over folding pairs.
 *
 * A folding pair (w, J) couples a permutation w with a set J of positions of
 * the lambda-chain. Walking J in increasing order from w, each position is a
 * positive fold when the running permutation has a Bruhat descent at that
 * position's root, and a negative fold otherwise. The pair contributes
 *
 *   t^{(l(w) - l(w phi(J)) - |J|)/2} (1-t)^{|J|}
 *     prod_{J+} 1/(1 - q^l t^{k-i})  prod_{J-} q^l t^{k-i}/(1 - q^l t^{k-i})
 *
 * times x^{w(mu(J))}, with mu(J) the image of lambda under the affine
 * reflections of J (largest position applied first).
 */

#include <cstdint>
#include <span>
#include <vector>

#include "macd/exec.hpp"
#include "macd/lambda_chain.hpp"
#include "macd/qt_algebra.hpp"
#include "macd/term_buckets.hpp"
#include "macd/weyl.hpp"

namespace macd {

/// Positions are 1-based and strictly increasing.
struct FoldingPair {
  Permutation w;
  std::vector<int> folds;
  friend auto operator<=>(const FoldingPair&, const FoldingPair&) = default;
};

struct ClassifiedFolds {
  /// w, w r_{j_1}, ..., w phi(J)
  std::vector<Permutation> chain;
  std::vector<int> plus;
  std::vector<int> minus;
};

/// Sorts and validates J against the chain; throws InvalidInput on a bad position.
std::vector<int> normalize_folds(std::span<const int> folds, const AnnotatedChain& chain);

ClassifiedFolds classify_folds(const Permutation& w, std::span<const int> folds,
                               const AnnotatedChain& chain);
Weight mu_of_J(std::span<const int> folds, const AnnotatedChain& chain, const Partition& lambda);

struct Term {
  RationalQT coef;
  Content exponent;
};

/// The uncombined summand for (w, J); `folds` must already be normalized.
RawTerm ry_raw_term(const Permutation& w, std::span<const int> folds,
                    const AnnotatedChain& chain, const Partition& lambda);
Term ry_term(const Permutation& w, std::span<const int> folds, const AnnotatedChain& chain,
             const Partition& lambda);

/// 2^m n!; throws ResourceCapExceeded above cfg.term_cap.
std::uint64_t ry_term_count(const Partition& lambda, const ExecConfig& cfg);

/// Visits every folding pair in (w lexicographic, J binary counter) order for one w.
template <typename Fn>
void for_each_fold_set(int m, Fn&& fn) {
  std::vector<int> folds;
  const std::uint64_t subsets = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    folds.clear();
    for (int p = 0; p < m; ++p)
      if ((mask >> p) & 1U) folds.push_back(p + 1);
    fn(std::span<const int>(folds));
  }
}

SymFunQT ry_sum(const Partition& lambda, const ExecConfig& cfg);

}  // namespace macd
