#include "macd/ram_yip.hpp"

#include <algorithm>

#include "macd/errors.hpp"

namespace macd {

std::vector<int> normalize_folds(std::span<const int> folds, const AnnotatedChain& chain) {
  std::vector<int> out(folds.begin(), folds.end());
  std::sort(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 1 || out[i] > chain.size())
      throw InvalidInput("fold position " + std::to_string(out[i]) + " outside [1, " +
                         std::to_string(chain.size()) + "]");
    if (i > 0 && out[i] == out[i - 1])
      throw InvalidInput("repeated fold position " + std::to_string(out[i]));
  }
  return out;
}

ClassifiedFolds classify_folds(const Permutation& w, std::span<const int> folds,
                               const AnnotatedChain& chain) {
  const auto sorted = normalize_folds(folds, chain);
  ClassifiedFolds out;
  out.chain.push_back(w);
  Permutation current = w;
  for (int p : sorted) {
    const RootA r = chain.at(p).root;
    (is_bruhat_descent(current, r) ? out.plus : out.minus).push_back(p);
    current.swap_positions(r.i, r.k);
    out.chain.push_back(current);
  }
  return out;
}

Weight mu_of_J(std::span<const int> folds, const AnnotatedChain& chain, const Partition& lambda) {
  const auto sorted = normalize_folds(folds, chain);
  Weight mu(lambda.parts().begin(), lambda.parts().end());
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
    const auto& e = chain.at(*it);
    mu = affine_reflect(std::move(mu), e.root, e.mult);
  }
  return mu;
}

RawTerm ry_raw_term(const Permutation& w, std::span<const int> folds,
                    const AnnotatedChain& chain, const Partition& lambda) {
  RawTerm term;
  Permutation current = w;
  for (int p : folds) {
    const auto& e = chain.at(p);
    if (!is_bruhat_descent(current, e.root)) {
      term.q_exp += e.mult;
      term.t_exp += e.root.height();
    }
    term.den.emplace_back(e.mult, e.root.height());
    current.swap_positions(e.root.i, e.root.k);
  }
  const int twice = perm_length(w) - perm_length(current) - static_cast<int>(folds.size());
  if (twice % 2 != 0)
    throw InternalError("odd fold exponent for w=" + w.to_string() + " at end " +
                        current.to_string());
  term.t_exp += twice / 2;
  term.one_minus_t = static_cast<int>(folds.size());
  std::sort(term.den.begin(), term.den.end());

  Weight mu(lambda.parts().begin(), lambda.parts().end());
  for (auto it = folds.rbegin(); it != folds.rend(); ++it) {
    const auto& e = chain.at(*it);
    mu = affine_reflect(std::move(mu), e.root, e.mult);
  }
  term.exponent = permute_weight(w, mu);
  return term;
}

Term ry_term(const Permutation& w, std::span<const int> folds, const AnnotatedChain& chain,
             const Partition& lambda) {
  lambda.require_regular();
  const auto sorted = normalize_folds(folds, chain);
  RawTerm raw = ry_raw_term(w, sorted, chain, lambda);
  LaurentQT num = LaurentQT::monomial(1, raw.q_exp, raw.t_exp) *
                  LaurentQT::one_minus(0, 1).pow(static_cast<unsigned>(raw.one_minus_t));
  return {RationalQT(std::move(num), std::move(raw.den)), std::move(raw.exponent)};
}

std::uint64_t ry_term_count(const Partition& lambda, const ExecConfig& cfg) {
  lambda.require_regular();
  const auto count = folding_pair_count(build_chain(lambda).size(), lambda.n());
  check_term_cap(count, cfg.term_cap, "Ram-Yip sum");
  return count;
}

SymFunQT ry_sum(const Partition& lambda, const ExecConfig& cfg) {
  ry_term_count(lambda, cfg);
  const AnnotatedChain chain = build_chain(lambda);
  const auto perms = Permutation::all(lambda.n());
  std::vector<TermBuckets> partial(worker_count(perms.size(), cfg.threads),
                                   TermBuckets(lambda.n(), lambda.size()));
  run_shards(perms.size(), cfg.threads, [&](std::size_t s, std::size_t worker) {
    for_each_fold_set(chain.size(), [&](std::span<const int> folds) {
      partial[worker].add(ry_raw_term(perms[s], folds, chain, lambda));
    });
  });
  for (std::size_t w = 1; w < partial.size(); ++w) partial[0].merge(partial[w]);
  return partial[0].finish();
}

}  // namespace macd
