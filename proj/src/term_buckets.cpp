#include "macd/term_buckets.hpp"

#include <algorithm>

namespace macd {

// Layout: n content entries, power of (1-t), then (a,b) per denominator factor.
TermBuckets::Key TermBuckets::make_key(const RawTerm& term) {
  Key key;
  key.reserve(term.exponent.size() + 1 + 2 * term.den.size());
  for (int c : term.exponent) key.push_back(static_cast<char16_t>(c));
  key.push_back(static_cast<char16_t>(term.one_minus_t));
  for (const auto& f : term.den) {
    key.push_back(static_cast<char16_t>(f.a));
    key.push_back(static_cast<char16_t>(f.b));
  }
  return key;
}

void TermBuckets::add(const RawTerm& term) {
  ++buckets_[make_key(term)][{term.q_exp, term.t_exp}];
  ++terms_;
}

void TermBuckets::merge(const TermBuckets& other) {
  for (const auto& [key, monomials] : other.buckets_) {
    auto& mine = buckets_[key];
    for (const auto& [e, c] : monomials) mine[e] += c;
  }
  terms_ += other.terms_;
}

SymFunQT TermBuckets::finish() const {
  std::map<Content, RationalAccumulator, std::greater<>> per_content;
  std::map<int, LaurentQT> one_minus_t_powers;
  const auto n = static_cast<std::size_t>(n_);
  for (const auto& [key, monomials] : buckets_) {
    Content content(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(n));
    const int k = key[n];
    std::vector<DenomFactor> den;
    for (std::size_t p = n + 1; p + 1 < key.size(); p += 2) den.emplace_back(key[p], key[p + 1]);

    std::vector<LaurentQT::Term> terms;
    terms.reserve(monomials.size());
    for (const auto& [e, c] : monomials) terms.push_back({e, Integer(c)});
    auto it = one_minus_t_powers.find(k);
    if (it == one_minus_t_powers.end())
      it = one_minus_t_powers.emplace(k, LaurentQT::one_minus(0, 1).pow(static_cast<unsigned>(k)))
               .first;
    per_content[content].add(LaurentQT::from_terms(std::move(terms)) * it->second, den);
  }
  SymFunQT out(n_, degree_);
  for (const auto& [content, acc] : per_content) out.add_term(content, acc.finish());
  return out;
}

}  // namespace macd
