#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "macd/qt_algebra.hpp"

namespace macd {

/// One summand q^qa t^tb (1-t)^k / prod(den) x^exponent, before any rational arithmetic.
struct RawTerm {
  int q_exp = 0;
  int t_exp = 0;
  int one_minus_t = 0;
  std::vector<DenomFactor> den;  // sorted
  Content exponent;
};

/// Groups summands by (content, denominator, power of 1-t) and only adds
/// integer monomial counts, so rational arithmetic runs once per group.
class TermBuckets {
 public:
  TermBuckets() = default;
  TermBuckets(int n, int degree) : n_(n), degree_(degree) {}

  void add(const RawTerm& term);
  /// Adds every bucket of `other` into this one.
  void merge(const TermBuckets& other);
  std::uint64_t term_count() const { return terms_; }

  SymFunQT finish() const;

 private:
  using Key = std::u16string;
  static Key make_key(const RawTerm& term);

  int n_ = 0;
  int degree_ = 0;
  std::uint64_t terms_ = 0;
  std::unordered_map<Key, std::map<Exponent, std::int64_t>> buckets_;
};

}  // namespace macd
