#pragma once

#include <span>
#include <string>
#include <vector>

#include "macd/weyl.hpp"

namespace macd {

/// A partition padded with zeros to exactly n parts.
class Partition {
 public:
  Partition() = default;
  /// Weakly decreasing nonnegative parts, at most n of them. Throws InvalidInput.
  Partition(std::vector<int> parts, int n);
  /// Additionally requires lambda_1 > ... > lambda_{n-1} > 0 = lambda_n.
  static Partition regular(std::vector<int> parts, int n);
  /// Parses a comma list such as "4,3,1,0".
  static std::vector<int> parse_parts(const std::string& text);

  int n() const { return n_; }
  std::span<const int> parts() const { return parts_; }
  /// lambda_i, 1-based; 0 beyond the last part.
  int part(int i) const;
  /// lambda'_j, 1-based.
  int conjugate(int j) const;
  /// Number of columns, lambda_1.
  int columns() const { return parts_.empty() ? 0 : parts_.front(); }
  int size() const;
  bool is_regular() const;
  /// Throws InvalidInput unless regular.
  void require_regular() const;
  bool contains(int i, int j) const { return i >= 1 && j >= 1 && j <= part(i); }

  /// n(lambda) = sum (i-1) lambda_i
  int n_lambda() const;
  /// Cells strictly left of (i,j) in its row: lambda_i - j.
  int arm(int i, int j) const { return part(i) - j; }
  /// Cells strictly below (i,j) in its column: lambda'_j - i.
  int leg(int i, int j) const { return conjugate(j) - i; }

  /// "(4, 3, 1, 0)"
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Gamma(k): rows i = k..1, each (i,n), (i,n-1), ..., (i,k+1).
std::vector<RootA> gamma(int k, int n);
/// Gamma(k) with the last root (i,k+1) of every row removed.
std::vector<RootA> gamma_prime(int k, int n);

struct ChainEntry {
  RootA root;
  int column = 0;
  /// Number of positions up to this one carrying the same root.
  int mult = 0;
};

/// The lambda-chain Gamma = Gamma_{lambda_1} ... Gamma_2 with per-position annotations.
class AnnotatedChain {
 public:
  AnnotatedChain() = default;
  AnnotatedChain(std::vector<ChainEntry> entries, int n);

  int size() const { return static_cast<int>(entries_.size()); }
  int n() const { return n_; }
  /// Position p in [1, m].
  const ChainEntry& at(int p) const { return entries_[static_cast<std::size_t>(p - 1)]; }
  std::span<const ChainEntry> entries() const { return entries_; }
  /// Columns in chain order (lambda_1 down to 2); each with its positions [first, last].
  struct Factor {
    int column;
    int first;
    int last;
  };
  const std::vector<Factor>& factors() const { return factors_; }

  /// "((1,4),(1,3) | (2,4),(2,3),(1,4),(1,3) | (2,4),(1,4))"
  std::string to_string() const;

 private:
  std::vector<ChainEntry> entries_;
  std::vector<Factor> factors_;
  int n_ = 0;
};

/// Requires a regular partition; throws InvalidInput otherwise.
AnnotatedChain build_chain(const Partition& lambda);

}  // namespace macd
