#pragma once

// Type-A Weyl group data: permutations of [n] in one-line notation, positive
// roots (i,k), and integer weights with a fixed coordinate sum.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace macd {

inline constexpr int kMaxRank = 16;

/// A bijection on [n], stored as its one-line word w(1)...w(n).
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidInput unless `word` is a permutation of 1..n.
  explicit Permutation(std::span<const int> word);
  Permutation(std::initializer_list<int> word);
  static Permutation identity(int n);
  /// Parses "2341" (n <= 9) or "2,3,4,1".
  static Permutation parse(const std::string& text);
  /// All of S_n in lexicographic order.
  static std::vector<Permutation> all(int n);

  int size() const { return n_; }
  /// w(i), 1-based.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  /// Position p with w(p) = value.
  int position_of(int value) const;
  std::vector<int> word() const;

  /// Right multiplication by the transposition (i,k): swaps positions i and k.
  void swap_positions(int i, int k) {
    std::swap(word_[static_cast<std::size_t>(i - 1)], word_[static_cast<std::size_t>(k - 1)]);
  }

  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::array<std::uint8_t, kMaxRank> word_{};
  std::uint8_t n_ = 0;
};

/// Positive root e_i - e_k with i < k; also names the transposition (i,k).
struct RootA {
  int i = 1;
  int k = 2;
  /// <rho, beta^vee> = k - i.
  int height() const { return k - i; }
  std::string to_string() const;
  friend auto operator<=>(const RootA&, const RootA&) = default;
};

/// Integer weight in Z^n; lambda is stored with lambda_n = 0.
using Weight = std::vector<int>;

int perm_length(const Permutation& w);
Permutation right_mul_transposition(Permutation w, RootA r);
/// True iff l(w (i,k)) < l(w), i.e. w(i) > w(k).
bool is_bruhat_descent(const Permutation& w, RootA r);
/// Reflection in the hyperplane mu_i - mu_k = l.
Weight affine_reflect(Weight mu, RootA r, int l);
/// nu with nu_{w(i)} = mu_i.
Weight permute_weight(const Permutation& w, std::span<const int> mu);
/// Composition (uv)(i) = u(v(i)).
Permutation compose(const Permutation& u, const Permutation& v);

}  // namespace macd
