#include "macd/weyl.hpp"

#include <algorithm>
#include <numeric>

#include "macd/errors.hpp"

namespace macd {

Permutation::Permutation(std::span<const int> word) {
  if (word.empty() || word.size() > static_cast<std::size_t>(kMaxRank))
    throw InvalidInput("permutation size must be in [1, " + std::to_string(kMaxRank) + "]");
  n_ = static_cast<std::uint8_t>(word.size());
  std::array<bool, kMaxRank + 1> seen{};
  for (std::size_t p = 0; p < word.size(); ++p) {
    const int v = word[p];
    if (v < 1 || v > n_ || seen[static_cast<std::size_t>(v)])
      throw InvalidInput("not a permutation of [" + std::to_string(n_) + "]");
    seen[static_cast<std::size_t>(v)] = true;
    word_[p] = static_cast<std::uint8_t>(v);
  }
}

Permutation::Permutation(std::initializer_list<int> word)
    : Permutation(std::span<const int>(word.begin(), word.size())) {}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(w);
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> w;
  if (text.find(',') != std::string::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto next = std::min(text.find(',', pos), text.size());
      try {
        w.push_back(std::stoi(text.substr(pos, next - pos)));
      } catch (const std::exception&) {
        throw InvalidInput("bad permutation '" + text + "'");
      }
      pos = next + 1;
    }
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw InvalidInput("bad permutation '" + text + "'");
      w.push_back(ch - '0');
    }
  }
  return Permutation(w);
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

int Permutation::position_of(int value) const {
  for (int p = 0; p < n_; ++p)
    if (word_[static_cast<std::size_t>(p)] == value) return p + 1;
  throw InvalidInput("value " + std::to_string(value) + " not in permutation");
}

std::vector<int> Permutation::word() const { return {word_.begin(), word_.begin() + n_}; }

std::string Permutation::to_string() const {
  std::string out;
  for (int p = 0; p < n_; ++p) {
    if (n_ > 9 && p != 0) out += ',';
    out += std::to_string(word_[static_cast<std::size_t>(p)]);
  }
  return out;
}

std::string RootA::to_string() const {
  return "(" + std::to_string(i) + "," + std::to_string(k) + ")";
}

int perm_length(const Permutation& w) {
  int inversions = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) ++inversions;
  return inversions;
}

Permutation right_mul_transposition(Permutation w, RootA r) {
  w.swap_positions(r.i, r.k);
  return w;
}

bool is_bruhat_descent(const Permutation& w, RootA r) { return w(r.i) > w(r.k); }

Weight affine_reflect(Weight mu, RootA r, int l) {
  auto& a = mu[static_cast<std::size_t>(r.i - 1)];
  auto& b = mu[static_cast<std::size_t>(r.k - 1)];
  const int shift = a - b - l;
  a -= shift;
  b += shift;
  return mu;
}

Weight permute_weight(const Permutation& w, std::span<const int> mu) {
  Weight nu(mu.size());
  for (int i = 1; i <= w.size(); ++i)
    nu[static_cast<std::size_t>(w(i) - 1)] = mu[static_cast<std::size_t>(i - 1)];
  return nu;
}

Permutation compose(const Permutation& u, const Permutation& v) {
  std::vector<int> w(static_cast<std::size_t>(v.size()));
  for (int i = 1; i <= v.size(); ++i) w[static_cast<std::size_t>(i - 1)] = u(v(i));
  return Permutation(w);
}

}  // namespace macd
