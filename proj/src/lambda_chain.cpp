#include "macd/lambda_chain.hpp"

#include <map>
#include <numeric>

#include "macd/errors.hpp"

namespace macd {

Partition::Partition(std::vector<int> parts, int n) : n_(n) {
  if (n < 1 || n > kMaxRank)
    throw InvalidInput("n must be in [1, " + std::to_string(kMaxRank) + "]");
  while (!parts.empty() && parts.back() == 0 && static_cast<int>(parts.size()) > n)
    parts.pop_back();
  if (static_cast<int>(parts.size()) > n)
    throw InvalidInput("partition has more than n = " + std::to_string(n) + " nonzero parts");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw InvalidInput("partition parts must be nonnegative");
    if (i > 0 && parts[i] > parts[i - 1])
      throw InvalidInput("partition parts must be weakly decreasing");
  }
  parts.resize(static_cast<std::size_t>(n), 0);
  parts_ = std::move(parts);
}

Partition Partition::regular(std::vector<int> parts, int n) {
  Partition p(std::move(parts), n);
  p.require_regular();
  return p;
}

std::vector<int> Partition::parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto next = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, next - pos);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput("bad partition '" + text + "'");
    }
    if (used != item.size()) throw InvalidInput("bad partition '" + text + "'");
    parts.push_back(value);
    pos = next + 1;
  }
  return parts;
}

int Partition::part(int i) const {
  return i >= 1 && i <= n_ ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

int Partition::conjugate(int j) const {
  int count = 0;
  for (int p : parts_)
    if (p >= j) ++count;
  return count;
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::is_regular() const {
  if (n_ < 2 || parts_.back() != 0) return false;
  for (int i = 1; i < n_; ++i)
    if (part(i) <= part(i + 1)) return false;
  return true;
}

void Partition::require_regular() const {
  if (!is_regular())
    throw InvalidInput("partition " + to_string() +
                       " is not regular: need lambda_1 > ... > lambda_{n-1} > lambda_n = 0");
}

int Partition::n_lambda() const {
  int total = 0;
  for (int i = 1; i <= n_; ++i) total += (i - 1) * part(i);
  return total;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i != 0) out += ", ";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::vector<RootA> gamma(int k, int n) {
  if (k < 1 || k > n - 1)
    throw InvalidInput("gamma needs 1 <= k <= n-1, got k=" + std::to_string(k));
  std::vector<RootA> out;
  for (int i = k; i >= 1; --i)
    for (int j = n; j >= k + 1; --j) out.push_back({i, j});
  return out;
}

std::vector<RootA> gamma_prime(int k, int n) {
  if (k < 1 || k > n - 1)
    throw InvalidInput("gamma_prime needs 1 <= k <= n-1, got k=" + std::to_string(k));
  std::vector<RootA> out;
  for (int i = k; i >= 1; --i)
    for (int j = n; j >= k + 2; --j) out.push_back({i, j});
  return out;
}

AnnotatedChain::AnnotatedChain(std::vector<ChainEntry> entries, int n)
    : entries_(std::move(entries)), n_(n) {
  for (int p = 1; p <= size(); ++p) {
    const int col = at(p).column;
    if (factors_.empty() || factors_.back().column != col)
      factors_.push_back({col, p, p});
    else
      factors_.back().last = p;
  }
}

std::string AnnotatedChain::to_string() const {
  std::string out = "(";
  for (int p = 1; p <= size(); ++p) {
    if (p > 1) out += at(p).column != at(p - 1).column ? " | " : ",";
    out += at(p).root.to_string();
  }
  return out + ")";
}

AnnotatedChain build_chain(const Partition& lambda) {
  lambda.require_regular();
  const int n = lambda.n();
  std::vector<ChainEntry> entries;
  std::map<RootA, int> seen;
  for (int j = lambda.columns(); j >= 2; --j) {
    const int height = lambda.conjugate(j);
    int first_with_height = j;
    while (first_with_height > 1 && lambda.conjugate(first_with_height - 1) == height)
      --first_with_height;
    const auto factor = j == first_with_height ? gamma_prime(height, n) : gamma(height, n);
    for (const RootA& r : factor) {
      const int mult = ++seen[r];
      if (mult != lambda.arm(r.i, j - 1))
        throw InternalError("chain multiplicity " + std::to_string(mult) + " of " + r.to_string() +
                            " in column " + std::to_string(j) + " differs from arm(" +
                            std::to_string(r.i) + "," + std::to_string(j - 1) + ")");
      entries.push_back({r, j, mult});
    }
  }
  return {std::move(entries), n};
}

}  // namespace macd
