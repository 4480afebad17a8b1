#include "macd/oracle.hpp"

#include <algorithm>
#include <random>

#include "macd/errors.hpp"

namespace macd {

namespace {

void partitions_rec(int remaining, int max_part, PartitionKey& current,
                    std::vector<PartitionKey>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

PartitionKey trimmed(std::span<const int> parts) {
  PartitionKey key(parts.begin(), parts.end());
  while (!key.empty() && key.back() == 0) key.pop_back();
  return key;
}

// Coefficient of x^mu in p_rho: ways to drop the parts of rho into bins of sizes mu.
Integer power_sum_coefficient(const PartitionKey& rho, std::vector<int>& room, std::size_t index) {
  if (index == rho.size()) {
    return std::all_of(room.begin(), room.end(), [](int r) { return r == 0; }) ? 1 : 0;
  }
  Integer total = 0;
  for (auto& r : room) {
    if (r < rho[index]) continue;
    r -= rho[index];
    total += power_sum_coefficient(rho, room, index + 1);
    r += rho[index];
  }
  return total;
}

Rational rational_pow(const Rational& x, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

Integer z_factor(const PartitionKey& rho) {
  Integer z = 1;
  std::map<int, int> mult;
  for (int r : rho) ++mult[r];
  for (auto [part, m] : mult)
    for (int k = 1; k <= m; ++k) z *= Integer(part) * k;
  return z;
}

// Solves a x = b in place by Gauss-Jordan elimination; false when singular.
bool solve(std::vector<std::vector<Rational>>& a, std::vector<Rational>& b) {
  const std::size_t size = b.size();
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && a[pivot][col] == 0) ++pivot;
    if (pivot == size) return false;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t k = col; k < size; ++k) a[col][k] *= inv;
    b[col] *= inv;
    for (std::size_t row = 0; row < size; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col];
      for (std::size_t k = col; k < size; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  return true;
}

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t size = a.size();
  std::vector<std::vector<Rational>> inv(size, std::vector<Rational>(size, 0));
  for (std::size_t i = 0; i < size; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && a[pivot][col] == 0) ++pivot;
    if (pivot == size) throw InternalError("power-sum transition matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational s = 1 / a[col][col];
    for (std::size_t k = 0; k < size; ++k) {
      a[col][k] *= s;
      inv[col][k] *= s;
    }
    for (std::size_t row = 0; row < size; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col];
      for (std::size_t k = 0; k < size; ++k) {
        a[row][k] -= f * a[col][k];
        inv[row][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

void drop_zeros(SymFunQ& f) {
  std::erase_if(f, [](const auto& kv) { return kv.second == 0; });
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(2, 97);
  const int num = d(rng);
  const int den = d(rng);
  return Rational(num, den);
}

std::string point_text(const Rational& q0, const Rational& t0) {
  return "(q,t) = (" + rational_to_string(q0) + ", " + rational_to_string(t0) + ")";
}

std::string first_difference(const SymFunQ& got, const SymFunQ& want) {
  auto describe = [](const PartitionKey& mu) {
    std::string s = "m[";
    for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? "," : "") + std::to_string(mu[i]);
    return s + "]";
  };
  for (const auto& [mu, c] : want) {
    auto it = got.find(mu);
    const Rational have = it == got.end() ? Rational(0) : it->second;
    if (have != c)
      return describe(mu) + ": got " + rational_to_string(have) + ", expected " +
             rational_to_string(c);
  }
  for (const auto& [mu, c] : got)
    if (!want.contains(mu))
      return describe(mu) + ": got " + rational_to_string(c) + ", expected 0";
  return {};
}

void check_symmetry_and_monicity(const SymFunQT& p, const Partition& lambda,
                                 SpecializationReport& report) {
  report.symmetric = true;
  std::map<Content, std::size_t> orbit_seen;
  for (const auto& [c, coef] : p.terms()) {
    Content sorted = c;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    ++orbit_seen[sorted];
    if (!(p.coefficient(sorted) == coef)) {
      report.symmetric = false;
      if (report.first_failure.empty())
        report.first_failure = "symmetry: coefficient of x" + Partition(sorted, p.n()).to_string() +
                               " differs from a permuted monomial";
    }
  }
  for (const auto& [sorted, seen] : orbit_seen) {
    Content perm = sorted;
    std::sort(perm.begin(), perm.end());
    std::size_t orbit = 0;
    do ++orbit;
    while (std::next_permutation(perm.begin(), perm.end()));
    if (orbit != seen) {
      report.symmetric = false;
      if (report.first_failure.empty())
        report.first_failure = "symmetry: orbit of x" + Partition(sorted, p.n()).to_string() +
                               " has " + std::to_string(seen) + " of " + std::to_string(orbit) +
                               " monomials";
    }
  }
  const Content top(lambda.parts().begin(), lambda.parts().end());
  report.monic = p.coefficient(top) == RationalQT(1);
  if (!report.monic && report.first_failure.empty())
    report.first_failure = "monicity: coefficient of x" + lambda.to_string() + " is " +
                           p.coefficient(top).to_string();
}

// One oracle comparison; returns false when the point hits a pole and must be redrawn.
bool compare_at(const SymFunQT& p, const Partition& lambda, int n, const Rational& q0,
                const Rational& t0, SpecializationReport& report) {
  SymFunQ got;
  SymFunQ want;
  try {
    got = specialize_m_basis(p, q0, t0);
    want = macdonald_oracle(lambda, n, q0, t0);
  } catch (const PoleError&) {
    return false;
  } catch (const InternalError&) {
    return false;
  }
  report.points.emplace_back(q0, t0);
  const std::string diff = first_difference(got, want);
  if (!diff.empty()) {
    report.oracle_agrees = false;
    if (report.first_failure.empty())
      report.first_failure = "oracle at " + point_text(q0, t0) + ": " + diff;
  }
  return true;
}

void compare_schur(const SymFunQT& p, const Partition& lambda, int n, std::mt19937_64& rng,
                   SpecializationReport& report) {
  const SymFunQ want = schur_oracle(lambda, n);
  for (int attempt = 0; attempt < 100; ++attempt) {
    const Rational r = random_rational(rng);
    if (r == 1) continue;
    SymFunQ got;
    try {
      got = specialize_m_basis(p, r, r);
    } catch (const PoleError&) {
      continue;
    }
    report.schur_point = r;
    const std::string diff = first_difference(got, want);
    report.schur_agrees = diff.empty();
    if (!diff.empty() && report.first_failure.empty())
      report.first_failure = "schur at q = t = " + rational_to_string(r) + ": " + diff;
    return;
  }
  if (report.first_failure.empty()) report.first_failure = "schur: no pole-free point found";
}

}  // namespace

std::vector<PartitionKey> partitions_of(int size) {
  std::vector<PartitionKey> out;
  PartitionKey current;
  partitions_rec(size, size, current, out);
  return out;
}

bool dominated_by(const PartitionKey& mu, const PartitionKey& nu) {
  int a = 0;
  int b = 0;
  const std::size_t len = std::max(mu.size(), nu.size());
  for (std::size_t i = 0; i < len; ++i) {
    a += i < mu.size() ? mu[i] : 0;
    b += i < nu.size() ? nu[i] : 0;
    if (a > b) return false;
  }
  return a == b;
}

SymFunQ macdonald_oracle(const Partition& lambda, int n, const Rational& q0, const Rational& t0) {
  const PartitionKey top = trimmed(lambda.parts());
  const int size = lambda.size();
  const auto all = partitions_of(size);
  const std::size_t count = all.size();

  std::vector<std::vector<Rational>> transition(count, std::vector<Rational>(count, 0));
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < count; ++c) {
      std::vector<int> room = all[c];
      transition[r][c] = Rational(power_sum_coefficient(all[r], room, 0));
    }
  const auto m_to_p = invert(transition);  // m_mu = sum_rho m_to_p[mu][rho] p_rho

  std::vector<Rational> pairing(count);
  for (std::size_t r = 0; r < count; ++r) {
    Rational d = Rational(z_factor(all[r]));
    for (int part : all[r]) {
      const Rational den = 1 - rational_pow(t0, part);
      if (den == 0) throw PoleError("power-sum pairing has a pole at " + point_text(q0, t0));
      d *= (1 - rational_pow(q0, part)) / den;
    }
    pairing[r] = d;
  }
  auto inner = [&](std::size_t a, std::size_t b) {
    Rational s = 0;
    for (std::size_t r = 0; r < count; ++r) s += m_to_p[a][r] * m_to_p[b][r] * pairing[r];
    return s;
  };

  std::size_t top_index = count;
  std::vector<std::size_t> lower;
  for (std::size_t i = 0; i < count; ++i) {
    if (all[i] == top)
      top_index = i;
    else if (dominated_by(all[i], top))
      lower.push_back(i);
  }
  if (top_index == count) throw InternalError("lambda missing from its own partition list");

  std::vector<std::vector<Rational>> a(lower.size(), std::vector<Rational>(lower.size()));
  std::vector<Rational> b(lower.size());
  for (std::size_t r = 0; r < lower.size(); ++r) {
    for (std::size_t c = 0; c < lower.size(); ++c) a[r][c] = inner(lower[c], lower[r]);
    b[r] = -inner(top_index, lower[r]);
  }
  if (!solve(a, b)) throw InternalError("singular Gram system at " + point_text(q0, t0));

  SymFunQ out;
  out[top] = 1;
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (static_cast<int>(all[lower[i]].size()) <= n) out[all[lower[i]]] = b[i];
  drop_zeros(out);
  return out;
}

Integer kostka(const PartitionKey& lambda, const PartitionKey& mu) {
  if (mu.empty()) return std::all_of(lambda.begin(), lambda.end(), [](int x) { return x == 0; });
  const int strip = mu.back();
  const PartitionKey rest(mu.begin(), mu.end() - 1);
  Integer total = 0;
  PartitionKey inner = lambda;
  // Remove a horizontal strip of size `strip`: lambda_{i+1} <= kappa_i <= lambda_i.
  std::function<void(std::size_t, int)> choose = [&](std::size_t i, int left) {
    if (i == lambda.size()) {
      if (left == 0) total += kostka(trimmed(inner), rest);
      return;
    }
    const int floor = i + 1 < lambda.size() ? lambda[i + 1] : 0;
    for (int kappa = lambda[i]; kappa >= floor && lambda[i] - kappa <= left; --kappa) {
      inner[i] = kappa;
      choose(i + 1, left - (lambda[i] - kappa));
    }
    inner[i] = lambda[i];
  };
  choose(0, strip);
  return total;
}

SymFunQ schur_oracle(const Partition& lambda, int n) {
  const PartitionKey top = trimmed(lambda.parts());
  SymFunQ out;
  for (const auto& mu : partitions_of(lambda.size())) {
    if (static_cast<int>(mu.size()) > n || !dominated_by(mu, top)) continue;
    const Integer k = kostka(top, mu);
    if (k != 0) out[mu] = Rational(k);
  }
  return out;
}

SymFunQ specialize_m_basis(const SymFunQT& p, const Rational& q0, const Rational& t0) {
  SymFunQ out;
  for (const auto& [c, coef] : p.terms()) {
    if (!std::is_sorted(c.begin(), c.end(), std::greater<>())) continue;
    out[trimmed(c)] = coef.eval_at(q0, t0);
  }
  drop_zeros(out);
  return out;
}

std::string symfunq_to_string(const SymFunQ& f) {
  std::string out;
  for (const auto& [mu, c] : f) {
    if (!out.empty()) out += " + ";
    out += "(" + rational_to_string(c) + ")*m[";
    for (std::size_t i = 0; i < mu.size(); ++i) out += (i ? "," : "") + std::to_string(mu[i]);
    out += "]";
  }
  return out.empty() ? "0" : out;
}

SpecializationReport check_specializations(const SymFunQT& p, const Partition& lambda, int n,
                                           std::uint64_t seed) {
  SpecializationReport report;
  report.seed = seed;
  check_symmetry_and_monicity(p, lambda, report);
  std::mt19937_64 rng(seed);
  report.oracle_agrees = true;
  for (int attempt = 0; attempt < 300 && report.points.size() < 3; ++attempt) {
    const Rational q0 = random_rational(rng);
    const Rational t0 = random_rational(rng);
    if (q0 == 1 || t0 == 1 || q0 == t0) continue;
    compare_at(p, lambda, n, q0, t0, report);
  }
  if (report.points.size() < 3) {
    report.oracle_agrees = false;
    if (report.first_failure.empty()) report.first_failure = "oracle: no pole-free points found";
  }
  compare_schur(p, lambda, n, rng, report);
  return report;
}

SpecializationReport check_specializations_at(const SymFunQT& p, const Partition& lambda, int n,
                                              const Rational& q0, const Rational& t0,
                                              std::uint64_t seed) {
  SpecializationReport report;
  report.seed = seed;
  check_symmetry_and_monicity(p, lambda, report);
  report.oracle_agrees = true;
  if (!compare_at(p, lambda, n, q0, t0, report)) {
    report.oracle_agrees = false;
    if (report.first_failure.empty())
      report.first_failure = "oracle: pole or singular system at " + point_text(q0, t0);
  }
  std::mt19937_64 rng(seed);
  compare_schur(p, lambda, n, rng, report);
  return report;
}

}  // namespace macd
