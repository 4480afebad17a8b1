#include "macd/compression.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "macd/errors.hpp"

namespace macd {

namespace {

// Column j of the filling is read from the running permutation before the
// factor of column j is applied; `visit(j, perm)` sees each pi_j.
template <typename Visit>
void walk_columns(const Permutation& w, std::span<const int> folds, const AnnotatedChain& chain,
                  const Partition& lambda, Visit&& visit) {
  Permutation current = w;
  std::size_t next = 0;
  for (int j = lambda.columns(); j >= 1; --j) {
    visit(j, current);
    while (next < folds.size() && chain.at(folds[next]).column == j) {
      const RootA r = chain.at(folds[next]).root;
      current.swap_positions(r.i, r.k);
      ++next;
    }
  }
}

// Filling values in reading order written into `out` (resized as needed).
void filling_values(const Permutation& w, std::span<const int> folds, const AnnotatedChain& chain,
                    const Partition& lambda, std::vector<int>& offsets, std::string& out) {
  if (offsets.empty()) {
    int offset = 0;
    for (int j = 1; j <= lambda.columns(); ++j) {
      offsets.push_back(offset);
      offset += lambda.conjugate(j);
    }
    offsets.push_back(offset);
  }
  out.resize(static_cast<std::size_t>(offsets.back()));
  walk_columns(w, folds, chain, lambda, [&](int j, const Permutation& pi) {
    const int base = offsets[static_cast<std::size_t>(j - 1)];
    for (int i = 1; i <= lambda.conjugate(j); ++i)
      out[static_cast<std::size_t>(base + i - 1)] = static_cast<char>(pi(i));
  });
}

Filling filling_from_key(const Partition& lambda, const std::string& key) {
  std::vector<int> values(key.begin(), key.end());
  return {lambda, std::move(values)};
}

std::string describe_fiber(const std::vector<FoldingPair>& pairs, const AnnotatedChain& chain,
                           const Partition& lambda) {
  std::string out;
  for (const auto& p : pairs) {
    if (!out.empty()) out += "; ";
    out += "w=" + p.w.to_string() + " T=" + column_factor(p.folds, chain).to_string() + ": " +
           broken_column_chain(p, chain, lambda);
  }
  return out;
}

}  // namespace

std::string ColumnFactoredT::to_string() const {
  std::string out = "(";
  for (std::size_t f = 0; f < factors.size(); ++f) {
    if (f > 0) out += " | ";
    for (std::size_t e = 0; e < factors[f].entries.size(); ++e) {
      if (e > 0) out += ",";
      out += factors[f].entries[e].root.to_string();
    }
  }
  return out + ")";
}

ColumnFactoredT column_factor(std::span<const int> folds, const AnnotatedChain& chain) {
  const auto sorted = normalize_folds(folds, chain);
  ColumnFactoredT T;
  for (const auto& f : chain.factors()) {
    ColumnFactoredT::Factor factor{f.column, {}};
    for (int p : sorted)
      if (p >= f.first && p <= f.last) factor.entries.push_back(chain.at(p));
    T.factors.push_back(std::move(factor));
  }
  return T;
}

Filling filling_map(const Permutation& w, const ColumnFactoredT& T, const Partition& lambda) {
  if (w.size() != lambda.n()) throw InvalidInput("permutation size differs from n");
  std::map<int, const ColumnFactoredT::Factor*> by_column;
  for (const auto& f : T.factors) by_column[f.column] = &f;
  Filling sigma(lambda, std::vector<int>(static_cast<std::size_t>(lambda.size()), 1));
  Permutation pi = w;
  for (int j = lambda.columns(); j >= 1; --j) {
    for (int i = 1; i <= lambda.conjugate(j); ++i) sigma.set(i, j, pi(i));
    if (auto it = by_column.find(j); it != by_column.end())
      for (const auto& e : it->second->entries) pi.swap_positions(e.root.i, e.root.k);
  }
  return sigma;
}

Filling filling_map(const Permutation& w, std::span<const int> folds, const AnnotatedChain& chain,
                    const Partition& lambda) {
  return filling_map(w, column_factor(folds, chain), lambda);
}

FoldingPair fiber_witness(const Filling& sigma, const Partition& lambda,
                          const AnnotatedChain& chain) {
  lambda.require_regular();
  const int n = lambda.n();
  // pi_1: column 1 holds n-1 distinct entries; the missing value goes last.
  std::vector<int> word;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= lambda.conjugate(1); ++i) {
    word.push_back(sigma.at(i, 1));
    used[static_cast<std::size_t>(sigma.at(i, 1))] = true;
  }
  for (int v = 1; v <= n; ++v)
    if (!used[static_cast<std::size_t>(v)]) word.push_back(v);
  Permutation pi(word);

  std::map<int, AnnotatedChain::Factor> factor_of;
  for (const auto& f : chain.factors()) factor_of[f.column] = f;

  std::vector<int> folds;
  for (int j = 2; j <= lambda.columns(); ++j) {
    std::vector<RootA> applied;  // in the order applied going from pi_{j-1} to pi_j
    for (int i = 1; i <= lambda.conjugate(j); ++i) {
      if (sigma.at(i, j) == sigma.at(i, j - 1)) continue;
      const int p = pi.position_of(sigma.at(i, j));
      if (p <= lambda.conjugate(j - 1))
        throw InternalError("witness: entry " + std::to_string(sigma.at(i, j)) + " of column " +
                            std::to_string(j) + " found at position " + std::to_string(p));
      pi.swap_positions(i, p);
      applied.push_back({i, p});
    }
    // pi_{j-1} = pi_j T_j, so T_j lists the transpositions in reverse.
    const auto& f = factor_of.at(j);
    int last = 0;
    for (auto it = applied.rbegin(); it != applied.rend(); ++it) {
      int found = 0;
      for (int q = f.first; q <= f.last; ++q)
        if (chain.at(q).root == *it) found = q;
      if (found == 0 || found <= last)
        throw InternalError("witness: transposition " + it->to_string() +
                            " is not an ordered subsequence of the column-" + std::to_string(j) +
                            " factor");
      last = found;
      folds.push_back(found);
    }
  }
  std::sort(folds.begin(), folds.end());
  FoldingPair pair{pi, folds};
  if (filling_map(pair.w, pair.folds, chain, lambda) != sigma)
    throw InternalError("witness does not map back to " + sigma.to_string());
  return pair;
}

std::vector<FoldingPair> fiber(const Filling& sigma, const Partition& lambda,
                               const ExecConfig& cfg) {
  ry_term_count(lambda, cfg);
  const AnnotatedChain chain = build_chain(lambda);
  const auto perms = Permutation::all(lambda.n());
  std::vector<std::vector<FoldingPair>> per_shard(perms.size());
  run_shards(perms.size(), cfg.threads, [&](std::size_t s, std::size_t) {
    std::vector<int> offsets;
    std::string values;
    for_each_fold_set(chain.size(), [&](std::span<const int> folds) {
      filling_values(perms[s], folds, chain, lambda, offsets, values);
      if (std::equal(values.begin(), values.end(), sigma.values().begin(), sigma.values().end()))
        per_shard[s].push_back({perms[s], {folds.begin(), folds.end()}});
    });
  });
  std::vector<FoldingPair> out;
  for (auto& v : per_shard) out.insert(out.end(), v.begin(), v.end());
  return out;
}

ClassCheck verify_class(const Filling& sigma, const Partition& lambda, const ExecConfig& cfg) {
  const AnnotatedChain chain = build_chain(lambda);
  const auto pairs = fiber(sigma, lambda, cfg);
  ClassCheck check;
  check.sigma = sigma;
  check.fiber_size = pairs.size();
  const Content content = sigma.content(lambda.n());
  RationalAccumulator acc;
  bool exponents_ok = true;
  for (const auto& p : pairs) {
    const Term term = ry_term(p.w, p.folds, chain, lambda);
    exponents_ok = exponents_ok && term.exponent == content;
    acc.add(term.coef);
  }
  check.fiber_sum = acc.finish();
  if (!is_nonattacking(sigma)) {
    check.detail = "filling is attacking";
    return check;
  }
  check.expected = compressed_term(sigma, lambda).first;
  check.ok = !pairs.empty() && exponents_ok && check.fiber_sum == check.expected;
  if (!check.ok) {
    check.detail = pairs.empty()      ? "empty fiber"
                   : !exponents_ok    ? "fiber monomial differs from content"
                                      : "fiber sum " + check.fiber_sum.to_string() +
                                         " != " + check.expected.to_string();
    check.detail += " [" + describe_fiber(pairs, chain, lambda) + "]";
  }
  return check;
}

std::size_t CompressionReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(classes.begin(), classes.end(), [](const ClassCheck& c) { return c.ok; }));
}

const ClassCheck* CompressionReport::first_failure() const {
  for (const auto& c : classes)
    if (!c.ok) return &c;
  return nullptr;
}

CompressionReport verify_all_classes(const Partition& lambda, const ExecConfig& cfg) {
  CompressionReport report;
  report.expected_pairs = ry_term_count(lambda, cfg);
  const AnnotatedChain chain = build_chain(lambda);
  const auto perms = Permutation::all(lambda.n());

  struct ClassAccum {
    std::vector<FoldingPair> pairs;
    std::vector<RawTerm> terms;
  };
  using Groups = std::unordered_map<std::string, ClassAccum>;
  std::vector<Groups> partial(worker_count(perms.size(), cfg.threads));
  run_shards(perms.size(), cfg.threads, [&](std::size_t s, std::size_t worker) {
    std::vector<int> offsets;
    std::string key;
    for_each_fold_set(chain.size(), [&](std::span<const int> folds) {
      filling_values(perms[s], folds, chain, lambda, offsets, key);
      auto& cls = partial[worker][key];
      cls.pairs.push_back({perms[s], {folds.begin(), folds.end()}});
      cls.terms.push_back(ry_raw_term(perms[s], folds, chain, lambda));
    });
  });
  std::map<std::string, ClassAccum> groups;
  for (auto& part : partial)
    for (auto& [key, cls] : part) {
      auto& dst = groups[key];
      dst.pairs.insert(dst.pairs.end(), cls.pairs.begin(), cls.pairs.end());
      dst.terms.insert(dst.terms.end(), cls.terms.begin(), cls.terms.end());
    }

  const auto expected_classes = nonattacking_fillings(lambda);
  report.nonattacking = expected_classes.size();
  std::set<Filling> image;
  for (auto& [key, cls] : groups) {
    report.folding_pairs += cls.pairs.size();
    ClassCheck check;
    check.sigma = filling_from_key(lambda, key);
    image.insert(check.sigma);
    check.fiber_size = cls.pairs.size();
    std::sort(cls.pairs.begin(), cls.pairs.end());
    const Content content = check.sigma.content(lambda.n());
    TermBuckets buckets(lambda.n(), lambda.size());
    bool exponents_ok = true;
    for (const auto& t : cls.terms) {
      exponents_ok = exponents_ok && t.exponent == content;
      buckets.add(t);
    }
    check.fiber_sum = exponents_ok ? buckets.finish().coefficient(content) : RationalQT{};
    if (!is_nonattacking(check.sigma)) {
      check.detail = "image filling is attacking";
    } else {
      check.expected = compressed_term(check.sigma, lambda).first;
      check.ok = exponents_ok && check.fiber_sum == check.expected;
      if (!check.ok)
        check.detail = (!exponents_ok ? std::string("fiber monomial differs from content")
                                      : "fiber sum " + check.fiber_sum.to_string() +
                                            " != " + check.expected.to_string()) +
                       " [" + describe_fiber(cls.pairs, chain, lambda) + "]";
    }
    report.classes.push_back(std::move(check));
  }
  std::sort(report.classes.begin(), report.classes.end(),
            [](const ClassCheck& x, const ClassCheck& y) { return x.sigma < y.sigma; });
  const std::set<Filling> expected(expected_classes.begin(), expected_classes.end());
  report.fibers_partition =
      report.folding_pairs == report.expected_pairs && image == expected;
  return report;
}

MapPropertyReport check_map_properties(const Partition& lambda, const ExecConfig& cfg) {
  ry_term_count(lambda, cfg);
  const AnnotatedChain chain = build_chain(lambda);
  const auto perms = Permutation::all(lambda.n());
  std::vector<MapPropertyReport> partial(worker_count(perms.size(), cfg.threads));
  run_shards(perms.size(), cfg.threads, [&](std::size_t s, std::size_t worker) {
    auto& rep = partial[worker];
    for_each_fold_set(chain.size(), [&](std::span<const int> folds) {
      ++rep.pairs_checked;
      const Filling sigma = filling_map(perms[s], folds, chain, lambda);
      const Weight via_mu = permute_weight(perms[s], mu_of_J(folds, chain, lambda));
      const bool content_ok = sigma.content(lambda.n()) == via_mu;
      const bool nonattacking = is_nonattacking(sigma);
      if ((!content_ok || !nonattacking) && rep.first_failure.empty())
        rep.first_failure = "w=" + perms[s].to_string() + " T=" +
                            column_factor(folds, chain).to_string() + " -> " + sigma.to_string();
      rep.content_identity = rep.content_identity && content_ok;
      rep.image_nonattacking = rep.image_nonattacking && nonattacking;
    });
  });
  MapPropertyReport report;
  for (const auto& rep : partial) {
    report.pairs_checked += rep.pairs_checked;
    report.content_identity = report.content_identity && rep.content_identity;
    report.image_nonattacking = report.image_nonattacking && rep.image_nonattacking;
    if (report.first_failure.empty()) report.first_failure = rep.first_failure;
  }
  enumerate_nonattacking(lambda, lambda.n(), AttackConvention::paper, [&](const Filling& sigma) {
    ++report.fillings_checked;
    try {
      fiber_witness(sigma, lambda, chain);
    } catch (const InternalError& e) {
      report.witness_round_trip = false;
      if (report.first_failure.empty()) report.first_failure = e.what();
    }
  });
  return report;
}

ImageSummary filling_map_image(const Partition& lambda, const ExecConfig& cfg) {
  ry_term_count(lambda, cfg);
  const AnnotatedChain chain = build_chain(lambda);
  const auto perms = Permutation::all(lambda.n());
  std::vector<std::unordered_set<std::string>> images(worker_count(perms.size(), cfg.threads));
  std::vector<std::uint64_t> pairs(images.size(), 0);
  run_shards(perms.size(), cfg.threads, [&](std::size_t s, std::size_t worker) {
    std::vector<int> offsets;
    std::string key;
    for_each_fold_set(chain.size(), [&](std::span<const int> folds) {
      filling_values(perms[s], folds, chain, lambda, offsets, key);
      images[worker].insert(key);
      ++pairs[worker];
    });
  });
  for (std::size_t w = 1; w < images.size(); ++w) images[0].merge(images[w]);
  ImageSummary summary;
  for (auto p : pairs) summary.pairs += p;
  summary.distinct_images = images[0].size();
  for (const auto& key : images[0])
    if (!is_nonattacking(filling_from_key(lambda, key))) summary.all_nonattacking = false;
  return summary;
}

std::string broken_column_chain(const FoldingPair& pair, const AnnotatedChain& chain,
                                const Partition& lambda) {
  auto split = [](const Permutation& pi, int top) {
    std::string s;
    for (int i = 1; i <= pi.size(); ++i) {
      if (i == top + 1) s += '|';
      if (pi.size() > 9 && i != 1 && i != top + 1) s += ',';
      s += std::to_string(pi(i));
    }
    return s;
  };
  const auto folds = normalize_folds(pair.folds, chain);
  std::string out;
  Permutation current = pair.w;
  std::size_t next = 0;
  for (const auto& f : chain.factors()) {
    const int top = lambda.conjugate(f.column);
    if (!out.empty()) out += " | ";
    out += split(current, top);
    for (; next < folds.size() && folds[next] <= f.last; ++next) {
      const RootA r = chain.at(folds[next]).root;
      out += is_bruhat_descent(current, r) ? " > " : " < ";
      current.swap_positions(r.i, r.k);
      out += split(current, top);
    }
  }
  return out;
}

}  // namespace macd
