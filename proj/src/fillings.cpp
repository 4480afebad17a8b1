#include "macd/fillings.hpp"

#include <algorithm>

#include "macd/errors.hpp"

namespace macd {

std::string Cell::to_string() const {
  return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

bool attacks(Cell u, Cell v, AttackConvention convention) {
  if (u == v) return false;
  if (u.col == v.col) return true;
  if (u.col < v.col) std::swap(u, v);
  if (u.col != v.col + 1) return false;
  // u is in the left column.
  return convention == AttackConvention::paper ? u.row < v.row : u.row > v.row;
}

bool reading_precedes(Cell u, Cell v) {
  return u.col < v.col || (u.col == v.col && u.row < v.row);
}

// ------------------------------------------------------------------- Filling

Filling::Filling(const Partition& shape, std::vector<int> values) {
  int offset = 0;
  for (int j = 1; j <= shape.columns(); ++j) {
    heights_.push_back(shape.conjugate(j));
    offsets_.push_back(offset);
    offset += heights_.back();
  }
  if (static_cast<int>(values.size()) != offset)
    throw InvalidInput("filling has " + std::to_string(values.size()) + " entries, shape has " +
                       std::to_string(offset) + " cells");
  values_.reserve(values.size());
  for (int v : values) {
    if (v < 1 || v > 255) throw InvalidInput("filling entries must be in [1, 255]");
    values_.push_back(static_cast<std::uint8_t>(v));
  }
}

Filling Filling::from_rows(const Partition& shape, const std::vector<std::vector<int>>& rows) {
  std::vector<int> values;
  for (int j = 1; j <= shape.columns(); ++j)
    for (int i = 1; i <= shape.conjugate(j); ++i) {
      if (static_cast<int>(rows.size()) < i || static_cast<int>(rows[i - 1].size()) < j)
        throw InvalidInput("row data does not cover cell (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
      values.push_back(rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
    }
  return {shape, std::move(values)};
}

std::vector<Cell> Filling::cells() const {
  std::vector<Cell> out;
  out.reserve(values_.size());
  for (int j = 1; j <= columns(); ++j)
    for (int i = 1; i <= height(j); ++i) out.push_back({i, j});
  return out;
}

Content Filling::content(int n) const {
  Content c(static_cast<std::size_t>(n), 0);
  for (auto v : values_) {
    if (v > n) throw InvalidInput("filling entry exceeds n = " + std::to_string(n));
    ++c[v - 1U];
  }
  return c;
}

std::string Filling::to_string() const {
  std::string out;
  const int rows = heights_.empty() ? 0 : heights_.front();
  for (int i = 1; i <= rows; ++i) {
    if (i > 1) out += " / ";
    int row_length = 0;
    while (row_length < columns() && height(row_length + 1) >= i) ++row_length;
    for (int j = row_length; j >= 1; --j) {
      out += std::to_string(at(i, j));
      if (j > 1) out += ' ';
    }
  }
  return out;
}

std::size_t FillingHash::operator()(const Filling& f) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto v : f.values()) h = (h ^ v) * 1099511628211ULL;
  return h;
}

// --------------------------------------------------------------- statistics

bool is_nonattacking(const Filling& sigma, AttackConvention convention) {
  const auto cells = sigma.cells();
  for (std::size_t x = 0; x < cells.size(); ++x)
    for (std::size_t y = x + 1; y < cells.size(); ++y)
      if (attacks(cells[x], cells[y], convention) &&
          sigma.at(cells[x].row, cells[x].col) == sigma.at(cells[y].row, cells[y].col))
        return false;
  return true;
}

FillingStats filling_stats(const Filling& sigma, const Partition& lambda) {
  FillingStats stats;
  const auto cells = sigma.cells();
  int legs_of_descents = 0;
  for (const Cell& u : cells) {
    if (!lambda.contains(u.row, u.col + 1)) continue;
    const int here = sigma.at(u.row, u.col);
    const int left = sigma.at(u.row, u.col + 1);
    if (here != left) stats.diff.push_back(u);
    if (here > left) {
      stats.des.push_back(u);
      stats.maj += lambda.arm(u.row, u.col);
      legs_of_descents += lambda.leg(u.row, u.col);
    }
  }
  // cells are already in reading order, so x < y means cells[x] precedes cells[y].
  for (std::size_t x = 0; x < cells.size(); ++x)
    for (std::size_t y = x + 1; y < cells.size(); ++y)
      if (attacks(cells[x], cells[y]) &&
          sigma.at(cells[x].row, cells[x].col) > sigma.at(cells[y].row, cells[y].col))
        stats.inv_pairs.emplace_back(cells[x], cells[y]);
  stats.inv = static_cast<int>(stats.inv_pairs.size()) - legs_of_descents;
  stats.content = sigma.content(lambda.n());
  return stats;
}

// -------------------------------------------------------------- enumeration

namespace {

// Backtracking in reading order; each cell only checks the earlier cells it attacks.
class Backtracker {
 public:
  Backtracker(const Partition& lambda, int n, AttackConvention convention)
      : lambda_(lambda), n_(n) {
    const Filling blank(lambda, std::vector<int>(static_cast<std::size_t>(lambda.size()), 1));
    cells_ = blank.cells();
    earlier_.resize(cells_.size());
    for (std::size_t x = 0; x < cells_.size(); ++x)
      for (std::size_t y = 0; y < x; ++y)
        if (attacks(cells_[x], cells_[y], convention)) earlier_[x].push_back(y);
    first_column_ = static_cast<std::size_t>(lambda.conjugate(1));
    if (cells_.empty()) first_column_ = 0;
  }

  std::size_t first_column_size() const { return first_column_; }
  std::size_t cell_count() const { return cells_.size(); }

  template <typename Visit>
  void run(std::vector<int>& values, std::size_t pos, Visit&& visit) const {
    if (pos == cells_.size()) {
      visit(values);
      return;
    }
    for (int v = 1; v <= n_; ++v) {
      bool ok = true;
      for (auto y : earlier_[pos])
        if (values[y] == v) {
          ok = false;
          break;
        }
      if (!ok) continue;
      values[pos] = v;
      run(values, pos + 1, visit);
    }
  }

  /// All admissible first columns, in lexicographic order.
  std::vector<std::vector<int>> first_columns() const {
    std::vector<std::vector<int>> out;
    std::vector<int> values(cells_.size(), 0);
    collect_prefix(values, 0, out);
    return out;
  }

  const Partition& lambda() const { return lambda_; }

 private:
  void collect_prefix(std::vector<int>& values, std::size_t pos,
                      std::vector<std::vector<int>>& out) const {
    if (pos == first_column_) {
      out.push_back(values);
      return;
    }
    for (int v = 1; v <= n_; ++v) {
      bool ok = true;
      for (auto y : earlier_[pos]) ok = ok && values[y] != v;
      if (!ok) continue;
      values[pos] = v;
      collect_prefix(values, pos + 1, out);
    }
  }

  const Partition& lambda_;
  int n_;
  std::vector<Cell> cells_;
  std::vector<std::vector<std::size_t>> earlier_;
  std::size_t first_column_ = 0;
};

}  // namespace

void enumerate_nonattacking(const Partition& lambda, int n, AttackConvention convention,
                            const std::function<void(const Filling&)>& visit) {
  const Backtracker bt(lambda, n, convention);
  std::vector<int> values(bt.cell_count(), 0);
  bt.run(values, 0, [&](const std::vector<int>& v) { visit(Filling(lambda, v)); });
}

std::vector<Filling> nonattacking_fillings(const Partition& lambda, AttackConvention convention) {
  std::vector<Filling> out;
  enumerate_nonattacking(lambda, lambda.n(), convention,
                         [&out](const Filling& f) { out.push_back(f); });
  return out;
}

std::uint64_t count_nonattacking(const Partition& lambda, AttackConvention convention,
                                 const ExecConfig& cfg) {
  const Backtracker bt(lambda, lambda.n(), convention);
  const auto prefixes = bt.first_columns();
  std::vector<std::uint64_t> counts(worker_count(prefixes.size(), cfg.threads), 0);
  run_shards(prefixes.size(), cfg.threads, [&](std::size_t s, std::size_t worker) {
    std::vector<int> values = prefixes[s];
    bt.run(values, bt.first_column_size(), [&](const std::vector<int>&) { ++counts[worker]; });
  });
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

std::uint64_t hhl_nonattacking_count(const Partition& lambda, const ExecConfig& cfg) {
  return count_nonattacking(lambda, AttackConvention::hhl, cfg);
}

// ---------------------------------------------------------- compressed sum

RawTerm compressed_raw_term(const Filling& sigma, const Partition& lambda) {
  const FillingStats stats = filling_stats(sigma, lambda);
  RawTerm term;
  term.q_exp = stats.maj;
  term.t_exp = lambda.n_lambda() - stats.inv;
  term.one_minus_t = static_cast<int>(stats.diff.size());
  for (const Cell& u : stats.diff)
    term.den.emplace_back(lambda.arm(u.row, u.col), lambda.leg(u.row, u.col) + 1);
  std::sort(term.den.begin(), term.den.end());
  term.exponent = stats.content;
  return term;
}

std::pair<RationalQT, Content> compressed_term(const Filling& sigma, const Partition& lambda) {
  if (!is_nonattacking(sigma)) throw InvalidInput("filling " + sigma.to_string() + " attacks");
  RawTerm raw = compressed_raw_term(sigma, lambda);
  LaurentQT num = LaurentQT::monomial(1, raw.q_exp, raw.t_exp) *
                  LaurentQT::one_minus(0, 1).pow(static_cast<unsigned>(raw.one_minus_t));
  return {RationalQT(std::move(num), std::move(raw.den)), std::move(raw.exponent)};
}

SymFunQT compressed_sum(const Partition& lambda, const ExecConfig& cfg) {
  lambda.require_regular();
  const Backtracker bt(lambda, lambda.n(), AttackConvention::paper);
  const auto prefixes = bt.first_columns();
  std::vector<TermBuckets> partial(worker_count(prefixes.size(), cfg.threads),
                                   TermBuckets(lambda.n(), lambda.size()));
  run_shards(prefixes.size(), cfg.threads, [&](std::size_t s, std::size_t worker) {
    std::vector<int> values = prefixes[s];
    bt.run(values, bt.first_column_size(), [&](const std::vector<int>& v) {
      partial[worker].add(compressed_raw_term(Filling(lambda, v), lambda));
    });
  });
  for (std::size_t w = 1; w < partial.size(); ++w) partial[0].merge(partial[w]);
  return partial[0].finish();
}

}  // namespace macd
