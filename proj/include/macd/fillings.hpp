#pragma once

/**
 * Fillings of a Young diagram and the compressed Macdonald formula.
 *
 * Cells are (row i, column j) with j <= lambda_i. Diagrams are read in
 * "Japanese" orientation: column 1 is rightmost, so the cell to the left of
 * (i,j) is (i,j+1). Two cells attack when they share a column, or when they
 * lie in consecutive columns with the left cell strictly higher:
 * (i,j) and (k,j-1) with i < k. The HHL convention flips this to i > k.
 *
 * Reading order: column 1 first, then column 2, ...; each column top to bottom.
 */

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "macd/exec.hpp"
#include "macd/lambda_chain.hpp"
#include "macd/qt_algebra.hpp"
#include "macd/term_buckets.hpp"

namespace macd {

struct Cell {
  int row = 1;
  int col = 1;
  std::string to_string() const;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

enum class AttackConvention { paper, hhl };

bool attacks(Cell u, Cell v, AttackConvention convention = AttackConvention::paper);
bool reading_precedes(Cell u, Cell v);

/// Entries of a diagram, stored column by column in reading order.
class Filling {
 public:
  Filling() = default;
  /// `values` in reading order; throws InvalidInput on a size mismatch or entry < 1.
  Filling(const Partition& shape, std::vector<int> values);
  /// rows[i-1][j-1] = sigma(i,j).
  static Filling from_rows(const Partition& shape, const std::vector<std::vector<int>>& rows);

  int at(int i, int j) const { return values_[index(i, j)]; }
  void set(int i, int j, int value) { values_[index(i, j)] = static_cast<std::uint8_t>(value); }
  int columns() const { return static_cast<int>(heights_.size()); }
  /// Column height lambda'_j.
  int height(int j) const { return heights_[static_cast<std::size_t>(j - 1)]; }
  std::span<const std::uint8_t> values() const { return values_; }
  /// Cells in reading order.
  std::vector<Cell> cells() const;
  Content content(int n) const;

  /// Rows top to bottom, each listed from column lambda_i down to column 1,
  /// e.g. "2 1 3 3 / 3 4 2 / 1".
  std::string to_string() const;

  friend auto operator<=>(const Filling&, const Filling&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(offsets_[static_cast<std::size_t>(j - 1)] + i - 1);
  }

  std::vector<int> heights_;
  std::vector<int> offsets_;
  std::vector<std::uint8_t> values_;
};

struct FillingHash {
  std::size_t operator()(const Filling& f) const noexcept;
};

struct FillingStats {
  std::vector<Cell> des;
  std::vector<Cell> diff;
  /// Ordered (earlier, later) pairs in reading order.
  std::vector<std::pair<Cell, Cell>> inv_pairs;
  int maj = 0;
  int inv = 0;
  Content content;
};

bool is_nonattacking(const Filling& sigma, AttackConvention convention = AttackConvention::paper);
FillingStats filling_stats(const Filling& sigma, const Partition& lambda);

/// Visits every nonattacking filling once, in lexicographic reading-order sequence.
void enumerate_nonattacking(const Partition& lambda, int n, AttackConvention convention,
                            const std::function<void(const Filling&)>& visit);
std::vector<Filling> nonattacking_fillings(const Partition& lambda,
                                           AttackConvention convention = AttackConvention::paper);
/// Parallel count, sharded on the first column.
std::uint64_t count_nonattacking(const Partition& lambda, AttackConvention convention,
                                 const ExecConfig& cfg);
std::uint64_t hhl_nonattacking_count(const Partition& lambda, const ExecConfig& cfg);

RawTerm compressed_raw_term(const Filling& sigma, const Partition& lambda);
/// Throws InvalidInput when sigma is attacking.
std::pair<RationalQT, Content> compressed_term(const Filling& sigma, const Partition& lambda);
SymFunQT compressed_sum(const Partition& lambda, const ExecConfig& cfg);

}  // namespace macd
