#pragma once

/**
 * The filling map from folding pairs to nonattacking fillings, its fibers, and
 * the per-fiber check that Ram-Yip terms compress to one compressed term.
 *
 * For a folding pair (w, T) with T = T_{lambda_1} ... T_2 split by chain
 * columns, pi_j = w T_{lambda_1} ... T_{j+1} and column j of the filling is the
 * first lambda'_j entries of pi_j.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "macd/exec.hpp"
#include "macd/fillings.hpp"
#include "macd/lambda_chain.hpp"
#include "macd/ram_yip.hpp"

namespace macd {

/// The subsequence of the chain indexed by J, split into per-column factors.
struct ColumnFactoredT {
  struct Factor {
    int column = 0;
    std::vector<ChainEntry> entries;
  };
  /// One factor per chain column, lambda_1 down to 2 (possibly empty).
  std::vector<Factor> factors;

  /// "((1,4) | (2,3),(1,3) | (2,4))"
  std::string to_string() const;
};

ColumnFactoredT column_factor(std::span<const int> folds, const AnnotatedChain& chain);

Filling filling_map(const Permutation& w, const ColumnFactoredT& T, const Partition& lambda);
Filling filling_map(const Permutation& w, std::span<const int> folds, const AnnotatedChain& chain,
                    const Partition& lambda);

/// A folding pair mapping to sigma, built column by column as a Bruhat chain.
/// Throws InternalError if the construction leaves the chain's subsequences.
FoldingPair fiber_witness(const Filling& sigma, const Partition& lambda,
                          const AnnotatedChain& chain);

/// All folding pairs mapping to sigma, by brute force over S_n x 2^[m].
std::vector<FoldingPair> fiber(const Filling& sigma, const Partition& lambda,
                               const ExecConfig& cfg);

struct ClassCheck {
  Filling sigma;
  bool ok = false;
  std::size_t fiber_size = 0;
  RationalQT fiber_sum;
  RationalQT expected;
  /// Empty when ok; otherwise what went wrong and the fiber in broken-column notation.
  std::string detail;
};

ClassCheck verify_class(const Filling& sigma, const Partition& lambda, const ExecConfig& cfg);

struct CompressionReport {
  std::uint64_t folding_pairs = 0;
  std::uint64_t expected_pairs = 0;
  std::size_t nonattacking = 0;
  /// Every pair lands in exactly one class and the classes are exactly T(lambda, n).
  bool fibers_partition = false;
  std::vector<ClassCheck> classes;  // in filling order
  std::size_t passed() const;
  bool ok() const { return fibers_partition && passed() == classes.size(); }
  const ClassCheck* first_failure() const;
};

/// Groups all 2^m n! pairs by filling in one pass and checks every class.
CompressionReport verify_all_classes(const Partition& lambda, const ExecConfig& cfg);

struct MapPropertyReport {
  std::uint64_t pairs_checked = 0;
  std::uint64_t fillings_checked = 0;
  bool content_identity = true;  // content(f(w,T)) = w(mu(T))
  bool image_nonattacking = true;
  bool witness_round_trip = true;
  std::string first_failure;
  bool ok() const { return content_identity && image_nonattacking && witness_round_trip; }
};

MapPropertyReport check_map_properties(const Partition& lambda, const ExecConfig& cfg);

struct ImageSummary {
  std::uint64_t pairs = 0;
  std::uint64_t distinct_images = 0;
  bool all_nonattacking = true;
};

/// Enumerates every folding pair through the filling map and counts distinct images.
ImageSummary filling_map_image(const Partition& lambda, const ExecConfig& cfg);

/// The Bruhat chain of (w, J) as broken columns, e.g.
/// "2|341 > 1|342 | 13|42 < 14|32 < 34|12 | 34|12 > 32|14".
std::string broken_column_chain(const FoldingPair& pair, const AnnotatedChain& chain,
                                const Partition& lambda);

}  // namespace macd
