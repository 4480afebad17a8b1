#pragma once

#include <cstdint>
#include <functional>

namespace macd {

/// Parallelism and resource limits for the exponential enumerations.
struct ExecConfig {
  unsigned threads = 1;
  std::uint64_t term_cap = std::uint64_t{1} << 26;

  /// Reads MACD_THREADS (0 or unset = hardware concurrency) and MACD_TERM_CAP.
  static ExecConfig from_env();
};

/// Number of workers run_shards will use.
std::size_t worker_count(std::size_t shards, unsigned threads);

/// Runs body(shard, worker) for shard in [0, shards) on worker_count() threads.
/// Callers keep one accumulator per worker and merge with an associative,
/// commutative operation, so results never depend on which worker ran which
/// shard. The first exception thrown by any shard is rethrown after all
/// workers stop.
void run_shards(std::size_t shards, unsigned threads,
                const std::function<void(std::size_t shard, std::size_t worker)>& body);

/// Throws ResourceCapExceeded when count > cap.
void check_term_cap(std::uint64_t count, std::uint64_t cap, const char* what);

/// 2^m * n!, saturating at UINT64_MAX.
std::uint64_t folding_pair_count(int m, int n);

}  // namespace macd
