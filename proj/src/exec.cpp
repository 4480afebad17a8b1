#include "macd/exec.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "macd/errors.hpp"

namespace macd {

namespace {

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0')
    throw InvalidInput(std::string("environment variable ") + name + " is not an integer");
  return v;
}

}  // namespace

ExecConfig ExecConfig::from_env() {
  ExecConfig cfg;
  const auto threads = env_u64("MACD_THREADS", 0);
  cfg.threads = threads == 0 ? std::max(1U, std::thread::hardware_concurrency())
                             : static_cast<unsigned>(threads);
  cfg.term_cap = env_u64("MACD_TERM_CAP", cfg.term_cap);
  return cfg;
}

std::size_t worker_count(std::size_t shards, unsigned threads) {
  return std::max<std::size_t>(1, std::min<std::size_t>(std::max(1U, threads), shards));
}

void run_shards(std::size_t shards, unsigned threads,
                const std::function<void(std::size_t shard, std::size_t worker)>& body) {
  const auto workers = worker_count(shards, threads);
  if (workers == 1) {
    for (std::size_t s = 0; s < shards; ++s) body(s, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t s = next++; s < shards && !failed; s = next++) {
          try {
            body(s, w);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            failed = true;
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

void check_term_cap(std::uint64_t count, std::uint64_t cap, const char* what) {
  if (count > cap)
    throw ResourceCapExceeded(std::string(what) + ": " + std::to_string(count) +
                              " terms exceed the cap of " + std::to_string(cap) +
                              " (set MACD_TERM_CAP to raise it)");
}

std::uint64_t folding_pair_count(int m, int n) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  for (int i = 2; i <= n; ++i) {
    if (count > kMax / static_cast<std::uint64_t>(i)) return kMax;
    count *= static_cast<std::uint64_t>(i);
  }
  if (m >= 64 || count > (kMax >> m)) return kMax;
  return count << m;
}

}  // namespace macd
