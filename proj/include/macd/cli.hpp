#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "macd/exec.hpp"
#include "macd/lambda_chain.hpp"
#include "macd/qt_algebra.hpp"

namespace macd {

enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitInvalid = 2, kExitCap = 3 };

/// "x[2,0] + ((1 + q - t - q*t)/((1 - q*t)))*x[1,1]"
std::string symfun_to_text(const SymFunQT& p);
/// Canonical JSON: {"lambda":[...],"n":N,"monomials":[{"exp","num","den"}...]}.
std::string symfun_to_json(const SymFunQT& p, const Partition& lambda);
/// Inverse of symfun_to_json; fills `lambda` from the document. Throws InvalidInput.
SymFunQT symfun_from_json(const std::string& text, Partition& lambda);

struct TableRow {
  Partition lambda;
  int chain_length = 0;
  std::uint64_t folding_pairs = 0;
  std::uint64_t t_count = 0;
  std::uint64_t hhl_count = 0;
  /// Half-up rounding to one decimal, in tenths.
  std::int64_t c_tenths = 0;
  std::int64_t r_tenths = 0;
  /// Set only when the images of the filling map were enumerated.
  std::int64_t distinct_images = -1;
};

/// round(num/den, 1) half-up, in tenths.
std::int64_t round_tenths(std::uint64_t num, std::uint64_t den);
std::string format_tenths(std::int64_t tenths);
std::string format_thousands(std::uint64_t value);

/// The four shapes of the compression table.
std::vector<Partition> table_shapes();
TableRow compute_table_row(const Partition& lambda, bool enumerate_images, const ExecConfig& cfg);

/// Runs one command line (without the program name); returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace macd
