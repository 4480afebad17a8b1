#pragma once

/**
 * Independent checks of a computed P_lambda.
 *
 * The oracle specializes (q,t) to rationals (q0,t0) and solves for the unique
 * m_lambda + (lower terms in dominance order) orthogonal to every strictly
 * lower m_mu under the power-sum pairing
 *   <p_rho, p_rho> = z_rho prod_i (1 - q0^rho_i) / (1 - t0^rho_i).
 * Work happens over all partitions of |lambda|, then results are truncated to
 * at most n parts.
 */

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "macd/lambda_chain.hpp"
#include "macd/qt_algebra.hpp"

namespace macd {

/// Parts without trailing zeros.
using PartitionKey = std::vector<int>;

/// Monomial-basis coefficients m_mu -> rational, largest mu first.
using SymFunQ = std::map<PartitionKey, Rational, std::greater<>>;

std::vector<PartitionKey> partitions_of(int size);
/// mu <= nu in dominance order (same size).
bool dominated_by(const PartitionKey& mu, const PartitionKey& nu);

/// Throws PoleError when a pairing has a pole and InternalError when the system is singular.
SymFunQ macdonald_oracle(const Partition& lambda, int n, const Rational& q0, const Rational& t0);
SymFunQ schur_oracle(const Partition& lambda, int n);
/// Number of semistandard tableaux of shape lambda and content mu.
Integer kostka(const PartitionKey& lambda, const PartitionKey& mu);

/// Coefficients of P at (q0,t0) read off at the dominant contents.
SymFunQ specialize_m_basis(const SymFunQT& p, const Rational& q0, const Rational& t0);

std::string symfunq_to_string(const SymFunQ& f);

struct SpecializationReport {
  std::uint64_t seed = 0;
  bool symmetric = false;
  bool monic = false;
  bool oracle_agrees = false;
  bool schur_agrees = false;
  /// The points actually used, after retries.
  std::vector<std::pair<Rational, Rational>> points;
  Rational schur_point;
  std::string first_failure;
  bool ok() const { return symmetric && monic && oracle_agrees && schur_agrees; }
};

/// Symmetry, monicity at x^lambda, oracle agreement at 3 seeded points, and
/// Schur agreement on the diagonal q0 = t0.
SpecializationReport check_specializations(const SymFunQT& p, const Partition& lambda, int n,
                                           std::uint64_t seed);
/// Same, at one caller-chosen point plus one seeded diagonal point.
SpecializationReport check_specializations_at(const SymFunQT& p, const Partition& lambda, int n,
                                              const Rational& q0, const Rational& t0,
                                              std::uint64_t seed);

}  // namespace macd
