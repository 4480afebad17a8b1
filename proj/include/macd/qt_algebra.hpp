#pragma once

/**
 * Exact arithmetic in the parameters (q,t).
 *
 * LaurentQT is a sparse Laurent polynomial with arbitrary-precision integer
 * coefficients. RationalQT keeps its denominator as a multiset of binomials
 * (1 - q^a t^b); this is the only denominator shape that occurs in the
 * Macdonald formulas, so reduction never needs a multivariate gcd.
 *
 * Canonical form of a RationalQT: every binomial 1 - x^g (x = q^a' t^b',
 * gcd(a',b') = 1) factors as a product of the irreducibles Psi_d(x), d | g,
 * where Psi_1(x) = 1 - x and Psi_d = Phi_d (cyclotomic) for d > 1. All
 * irreducibles that divide the numerator are cancelled, and the survivors are
 * regrouped into binomials by a fixed greedy rule. Two values are equal as
 * rational functions iff their canonical forms are identical.
 */

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace macd {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponent pair (a, b) of the monomial q^a t^b.
struct Exponent {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

class LaurentQT {
 public:
  struct Term {
    Exponent exp;
    Integer coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentQT() = default;
  LaurentQT(const Integer& constant);  // NOLINT(google-explicit-constructor)
  LaurentQT(long long constant) : LaurentQT(Integer(constant)) {}  // NOLINT

  static LaurentQT monomial(const Integer& coef, int a, int b);
  /// 1 - q^a t^b
  static LaurentQT one_minus(int a, int b);
  /// Builds from unsorted terms; duplicates are summed and zeros dropped.
  static LaurentQT from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Terms sorted by (a,b) ascending; no zero coefficients.
  std::span<const Term> terms() const { return terms_; }

  int min_a() const;
  int max_a() const;
  int min_b() const;
  int max_b() const;

  LaurentQT shifted(int da, int db) const;
  LaurentQT pow(unsigned e) const;

  LaurentQT operator-() const;
  friend LaurentQT operator+(const LaurentQT& f, const LaurentQT& g);
  friend LaurentQT operator-(const LaurentQT& f, const LaurentQT& g);
  friend LaurentQT operator*(const LaurentQT& f, const LaurentQT& g);
  LaurentQT& operator+=(const LaurentQT& g) { return *this = *this + g; }
  LaurentQT& operator*=(const LaurentQT& g) { return *this = *this * g; }
  friend bool operator==(const LaurentQT&, const LaurentQT&) = default;

  /// Quotient if `divisor` divides this exactly in Z[q^±1, t^±1].
  std::optional<LaurentQT> exact_divide(const LaurentQT& divisor) const;

  Rational eval(const Rational& q0, const Rational& t0) const;

  /// Canonical text, e.g. "1 - t + q*t^-2".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

LaurentQT laurent_mul(const LaurentQT& f, const LaurentQT& g);

/// The binomial 1 - q^a t^b, with (a,b) != (0,0) and a,b >= 0.
struct DenomFactor {
  int a = 0;
  int b = 0;
  DenomFactor() = default;
  DenomFactor(int a_, int b_);
  friend auto operator<=>(const DenomFactor&, const DenomFactor&) = default;
};

class RationalQT {
 public:
  RationalQT() = default;
  RationalQT(LaurentQT num);  // NOLINT(google-explicit-constructor)
  RationalQT(long long constant) : RationalQT(LaurentQT(constant)) {}  // NOLINT
  /// Canonicalizing constructor.
  RationalQT(LaurentQT num, std::vector<DenomFactor> den);
  /// Stores the pair as given, without any reduction.
  static RationalQT unreduced(LaurentQT num, std::vector<DenomFactor> den);

  const LaurentQT& num() const { return num_; }
  /// Sorted multiset.
  const std::vector<DenomFactor>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalQT operator-() const;
  friend RationalQT operator+(const RationalQT& f, const RationalQT& g);
  friend RationalQT operator-(const RationalQT& f, const RationalQT& g);
  friend RationalQT operator*(const RationalQT& f, const RationalQT& g);
  RationalQT& operator+=(const RationalQT& g) { return *this = *this + g; }

  /// Structural equality; meaningful as rational-function equality only
  /// between canonical values.
  friend bool operator==(const RationalQT&, const RationalQT&) = default;
  /// Rational-function equality by cross-multiplication; works on any pair.
  bool equivalent(const RationalQT& other) const;

  /// Throws PoleError when a denominator factor vanishes at (q0, t0).
  Rational eval_at(const Rational& q0, const Rational& t0) const;

  /// "num" or "(num)/((1 - q*t)*(1 - q^2*t))".
  std::string to_string() const;

 private:
  LaurentQT num_;
  std::vector<DenomFactor> den_;
};

RationalQT rational_add(const RationalQT& f, const RationalQT& g);
RationalQT rational_reduce(const RationalQT& f);
Rational rational_eval_at(const RationalQT& f, const Rational& q0, const Rational& t0);

/// Product of the binomials in `factors`.
LaurentQT expand_denominator(std::span<const DenomFactor> factors);

/// Sums many fractions over one multiset-lcm denominator and canonicalizes once.
class RationalAccumulator {
 public:
  void add(const LaurentQT& num, std::span<const DenomFactor> den_sorted);
  void add(const RationalQT& value) { add(value.num(), value.den()); }
  RationalQT finish() const;

 private:
  struct Part {
    LaurentQT num;
    std::vector<DenomFactor> den;
  };
  std::vector<Part> parts_;
};

using Content = std::vector<int>;

/// Symmetric-function accumulator in n variables: content vector -> coefficient.
class SymFunQT {
 public:
  using Map = std::map<Content, RationalQT, std::greater<>>;

  SymFunQT() = default;
  SymFunQT(int n, int degree) : n_(n), degree_(degree) {}

  int n() const { return n_; }
  int degree() const { return degree_; }

  /// Throws InvalidInput on dimension or degree mismatch.
  void add_term(const Content& c, const RationalQT& coef);
  void merge(const SymFunQT& other);

  RationalQT coefficient(const Content& c) const;
  std::size_t size() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }
  /// Contents in descending lexicographic order.
  const Map& terms() const { return coeffs_; }

  friend bool operator==(const SymFunQT&, const SymFunQT&) = default;

 private:
  void check(const Content& c) const;

  int n_ = 0;
  int degree_ = 0;
  Map coeffs_;
};

SymFunQT symfun_add_term(SymFunQT p, const Content& c, const RationalQT& coef);

/// Parses "a/b" or "a".
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& r);

}  // namespace macd
