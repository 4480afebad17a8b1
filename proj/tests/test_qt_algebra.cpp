#include <doctest.h>

#include <random>

#include "macd/errors.hpp"
#include "macd/qt_algebra.hpp"

using namespace macd;

namespace {

LaurentQT mono(long long c, int a, int b) { return LaurentQT::monomial(c, a, b); }

LaurentQT random_laurent(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(-2, 3);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::vector<LaurentQT::Term> terms;
  for (int i = 0; i < 4; ++i) terms.push_back({{exp(rng), exp(rng)}, coef(rng)});
  return LaurentQT::from_terms(terms);
}

RationalQT random_rational_qt(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(0, 3);
  std::vector<DenomFactor> den;
  for (int i = 0; i < 3; ++i) {
    int a = e(rng), b = e(rng);
    if (a == 0 && b == 0) b = 1;
    den.emplace_back(a, b);
  }
  return RationalQT(random_laurent(rng), den);
}

Rational point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(2, 97);
  return Rational(d(rng), d(rng));
}

}  // namespace

TEST_CASE("laurent products") {
  CHECK(LaurentQT(1) * LaurentQT::one_minus(1, 1) == LaurentQT::one_minus(1, 1));
  CHECK(LaurentQT::one_minus(1, 1) * (LaurentQT(1) + mono(1, 1, 1)) == LaurentQT::one_minus(2, 2));
  CHECK(mono(1, 1, 2) * mono(1, 0, -2) == mono(1, 1, 0));
  CHECK(laurent_mul(mono(3, 0, 0), LaurentQT()) .is_zero());
}

TEST_CASE("laurent text is sorted by exponent") {
  const LaurentQT f = LaurentQT(1) - mono(1, 0, 1) + mono(1, 1, -2);
  CHECK(f.to_string() == "1 - t + q*t^-2");
  CHECK(LaurentQT().to_string() == "0");
  CHECK((mono(-2, 2, 1) + mono(5, 0, 3)).to_string() == "5*t^3 - 2*q^2*t");
}

TEST_CASE("exact division") {
  auto q = LaurentQT::one_minus(2, 2).exact_divide(LaurentQT::one_minus(1, 1));
  REQUIRE(q);
  CHECK(*q == LaurentQT(1) + mono(1, 1, 1));
  CHECK_FALSE(LaurentQT::one_minus(0, 1).exact_divide(LaurentQT::one_minus(2, 1)));
}

TEST_CASE("rational_add") {
  const RationalQT a(LaurentQT(1), {{1, 1}});
  const RationalQT b(mono(-1, 1, 1), {{1, 1}});
  CHECK(rational_add(a, b) == RationalQT(1));
  CHECK(rational_add(RationalQT(), a) == a);

  const RationalQT c(mono(1, 1, 0) * LaurentQT::one_minus(0, 1), {{1, 1}, {1, 2}});
  const Rational half(1, 2), third(1, 3);
  const Rational expected = 1 / (1 - Rational(1, 6)) +
                            (half * Rational(2, 3)) / (Rational(5, 6) * Rational(17, 18));
  CHECK(rational_eval_at(rational_add(a, c), half, third) == expected);
}

TEST_CASE("rational_reduce") {
  CHECK(rational_reduce(RationalQT::unreduced(LaurentQT::one_minus(1, 1), {{1, 1}})) ==
        RationalQT(1));
  const RationalQT r = rational_reduce(RationalQT::unreduced(LaurentQT::one_minus(2, 2), {{1, 1}}));
  CHECK(r == RationalQT(LaurentQT(1) + mono(1, 1, 1)));
  CHECK(r.den().empty());
  const RationalQT kept = rational_reduce(RationalQT::unreduced(LaurentQT::one_minus(0, 1), {{2, 1}}));
  CHECK(kept.num() == LaurentQT::one_minus(0, 1));
  CHECK(kept.den() == std::vector<DenomFactor>{{2, 1}});
}

TEST_CASE("canonical form is unique across factorizations") {
  // 1/((1-q)(1+q)) and 1/(1-q^2) are the same function.
  const RationalQT x(LaurentQT(1), {{1, 0}});
  const RationalQT y(LaurentQT(1) + mono(1, 1, 0), {{2, 0}});
  const RationalQT z(LaurentQT(1), {{2, 0}});
  CHECK(x * RationalQT(LaurentQT(1), {}) == x);
  CHECK(RationalQT(LaurentQT(1) - mono(1, 1, 0), {{2, 0}, {1, 0}}) == z * x * RationalQT(LaurentQT::one_minus(1, 0)));
  CHECK(y == x);
  CHECK(y.equivalent(x));
  CHECK_FALSE(z.equivalent(x));
}

TEST_CASE("evaluation") {
  CHECK(rational_eval_at(RationalQT(LaurentQT(1), {{1, 1}}), 0, 0) == 1);
  const RationalQT f = RationalQT::unreduced(mono(1, 1, 0) * LaurentQT::one_minus(0, 1), {{1, 2}});
  CHECK_THROWS_AS(rational_eval_at(f, 1, 1), PoleError);
  CHECK(rational_eval_at(f, Rational(2, 3), Rational(5, 7)) == Rational(28, 97));
  CHECK(rational_eval_at(rational_reduce(f), Rational(2, 3), Rational(5, 7)) == Rational(28, 97));
}

TEST_CASE("text rendering") {
  const RationalQT f(LaurentQT(1) - mono(1, 0, 1), {{2, 1}, {1, 1}});
  CHECK(f.to_string() == "(1 - t)/((1 - q*t)*(1 - q^2*t))");
  CHECK(RationalQT(mono(1, 1, 0)).to_string() == "q");
}

TEST_CASE("symfun accumulation") {
  SymFunQT p(2, 2);
  p.add_term({2, 0}, 1);
  p.add_term({2, 0}, -1);
  CHECK(p.empty());
  p = symfun_add_term(SymFunQT(3, 3), {2, 1, 0}, 1);
  CHECK(p.size() == 1);
  CHECK_THROWS_AS(p.add_term({1, 1}, 1), InvalidInput);
  CHECK_THROWS_AS(p.add_term({1, 1, 0}, 1), InvalidInput);

  // The four folding-pair terms of P_(2,0) with n = 2 (chain ((1,2)), m = 1).
  const RationalQT q_over(mono(1, 1, 1) * LaurentQT::one_minus(0, 1), {{1, 1}});
  const RationalQT one_over(LaurentQT::one_minus(0, 1), {{1, 1}});
  SymFunQT acc(2, 2);
  acc.add_term({2, 0}, 1);
  acc.add_term({1, 1}, q_over * RationalQT(mono(1, 0, -1)));
  acc.add_term({0, 2}, 1);
  acc.add_term({1, 1}, one_over);
  const RationalQT expected((LaurentQT(1) + mono(1, 1, 0)) * LaurentQT::one_minus(0, 1), {{1, 1}});
  CHECK(acc.coefficient({1, 1}) == expected);
  CHECK(acc.coefficient({2, 0}) == RationalQT(1));
  CHECK(acc.size() == 3);
}

TEST_CASE("accumulator agrees with pairwise sums") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    RationalAccumulator acc;
    RationalQT sum;
    for (int i = 0; i < 5; ++i) {
      const RationalQT x = random_rational_qt(rng);
      acc.add(x);
      sum = sum + x;
    }
    CHECK(acc.finish() == sum);
  }
}

TEST_CASE("ring laws and evaluation homomorphism") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const LaurentQT f = random_laurent(rng), g = random_laurent(rng), h = random_laurent(rng);
    CHECK((f + g) * h == f * h + g * h);
    CHECK(f * g == g * f);
    const Rational q0 = point(rng), t0 = point(rng);
    CHECK((f * g).eval(q0, t0) == f.eval(q0, t0) * g.eval(q0, t0));
    CHECK((f + g).eval(q0, t0) == f.eval(q0, t0) + g.eval(q0, t0));
  }
}

TEST_CASE("reduction preserves values at random points") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const RationalQT x = random_rational_qt(rng);
    const RationalQT raw = RationalQT::unreduced(x.num() * LaurentQT::one_minus(1, 2), [&] {
      auto d = x.den();
      d.emplace_back(1, 2);
      return d;
    }());
    CHECK(rational_reduce(raw) == x);
    CHECK(raw.equivalent(x));
    int checked = 0;
    while (checked < 20) {
      const Rational q0 = point(rng), t0 = point(rng);
      Rational a, b;
      try {
        a = raw.eval_at(q0, t0);
        b = x.eval_at(q0, t0);
      } catch (const PoleError&) {
        continue;
      }
      CHECK(a == b);
      ++checked;
    }
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("2/3") == Rational(2, 3));
  CHECK(parse_rational("-5") == Rational(-5));
  CHECK_THROWS_AS(parse_rational("x"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK(rational_to_string(Rational(10, 11)) == "10/11");
}
