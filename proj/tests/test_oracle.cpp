#include <doctest.h>

#include "macd/errors.hpp"
#include "macd/fillings.hpp"
#include "macd/oracle.hpp"
#include "macd/ram_yip.hpp"

using namespace macd;

TEST_CASE("partitions and dominance") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(7).size() == 15);
  CHECK(dominated_by({2, 1, 1}, {3, 1}));
  CHECK_FALSE(dominated_by({3, 1}, {2, 2}));
  CHECK_FALSE(dominated_by({3, 3}, {4, 1, 1}));
  CHECK_FALSE(dominated_by({4, 1, 1}, {3, 3}));
}

TEST_CASE("kostka numbers") {
  CHECK(kostka({2}, {1, 1}) == 1);
  CHECK(kostka({2, 1}, {1, 1, 1}) == 2);
  CHECK(kostka({3, 2}, {2, 2, 1}) == 2);
  CHECK(kostka({2, 2}, {3, 1}) == 0);
}

TEST_CASE("schur oracle") {
  CHECK(schur_oracle(Partition({1, 0}, 2), 2) == SymFunQ{{{1}, 1}});
  CHECK(schur_oracle(Partition({2, 0}, 2), 2) == SymFunQ{{{2}, 1}, {{1, 1}, 1}});
  CHECK(schur_oracle(Partition({2, 1, 0}, 3), 3) == SymFunQ{{{2, 1}, 1}, {{1, 1, 1}, 2}});
}

TEST_CASE("macdonald oracle") {
  CHECK(macdonald_oracle(Partition({1, 0}, 2), 2, Rational(2, 3), Rational(5, 7)) ==
        SymFunQ{{{1}, 1}});
  const SymFunQ p20 = macdonald_oracle(Partition({2, 0}, 2), 2, Rational(2, 3), Rational(5, 7));
  CHECK(p20 == SymFunQ{{{2}, 1}, {{1, 1}, Rational(10, 11)}});
  CHECK_THROWS_AS(macdonald_oracle(Partition({2, 0}, 2), 2, Rational(1, 2), Rational(1)), PoleError);
}

TEST_CASE("oracle is point-independent where it meets the formula") {
  const Partition lambda = Partition::regular({2, 1, 0}, 3);
  const SymFunQT p = compressed_sum(lambda, ExecConfig{});
  for (const auto& [q0, t0] : std::vector<std::pair<Rational, Rational>>{
           {Rational(2, 3), Rational(5, 7)}, {Rational(3, 11), Rational(13, 5)},
           {Rational(7, 2), Rational(1, 9)}})
    CHECK(specialize_m_basis(p, q0, t0) == macdonald_oracle(lambda, 3, q0, t0));
}

TEST_CASE("diagonal specialization is Schur") {
  for (int size = 1; size <= 6; ++size)
    for (const auto& key : partitions_of(size)) {
      const int n = static_cast<int>(key.size()) + 1;
      std::vector<int> parts = key;
      parts.push_back(0);
      const Partition lambda(parts, n);
      if (!lambda.is_regular()) continue;
      for (const Rational r : {Rational(2, 3), Rational(5, 4)})
        CHECK(macdonald_oracle(lambda, n, r, r) == schur_oracle(lambda, n));
    }
}

TEST_CASE("specialization checks") {
  const Partition l20 = Partition::regular({2, 0}, 2);
  const SymFunQT p = compressed_sum(l20, ExecConfig{});
  const auto rep = check_specializations(p, l20, 2, 7);
  CHECK(rep.ok());
  CHECK(rep.points.size() == 3);
  CHECK(specialize_m_basis(p, Rational(3, 5), Rational(3, 5)) == SymFunQ{{{2}, 1}, {{1, 1}, 1}});

  const Partition l10 = Partition::regular({1, 0}, 2);
  CHECK(check_specializations(ry_sum(l10, ExecConfig{}), l10, 2, 1).ok());

  const auto at = check_specializations_at(p, l20, 2, Rational(2, 3), Rational(5, 7), 3);
  CHECK(at.ok());
}

TEST_CASE("mutations are caught") {
  const Partition lambda = Partition::regular({2, 1, 0}, 3);
  const SymFunQT p = compressed_sum(lambda, ExecConfig{});
  for (const auto& [c, coef] : p.terms()) {
    SymFunQT bad = p;
    bad.add_term(c, 1);
    const auto rep = check_specializations(bad, lambda, 3, 5);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.first_failure.empty());
  }
  SymFunQT scaled(3, 3);
  for (const auto& [c, coef] : p.terms()) scaled.add_term(c, coef * RationalQT(2));
  CHECK_FALSE(check_specializations(scaled, lambda, 3, 5).monic);
}
