#include <doctest.h>

#include <set>

#include "macd/errors.hpp"
#include "macd/fillings.hpp"
#include "macd/ram_yip.hpp"

using namespace macd;

namespace {

LaurentQT mono(long long c, int a, int b) { return LaurentQT::monomial(c, a, b); }

// rows[i-1][j-1] = sigma(i,j): row 1 is 3,3,1,2 for columns 1..4.
Filling worked_filling(const Partition& lambda) {
  return Filling::from_rows(lambda, {{3, 3, 1, 2}, {2, 4, 3}, {1}});
}

}  // namespace

TEST_CASE("attack relation") {
  CHECK(attacks({1, 1}, {3, 1}));
  CHECK(attacks({1, 2}, {3, 1}));
  CHECK(attacks({3, 1}, {1, 2}));
  CHECK_FALSE(attacks({3, 2}, {1, 1}));
  CHECK(attacks({3, 2}, {1, 1}, AttackConvention::hhl));
  CHECK_FALSE(attacks({1, 3}, {3, 1}));
  CHECK_FALSE(attacks({1, 2}, {1, 1}));
}

TEST_CASE("reading order") {
  CHECK(reading_precedes({2, 1}, {1, 2}));
  CHECK(reading_precedes({1, 3}, {2, 3}));
  const Filling blank(Partition({4, 3, 1}, 4), std::vector<int>(8, 1));
  const auto cells = blank.cells();
  for (const auto& u : cells)
    for (const auto& v : cells) {
      if (u == v) {
        CHECK_FALSE(reading_precedes(u, v));
        continue;
      }
      CHECK(reading_precedes(u, v) != reading_precedes(v, u));
    }
}

TEST_CASE("statistics of the worked filling") {
  const Partition lambda = Partition::regular({4, 3, 1, 0}, 4);
  const Filling sigma = worked_filling(lambda);
  CHECK(sigma.to_string() == "2 1 3 3 / 3 4 2 / 1");
  const FillingStats s = filling_stats(sigma, lambda);
  CHECK(s.des == std::vector<Cell>{{1, 2}, {2, 2}});
  CHECK(s.maj == 3);
  CHECK(s.inv_pairs.size() == 5);
  CHECK(s.inv == 4);
  CHECK(std::set<Cell>(s.diff.begin(), s.diff.end()) ==
        std::set<Cell>{{1, 2}, {1, 3}, {2, 1}, {2, 2}});
  CHECK(s.content == Content{2, 2, 3, 1});
  CHECK(lambda.n_lambda() == 5);
  CHECK(is_nonattacking(sigma));

  const auto [coef, exponent] = compressed_term(sigma, lambda);
  const RationalQT expected(mono(1, 3, 1) * LaurentQT::one_minus(0, 1).pow(4),
                            {{2, 2}, {2, 2}, {1, 2}, {1, 1}});
  CHECK(coef == expected);
  CHECK(exponent == Content{2, 2, 3, 1});
}

TEST_CASE("constant filling statistics") {
  const Partition lambda = Partition::regular({4, 3, 1, 0}, 4);
  const Filling ones(lambda, std::vector<int>(8, 1));
  const FillingStats s = filling_stats(ones, lambda);
  CHECK(s.des.empty());
  CHECK(s.maj == 0);
  CHECK(s.inv == 0);
  CHECK_FALSE(is_nonattacking(ones));
  CHECK_THROWS_AS(compressed_term(ones, lambda), InvalidInput);
}

TEST_CASE("compressed terms for (2,0)") {
  const Partition lambda = Partition::regular({2, 0}, 2);
  const auto same = compressed_term(Filling(lambda, {1, 1}), lambda);
  CHECK(same.first == RationalQT(1));
  CHECK(same.second == Content{2, 0});
  const auto desc = compressed_term(Filling(lambda, {2, 1}), lambda);
  CHECK(desc.first == RationalQT(mono(1, 1, 0) * LaurentQT::one_minus(0, 1), {{1, 1}}));
  CHECK(desc.second == Content{1, 1});
}

TEST_CASE("counts") {
  const ExecConfig cfg;
  CHECK(nonattacking_fillings(Partition::regular({1, 0}, 2)).size() == 2);
  CHECK(count_nonattacking(Partition::regular({3, 2, 1, 0}, 4), AttackConvention::paper, cfg) == 288);
  CHECK(nonattacking_fillings(Partition::regular({3, 2, 1, 0}, 4)).size() == 288);
  CHECK(hhl_nonattacking_count(Partition::regular({3, 2, 1, 0}, 4), cfg) == 864);
  CHECK(hhl_nonattacking_count(Partition::regular({1, 0}, 2), cfg) == 2);
  CHECK(hhl_nonattacking_count(Partition::regular({4, 3, 2, 1, 0}, 5), cfg) == 259200);
  ExecConfig many;
  many.threads = 3;
  CHECK(count_nonattacking(Partition::regular({5, 4, 2, 1, 0}, 5), AttackConvention::paper, many) ==
        552960);
}

TEST_CASE("enumeration is lexicographic, complete and duplicate-free") {
  const Partition lambda = Partition::regular({3, 1, 0}, 3);
  const auto all = nonattacking_fillings(lambda);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  // brute force over all 3^4 fillings
  std::size_t brute = 0;
  for (int code = 0; code < 81; ++code) {
    std::vector<int> v;
    for (int c = code, k = 0; k < 4; ++k, c /= 3) v.push_back(c % 3 + 1);
    brute += is_nonattacking(Filling(lambda, v));
  }
  CHECK(all.size() == brute);
}

TEST_CASE("filling invariants for lambda_1 <= 4, n <= 4") {
  for (const auto& parts : std::vector<std::vector<int>>{
           {1, 0}, {2, 0}, {3, 0}, {4, 0}, {2, 1, 0}, {3, 1, 0}, {3, 2, 0}, {4, 1, 0}, {4, 2, 0},
           {4, 3, 0}, {3, 2, 1, 0}, {4, 2, 1, 0}, {4, 3, 1, 0}, {4, 3, 2, 0}}) {
    const Partition lambda = Partition::regular(parts, static_cast<int>(parts.size()));
    enumerate_nonattacking(lambda, lambda.n(), AttackConvention::paper, [&](const Filling& f) {
      const FillingStats s = filling_stats(f, lambda);
      for (const auto& u : s.des) CHECK(std::find(s.diff.begin(), s.diff.end(), u) != s.diff.end());
      CHECK(s.inv >= 0);
      CHECK(lambda.n_lambda() - s.inv >= 0);
    });
  }
}

TEST_CASE("compressed sums") {
  const ExecConfig cfg;
  const SymFunQT p10 = compressed_sum(Partition::regular({1, 0}, 2), cfg);
  CHECK(p10.size() == 2);
  CHECK(p10.coefficient({0, 1}) == RationalQT(1));
  const SymFunQT p20 = compressed_sum(Partition::regular({2, 0}, 2), cfg);
  CHECK(p20.coefficient({1, 1}) ==
        RationalQT((LaurentQT(1) + mono(1, 1, 0)) * LaurentQT::one_minus(0, 1), {{1, 1}}));
  CHECK(p20.coefficient({2, 0}) == RationalQT(1));
  CHECK(p20.size() == 3);
  const Partition l3210 = Partition::regular({3, 2, 1, 0}, 4);
  CHECK(compressed_sum(l3210, cfg) == ry_sum(l3210, cfg));
  CHECK_THROWS_AS(compressed_sum(Partition({2, 2, 0}, 3), cfg), InvalidInput);
}
