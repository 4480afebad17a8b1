#include <doctest.h>

#include "macd/errors.hpp"
#include "macd/lambda_chain.hpp"

using namespace macd;

namespace {
std::vector<RootA> roots(std::initializer_list<std::pair<int, int>> list) {
  std::vector<RootA> out;
  for (auto [i, k] : list) out.push_back({i, k});
  return out;
}
}  // namespace

TEST_CASE("gamma") {
  CHECK(gamma(1, 4) == roots({{1, 4}, {1, 3}, {1, 2}}));
  CHECK(gamma(2, 4) == roots({{2, 4}, {2, 3}, {1, 4}, {1, 3}}));
  CHECK(gamma(3, 4) == roots({{3, 4}, {2, 4}, {1, 4}}));
  CHECK_THROWS_AS(gamma(4, 4), InvalidInput);
  CHECK_THROWS_AS(gamma(0, 4), InvalidInput);
}

TEST_CASE("gamma_prime") {
  CHECK(gamma_prime(1, 4) == roots({{1, 4}, {1, 3}}));
  CHECK(gamma_prime(2, 4) == roots({{2, 4}, {1, 4}}));
  CHECK(gamma_prime(3, 4).empty());
  CHECK_THROWS_AS(gamma_prime(4, 4), InvalidInput);
}

TEST_CASE("partition basics") {
  const Partition lambda({4, 3, 1}, 4);
  CHECK(lambda.to_string() == "(4, 3, 1, 0)");
  CHECK(lambda.n_lambda() == 5);
  CHECK(lambda.conjugate(1) == 3);
  CHECK(lambda.conjugate(2) == 2);
  CHECK(lambda.conjugate(4) == 1);
  CHECK(lambda.arm(1, 2) == 2);
  CHECK(lambda.leg(2, 1) == 1);
  CHECK(lambda.is_regular());
  CHECK_FALSE(Partition({2, 2, 0}, 3).is_regular());
  CHECK_THROWS_AS(Partition::regular({2, 2, 0}, 3), InvalidInput);
  CHECK_THROWS_AS(Partition({1, 2}, 2), InvalidInput);
  CHECK_THROWS_AS(Partition::parse_parts("3,x"), InvalidInput);
}

TEST_CASE("chain of (4,3,1,0)") {
  const auto chain = build_chain(Partition::regular({4, 3, 1, 0}, 4));
  CHECK(chain.to_string() == "((1,4),(1,3) | (2,4),(2,3),(1,4),(1,3) | (2,4),(1,4))");
  CHECK(chain.size() == 8);
  REQUIRE(chain.factors().size() == 3);
  CHECK(chain.factors()[0].column == 4);
  CHECK(chain.factors()[0].first == 1);
  CHECK(chain.factors()[0].last == 2);
  CHECK(chain.factors()[1].first == 3);
  CHECK(chain.factors()[1].last == 6);
  CHECK(chain.factors()[2].column == 2);
  // (1,4) occurs at positions 1, 5, 8.
  CHECK(chain.at(1).mult == 1);
  CHECK(chain.at(5).mult == 2);
  CHECK(chain.at(8).mult == 3);
}

TEST_CASE("chain lengths") {
  CHECK(build_chain(Partition::regular({1, 0}, 2)).size() == 0);
  CHECK(build_chain(Partition::regular({3, 2, 1, 0}, 4)).size() == 4);
  CHECK(build_chain(Partition::regular({5, 3, 1, 0}, 4)).size() == 11);
  CHECK(build_chain(Partition::regular({4, 3, 2, 1, 0}, 5)).size() == 10);
  CHECK(build_chain(Partition::regular({5, 4, 2, 1, 0}, 5)).size() == 16);
  CHECK_THROWS_AS(build_chain(Partition({2, 2, 0}, 3)), InvalidInput);
}

TEST_CASE("multiplicity equals arm and roots straddle the column height") {
  for (const auto& lambda :
       {Partition::regular({4, 3, 1, 0}, 4), Partition::regular({5, 3, 1, 0}, 4),
        Partition::regular({4, 3, 2, 1, 0}, 5), Partition::regular({5, 4, 2, 1, 0}, 5),
        Partition::regular({6, 2, 0}, 3), Partition::regular({7, 5, 4, 1, 0}, 5)}) {
    const auto chain = build_chain(lambda);
    for (int p = 1; p <= chain.size(); ++p) {
      const auto& e = chain.at(p);
      CHECK(e.mult == lambda.arm(e.root.i, e.column - 1));
      CHECK(e.root.i <= lambda.conjugate(e.column));
      CHECK(lambda.conjugate(e.column) < e.root.k);
      int earlier = 0;
      for (int r = 1; r < p; ++r) earlier += chain.at(r).root == e.root;
      CHECK(e.mult == earlier + 1);
    }
  }
}
