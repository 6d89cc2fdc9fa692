#include <catch2/catch.hpp>

#include "kleinian/wordproblem.hpp"

using namespace kleinian;

TEST_CASE("free group oracle") {
  FreeOracle o;
  CHECK(o.is_trivial({1, -1}));
  CHECK(!o.is_trivial({1, 2}));
  CHECK(!o.is_trivial({1, 2, -1}));
  CHECK(o.is_trivial({}));
}

TEST_CASE("free abelian oracle") {
  FreeAbelianOracle o(2);
  CHECK(o.is_trivial({1, 2, -1, -2}));
  CHECK(!o.is_trivial({1, 1, 2, -1, -1}));
  CHECK(!o.is_trivial({1, 2}));
}

TEST_CASE("permutation oracle on S3") {
  // r = (0 1 2), s = (0 1)
  PermutationOracle o({{1, 2, 0}, {1, 0, 2}});
  CHECK(o.is_trivial({1, 1, 1}));
  CHECK(o.is_trivial({2, 2}));
  CHECK(!o.is_trivial({1}));
  CHECK(o.is_trivial({1, 2, 1, 2}));  // (rs)^2 = 1 in S3
  CHECK(o.is_trivial({1, -1}));
  CHECK_THROWS_AS(PermutationOracle({{0, 0, 1}}), DomainError);
}

TEST_CASE("reference oracles agree with brute force on short words") {
  // finite group: full multiplication table through the permutation action
  PermutationOracle s3({{1, 2, 0}, {1, 0, 2}});
  auto compose = [](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[(std::size_t)q[i]];
    return r;
  };
  std::vector<std::vector<int>> gens = {{1, 2, 0}, {1, 0, 2}};
  std::vector<std::vector<int>> invs;
  for (auto& g : gens) {
    std::vector<int> gi(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) gi[(std::size_t)g[i]] = (int)i;
    invs.push_back(gi);
  }
  std::vector<Word> words = {{}};
  for (int len = 0; len < 5; ++len) {
    std::vector<Word> next;
    for (const auto& w : words)
      for (int letter : {1, -1, 2, -2}) {
        Word nw = w;
        nw.push_back(letter);
        next.push_back(nw);
      }
    for (const auto& w : next) {
      std::vector<int> acc = {0, 1, 2};
      for (int letter : w)
        acc = compose(letter > 0 ? gens[(std::size_t)(letter - 1)]
                                 : invs[(std::size_t)(-letter - 1)],
                      acc);
      bool brute = acc == std::vector<int>{0, 1, 2};
      CHECK(s3.is_trivial(w) == brute);
    }
    words = std::move(next);
    if (words.size() > 64) break;
  }
}

TEST_CASE("subprocess oracle speaks the line protocol") {
  Presentation p = parse_presentation("gens: a b\n");
  // free oracle helper binary built alongside the tests
  SubprocessOracle o(FREE_ORACLE_PATH, p);
  CHECK(o.is_trivial({1, -1}));
  CHECK(!o.is_trivial({1, 2}));
  CHECK(o.is_trivial({2, 1, -1, -2}));
  CHECK(!o.is_trivial({2, 2}));
}
