#include <catch2/catch.hpp>

#include "kleinian/factor.hpp"

using namespace kleinian;

namespace {
unsigned long long rng_state = 777;
long rnd(long n) {
  rng_state = rng_state * 6364136223846793005ULL + 1442695040888963407ULL;
  return (long)((rng_state >> 33) % (unsigned long long)n);
}

Poly product_of(const std::vector<Poly>& fs) {
  Poly p(Rat(1));
  for (const auto& f : fs) p = p * f;
  return p;
}
}  // namespace

TEST_CASE("fixture factorizations") {
  auto f1 = factor_distinct(Poly::of({-2, 0, 1}) * Poly::of({-3, 0, 1}));
  REQUIRE(f1.size() == 2);
  CHECK(f1[0] == Poly::of({-3, 0, 1}));
  CHECK(f1[1] == Poly::of({-2, 0, 1}));

  // minimal polynomial of sqrt2 + sqrt3 is irreducible
  auto f2 = factor_distinct(Poly::of({1, 0, -10, 0, 1}));
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].degree() == 4);

  // multiplicities collapse
  auto f3 = factor_distinct(Poly::of({-1, 1}) * Poly::of({-1, 1}));
  REQUIRE(f3.size() == 1);
  CHECK(f3[0] == Poly::of({-1, 1}));

  // root at zero is pulled out
  auto f4 = factor_distinct(Poly::of({0, -2, 0, 1}));  // x(x^2-2)
  REQUIRE(f4.size() == 2);
  CHECK(f4[0] == Poly::of({0, 1}));
  CHECK(f4[1] == Poly::of({-2, 0, 1}));
}

TEST_CASE("cyclotomic-style and degree-8 inputs") {
  // x^8 - 1 = (x-1)(x+1)(x^2+1)(x^4+1)
  std::vector<Rat> c(9, Rat(0));
  c[0] = -1;
  c[8] = 1;
  auto fs = factor_distinct(Poly::from_coeffs(c));
  REQUIRE(fs.size() == 4);
  Poly prod = product_of(fs);
  CHECK(prod.canonical() == Poly::from_coeffs(c).canonical());

  // swinnerton-dyer style: minimal polynomial of sqrt2+sqrt3+sqrt5 (degree 8)
  Poly sd = Poly::of({576, 0, -960, 0, 352, 0, -40, 0, 1});
  auto sfs = factor_distinct(sd);
  REQUIRE(sfs.size() == 1);
  CHECK(sfs[0].degree() == 8);
}

TEST_CASE("random products refactor to their construction") {
  std::vector<Poly> pool = {
      Poly::of({-2, 0, 1}), Poly::of({-3, 0, 1}), Poly::of({1, 0, 1}),  Poly::of({-1, 1}),
      Poly::of({1, 1}),     Poly::of({-5, 0, 1}), Poly::of({1, 1, 1}),  Poly::of({2, 0, 1}),
      Poly::of({3, 1}),     Poly::of({1, -1, 1}), Poly::of({1, 0, -10, 0, 1}),
  };
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Poly> chosen;
    std::vector<int> used;
    int k = 2 + (int)rnd(3);
    for (int i = 0; i < k; ++i) {
      int idx = (int)rnd((long)pool.size());
      if (std::find(used.begin(), used.end(), idx) != used.end()) continue;
      used.push_back(idx);
      chosen.push_back(pool[(std::size_t)idx]);
    }
    if (chosen.empty()) continue;
    Poly p = product_of(chosen);
    auto fs = factor_distinct(p);
    REQUIRE(fs.size() == chosen.size());
    CHECK(product_of(fs).canonical() == p.canonical());
    for (const auto& f : fs)
      CHECK(std::find(chosen.begin(), chosen.end(), f) != chosen.end());
  }
}

TEST_CASE("is_irreducible") {
  CHECK(is_irreducible(Poly::of({-2, 0, 1})));
  CHECK(!is_irreducible(Poly::of({-4, 0, 1})));
  CHECK(is_irreducible(Poly::of({1, 0, -10, 0, 1})));
}
