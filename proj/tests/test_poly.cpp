#include <catch2/catch.hpp>

#include "kleinian/poly.hpp"

using namespace kleinian;

namespace {

// Independent resultant oracle: Sylvester matrix determinant by fraction-free
// Gaussian elimination over Q.
Rat sylvester_resultant(const Poly& a, const Poly& b) {
  int m = a.degree(), n = b.degree();
  int N = m + n;
  std::vector<std::vector<Rat>> s((std::size_t)N, std::vector<Rat>((std::size_t)N, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = a[(std::size_t)(m - j)];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = b[(std::size_t)(n - j)];
  Rat det(1);
  for (int col = 0; col < N; ++col) {
    int pivot = -1;
    for (int r = col; r < N; ++r)
      if (s[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != col) {
      std::swap(s[pivot], s[col]);
      det = -det;
    }
    det *= s[col][col];
    for (int r = col + 1; r < N; ++r) {
      if (s[r][col] == 0) continue;
      Rat f = s[r][col] / s[col][col];
      for (int c = col; c < N; ++c) s[r][c] -= f * s[col][c];
    }
  }
  return det;
}

unsigned long long rng_state = 12345;
long rnd(long n) {
  rng_state = rng_state * 6364136223846793005ULL + 1442695040888963407ULL;
  return (long)((rng_state >> 33) % (unsigned long long)n);
}

Poly random_poly(int maxdeg) {
  std::vector<Rat> c;
  int d = 1 + (int)rnd(maxdeg);
  for (int i = 0; i <= d; ++i) c.emplace_back(rnd(11) - 5);
  Poly p = Poly::from_coeffs(std::move(c));
  if (p.is_zero() || p.degree() == 0) return Poly::of({1, 1});
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  Poly p = Poly::of({1, 2, 1});  // (x+1)^2
  Poly q = Poly::of({1, 1});
  CHECK(p == q * q);
  CHECK((p - p).is_zero());
  CHECK(p.eval(Rat(2)) == 9);
  auto [quo, rem] = Poly::divrem(p, q);
  CHECK(quo == q);
  CHECK(rem.is_zero());
}

TEST_CASE("division property on random instances") {
  for (int i = 0; i < 50; ++i) {
    Poly a = random_poly(6), b = random_poly(4);
    auto [q, r] = Poly::divrem(a, b);
    CHECK(a == q * b + r);
    if (!r.is_zero()) CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("canonical form: primitive integer, positive leading coefficient") {
  Poly p = Poly::from_coeffs({make_rat(-4, 6), make_rat(0), make_rat(-2, 3)});
  Poly c = p.canonical();
  CHECK(c == Poly::of({1, 0, 1}));
  CHECK(Poly::of({0, 0}).is_zero());
  CHECK_THROWS_AS(Poly().degree(), DomainError);
}

TEST_CASE("gcd matches construction") {
  Poly g = Poly::of({-1, 1});           // x - 1
  Poly a = g * Poly::of({2, 0, 1});     // (x-1)(x^2+2)
  Poly b = g * Poly::of({3, 1});        // (x-1)(x+3)
  CHECK(Poly::gcd(a, b) == g);
  for (int i = 0; i < 30; ++i) {
    Poly common = random_poly(3);
    Poly x = common * random_poly(3);
    Poly y = common * random_poly(3);
    Poly got = Poly::gcd(x, y);
    CHECK(Poly::divrem(got, Poly::gcd(got, common.canonical())).first.degree() >= 0);
    // the gcd divides both inputs
    CHECK(Poly::divrem(x, got).second.is_zero());
    CHECK(Poly::divrem(y, got).second.is_zero());
    // and is divisible by the constructed common factor
    CHECK(Poly::divrem(got, common.canonical()).second.is_zero());
  }
}

TEST_CASE("squarefree part collapses multiplicities") {
  Poly p = Poly::of({-1, 1}) * Poly::of({-1, 1}) * Poly::of({2, 1});
  Poly sf = p.squarefree_part();
  CHECK(sf == (Poly::of({-1, 1}) * Poly::of({2, 1})).canonical());
}

TEST_CASE("resultant agrees with Sylvester determinant oracle") {
  for (int i = 0; i < 40; ++i) {
    Poly a = random_poly(5), b = random_poly(5);
    CHECK(Poly::resultant(a, b) == sylvester_resultant(a, b));
  }
  // resultant vanishes iff common root
  Poly c = Poly::of({-1, 1});
  CHECK(Poly::resultant(c * Poly::of({1, 1}), c * Poly::of({5, 1})) == 0);
}

TEST_CASE("argument transforms move roots as named") {
  Poly p = Poly::of({-2, 0, 1});  // x^2 - 2, roots +-sqrt(2)
  CHECK(p.reflected() == Poly::of({-2, 0, 1}));
  CHECK(p.shifted_roots(Rat(3)).eval(Rat(3)) == p.eval(Rat(0)));
  // roots scaled by 2: polynomial x^2 - 8 up to scale
  CHECK(p.scaled_roots(Rat(2)).canonical() == Poly::of({-8, 0, 1}));
  // reciprocal roots of x^2 - 2 gives 1 - 2x^2 -> canonical 2x^2 - 1
  CHECK(p.reciprocal_roots().canonical() == Poly::of({-1, 0, 2}));
  CHECK(p.composed_square() == Poly::of({-2, 0, 0, 0, 1}));
}

TEST_CASE("gauss evaluation") {
  Poly p = Poly::of({1, 0, 1});  // x^2 + 1
  auto [re, im] = p.eval_gauss(Rat(0), Rat(1));
  CHECK(re == 0);
  CHECK(im == 0);
  auto [re2, im2] = p.eval_gauss(Rat(1), Rat(1));
  CHECK(re2 == 1);   // (1+i)^2 + 1 = 1 + 2i
  CHECK(im2 == 2);
}
