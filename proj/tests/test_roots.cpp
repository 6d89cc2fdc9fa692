#include <catch2/catch.hpp>

#include "kleinian/roots.hpp"

using namespace kleinian;

namespace {
unsigned long long rng_state = 4242;
long rnd(long n) {
  rng_state = rng_state * 6364136223846793005ULL + 1442695040888963407ULL;
  return (long)((rng_state >> 33) % (unsigned long long)n);
}
}  // namespace

TEST_CASE("sturm chain counts") {
  SturmChain s2(Poly::of({-2, 0, 1}));
  CHECK(s2.count_all_real() == 2);
  CHECK(s2.count_in(Rat(0), Rat(2)) == 1);
  CHECK(s2.count_in(Rat(-2), Rat(0)) == 1);
  SturmChain im(Poly::of({1, 0, 1}));
  CHECK(im.count_all_real() == 0);
}

TEST_CASE("real root isolation separates known roots") {
  Poly p = Poly::of({-1, 1}) * Poly::of({-2, 1}) * Poly::of({-3, 1});
  auto ivs = isolate_real_roots(p);
  REQUIRE(ivs.size() == 3);
  CHECK(ivs[0].contains(Rat(1)));
  CHECK(ivs[1].contains(Rat(2)));
  CHECK(ivs[2].contains(Rat(3)));
  for (std::size_t i = 0; i + 1 < ivs.size(); ++i) CHECK(ivs[i].hi <= ivs[i + 1].lo);
}

TEST_CASE("winding count in rectangles") {
  Poly p = Poly::of({1, 0, 1});  // roots +-i
  Box around_i(RatInterval(make_rat(-1, 2), make_rat(1, 2)),
               RatInterval(make_rat(1, 2), make_rat(3, 2)));
  CHECK(count_roots_in_box(p, around_i) == 1);
  Box around_both(RatInterval(make_rat(-1, 2), make_rat(1, 2)),
                  RatInterval(make_rat(-3, 2), make_rat(3, 2)));
  CHECK(count_roots_in_box(p, around_both) == 2);
  Box empty(RatInterval(Rat(2), Rat(3)), RatInterval(Rat(2), Rat(3)));
  CHECK(count_roots_in_box(p, empty) == 0);
  // root exactly on the boundary
  Box on_edge(RatInterval(Rat(0), Rat(1)), RatInterval(Rat(0), Rat(2)));
  CHECK_THROWS_AS(count_roots_in_box(p, on_edge), BoundaryRoot);
}

TEST_CASE("winding count with real roots near edges") {
  Poly p = Poly::of({-2, 0, 1});  // +-sqrt2
  Box b(RatInterval(Rat(1), Rat(2)), RatInterval(Rat(-1), Rat(1)));
  CHECK(count_roots_in_box(p, b) == 1);
  Box b2(RatInterval(Rat(-2), Rat(2)), RatInterval(Rat(-1), Rat(1)));
  CHECK(count_roots_in_box(p, b2) == 2);
}

TEST_CASE("isolate_all_roots of x^3 - 2") {
  Poly p = Poly::of({-2, 0, 0, 1});
  auto boxes = isolate_all_roots(p);
  REQUIRE(boxes.size() == 3);
  int reals = 0, complexes = 0;
  for (const auto& b : boxes) {
    if (b.im.is_point() && b.im.lo == 0)
      ++reals;
    else
      ++complexes;
  }
  CHECK(reals == 1);
  CHECK(complexes == 2);
}

TEST_CASE("isolation matches construction on random factored polynomials") {
  for (int trial = 0; trial < 15; ++trial) {
    // build a polynomial from known rational and complex-pair roots
    std::vector<std::pair<Rat, Rat>> roots;  // (re, im)
    Poly p(Rat(1));
    int nlin = 1 + (int)rnd(2), nquad = 1 + (int)rnd(2);
    for (int i = 0; i < nlin; ++i) {
      Rat r = make_rat(rnd(9) - 4, 1 + rnd(3));
      bool dup = false;
      for (auto& kv : roots)
        if (kv.first == r && kv.second == 0) dup = true;
      if (dup) continue;
      roots.push_back({r, Rat(0)});
      p = p * Poly::from_coeffs({-r, Rat(1)});
    }
    for (int i = 0; i < nquad; ++i) {
      Rat a = make_rat(rnd(7) - 3, 1 + rnd(2));
      Rat b = make_rat(1 + rnd(5), 1 + rnd(2));
      bool dup = false;
      for (auto& kv : roots)
        if (kv.first == a && (kv.second == b || kv.second == -b)) dup = true;
      if (dup) continue;
      roots.push_back({a, b});
      roots.push_back({a, -b});
      // (x - (a+bi))(x - (a-bi)) = x^2 - 2a x + a^2 + b^2
      p = p * Poly::from_coeffs({a * a + b * b, -2 * a, Rat(1)});
    }
    // isolate the squarefree product factor by factor
    for (const auto& [re, im] : roots) {
      (void)re;
      (void)im;
    }
    auto ivs = isolate_real_roots(p);
    int expected_real = 0;
    for (auto& kv : roots)
      if (kv.second == 0) ++expected_real;
    CHECK((int)ivs.size() == expected_real);
    // every constructed real root is contained in exactly one interval
    for (auto& kv : roots) {
      if (kv.second != 0) continue;
      int hits = 0;
      for (auto& iv : ivs)
        if (iv.contains(kv.first)) ++hits;
      CHECK(hits == 1);
    }
    // complex roots: count them in a box that surely contains them all
    Rat bound = cauchy_root_bound(p);
    Poly sf = p.squarefree_part();
    for (auto& kv : roots) {
      if (kv.second <= 0) continue;
      Box tight(RatInterval(kv.first - make_rat(1, 64), kv.first + make_rat(1, 64)),
                RatInterval(kv.second - make_rat(1, 64), kv.second + make_rat(1, 64)));
      // some other root might share the tiny box; just require >= 1
      auto [cnt, grown] = count_roots_expanding({sf}, tight);
      CHECK(cnt >= 1);
      (void)bound;
    }
  }
}

TEST_CASE("refine_box shrinks and keeps the root") {
  Poly p = Poly::of({1, 0, 1});
  auto boxes = isolate_all_roots(p);
  for (const auto& b : boxes) {
    Box r = refine_box(p, b, make_rat(1, 1024));
    CHECK(r.width() < make_rat(1, 1024));
    CHECK(count_roots_in_box(p, widened(r, make_rat(1, 4096))) == 1);
  }
}
