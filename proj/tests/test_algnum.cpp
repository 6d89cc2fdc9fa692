#include <catch2/catch.hpp>

#include "kleinian/algnum.hpp"
#include "oracle.hpp"

using namespace kleinian;

namespace {
AlgNum sqrt2() { return sqrt_alg(AlgNum(Rat(2))); }
AlgNum sqrt3() { return sqrt_alg(AlgNum(Rat(3))); }
}  // namespace

TEST_CASE("isolate_roots spec fixtures") {
  auto r1 = isolate_roots(Poly::of({-2, 0, 1}));
  REQUIRE(r1.size() == 2);
  CHECK(r1[0].min_poly() == Poly::of({-2, 0, 1}));
  CHECK(r1[1].min_poly() == Poly::of({-2, 0, 1}));
  CHECK(sign_real(r1[0]) < 0);
  CHECK(sign_real(r1[1]) > 0);

  auto r2 = isolate_roots(Poly::of({1, 0, 1}));
  REQUIRE(r2.size() == 2);
  CHECK(r2[0].box().im.hi < 0);
  CHECK(r2[1].box().im.lo > 0);
  CHECK(r2[0].box().re.contains(Rat(0)));

  auto r3 = isolate_roots(Poly::of({-1, 1}) * Poly::of({-1, 1}));
  REQUIRE(r3.size() == 1);
  CHECK(r3[0].is_rational());
  CHECK(r3[0].rational_value() == 1);

  CHECK_THROWS_AS(isolate_roots(Poly()), DomainError);
}

TEST_CASE("addition fixtures") {
  AlgNum s2 = sqrt2();
  CHECK(add(s2, neg(s2)).is_zero());
  AlgNum half_third = add(AlgNum(make_rat(1, 2)), AlgNum(make_rat(1, 3)));
  REQUIRE(half_third.is_rational());
  CHECK(half_third.rational_value() == make_rat(5, 6));

  AlgNum s = add(sqrt2(), sqrt3());
  CHECK(s.min_poly() == Poly::of({1, 0, -10, 0, 1}));
  // 200-bit oracle: the numeric sum lies inside the refined exact box
  auto n2 = oracle::di_sqrt(oracle::di_point(Rat(2)));
  auto n3 = oracle::di_sqrt(oracle::di_point(Rat(3)));
  auto nsum = oracle::di_add(n2, n3);
  AlgNum refined = s.refined(pow2(-80));
  CHECK(nsum.hi >= refined.box().re.lo);
  CHECK(nsum.lo <= refined.box().re.hi);
  // near 3.146
  CHECK(refined.box().re.lo > make_rat(3146, 1001));
  CHECK(refined.box().re.hi < make_rat(3146, 999));
}

TEST_CASE("multiplication and inverse fixtures") {
  AlgNum s2 = sqrt2();
  AlgNum two = mul(s2, s2);
  REQUIRE(two.is_rational());
  CHECK(two.rational_value() == 2);

  AlgNum is2 = inv(s2);
  CHECK(is2.min_poly() == Poly::of({-1, 0, 2}));
  CHECK(is_one(mul(is2, s2)));

  AlgNum i = AlgNum::imaginary_unit();
  AlgNum m = mul(i, i);
  REQUIRE(m.is_rational());
  CHECK(m.rational_value() == -1);

  CHECK_THROWS_AS(inv(AlgNum::zero()), DomainError);
}

TEST_CASE("square root fixtures") {
  AlgNum two = sqrt_alg(AlgNum(Rat(4)));
  REQUIRE(two.is_rational());
  CHECK(two.rational_value() == 2);

  AlgNum i = sqrt_alg(AlgNum(Rat(-1)));
  CHECK(equals(i, AlgNum::imaginary_unit()));

  // sqrt(2i) = 1 + i, checked by exact squaring
  AlgNum two_i = mul(AlgNum(Rat(2)), AlgNum::imaginary_unit());
  AlgNum r = sqrt_alg(two_i);
  CHECK(equals(mul(r, r), two_i));
  CHECK(equals(r, add(AlgNum(Rat(1)), AlgNum::imaginary_unit())));
}

TEST_CASE("equality fixtures") {
  // same number presented through a different (non-canonical) scaling
  auto roots = isolate_roots(Poly::of({-4, 0, 2}));  // 2x^2 - 4
  REQUIRE(roots.size() == 2);
  AlgNum pos = sign_real(roots[1]) > 0 ? roots[1] : roots[0];
  CHECK(equals(pos, sqrt2()));
  CHECK(!equals(sqrt2(), neg(sqrt2())));
  AlgNum prod = mul(sqrt2(), sqrt3());
  AlgNum s6 = sqrt_alg(AlgNum(Rat(6)));
  CHECK(prod.min_poly() == Poly::of({-6, 0, 1}));
  CHECK(equals(prod, s6));
}

TEST_CASE("compare_real fixtures") {
  CHECK(compare_real(sqrt2(), AlgNum(make_rat(3, 2))) == Ordering::less);
  CHECK(compare_real(sqrt2(), sqrt2()) == Ordering::equal);
  // oracle first: sqrt2 + sqrt3 = 3.1462..., 22/7 = 3.1428..., so greater
  auto nsum = oracle::di_add(oracle::di_sqrt(oracle::di_point(Rat(2))),
                             oracle::di_sqrt(oracle::di_point(Rat(3))));
  REQUIRE(nsum.lo > make_rat(22, 7));
  CHECK(compare_real(add(sqrt2(), sqrt3()), AlgNum(make_rat(22, 7))) == Ordering::greater);
  CHECK_THROWS_AS(compare_real(AlgNum::imaginary_unit(), AlgNum(Rat(0))), DomainError);
}

TEST_CASE("real and imaginary part fixtures") {
  AlgNum one_plus_i = add(AlgNum(Rat(1)), AlgNum::imaginary_unit());
  AlgNum re = re_part(one_plus_i);
  REQUIRE(re.is_rational());
  CHECK(re.rational_value() == 1);
  CHECK(im_part(sqrt2()).is_zero());
  AlgNum im1 = im_part(one_plus_i);
  REQUIRE(im1.is_rational());
  CHECK(im1.rational_value() == 1);

  AlgNum r = sqrt_alg(mul(AlgNum(Rat(2)), AlgNum::imaginary_unit()));
  AlgNum rr = re_part(r);
  REQUIRE(rr.is_rational());
  CHECK(rr.rational_value() == 1);

  // reconstruction: a = re + i*im
  AlgNum rec = add(re_part(r), mul(AlgNum::imaginary_unit(), im_part(r)));
  CHECK(equals(rec, r));
}

TEST_CASE("refine fixtures") {
  AlgNum s2 = sqrt2();
  AlgNum r = s2.refined(make_rat(1, 1000));
  CHECK(r.box().width() < make_rat(1, 1000));
  CHECK(equals(r, s2));

  AlgNum q(make_rat(3, 7));
  CHECK(q.refined(make_rat(1, 1'000'000)).box().is_point());

  // agreement with the 200-bit oracle after deep refinement
  AlgNum s = add(sqrt2(), sqrt3()).refined(pow2(-100));
  auto nsum = oracle::di_add(oracle::di_sqrt(oracle::di_point(Rat(2))),
                             oracle::di_sqrt(oracle::di_point(Rat(3))));
  Rat mid = s.box().re.mid();
  CHECK(abs(mid - nsum.lo) < pow2(-99));
  CHECK_THROWS_AS(s2.refined(Rat(0)), DomainError);
}

TEST_CASE("random expression trees stay inside their boxes") {
  int count = 0;
  for (unsigned long long seed = 1; count < 120; ++seed) {
    oracle::TreeRng rng(seed);
    oracle::TreeValue tv = oracle::make_tree(rng, 4);
    ++count;
    AlgNum refined = tv.exact.refined(pow2(-60));
    INFO("seed " << seed);
    CHECK(oracle::meets(tv.numeric, refined.box()));
  }
}

TEST_CASE("field axioms on random values") {
  for (unsigned long long seed = 100; seed < 112; ++seed) {
    oracle::TreeRng rng(seed);
    AlgNum a = oracle::make_tree(rng, 2).exact;
    AlgNum b = oracle::make_tree(rng, 2).exact;
    AlgNum c = oracle::make_tree(rng, 1).exact;
    CHECK(equals(add(a, b), add(b, a)));
    if (!a.is_zero()) CHECK(is_one(mul(a, inv(a))));
    CHECK(equals(mul(a, add(b, c)), add(mul(a, b), mul(a, c))));
    CHECK(equals(mul(sqrt_alg(a), sqrt_alg(a)), a));
  }
}

TEST_CASE("compare_real is a total order consistent with numerics") {
  std::vector<AlgNum> vals;
  std::vector<oracle::DI> nums;
  for (unsigned long long seed = 300; vals.size() < 8; ++seed) {
    oracle::TreeRng rng(seed);
    auto tv = oracle::make_tree(rng, 3);
    if (!is_real(tv.exact)) continue;
    vals.push_back(realified(tv.exact));
    nums.push_back(tv.numeric.re);
  }
  for (std::size_t i = 0; i < vals.size(); ++i)
    for (std::size_t j = 0; j < vals.size(); ++j) {
      Ordering o = compare_real(vals[i], vals[j]);
      if (nums[i].hi < nums[j].lo) CHECK(o == Ordering::less);
      if (nums[i].lo > nums[j].hi) CHECK(o == Ordering::greater);
      Ordering rev = compare_real(vals[j], vals[i]);
      if (o == Ordering::less) CHECK(rev == Ordering::greater);
      if (o == Ordering::equal) CHECK(rev == Ordering::equal);
    }
}

TEST_CASE("isolated boxes contain exactly one root") {
  // cross-checked by construction: boxes sorted, pairwise disjoint, each box
  // refines without losing its root
  Poly p = Poly::of({-2, 0, 1}) * Poly::of({1, 0, 1}) * Poly::of({-1, 1});
  auto roots = isolate_roots(p);
  REQUIRE(roots.size() == 5);
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      CHECK(!equals(roots[i], roots[j]));
  for (const auto& r : roots) CHECK(equals(r.refined(pow2(-40)), r));
}
