#pragma once
// Test-only numeric oracle: complex interval arithmetic on dyadic rationals
// with outward rounding at a fixed precision (200 bits by default).  This is
// the independent check for the exact kernel: it never touches resultants,
// factorization or root isolation, only +,-,*,/ and square roots on dyadics.

#include <utility>

#include "kleinian/algnum.hpp"
#include "kleinian/interval.hpp"
#include "kleinian/rational.hpp"

namespace oracle {

using kleinian::AlgNum;
using kleinian::Int;
using kleinian::Rat;

constexpr unsigned kPrec = 200;

struct DI {
  Rat lo, hi;
};

inline DI di_make(const Rat& lo, const Rat& hi) {
  return {kleinian::dyadic_floor(lo, kPrec), kleinian::dyadic_ceil(hi, kPrec)};
}

inline DI di_point(const Rat& v) { return di_make(v, v); }

inline DI di_add(const DI& a, const DI& b) { return di_make(a.lo + b.lo, a.hi + b.hi); }
inline DI di_sub(const DI& a, const DI& b) { return di_make(a.lo - b.hi, a.hi - b.lo); }
inline DI di_neg(const DI& a) { return {-a.hi, -a.lo}; }

inline DI di_mul(const DI& a, const DI& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  using kleinian::rat_max;
  using kleinian::rat_min;
  return di_make(rat_min(rat_min(p1, p2), rat_min(p3, p4)),
                 rat_max(rat_max(p1, p2), rat_max(p3, p4)));
}

inline DI di_inv(const DI& a) {
  if (a.lo <= 0 && 0 <= a.hi) throw kleinian::DomainError("oracle: inverse over zero");
  return di_make(Rat(1) / a.hi, Rat(1) / a.lo);
}

// sqrt of a nonnegative rational, rounded down/up to the dyadic grid.
inline Rat sqrt_down(const Rat& q) {
  if (q < 0) throw kleinian::DomainError("oracle: sqrt of negative");
  Int scaled = kleinian::rat_floor(q * kleinian::pow2(2 * (long)kPrec));
  Int s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  return Rat(s) * kleinian::pow2(-(long)kPrec);
}

inline Rat sqrt_up(const Rat& q) {
  if (q < 0) throw kleinian::DomainError("oracle: sqrt of negative");
  Int scaled = kleinian::rat_ceil(q * kleinian::pow2(2 * (long)kPrec));
  Int s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  return (Rat(s) + 1) * kleinian::pow2(-(long)kPrec);
}

inline DI di_sqrt(const DI& a) {
  if (a.hi < 0) throw kleinian::DomainError("oracle: sqrt of negative interval");
  Rat lo = a.lo < 0 ? Rat(0) : a.lo;
  return {sqrt_down(lo), sqrt_up(a.hi)};
}

struct CDI {
  DI re, im;
};

inline CDI c_point(const Rat& x, const Rat& y) { return {di_point(x), di_point(y)}; }
inline CDI c_add(const CDI& a, const CDI& b) { return {di_add(a.re, b.re), di_add(a.im, b.im)}; }
inline CDI c_sub(const CDI& a, const CDI& b) { return {di_sub(a.re, b.re), di_sub(a.im, b.im)}; }
inline CDI c_mul(const CDI& a, const CDI& b) {
  return {di_sub(di_mul(a.re, b.re), di_mul(a.im, b.im)),
          di_add(di_mul(a.re, b.im), di_mul(a.im, b.re))};
}

inline CDI c_inv(const CDI& a) {
  DI n = di_add(di_mul(a.re, a.re), di_mul(a.im, a.im));
  DI r = di_inv(n);
  return {di_mul(a.re, r), di_mul(di_neg(a.im), r)};
}

// Principal square root.  The branch classification (real sign / nonreal) is
// supplied by the caller, because a tiny interval around a true zero cannot
// decide it; the numeric values themselves stay independent.
enum class SqrtBranch { real_nonneg, real_neg, nonreal };

inline CDI c_sqrt(const CDI& a, SqrtBranch branch) {
  DI n = di_add(di_mul(a.re, a.re), di_mul(a.im, a.im));
  DI r = di_sqrt(n);
  switch (branch) {
    case SqrtBranch::real_nonneg:
      return {di_sqrt(a.re), di_point(Rat(0))};
    case SqrtBranch::real_neg:
      return {di_point(Rat(0)), di_sqrt(di_neg(a.re))};
    default: {
      // u = sqrt((r+x)/2), v = sign(y) sqrt((r-x)/2); y != 0 here
      DI half = di_point(kleinian::make_rat(1, 2));
      DI u = di_sqrt(di_mul(di_add(r, a.re), half));
      DI v = di_sqrt(di_mul(di_sub(r, a.re), half));
      bool ypos = a.im.lo > 0;
      return {u, ypos ? v : di_neg(v)};
    }
  }
}

inline bool contains(const DI& a, const Rat& lo, const Rat& hi) {
  return lo <= a.lo && a.hi <= hi;
}

// Does the oracle enclosure meet the exact box?  The true value lies in both,
// so an empty intersection would prove a bug on one side.
inline bool meets(const CDI& e, const kleinian::Box& box) {
  if (e.re.hi < box.re.lo || box.re.hi < e.re.lo) return false;
  if (e.im.hi < box.im.lo || box.im.hi < e.im.lo) return false;
  return true;
}

inline Rat width(const CDI& e) {
  return kleinian::rat_max(e.re.hi - e.re.lo, e.im.hi - e.im.lo);
}

// ---- random expression trees over {+,-,*,inv,sqrt} ----

struct TreeRng {
  unsigned long long state;
  explicit TreeRng(unsigned long long seed)
      : state(seed * 2862933555777941757ULL + 3037000493ULL) {}
  unsigned long long next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  long uniform(long n) { return (long)(next() % (unsigned long long)n); }
};

struct TreeValue {
  AlgNum exact;
  CDI numeric;
};

// Leaves: small rationals and the quadratic seeds sqrt2, sqrt3, i.
inline TreeValue make_leaf(TreeRng& rng) {
  long kind = rng.uniform(8);
  if (kind < 5) {
    long num = rng.uniform(13) - 6;
    long den = 1 + rng.uniform(4);
    Rat q = kleinian::make_rat(num, den);
    return {AlgNum(q), c_point(q, Rat(0))};
  }
  if (kind == 5) {
    AlgNum s2 = kleinian::sqrt_alg(AlgNum(Rat(2)));
    return {s2, {di_sqrt(di_point(Rat(2))), di_point(Rat(0))}};
  }
  if (kind == 6) {
    AlgNum s3 = kleinian::sqrt_alg(AlgNum(Rat(3)));
    return {s3, {di_sqrt(di_point(Rat(3))), di_point(Rat(0))}};
  }
  return {AlgNum::imaginary_unit(), c_point(Rat(0), Rat(1))};
}

// Degree guards keep the run at desk scale: operands of a binary node may
// multiply to degree at most 64, and square roots are only taken of values of
// degree at most 4.  When a guard trips, the subtree value passes through
// unchanged, so every emitted value still satisfies the checked property.
inline TreeValue make_tree(TreeRng& rng, int depth) {
  if (depth <= 0 || rng.uniform(5) == 0) return make_leaf(rng);
  long op = rng.uniform(5);
  TreeValue a = make_tree(rng, depth - 1);
  switch (op) {
    case 0:
    case 1:
    case 2: {
      TreeValue b = make_tree(rng, depth - 1);
      if (a.exact.degree() * b.exact.degree() > 32)
        return a.exact.degree() >= b.exact.degree() ? a : b;
      if (op == 0) return {kleinian::add(a.exact, b.exact), c_add(a.numeric, b.numeric)};
      if (op == 1) return {kleinian::sub(a.exact, b.exact), c_sub(a.numeric, b.numeric)};
      return {kleinian::mul(a.exact, b.exact), c_mul(a.numeric, b.numeric)};
    }
    case 3: {
      if (a.exact.is_zero()) return a;
      return {kleinian::inv(a.exact), c_inv(a.numeric)};
    }
    default: {
      if (a.exact.degree() > 4) return a;
      SqrtBranch br = SqrtBranch::nonreal;
      if (kleinian::is_real(a.exact)) {
        br = kleinian::sign_real(kleinian::realified(a.exact)) >= 0 ? SqrtBranch::real_nonneg
                                                                    : SqrtBranch::real_neg;
      }
      return {kleinian::sqrt_alg(a.exact), c_sqrt(a.numeric, br)};
    }
  }
}

}  // namespace oracle
