#pragma once
// Exact rational interval arithmetic and complex rectangles.  Endpoints are
// rationals, so +,-,* are exact; there is no rounding anywhere in this layer.

#include <algorithm>
#include <string>

#include "kleinian/rational.hpp"

namespace kleinian {

struct RatInterval {
  Rat lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(Rat a, Rat b) : lo(std::move(a)), hi(std::move(b)) {
    if (lo > hi) throw DomainError("RatInterval: lo > hi");
  }
  static RatInterval point(const Rat& v) { return RatInterval(v, v); }

  bool is_point() const { return lo == hi; }
  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool strictly_positive() const { return lo > 0; }
  bool strictly_negative() const { return hi < 0; }
  bool intersects(const RatInterval& o) const { return !(hi < o.lo || o.hi < lo); }
};

inline RatInterval operator+(const RatInterval& a, const RatInterval& b) {
  return RatInterval(a.lo + b.lo, a.hi + b.hi);
}
inline RatInterval operator-(const RatInterval& a, const RatInterval& b) {
  return RatInterval(a.lo - b.hi, a.hi - b.lo);
}
inline RatInterval operator-(const RatInterval& a) { return RatInterval(-a.hi, -a.lo); }

inline RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return RatInterval(rat_min(rat_min(p1, p2), rat_min(p3, p4)),
                     rat_max(rat_max(p1, p2), rat_max(p3, p4)));
}

inline RatInterval operator*(const Rat& c, const RatInterval& a) {
  return c >= 0 ? RatInterval(c * a.lo, c * a.hi) : RatInterval(c * a.hi, c * a.lo);
}

// Tighter than a*a when the interval straddles zero.
inline RatInterval square(const RatInterval& a) {
  Rat s1 = a.lo * a.lo, s2 = a.hi * a.hi;
  if (a.contains_zero()) return RatInterval(Rat(0), rat_max(s1, s2));
  return RatInterval(rat_min(s1, s2), rat_max(s1, s2));
}

// Requires an interval that excludes zero.
inline RatInterval reciprocal(const RatInterval& a) {
  if (a.contains_zero()) throw DomainError("reciprocal of interval containing 0");
  return RatInterval(Rat(1) / a.hi, Rat(1) / a.lo);
}

inline RatInterval intersect(const RatInterval& a, const RatInterval& b) {
  return RatInterval(rat_max(a.lo, b.lo), rat_min(a.hi, b.hi));
}

inline RatInterval hull(const RatInterval& a, const RatInterval& b) {
  return RatInterval(rat_min(a.lo, b.lo), rat_max(a.hi, b.hi));
}

// An axis-aligned rectangle in the complex plane with rational corners.
// Degenerate (point or segment) rectangles are first-class values: rationals
// live in point boxes and real algebraic numbers in zero-height boxes.
struct Box {
  RatInterval re, im;

  Box() = default;
  Box(RatInterval r, RatInterval i) : re(std::move(r)), im(std::move(i)) {}
  static Box point(const Rat& x, const Rat& y) {
    return Box(RatInterval::point(x), RatInterval::point(y));
  }

  bool is_point() const { return re.is_point() && im.is_point(); }
  bool is_real_line_segment() const { return im.is_point() && im.lo == 0; }
  Rat width() const { return rat_max(re.width(), im.width()); }
  bool contains(const Rat& x, const Rat& y) const { return re.contains(x) && im.contains(y); }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  bool intersects(const Box& o) const { return re.intersects(o.re) && im.intersects(o.im); }
};

inline Box operator+(const Box& a, const Box& b) { return Box(a.re + b.re, a.im + b.im); }
inline Box operator-(const Box& a, const Box& b) { return Box(a.re - b.re, a.im - b.im); }
inline Box operator-(const Box& a) { return Box(-a.re, -a.im); }

inline Box operator*(const Box& a, const Box& b) {
  return Box(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

inline Box conjugate(const Box& a) { return Box(a.re, -a.im); }

inline RatInterval norm_sq(const Box& a) { return square(a.re) + square(a.im); }

// 1/z enclosure; requires |z|^2 bounded away from zero on the box.
inline Box reciprocal(const Box& a) {
  RatInterval n = norm_sq(a);
  RatInterval rn = reciprocal(n);
  return Box(a.re * rn, (-a.im) * rn);
}

inline Box intersect(const Box& a, const Box& b) {
  return Box(intersect(a.re, b.re), intersect(a.im, b.im));
}

inline Box widened(const Box& a, const Rat& eps) {
  return Box(RatInterval(a.re.lo - eps, a.re.hi + eps),
             RatInterval(a.im.lo - eps, a.im.hi + eps));
}

// Outward rounding onto the 2^-prec grid; containment-preserving and keeps
// endpoint bit lengths proportional to prec across iterated refinement.
inline RatInterval dyadic_outward(const RatInterval& iv, unsigned prec) {
  return RatInterval(dyadic_floor(iv.lo, prec), dyadic_ceil(iv.hi, prec));
}

inline Box dyadic_outward(const Box& b, unsigned prec) {
  return Box(dyadic_outward(b.re, prec), dyadic_outward(b.im, prec));
}

// Smallest k with 2^-k <= eps (0 for eps >= 1).
inline unsigned dyadic_precision_for(const Rat& eps) {
  if (eps >= 1) return 0;
  std::size_t nb = mpz_sizeinbase(eps.get_num().get_mpz_t(), 2);
  std::size_t db = mpz_sizeinbase(eps.get_den().get_mpz_t(), 2);
  return (unsigned)(db - nb + 1);
}

// Dyadic bounds on square roots of nonnegative rationals.
inline Rat sqrt_lower(const Rat& q, unsigned prec) {
  if (q < 0) throw DomainError("sqrt_lower of negative");
  Int scaled = rat_floor(q * pow2(2 * (long)prec));
  Int s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  return Rat(s) * pow2(-(long)prec);
}

inline Rat sqrt_upper(const Rat& q, unsigned prec) {
  if (q < 0) throw DomainError("sqrt_upper of negative");
  Int scaled = rat_ceil(q * pow2(2 * (long)prec));
  Int s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  return (Rat(s) + 1) * pow2(-(long)prec);
}

// Enclosure of sqrt over a nonnegative interval (lo clamped at zero).
inline RatInterval sqrt_enclosure(const RatInterval& iv, unsigned prec) {
  Rat lo = iv.lo < 0 ? Rat(0) : iv.lo;
  if (iv.hi < 0) throw DomainError("sqrt_enclosure of negative interval");
  return RatInterval(sqrt_lower(lo, prec), sqrt_upper(iv.hi, prec));
}

}  // namespace kleinian
