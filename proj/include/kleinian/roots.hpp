#pragma once
// Certified root location for univariate rational polynomials.
//
// Real roots: Sturm chains with primitive-integer normalization and interval
// bisection.  Complex roots: the number of zeros inside a rational rectangle
// is computed exactly as a winding number.  The boundary is walked once; on
// each edge the restriction p(z(t)) = U(t) + iV(t) has rational coefficient
// polynomials, the zeros of U*V are isolated by Sturm bisection, and between
// consecutive breakpoints the value sits in a fixed octant of the plane.  The
// accumulated octant steps around the loop equal 8 times the zero count.
// Everything is rational arithmetic; there is no floating point on any path.

#include <algorithm>
#include <cstdio>
#include <optional>
#include <utility>
#include <vector>

#include "kleinian/poly.hpp"

namespace kleinian {

// Control-flow signal: a root lies on (or too near) the proposed boundary.
// Callers respond by nudging the rectangle or the split coordinate.
struct BoundaryRoot {};

// ---- Sturm chains ----

class SturmChain {
 public:
  explicit SturmChain(const Poly& p) {
    intpoly::IVec s0 = intpoly::from_poly(p);
    if (s0.empty()) throw DomainError("SturmChain of zero polynomial");
    seq_.push_back(s0);
    intpoly::IVec s1 = intpoly::derivative(s0);
    intpoly::make_primitive(s1);
    if (s1.empty()) return;
    seq_.push_back(std::move(s1));
    while (true) {
      const auto& a = seq_[seq_.size() - 2];
      const auto& b = seq_.back();
      if (b.size() == 1) break;
      int ms;
      intpoly::IVec r = intpoly::prem(a, b, ms);
      if (r.empty()) break;
      // the pseudo-remainder equals lc(b)^e times the remainder; flip so the
      // element is a positive multiple of minus the remainder
      if (ms > 0)
        for (auto& v : r) v = -v;
      intpoly::make_primitive(r);
      seq_.push_back(std::move(r));
    }
  }

  int sign_of_poly_at(const Rat& x) const {
    return intpoly::sign_at(seq_.front(), x.get_num(), x.get_den());
  }

  int variations_at(const Rat& x) const {
    Int num = x.get_num(), den = x.get_den();
    int var = 0, prev = 0;
    for (const auto& s : seq_) {
      int sg = intpoly::sign_at(s, num, den);
      if (sg == 0) continue;
      if (prev != 0 && sg != prev) ++var;
      prev = sg;
    }
    return var;
  }

  int variations_at_inf(int dir) const {  // dir = +1 or -1
    int var = 0, prev = 0;
    for (const auto& s : seq_) {
      if (s.empty()) continue;
      int sg = sign(s.back());
      if (dir < 0 && (s.size() - 1) % 2 == 1) sg = -sg;
      if (prev != 0 && sg != prev) ++var;
      prev = sg;
    }
    return var;
  }

  // Number of distinct real roots in (a, b).  Requires nonroot endpoints.
  int count_in(const Rat& a, const Rat& b) const {
    if (a > b) throw DomainError("SturmChain::count_in: a > b");
    return variations_at(a) - variations_at(b);
  }

  int count_all_real() const { return variations_at_inf(-1) - variations_at_inf(+1); }

 private:
  std::vector<intpoly::IVec> seq_;
};

// ---- real root isolation ----

// Disjoint open intervals, each containing exactly one real root of p, with
// rational nonroot endpoints, sorted ascending.  p need not be squarefree.
inline std::vector<RatInterval> isolate_real_roots(const Poly& p_in) {
  if (p_in.is_zero()) throw DomainError("isolate_real_roots: zero polynomial");
  Poly p = p_in.squarefree_part();
  std::vector<RatInterval> out;
  if (p.degree() == 0) return out;
  SturmChain chain(p);
  Rat bound = cauchy_root_bound(p);
  struct Item {
    Rat lo, hi;
    int count;
  };
  std::vector<Item> stack;
  int total = chain.count_in(-bound, bound);
  if (total > 0) stack.push_back({-bound, bound, total});
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (it.count == 1) {
      out.push_back(RatInterval(it.lo, it.hi));
      continue;
    }
    // choose a split point that is not itself a root
    Rat width = it.hi - it.lo;
    Rat mid = it.lo + width / 2;
    long denom = 4;
    while (p.eval(mid) == 0) {
      mid = it.lo + width * rat_of(Int(denom / 2 * 2 - 1), Int(denom * 2));
      denom *= 2;
    }
    int left = chain.count_in(it.lo, mid);
    int right = it.count - left;
    if (left > 0) stack.push_back({it.lo, mid, left});
    if (right > 0) stack.push_back({mid, it.hi, right});
  }
  std::sort(out.begin(), out.end(), [](const RatInterval& a, const RatInterval& b) {
    return a.lo < b.lo;
  });
  // separate touching intervals so the isolating sets are pairwise disjoint
  auto bisect_once = [&](RatInterval iv) {
    Rat width = iv.width();
    Rat mid = iv.lo + width / 2;
    long denom = 4;
    while (p.eval(mid) == 0) {
      mid = iv.lo + width * rat_of(Int(denom / 2 * 2 - 1), Int(denom * 2));
      denom *= 2;
    }
    return chain.count_in(iv.lo, mid) == 1 ? RatInterval(iv.lo, mid)
                                           : RatInterval(mid, iv.hi);
  };
  for (std::size_t i = 0; i + 1 < out.size(); ++i)
    while (out[i].hi >= out[i + 1].lo) {
      out[i] = bisect_once(out[i]);
      if (out[i].hi < out[i + 1].lo) break;
      out[i + 1] = bisect_once(out[i + 1]);
    }
  return out;
}

// Shrink an isolating interval below eps while keeping the root interior and
// the endpoints nonroot.
inline RatInterval refine_real_interval(const SturmChain& chain, RatInterval iv,
                                        const Rat& eps) {
  while (iv.width() >= eps) {
    Rat width = iv.width();
    Rat mid = iv.lo + width / 2;
    long denom = 4;
    while (chain.sign_of_poly_at(mid) == 0) {
      mid = iv.lo + width * rat_of(Int(denom / 2 * 2 - 1), Int(denom * 2));
      denom *= 2;
    }
    if (chain.count_in(iv.lo, mid) == 1)
      iv = RatInterval(iv.lo, mid);
    else
      iv = RatInterval(mid, iv.hi);
  }
  return iv;
}

// Roots of f strictly inside (0,1), isolated by bisection within [0,1] only.
// The intervals have nonroot endpoints strictly inside (0,1) and disjoint
// interiors (they may touch at a shared nonroot split point), sorted.  Roots
// exactly at 0 or 1 are excluded (divided out before isolating); this never
// looks outside the unit interval, so coefficient-magnitude root bounds play
// no role.  The prepared squarefree polynomial and its Sturm chain are kept
// for later interval refinement.
struct Open01Isolation {
  std::optional<SturmChain> chain;
  std::vector<RatInterval> intervals;

  void bisect(RatInterval& iv) const {
    Rat width = iv.width();
    Rat mid = iv.lo + width / 2;
    long denom = 4;
    while (chain->sign_of_poly_at(mid) == 0) {
      mid = iv.lo + width * rat_of(Int(denom / 2 * 2 - 1), Int(denom * 2));
      denom *= 2;
    }
    iv = chain->count_in(iv.lo, mid) == 1 ? RatInterval(iv.lo, mid)
                                          : RatInterval(mid, iv.hi);
  }
};

inline Open01Isolation isolate01(const Poly& f_in) {
  if (f_in.is_zero()) throw DomainError("isolate01: zero polynomial");
  Open01Isolation result;
  Poly f = f_in.squarefree_part();
  if (f.degree() == 0) return result;
  while (!f.is_zero() && f.degree() >= 1 && f[0] == 0)
    f = Poly::divrem(f, Poly::x()).first;
  while (!f.is_zero() && f.degree() >= 1 && f.eval(Rat(1)) == 0)
    f = Poly::divrem(f, Poly::of({-1, 1})).first;
  if (f.is_zero() || f.degree() == 0) return result;
  result.chain.emplace(f);
  const SturmChain& chain = *result.chain;
  std::vector<RatInterval>& out = result.intervals;
  struct Item {
    Rat lo, hi;
    int count;
  };
  int total = chain.count_in(Rat(0), Rat(1));
  if (total == 0) return result;
  std::vector<Item> stack;
  stack.push_back({Rat(0), Rat(1), total});
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (it.count == 1) {
      out.push_back(RatInterval(it.lo, it.hi));
      continue;
    }
    Rat width = it.hi - it.lo;
    Rat mid = it.lo + width / 2;
    long denom = 4;
    while (chain.sign_of_poly_at(mid) == 0) {
      mid = it.lo + width * rat_of(Int(denom / 2 * 2 - 1), Int(denom * 2));
      denom *= 2;
    }
    int left = chain.count_in(it.lo, mid);
    int right = it.count - left;
    if (left > 0) stack.push_back({it.lo, mid, left});
    if (right > 0) stack.push_back({mid, it.hi, right});
  }
  // pull intervals strictly inside (0,1): a sample placed exactly on a corner
  // could otherwise coincide with a sign event and break the octant walk
  for (auto& iv : out)
    while (iv.lo == 0 || iv.hi == 1) result.bisect(iv);
  std::sort(out.begin(), out.end(), [](const RatInterval& a, const RatInterval& b) {
    return a.lo < b.lo;
  });
  return result;
}

inline std::vector<RatInterval> isolate_roots_open01(const Poly& f) {
  return isolate01(f).intervals;
}

// ---- complex root counting in a rectangle ----

namespace detail {

// p restricted to the segment z0 + t*dz, split into real and imaginary parts.
// Computed over the integers after clearing denominators (a positive overall
// scale does not move roots or change signs).
inline std::pair<Poly, Poly> restrict_to_segment(const Poly& p, const Rat& x0, const Rat& y0,
                                                 const Rat& dx, const Rat& dy) {
  // clear the segment data to integers over a common denominator D
  Int D(1);
  for (const Rat* q : {&x0, &y0, &dx, &dy}) {
    Int d = q->get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), D.get_mpz_t(), d.get_mpz_t());
    D = D / g * d;
  }
  Rat sx0 = x0 * Rat(D), sy0 = y0 * Rat(D), sdx = dx * Rat(D), sdy = dy * Rat(D);
  Int a = sx0.get_num(), b = sy0.get_num();
  Int c = sdx.get_num(), d = sdy.get_num();
  intpoly::IVec pc = intpoly::from_poly(p);
  std::size_t n = pc.size() - 1;
  // powers of D for homogenization
  std::vector<Int> dpow(n + 1);
  dpow[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) dpow[i] = dpow[i - 1] * D;
  intpoly::IVec u, v;  // accumulators over t, kept at equal length
  for (std::size_t i = pc.size(); i-- > 0;) {
    // (u + iv) * ((a + ib) + t(c + id)) + p_i * D^(n-i)
    std::size_t len = u.size();
    intpoly::IVec nu(len + 1, Int(0)), nv(len + 1, Int(0));
    for (std::size_t k = 0; k < len; ++k) {
      nu[k] += a * u[k] - b * v[k];
      nv[k] += b * u[k] + a * v[k];
      nu[k + 1] += c * u[k] - d * v[k];
      nv[k + 1] += d * u[k] + c * v[k];
    }
    nu[0] += pc[i] * dpow[n - i];
    u = std::move(nu);
    v = std::move(nv);
    if (i == 0) break;
  }
  intpoly::trim(u);
  intpoly::trim(v);
  return {intpoly::to_poly(u), intpoly::to_poly(v)};
}

inline int octant(int su, int sv) {
  static const int table[3][3] = {
      // sv = -1, 0, +1   (su rows: -1, 0, +1)
      {5, 4, 3},
      {6, -1, 2},
      {7, 0, 1},
  };
  int o = table[su + 1][sv + 1];
  if (o < 0) throw DomainError("octant of zero vector");
  return o;
}

}  // namespace detail

// Number of roots of a squarefree p strictly inside a nondegenerate rational
// rectangle.  Throws BoundaryRoot if a root lies on the boundary.
inline int count_roots_in_box(const Poly& p, const Box& box) {
  if (p.is_zero()) throw DomainError("count_roots_in_box: zero polynomial");
  if (p.degree() == 0) return 0;
  if (box.re.is_point() || box.im.is_point())
    throw DomainError("count_roots_in_box: degenerate box");

  struct Edge {
    Rat x0, y0, dx, dy;
  };
  const Edge edges[4] = {
      {box.re.lo, box.im.lo, box.re.width(), Rat(0)},
      {box.re.hi, box.im.lo, Rat(0), box.im.width()},
      {box.re.hi, box.im.hi, -box.re.width(), Rat(0)},
      {box.re.lo, box.im.hi, Rat(0), -box.im.width()},
  };

  // corners must be nonzero
  for (const auto& e : edges) {
    auto [re, im] = p.eval_gauss(e.x0, e.y0);
    if (re == 0 && im == 0) throw BoundaryRoot{};
  }

  std::vector<int> sectors;
  for (const auto& e : edges) {
    auto [u, v] = detail::restrict_to_segment(p, e.x0, e.y0, e.dx, e.dy);
    if (u.is_zero() && v.is_zero())
      throw DomainError("polynomial vanishes identically on an edge");
    // a common interior root of u and v is a root of p on the boundary; when
    // one part vanishes identically, every root of the other is such a point
    if (u.is_zero() || v.is_zero()) {
      const Poly& w0 = u.is_zero() ? v : u;
      if (w0.degree() >= 1 && !isolate_roots_open01(w0).empty()) throw BoundaryRoot{};
    } else {
      Poly g = Poly::gcd(u, v);
      if (g.degree() >= 1 && !isolate_roots_open01(g).empty()) throw BoundaryRoot{};
    }
    // isolate the sign events of u and v separately and merge; after the gcd
    // check the two root sets are disjoint, so cross-refinement separates them
    Open01Isolation bu = (u.is_zero() || u.degree() < 1) ? Open01Isolation{} : isolate01(u);
    Open01Isolation bv = (v.is_zero() || v.degree() < 1) ? Open01Isolation{} : isolate01(v);
    for (auto& iu : bu.intervals)
      for (auto& iv : bv.intervals)
        while (iu.intersects(iv)) {
          bu.bisect(iu);
          if (!iu.intersects(iv)) break;
          bv.bisect(iv);
        }
    std::vector<RatInterval> breaks;
    breaks.reserve(bu.intervals.size() + bv.intervals.size());
    breaks.insert(breaks.end(), bu.intervals.begin(), bu.intervals.end());
    breaks.insert(breaks.end(), bv.intervals.begin(), bv.intervals.end());
    std::sort(breaks.begin(), breaks.end(),
              [](const RatInterval& a, const RatInterval& b) { return a.lo < b.lo; });
    std::vector<Rat> samples;
    Rat prev(0);
    for (const auto& iv : breaks) {
      samples.push_back(prev + (iv.lo - prev) / 2);
      prev = iv.hi;
    }
    samples.push_back(prev + (Rat(1) - prev) / 2);
    for (const auto& s : samples) {
      int su = u.is_zero() ? 0 : sign(u.eval(s));
      int sv = v.is_zero() ? 0 : sign(v.eval(s));
      if (su == 0 && sv == 0) throw BoundaryRoot{};  // sample hit a root of gcd
      sectors.push_back(detail::octant(su, sv));
    }
  }

  long total = 0;
  for (std::size_t i = 0; i < sectors.size(); ++i) {
    int s1 = sectors[i];
    int s2 = sectors[(i + 1) % sectors.size()];
    int d = ((s2 - s1) % 8 + 8) % 8;
    if (d > 4) d -= 8;
    if (d > 2 || d < -2) {
#ifdef KLEINIAN_DEBUG_WINDING
      fprintf(stderr, "DELTA %d: poly %s box [%s,%s]x[%s,%s] sectors:", d,
              p.to_string().c_str(), box.re.lo.get_str().c_str(), box.re.hi.get_str().c_str(),
              box.im.lo.get_str().c_str(), box.im.hi.get_str().c_str());
      for (int s : sectors) fprintf(stderr, " %d", s);
      fprintf(stderr, "\n");
#endif
      throw BoundaryRoot{};  // cannot happen off-boundary; retry wider
    }
    total += d;
  }
  if (total % 8 != 0 || total < 0)
    throw DomainError("winding count inconsistency");
  return (int)(total / 8);
}

// Count roots inside box, expanding it slightly if a root sits exactly on the
// boundary.  The returned box contains the input box.  Sound whenever callers
// only rely on "the input box's root is among those counted".
inline std::pair<int, Box> count_roots_expanding(const std::vector<Poly>& polys, Box box,
                                                 int* which_single = nullptr) {
  Rat base = box.width();
  if (base == 0) base = Rat(1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    try {
      int total = 0;
      int single = -1;
      for (std::size_t i = 0; i < polys.size(); ++i) {
        int c = count_roots_in_box(polys[i], box);
        if (c > 0) single = (int)i;
        total += c;
      }
      if (which_single) *which_single = (total == 1) ? single : -1;
      return {total, box};
    } catch (const BoundaryRoot&) {
      box = widened(box, base * rat_of(1, pow_int(2, (unsigned long)(attempt + 4))));
    }
  }
  throw DomainError("count_roots_expanding: could not avoid boundary roots");
}

// ---- isolation of all complex roots of an irreducible polynomial ----

namespace detail {

// Positive rational strictly below half the minimal distance between distinct
// roots (discriminant-based; |disc| >= 1 for squarefree integer polynomials).
inline Rat half_separation_lower_bound(const Poly& f) {
  int n = f.degree();
  if (n < 2) return Rat(1);
  Rat norm_sq(0);
  for (int i = 0; i <= n; ++i) norm_sq += f[i] * f[i];
  Int nn = pow_int(Int(n), (unsigned long)((n + 2) / 2 + 1));
  Rat denom = Rat(nn);
  Rat ns_pow = pow_rat(norm_sq + 1, (n - 1) / 2 + 1);
  return rat_of(1, 4) / (denom * ns_pow);
}

// Split a box into two halves along its longer side, at a coordinate chosen
// so that no root of f lies on the split line; returns counted sub-boxes.
inline void subdivide_and_count(const Poly& f, const Box& box, int count,
                                std::vector<std::pair<Box, int>>& out) {
  bool split_re = box.re.width() >= box.im.width();
  const RatInterval& axis = split_re ? box.re : box.im;
  const long nums[7] = {1, 3, 5, 7, 9, 11, 13};
  for (int attempt = 0; attempt < 7; ++attempt) {
    Rat frac = rat_of(Int(nums[attempt]), Int(attempt == 0 ? 2 : (attempt < 3 ? 8 : 16)));
    if (frac >= 1) continue;
    Rat cut = axis.lo + axis.width() * frac;
    Box left = split_re ? Box(RatInterval(box.re.lo, cut), box.im)
                        : Box(box.re, RatInterval(box.im.lo, cut));
    Box right = split_re ? Box(RatInterval(cut, box.re.hi), box.im)
                         : Box(box.re, RatInterval(cut, box.im.hi));
    try {
      int cl = count_roots_in_box(f, left);
      out.push_back({left, cl});
      out.push_back({right, count - cl});
      return;
    } catch (const BoundaryRoot&) {
      continue;
    }
  }
  throw DomainError("subdivide_and_count: no admissible split line");
}

}  // namespace detail

inline Box refine_box(const Poly& f, Box box, const Rat& eps);

// The interval-Newton operator: every root of f inside b lies in the result
// (valid whenever the derivative enclosure excludes zero, because the
// difference quotient between the midpoint and a root is an average of f'
// over a segment inside b and rectangle enclosures are convex).
inline std::optional<Box> newton_operator(const Poly& f, const Poly& fd, const Box& b) {
  // precision doubles with the achieved width so contraction stays quadratic
  Rat w = b.width();
  unsigned prec = (w == 0 ? 64 : 2 * dyadic_precision_for(w)) + 64;
  Box fp = fd.eval_box(b, prec);
  if (!(norm_sq(fp).lo > 0)) return std::nullopt;
  Rat mx = b.re.mid(), my = b.im.mid();
  Box fm = f.eval_gauss_box(mx, my, prec + 32);
  return Box::point(mx, my) - fm * reciprocal(fp);
}

inline bool interior_subset(const Box& inner, const Box& outer) {
  return outer.re.lo < inner.re.lo && inner.re.hi < outer.re.hi &&
         outer.im.lo < inner.im.lo && inner.im.hi < outer.im.hi;
}

// When N(b) lands in the interior of b, f has exactly one root in b and it
// lies in N(b); the returned box then isolates with the root strictly
// interior.  Returns nullopt when the certificate does not apply.
inline std::optional<Box> newton_certify(const Poly& f, const Poly& fd, const Box& b,
                                         unsigned prec) {
  auto k = newton_operator(f, fd, b);
  if (!k || !interior_subset(*k, b)) return std::nullopt;
  Rat margin = k->width() / 8 + pow2(-(long)prec);
  Box res = intersect(dyadic_outward(intersect(widened(*k, margin), b), prec + 8), b);
  if (!interior_subset(*k, res)) return std::nullopt;
  return res;
}

// Isolating boxes for all complex roots of an irreducible f: real roots get
// zero-height boxes, nonreal roots proper rectangles with the root strictly
// interior.  Boxes of sibling subdivision cells may touch along split lines.
inline std::vector<Box> isolate_all_roots_raw(const Poly& f) {
  if (f.is_zero() || f.degree() < 1)
    throw DomainError("isolate_all_roots: not a polynomial with roots");
  std::vector<Box> out;
  if (f.degree() == 1) {
    Rat r = -f[0] / f[1];
    out.push_back(Box::point(r, Rat(0)));
    return out;
  }
  auto real_ivs = isolate_real_roots(f);
  for (const auto& iv : real_ivs)
    out.push_back(Box(iv, RatInterval::point(Rat(0))));
  int nonreal = f.degree() - (int)real_ivs.size();
  if (nonreal > 0) {
    Rat bound = cauchy_root_bound(f);
    Rat mu = detail::half_separation_lower_bound(f);
    if (mu >= bound) mu = bound / 2;
    Box upper(RatInterval(-bound, bound), RatInterval(mu, bound));
    int expected = nonreal / 2;
    std::vector<std::pair<Box, int>> queue;
    int c0 = count_roots_in_box(f, upper);  // boundary is root-free by construction
    if (c0 != expected)
      throw DomainError("isolate_all_roots: separation bound failed");
    if (c0 > 0) queue.push_back({upper, c0});
    while (!queue.empty()) {
      auto [box, count] = queue.back();
      queue.pop_back();
      if (count == 0) continue;
      if (count == 1) {
        out.push_back(box);
        out.push_back(conjugate(box));
        continue;
      }
      detail::subdivide_and_count(f, box, count, queue);
    }
  }
  if ((int)out.size() != f.degree())
    throw DomainError("isolate_all_roots: lost roots");
  std::sort(out.begin(), out.end(), [](const Box& a, const Box& b) {
    if (a.re.lo != b.re.lo) return a.re.lo < b.re.lo;
    return a.im.lo < b.im.lo;
  });
  return out;
}

// As above, with the boxes additionally pairwise disjoint as closed sets.
inline std::vector<Box> isolate_all_roots(const Poly& f) {
  std::vector<Box> out = isolate_all_roots_raw(f);
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j)
        if (out[i].intersects(out[j])) {
          out[i] = refine_box(f, out[i], out[i].width() * make_rat(3, 4));
          out[j] = refine_box(f, out[j], out[j].width() * make_rat(3, 4));
          again = true;
        }
  }
  std::sort(out.begin(), out.end(), [](const Box& a, const Box& b) {
    if (a.re.lo != b.re.lo) return a.re.lo < b.re.lo;
    return a.im.lo < b.im.lo;
  });
  return out;
}

// Shrink an isolating box below eps, keeping the unique root strictly inside.
//
// Real roots: one-dimensional interval Newton on the zero-height box, with
// Sturm bisection as coarse-phase fallback.  Nonreal roots: the rectangle
// version of the same contraction.  In both cases the final box is restored
// to the verified strictly-interior form, by a Newton uniqueness certificate
// when possible and by bisection from the original verified box otherwise.
inline Box refine_box(const Poly& f, Box box, const Rat& eps) {
  if (box.width() < eps) return box;
  Poly fd = f.derivative();
  Rat target = eps / 2;
  unsigned prec = dyadic_precision_for(target) + 16;

  if (box.im.is_point()) {
    // real path: contract with Newton on degenerate boxes; the interval
    // arithmetic keeps the imaginary part exactly zero throughout
    Box cur = box;
    std::optional<SturmChain> chain;
    while (cur.width() >= target) {
      bool contracted = false;
      if (auto k = newton_operator(f, fd, cur)) {
        if (k->im.contains(Rat(0)) && k->re.intersects(cur.re)) {
          RatInterval next = dyadic_outward(intersect(k->re, cur.re), prec);
          if (next.width() <= cur.width() * make_rat(3, 4)) {
            cur = Box(next, cur.im);
            contracted = true;
          }
        }
      }
      if (!contracted) {
        if (!chain) chain.emplace(f);
        RatInterval iv = refine_real_interval(*chain, cur.re, cur.re.width() * make_rat(3, 4));
        cur = Box(iv, cur.im);
      }
    }
    // endpoints must be nonroots; Newton clips cannot be trusted for that
    if (!chain) chain.emplace(f);
    if (chain->sign_of_poly_at(cur.re.lo) == 0 || chain->sign_of_poly_at(cur.re.hi) == 0 ||
        chain->count_in(cur.re.lo, cur.re.hi) != 1) {
      RatInterval iv = refine_real_interval(*chain, box.re, eps);
      return Box(iv, box.im);
    }
    return cur;
  }

  Box cur = box;
  while (cur.width() >= target) {
    if (cur.re.is_point() || cur.im.is_point()) {
      Rat w = cur.width() / 64;
      if (w == 0) w = target / 64;
      cur = intersect(widened(cur, w), box);
      if (cur.re.is_point() || cur.im.is_point()) cur = widened(cur, w);
    }
    bool contracted = false;
    if (auto k = newton_operator(f, fd, cur)) {
      if (k->intersects(cur)) {
        Box next = dyadic_outward(intersect(*k, cur), prec);
        if (next.width() <= cur.width() * make_rat(3, 4)) {
          cur = next;
          contracted = true;
        }
      }
    }
    if (!contracted) {
      // cheap exclusion bisection first: a half with 0 outside f's interval
      // image, or with an empty Newton intersection, holds no root
      bool split_re = cur.re.width() >= cur.im.width();
      Rat cut = split_re ? cur.re.mid() : cur.im.mid();
      Box lo_half = split_re ? Box(RatInterval(cur.re.lo, cut), cur.im)
                             : Box(cur.re, RatInterval(cur.im.lo, cut));
      Box hi_half = split_re ? Box(RatInterval(cut, cur.re.hi), cur.im)
                             : Box(cur.re, RatInterval(cut, cur.im.hi));
      auto excluded = [&](const Box& h) {
        if (!f.eval_box(h).contains_zero()) return true;
        if (auto k = newton_operator(f, fd, h))
          if (!k->intersects(h)) return true;
        return false;
      };
      if (excluded(lo_half)) {
        cur = hi_half;
        continue;
      }
      if (excluded(hi_half)) {
        cur = lo_half;
        continue;
      }
      // the root may sit on the boundary after a Newton clip; nudge outward
      // (clipped to the original verified box) before bisecting
      Box wide = intersect(widened(cur, cur.width() / 32), box);
      if (wide.re.is_point() || wide.im.is_point()) wide = widened(cur, cur.width() / 32);
      std::vector<std::pair<Box, int>> halves;
      detail::subdivide_and_count(f, wide, 1, halves);
      cur = halves[0].second == 1 ? halves[0].first : halves[1].first;
    }
  }
  // restore strict interiority via the Newton uniqueness certificate
  Rat grow = cur.width() / 4 + target / 256;
  for (int attempt = 0; attempt < 4; ++attempt) {
    Box probe = widened(cur, grow);
    if (auto res = newton_certify(f, fd, probe, prec))
      if (res->width() < eps) return *res;
    grow = grow * 2;
  }
  // pathological fallback: bisection descent from the original verified box;
  // subdivision children inherit root-free boundaries, so the result is a
  // verified isolating box with the root strictly interior
  Box b = box;
  while (b.width() >= eps) {
    std::vector<std::pair<Box, int>> halves;
    detail::subdivide_and_count(f, b, 1, halves);
    b = halves[0].second == 1 ? halves[0].first : halves[1].first;
  }
  return b;
}

}  // namespace kleinian
