#pragma once
// Exact complex algebraic numbers: an irreducible primitive-integer minimal
// polynomial plus an isolating rational rectangle.  Binary operations go
// through resultants (computed by interpolation), the candidate polynomial is
// factored, and the correct root is selected by interval arithmetic with
// refinement on ambiguity.  Unary operations use direct coefficient
// transforms.  Every stored box keeps its root strictly interior (point boxes
// for rationals), which the equality test relies on.

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "kleinian/factor.hpp"
#include "kleinian/roots.hpp"

namespace kleinian {

enum class Ordering { less, equal, greater };

class AlgNum {
 public:
  AlgNum() : AlgNum(Rat(0)) {}

  explicit AlgNum(const Rat& value) {
    min_poly_ = Poly::from_coeffs({-value, Rat(1)}).canonical();
    box_ = Box::point(value, Rat(0));
  }

  static AlgNum from_rational(const Rat& v) { return AlgNum(v); }
  static AlgNum from_int(long v) { return AlgNum(Rat(v)); }

  // Trusted constructor: f irreducible canonical, box isolating with the root
  // strictly interior (or a point box for degree one).
  static AlgNum from_parts(Poly f, Box box) {
    AlgNum a;
    if (f.degree() == 1) {
      Rat v = -f[0] / f[1];
      return AlgNum(v);
    }
    a.min_poly_ = std::move(f);
    a.box_ = std::move(box);
    return a;
  }

  static AlgNum zero() { return AlgNum(Rat(0)); }
  static AlgNum one() { return AlgNum(Rat(1)); }
  static AlgNum imaginary_unit() {
    return from_parts(Poly::of({1, 0, 1}),
                      Box(RatInterval(make_rat(-1, 2), make_rat(1, 2)),
                          RatInterval(make_rat(1, 2), make_rat(3, 2))));
  }

  const Poly& min_poly() const { return min_poly_; }
  const Box& box() const { return box_; }
  int degree() const { return min_poly_.degree(); }
  bool is_rational() const { return degree() == 1; }

  Rat rational_value() const {
    if (!is_rational()) throw DomainError("rational_value of irrational");
    return -min_poly_[0] / min_poly_[1];
  }

  bool is_zero() const { return is_rational() && min_poly_[0] == 0; }

  AlgNum refined(const Rat& eps) const {
    if (eps <= 0) throw DomainError("refine: eps must be positive");
    if (is_rational() || box_.width() < eps) return *this;
    AlgNum r = *this;
    r.box_ = refine_box(min_poly_, box_, eps);
    return r;
  }

  // One bisection step; cheaper than a targeted refine when looping.
  AlgNum refined_step() const {
    if (is_rational()) return *this;
    AlgNum r = *this;
    r.box_ = refine_box(min_poly_, box_, box_.width() * make_rat(3, 4));
    return r;
  }

  bool known_real() const { return box_.im.is_point() && box_.im.lo == 0; }

 private:
  Poly min_poly_;
  Box box_;
};

namespace algdetail {

// Roots of f lying on the real segment iv x {0}.
inline int count_roots_on_real_segment(const Poly& f, const RatInterval& iv) {
  if (f.degree() == 1) {
    Rat r = -f[0] / f[1];
    return iv.contains(r) ? 1 : 0;
  }
  // rational endpoints are never roots of an irreducible of degree >= 2
  SturmChain chain(f);
  return chain.count_in(iv.lo, iv.hi);
}

// Count roots of each candidate factor inside the enclosure, which may be a
// real segment.  Returns (total, index of the factor holding the unique root
// when total == 1, possibly widened box).
struct SelectCount {
  int total;
  int which;
  Box box;
};

inline SelectCount count_candidates(const std::vector<Poly>& factors, Box enclosure) {
  if (enclosure.im.is_point() && enclosure.im.lo == 0) {
    int total = 0, which = -1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      int c = count_roots_on_real_segment(factors[i], enclosure.re);
      if (c > 0) which = (int)i;
      total += c;
    }
    return {total, total == 1 ? which : -1, enclosure};
  }
  // widen a degenerate direction minimally; soundness only needs containment
  if (enclosure.re.is_point() || enclosure.im.is_point()) {
    Rat w = enclosure.width();
    if (w == 0) w = Rat(1);
    enclosure = widened(enclosure, w / 1024);
  }
  int which = -1;
  auto [total, grown] = count_roots_expanding(factors, enclosure, &which);
  return {total, which, grown};
}

// Generic factor-then-select loop: `current` recomputes the enclosure of the
// target value from the operands' boxes, `refine` shrinks the operands.  The
// true value lies in every enclosure and is a root of exactly one factor, so
// factors whose interval evaluation excludes zero on the enclosure can be
// dropped; once one factor remains, a Newton certificate (or a real-segment
// Sturm count) upgrades the enclosure to a verified isolating box.
inline AlgNum select_root(const std::vector<Poly>& factors,
                          const std::function<Box()>& current,
                          const std::function<void()>& refine) {
  std::vector<char> alive(factors.size(), 1);
  std::vector<Poly> derivs(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) derivs[i] = factors[i].derivative();
  for (int round = 0; round < 256; ++round) {
    Box bc = current();
    unsigned eval_prec = dyadic_precision_for(rat_max(bc.width(), pow2(-2048))) + 32;
    int last = -1, count = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (!alive[i]) continue;
      if (factors[i].eval_box(bc, eval_prec).contains_zero()) {
        last = (int)i;
        ++count;
      } else {
        alive[i] = 0;
      }
    }
    if (count == 0) throw DomainError("select_root: no factor vanishes on the enclosure");
    if (count == 1) {
      const Poly& f = factors[(std::size_t)last];
      if (f.degree() == 1) {
        Rat r = -f[0] / f[1];
        if (bc.contains(r, Rat(0))) return AlgNum(r);
      } else if (bc.im.is_point() && bc.im.lo == 0) {
        SturmChain chain(f);
        if (chain.sign_of_poly_at(bc.re.lo) != 0 && chain.sign_of_poly_at(bc.re.hi) != 0 &&
            chain.count_in(bc.re.lo, bc.re.hi) == 1)
          return AlgNum::from_parts(f, bc);
      } else {
        Box probe = bc;
        if (probe.re.is_point() || probe.im.is_point())
          probe = widened(probe, rat_max(probe.width() / 64, pow2(-40)));
        unsigned prec = dyadic_precision_for(probe.width()) + 16;
        if (auto res = newton_certify(f, derivs[(std::size_t)last], probe, prec))
          return AlgNum::from_parts(f, *res);
      }
    }
    refine();
  }
  throw DomainError("select_root: failed to separate candidate roots");
}

// Newton interpolation through (xs[i], ys[i]) with small integer nodes.
inline Poly interpolate_int(const std::vector<long>& xs, const std::vector<Int>& ys) {
  std::size_t N = xs.size() - 1;
  std::vector<Rat> coef(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) coef[i] = Rat(ys[i]);
  for (std::size_t j = 1; j <= N; ++j)
    for (std::size_t i = N; i >= j; --i)
      coef[i] = (coef[i] - coef[i - 1]) / Rat(xs[i] - xs[i - j]);
  Poly r(coef[N]);
  for (std::size_t i = N; i-- > 0;) {
    r = r * Poly::of({-xs[i], 1}) + Poly(coef[i]);
    if (i == 0) break;
  }
  return r;
}

// p(y + c) over the integers.
inline intpoly::IVec taylor_shift(intpoly::IVec a, const Int& c) {
  if (a.empty()) return a;
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    for (std::size_t j = a.size() - 1; j >= i + 1; --j) a[j - 1] += c * a[j];
  return a;
}

// r(x) = Res_y(A(y), B(x-y)); vanishes exactly on sums of roots.  Computed by
// integer resultants at mn+1 integer points plus Newton interpolation.
// Memoized on the operand pair (mutex-guarded, safe for concurrent readers).
inline Poly resultant_sum(const Poly& A, const Poly& B) {
  static std::mutex cache_mutex;
  static std::map<std::pair<std::vector<Int>, std::vector<Int>>, Poly> cache;
  int m = A.degree(), n = B.degree();
  int N = m * n;
  intpoly::IVec ai = intpoly::from_poly(A), bi = intpoly::from_poly(B);
  auto key = std::make_pair(ai, bi);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<long> xs;
  xs.reserve(N + 1);
  long v = 0;
  for (int i = 0; i <= N; ++i) {
    xs.push_back(v);
    v = v > 0 ? -v : -v + 1;
  }
  std::vector<Int> ys = detail::resultant_sum_samples(ai, bi, xs);
  Poly r = interpolate_int(xs, ys);
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(std::move(key), r);
  return r;
}

// r(x) = Res_y(y^m A(x/y), B(y)); vanishes exactly on products of roots.
// Requires A(0) != 0 (true for irreducibles of degree >= 2).
inline Poly resultant_product(const Poly& A, const Poly& B) {
  static std::mutex cache_mutex;
  static std::map<std::pair<std::vector<Int>, std::vector<Int>>, Poly> cache;
  int m = A.degree(), n = B.degree();
  int N = m * n;
  intpoly::IVec ai = intpoly::from_poly(A), bi = intpoly::from_poly(B);
  auto key = std::make_pair(ai, bi);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<long> xs;
  xs.reserve(N + 1);
  long v = 0;
  for (int i = 0; i <= N; ++i) {
    xs.push_back(v);
    v = v > 0 ? -v : -v + 1;
  }
  std::vector<Int> ys = detail::resultant_product_samples(ai, bi, xs);
  Poly r = interpolate_int(xs, ys);
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(std::move(key), r);
  return r;
}

}  // namespace algdetail

// ---- unary operations (exact coefficient transforms; isolation preserved) ----

inline AlgNum neg(const AlgNum& a) {
  if (a.is_rational()) return AlgNum(-a.rational_value());
  return AlgNum::from_parts(a.min_poly().reflected().canonical(), -a.box());
}

inline AlgNum conj(const AlgNum& a) {
  if (a.is_rational() || a.known_real()) return a;
  return AlgNum::from_parts(a.min_poly(), conjugate(a.box()));
}

inline AlgNum add_rational(const AlgNum& a, const Rat& r) {
  if (r == 0) return a;
  if (a.is_rational()) return AlgNum(a.rational_value() + r);
  Box b = a.box() + Box::point(r, Rat(0));
  return AlgNum::from_parts(a.min_poly().shifted_roots(r).canonical(), b);
}

inline AlgNum mul_rational(const AlgNum& a, const Rat& s) {
  if (s == 0) return AlgNum::zero();
  if (s == 1) return a;
  if (a.is_rational()) return AlgNum(a.rational_value() * s);
  Box b = Box::point(s, Rat(0)) * a.box();
  return AlgNum::from_parts(a.min_poly().scaled_roots(s).canonical(), b);
}

// ---- equality ----

// Same minimal polynomial, then a separation argument: after both boxes are
// refined below a quarter of the minimal root distance (discriminant bound),
// they intersect exactly when they hold the same root.
inline bool equals(const AlgNum& a, const AlgNum& b) {
  if (a.min_poly() != b.min_poly()) return false;
  if (a.is_rational()) return true;  // same canonical degree-1 polynomial
  if (!a.box().intersects(b.box())) return false;
  Rat eps = detail::half_separation_lower_bound(a.min_poly()) / 2;
  AlgNum x = a.refined(eps), y = b.refined(eps);
  return x.box().intersects(y.box());
}

inline bool is_one(const AlgNum& a) { return a.is_rational() && a.rational_value() == 1; }

// ---- realness and real comparison ----

inline bool is_real(const AlgNum& a) {
  if (a.is_rational() || a.known_real()) return true;
  if (!a.box().im.contains(Rat(0))) return false;
  return equals(a, conj(a));
}

// A real number re-boxed with an exactly degenerate imaginary part.  The
// caller asserts the value is real; the segment inherits isolation from the
// rectangle.
inline AlgNum force_real(const AlgNum& a) {
  if (a.is_rational() || a.known_real()) return a;
  return AlgNum::from_parts(a.min_poly(), Box(a.box().re, RatInterval::point(Rat(0))));
}

inline AlgNum realified(const AlgNum& a) {
  if (a.is_rational() || a.known_real()) return a;
  if (!is_real(a)) throw DomainError("realified: value is not real");
  return force_real(a);
}

// ---- binary operations ----

inline AlgNum add(const AlgNum& a, const AlgNum& b) {
  if (b.is_rational()) return add_rational(a, b.rational_value());
  if (a.is_rational()) return add_rational(b, a.rational_value());
  Poly r = algdetail::resultant_sum(a.min_poly(), b.min_poly());
  std::vector<Poly> factors = factor_distinct(r);
  AlgNum x = a.refined(make_rat(1, 8)), y = b.refined(make_rat(1, 8));
  return algdetail::select_root(
      factors, [&]() { return x.box() + y.box(); },
      [&]() {
        x = x.refined_step();
        y = y.refined_step();
      });
}

inline AlgNum sub(const AlgNum& a, const AlgNum& b) { return add(a, neg(b)); }

inline AlgNum mul(const AlgNum& a, const AlgNum& b) {
  if (a.is_zero() || b.is_zero()) return AlgNum::zero();
  if (b.is_rational()) return mul_rational(a, b.rational_value());
  if (a.is_rational()) return mul_rational(b, a.rational_value());
  Poly r = algdetail::resultant_product(a.min_poly(), b.min_poly());
  std::vector<Poly> factors = factor_distinct(r);
  AlgNum x = a.refined(make_rat(1, 8)), y = b.refined(make_rat(1, 8));
  return algdetail::select_root(
      factors, [&]() { return x.box() * y.box(); },
      [&]() {
        x = x.refined_step();
        y = y.refined_step();
      });
}

inline AlgNum inv(const AlgNum& a) {
  if (a.is_zero()) throw DomainError("inv(0)");
  if (a.is_rational()) return AlgNum(Rat(1) / a.rational_value());
  Poly r = a.min_poly().reciprocal_roots().canonical();
  if (sign(r.lc()) < 0) r = (-r).canonical();
  AlgNum x = a;
  while (x.box().contains_zero()) x = x.refined_step();
  std::vector<Poly> factors = {r};  // reciprocal of an irreducible is irreducible
  AlgNum xx = x;
  return algdetail::select_root(
      factors, [&]() { return reciprocal(xx.box()); }, [&]() { xx = xx.refined_step(); });
}

inline AlgNum div(const AlgNum& a, const AlgNum& b) { return mul(a, inv(b)); }

// ---- real sign and ordering ----

inline int sign_real(const AlgNum& a_in) {
  AlgNum a = realified(a_in);
  if (a.is_rational()) return sign(a.rational_value());
  if (a.is_zero()) return 0;
  AlgNum x = a;
  while (x.box().re.contains_zero()) x = x.refined_step();
  return x.box().re.strictly_positive() ? 1 : -1;
}

// Exact ordering of real algebraic numbers, decided as the sign of the exact
// difference with box refinement.
inline Ordering compare_real(const AlgNum& a, const AlgNum& b) {
  AlgNum ra = realified(a), rb = realified(b);
  if (ra.is_rational() && rb.is_rational()) {
    Rat x = ra.rational_value(), y = rb.rational_value();
    if (x < y) return Ordering::less;
    if (x > y) return Ordering::greater;
    return Ordering::equal;
  }
  AlgNum d = sub(ra, rb);
  if (d.is_zero()) return Ordering::equal;
  return sign_real(force_real(d)) < 0 ? Ordering::less : Ordering::greater;
}

inline bool less_real(const AlgNum& a, const AlgNum& b) {
  return compare_real(a, b) == Ordering::less;
}

// ---- real and imaginary parts ----

inline AlgNum re_part(const AlgNum& a) {
  if (a.is_rational() || a.known_real()) return a;
  AlgNum s = add(a, conj(a));
  return force_real(mul_rational(s, make_rat(1, 2)));
}

inline AlgNum im_part(const AlgNum& a) {
  if (a.is_rational() || a.known_real()) return AlgNum::zero();
  AlgNum d = sub(a, conj(a));  // 2i * im(a)
  if (d.is_zero()) return AlgNum::zero();
  static const AlgNum minus_half_i = AlgNum::from_parts(
      Poly::of({1, 0, 4}), Box(RatInterval(make_rat(-1, 4), make_rat(1, 4)),
                               RatInterval(make_rat(-3, 4), make_rat(-1, 4))));
  return force_real(mul(d, minus_half_i));
}

// ---- square root (principal branch) ----

namespace algdetail {

// Enclosure of the principal square root over a box known to contain the
// value, given its branch class.  Real branches keep zero-height boxes.
inline Box sqrt_box(const Box& b, int cls) {
  unsigned prec = dyadic_precision_for(rat_max(b.width(), pow2(-512))) / 2 + 24;
  if (cls == 0) return Box(sqrt_enclosure(b.re, prec), RatInterval::point(Rat(0)));
  if (cls == 1) return Box(RatInterval::point(Rat(0)), sqrt_enclosure(-b.re, prec));
  // nonreal: |w| in sqrt of |z| enclosure; u = sqrt((|z|+x)/2) > 0,
  // v = sign(y) sqrt((|z|-x)/2), hulled over both signs if y straddles 0
  RatInterval n = norm_sq(b);
  RatInterval r = sqrt_enclosure(n, prec);
  Rat half = make_rat(1, 2);
  RatInterval u = sqrt_enclosure(half * (r + b.re), prec);
  RatInterval v = sqrt_enclosure(half * (r - b.re), prec);
  RatInterval vi = b.im.strictly_positive() ? v
                   : b.im.strictly_negative() ? -v
                                              : RatInterval(-v.hi, v.hi);
  return Box(u, vi);
}

}  // namespace algdetail

inline AlgNum sqrt_alg(const AlgNum& a) {
  if (a.is_zero()) return AlgNum::zero();
  if (a.is_rational()) {
    // fast path for exact rational squares
    Rat v = a.rational_value();
    if (v > 0) {
      Int num = v.get_num(), den = v.get_den();
      Int sn, sd;
      mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
      mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
      if (sn * sn == num && sd * sd == den) return AlgNum(rat_of(sn, sd));
    }
  }
  // branch classification first: it drives the enclosure
  int cls;  // 0: real >= 0, 1: real < 0, 2: nonreal
  AlgNum ar = a;
  if (is_real(a)) {
    ar = realified(a);
    cls = sign_real(ar) >= 0 ? 0 : 1;
  } else {
    cls = 2;
  }
  Poly q = ar.min_poly().composed_square().canonical();
  std::vector<Poly> factors = factor_distinct(q);
  AlgNum x = ar.refined(make_rat(1, 64));
  return algdetail::select_root(
      factors, [&]() { return algdetail::sqrt_box(x.box(), cls); },
      [&]() { x = x.refined_step(); });
}

// ---- root isolation of a rational polynomial into algebraic numbers ----

inline std::vector<AlgNum> isolate_roots(const Poly& p) {
  if (p.is_zero()) throw DomainError("isolate_roots: zero polynomial");
  std::vector<AlgNum> out;
  for (const auto& f : factor_distinct(p))
    for (const auto& bx : isolate_all_roots(f)) out.push_back(AlgNum::from_parts(f, bx));
  std::sort(out.begin(), out.end(), [](const AlgNum& a, const AlgNum& b) {
    if (a.box().re.lo != b.box().re.lo) return a.box().re.lo < b.box().re.lo;
    return a.box().im.lo < b.box().im.lo;
  });
  return out;
}

// Total order on the complex algebraic numbers: by real part, then imaginary
// part.  Exact; used for canonical sorting, not for geometry.
inline int compare_complex(const AlgNum& a, const AlgNum& b) {
  if (equals(a, b)) return 0;
  AlgNum ra = re_part(a), rb = re_part(b);
  Ordering c = compare_real(ra, rb);
  if (c == Ordering::less) return -1;
  if (c == Ordering::greater) return 1;
  Ordering ci = compare_real(im_part(a), im_part(b));
  return ci == Ordering::less ? -1 : 1;
}

// Display-quality approximation (never used in decisions).
inline std::pair<double, double> approx(const AlgNum& a) {
  AlgNum r = a.refined(pow2(-60));
  return {r.box().re.mid().get_d(), r.box().im.mid().get_d()};
}

}  // namespace kleinian
