#pragma once
// Exact hyperbolic geometry: the SL2 action on the upper half-space and ball
// models through quaternion arithmetic, isometric spheres, trace
// classification, canonical eigenvectors and matrix norms.  Every coordinate
// is an exact algebraic number; k-components of model points are asserted to
// be exactly zero rather than assumed.

#include <array>
#include <optional>
#include <vector>

#include "kleinian/algnum.hpp"

namespace kleinian {

// a + b i + c j + d k with real algebraic components.
struct Quaternion {
  AlgNum a, b, c, d;

  Quaternion() : a(AlgNum::zero()), b(AlgNum::zero()), c(AlgNum::zero()), d(AlgNum::zero()) {}
  Quaternion(AlgNum a_, AlgNum b_, AlgNum c_, AlgNum d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static Quaternion from_complex(const AlgNum& z) {
    return Quaternion(re_part(z), im_part(z), AlgNum::zero(), AlgNum::zero());
  }

  static Quaternion j_unit() {
    return Quaternion(AlgNum::zero(), AlgNum::zero(), AlgNum::one(), AlgNum::zero());
  }
};

inline Quaternion operator+(const Quaternion& x, const Quaternion& y) {
  return Quaternion(add(x.a, y.a), add(x.b, y.b), add(x.c, y.c), add(x.d, y.d));
}

inline Quaternion operator-(const Quaternion& x, const Quaternion& y) {
  return Quaternion(sub(x.a, y.a), sub(x.b, y.b), sub(x.c, y.c), sub(x.d, y.d));
}

inline Quaternion operator*(const Quaternion& x, const Quaternion& y) {
  return Quaternion(
      sub(sub(sub(mul(x.a, y.a), mul(x.b, y.b)), mul(x.c, y.c)), mul(x.d, y.d)),
      sub(add(add(mul(x.a, y.b), mul(x.b, y.a)), mul(x.c, y.d)), mul(x.d, y.c)),
      add(sub(add(mul(x.a, y.c), mul(x.c, y.a)), mul(x.b, y.d)), mul(x.d, y.b)),
      add(add(sub(mul(x.a, y.d), mul(x.c, y.b)), mul(x.b, y.c)), mul(x.d, y.a)));
}

inline Quaternion conj(const Quaternion& q) {
  return Quaternion(q.a, neg(q.b), neg(q.c), neg(q.d));
}

inline AlgNum norm_sq(const Quaternion& q) {
  return add(add(mul(q.a, q.a), mul(q.b, q.b)), add(mul(q.c, q.c), mul(q.d, q.d)));
}

inline Quaternion inverse(const Quaternion& q) {
  AlgNum n = norm_sq(q);
  if (n.is_zero()) throw DomainError("inverse of zero quaternion");
  AlgNum r = inv(n);
  return Quaternion(mul(q.a, r), neg(mul(q.b, r)), neg(mul(q.c, r)), neg(mul(q.d, r)));
}

inline bool equals(const Quaternion& x, const Quaternion& y) {
  return equals(x.a, y.a) && equals(x.b, y.b) && equals(x.c, y.c) && equals(x.d, y.d);
}

// ---- the matrix group ----

struct MatrixSL2 {
  AlgNum a, b, c, d;  // [[a, b], [c, d]], det = 1 exactly

  MatrixSL2()
      : a(AlgNum::one()), b(AlgNum::zero()), c(AlgNum::zero()), d(AlgNum::one()) {}
  MatrixSL2(AlgNum a_, AlgNum b_, AlgNum c_, AlgNum d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    AlgNum det = sub(mul(a, d), mul(b, c));
    if (!is_one(det)) throw DomainError("MatrixSL2: determinant is not 1");
  }

  static MatrixSL2 identity() { return MatrixSL2(); }

  static MatrixSL2 from_rationals(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    return MatrixSL2(AlgNum(a), AlgNum(b), AlgNum(c), AlgNum(d));
  }

  MatrixSL2 inverse() const {
    // adjugate: exact for determinant one
    MatrixSL2 r;
    r.a = d;
    r.b = neg(b);
    r.c = neg(c);
    r.d = a;
    return r;
  }

  MatrixSL2 negated() const {
    MatrixSL2 r;
    r.a = neg(a);
    r.b = neg(b);
    r.c = neg(c);
    r.d = neg(d);
    return r;
  }

  AlgNum trace() const { return add(a, d); }
};

inline MatrixSL2 operator*(const MatrixSL2& x, const MatrixSL2& y) {
  MatrixSL2 r;
  r.a = add(mul(x.a, y.a), mul(x.b, y.c));
  r.b = add(mul(x.a, y.b), mul(x.b, y.d));
  r.c = add(mul(x.c, y.a), mul(x.d, y.c));
  r.d = add(mul(x.c, y.b), mul(x.d, y.d));
  return r;
}

inline bool equals(const MatrixSL2& x, const MatrixSL2& y) {
  return equals(x.a, y.a) && equals(x.b, y.b) && equals(x.c, y.c) && equals(x.d, y.d);
}

inline bool is_identity(const MatrixSL2& m) {
  return is_one(m.a) && m.b.is_zero() && m.c.is_zero() && is_one(m.d);
}

inline bool is_minus_identity(const MatrixSL2& m) {
  return m.b.is_zero() && m.c.is_zero() && equals(m.a, AlgNum(Rat(-1))) &&
         equals(m.d, AlgNum(Rat(-1)));
}

inline bool is_plus_minus_identity(const MatrixSL2& m) {
  return is_identity(m) || is_minus_identity(m);
}

// ||A||^2 = sum of |entry|^2; equals 2 cosh d(j, Aj) on the half-space model.
inline AlgNum norm_sq(const MatrixSL2& m) {
  auto abs2 = [](const AlgNum& z) {
    AlgNum re = re_part(z), im = im_part(z);
    return add(mul(re, re), mul(im, im));
  };
  return add(add(abs2(m.a), abs2(m.b)), add(abs2(m.c), abs2(m.d)));
}

// Total order on matrices through the complex order on entries; used for
// canonical, input-order-independent sorting.
inline int compare_matrices(const MatrixSL2& x, const MatrixSL2& y) {
  const AlgNum* xs[4] = {&x.a, &x.b, &x.c, &x.d};
  const AlgNum* ys[4] = {&y.a, &y.b, &y.c, &y.d};
  for (int i = 0; i < 4; ++i) {
    int c = compare_complex(*xs[i], *ys[i]);
    if (c != 0) return c;
  }
  return 0;
}

// ---- isometry classification ----

enum class IsometryClass { identity, minus_identity, elliptic, parabolic, loxodromic };

inline IsometryClass classify(const MatrixSL2& m) {
  if (is_identity(m)) return IsometryClass::identity;
  if (is_minus_identity(m)) return IsometryClass::minus_identity;
  AlgNum t = m.trace();
  if (!is_real(t)) return IsometryClass::loxodromic;
  AlgNum rt = realified(t);
  Ordering lo = compare_real(rt, AlgNum(Rat(-2)));
  Ordering hi = compare_real(rt, AlgNum(Rat(2)));
  if (lo == Ordering::less || hi == Ordering::greater) return IsometryClass::loxodromic;
  if (lo == Ordering::equal || hi == Ordering::equal) return IsometryClass::parabolic;
  return IsometryClass::elliptic;
}

// ---- eigenvectors (canonical representatives) ----

// Eigenvectors are either (1, 0)^T or (x, 1)^T; the case split makes equality
// of eigenvector sets a finite exact comparison.
struct Eigenvector {
  bool is_infinity;  // (1,0)^T
  AlgNum x;          // (x,1)^T otherwise

  static Eigenvector infinity() { return {true, AlgNum::zero()}; }
  static Eigenvector finite(AlgNum v) { return {false, std::move(v)}; }
};

inline bool equals(const Eigenvector& u, const Eigenvector& v) {
  if (u.is_infinity != v.is_infinity) return false;
  return u.is_infinity || equals(u.x, v.x);
}

inline std::vector<Eigenvector> eigenvectors(const MatrixSL2& m) {
  if (is_plus_minus_identity(m)) throw DomainError("eigenvectors of +-identity");
  std::vector<Eigenvector> out;
  AlgNum tr = m.trace();
  AlgNum disc = sub(mul(tr, tr), AlgNum(Rat(4)));
  if (!m.c.is_zero()) {
    if (disc.is_zero()) {
      // single eigenvalue tr/2; eigenvector ((tr/2 - d)/c, 1)
      AlgNum lam = mul_rational(tr, make_rat(1, 2));
      out.push_back(Eigenvector::finite(div(sub(lam, m.d), m.c)));
    } else {
      AlgNum root = sqrt_alg(disc);
      AlgNum lam1 = mul_rational(add(tr, root), make_rat(1, 2));
      AlgNum lam2 = mul_rational(sub(tr, root), make_rat(1, 2));
      out.push_back(Eigenvector::finite(div(sub(lam1, m.d), m.c)));
      out.push_back(Eigenvector::finite(div(sub(lam2, m.d), m.c)));
    }
    return out;
  }
  out.push_back(Eigenvector::infinity());
  AlgNum amd = sub(m.a, m.d);
  if (!amd.is_zero()) out.push_back(Eigenvector::finite(div(m.b, amd)));
  return out;
}

// ---- model points and the actions ----

// Point of the ball model: (x, y, z) real algebraic with x^2+y^2+z^2 < 1.
struct BallPoint {
  AlgNum x, y, z;

  BallPoint() : x(AlgNum::zero()), y(AlgNum::zero()), z(AlgNum::zero()) {}
  BallPoint(AlgNum x_, AlgNum y_, AlgNum z_)
      : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  static BallPoint origin() { return BallPoint(); }

  AlgNum norm_sq() const { return add(add(mul(x, x), mul(y, y)), mul(z, z)); }
};

inline bool equals(const BallPoint& p, const BallPoint& q) {
  return equals(p.x, q.x) && equals(p.y, q.y) && equals(p.z, q.z);
}

inline Quaternion to_quaternion(const BallPoint& p) {
  return Quaternion(p.x, p.y, p.z, AlgNum::zero());
}

namespace geomdetail {

inline BallPoint point_from_quaternion(const Quaternion& q) {
  if (!q.d.is_zero()) throw DomainError("model point has nonzero k-component");
  return BallPoint(realified(q.a), realified(q.b), realified(q.c));
}

}  // namespace geomdetail

// A acts on the upper half-space as q -> (a q + b)(c q + d)^{-1}; the
// k-component of the image is checked to vanish exactly.
inline Quaternion act_half_space(const MatrixSL2& m, const Quaternion& q) {
  if (!q.d.is_zero()) throw DomainError("act_half_space: point has k-component");
  if (sign_real(q.c) <= 0) throw DomainError("act_half_space: point not in upper half-space");
  Quaternion num = Quaternion::from_complex(m.a) * q + Quaternion::from_complex(m.b);
  Quaternion den = Quaternion::from_complex(m.c) * q + Quaternion::from_complex(m.d);
  if (norm_sq(den).is_zero()) throw DomainError("act_half_space: singular denominator");
  Quaternion r = num * inverse(den);
  if (!r.d.is_zero()) throw DomainError("act_half_space: image left the model");
  return r;
}

// f : H^3 -> B^3, f(w) = (w - j)(w + j)^{-1} j; mutually inverse with
// ball_to_half below, exactly.
inline BallPoint half_to_ball(const Quaternion& w) {
  if (!w.d.is_zero()) throw DomainError("half_to_ball: point has k-component");
  if (sign_real(w.c) <= 0) throw DomainError("half_to_ball: point not in upper half-space");
  Quaternion j = Quaternion::j_unit();
  Quaternion r = (w - j) * inverse(w + j) * j;
  BallPoint p = geomdetail::point_from_quaternion(r);
  if (compare_real(p.norm_sq(), AlgNum::one()) != Ordering::less)
    throw DomainError("half_to_ball: image not interior to the ball");
  return p;
}

inline Quaternion ball_to_half(const BallPoint& p) {
  if (compare_real(p.norm_sq(), AlgNum::one()) != Ordering::less)
    throw DomainError("ball_to_half: point not interior to the ball");
  // w = (1 + z j)^{-1} (1 - z j) j for z the point as a quaternion
  Quaternion z = to_quaternion(p);
  Quaternion j = Quaternion::j_unit();
  Quaternion one(AlgNum::one(), AlgNum::zero(), AlgNum::zero(), AlgNum::zero());
  Quaternion zj = z * j;
  Quaternion w = inverse(one + zj) * (one - zj) * j;
  if (!w.d.is_zero()) throw DomainError("ball_to_half: image left the model");
  return w;
}

inline BallPoint act_ball(const MatrixSL2& m, const BallPoint& p) {
  return half_to_ball(act_half_space(m, ball_to_half(p)));
}

// ---- isometric spheres ----

struct IsometricSphere {
  AlgNum cx, cy, cz;  // Euclidean center
  AlgNum radius;      // positive real
};

inline bool equals(const IsometricSphere& s, const IsometricSphere& t) {
  return equals(s.cx, t.cx) && equals(s.cy, t.cy) && equals(s.cz, t.cz) &&
         equals(s.radius, t.radius);
}

inline AlgNum center_norm_sq(const IsometricSphere& s) {
  return add(add(mul(s.cx, s.cx), mul(s.cy, s.cy)), mul(s.cz, s.cz));
}

// center = phi^{-1}(0)/|phi^{-1}(0)|^2, radius = (1/|phi^{-1}(0)|^2 - 1)^{1/2}
// for phi the ball-model action of A.  Requires A neither elliptic nor +-I.
inline IsometricSphere isometric_sphere(const MatrixSL2& m) {
  IsometryClass cls = classify(m);
  if (cls == IsometryClass::identity || cls == IsometryClass::minus_identity ||
      cls == IsometryClass::elliptic)
    throw DomainError("isometric_sphere: transformation is elliptic or +-identity");
  BallPoint pre = act_ball(m.inverse(), BallPoint::origin());
  AlgNum n = pre.norm_sq();
  if (n.is_zero()) throw DomainError("isometric_sphere: preimage of origin is origin");
  AlgNum inv_n = inv(n);
  IsometricSphere s;
  s.cx = mul(pre.x, inv_n);
  s.cy = mul(pre.y, inv_n);
  s.cz = mul(pre.z, inv_n);
  s.radius = sqrt_alg(realified(sub(inv_n, AlgNum::one())));
  return s;
}

enum class SpherePosition { inside, on, outside };

inline SpherePosition point_vs_sphere(const BallPoint& p, const IsometricSphere& s) {
  AlgNum dx = sub(p.x, s.cx), dy = sub(p.y, s.cy), dz = sub(p.z, s.cz);
  AlgNum dist_sq = add(add(mul(dx, dx), mul(dy, dy)), mul(dz, dz));
  AlgNum r_sq = mul(s.radius, s.radius);
  switch (compare_real(dist_sq, r_sq)) {
    case Ordering::less:
      return SpherePosition::inside;
    case Ordering::equal:
      return SpherePosition::on;
    default:
      return SpherePosition::outside;
  }
}

}  // namespace kleinian
