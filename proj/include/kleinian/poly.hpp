#pragma once
// Dense univariate polynomials over Q: arithmetic, a canonical primitive
// integer form, gcd / squarefree part via primitive pseudo-remainder
// sequences, resultants, Sturm chains and the argument transforms used to
// compose defining polynomials of algebraic numbers.

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "kleinian/interval.hpp"
#include "kleinian/rational.hpp"

namespace kleinian {

class Poly {
 public:
  Poly() = default;  // zero polynomial: distinguished value, carries no degree
  explicit Poly(const Rat& c) {
    if (c != 0) c_.push_back(c);
  }

  static Poly from_coeffs(std::vector<Rat> coeffs) {
    Poly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
  }

  // Convenience for literals: low-order first.
  static Poly of(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return from_coeffs(std::move(c));
  }

  static Poly x() { return of({0, 1}); }

  static Poly monomial(const Rat& c, std::size_t k) {
    if (c == 0) return Poly();
    std::vector<Rat> v(k + 1, Rat(0));
    v[k] = c;
    return from_coeffs(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }

  int degree() const {
    if (is_zero()) throw DomainError("degree of zero polynomial");
    return (int)c_.size() - 1;
  }

  std::size_t size() const { return c_.size(); }

  const Rat& operator[](std::size_t i) const {
    static const Rat zero(0);
    return i < c_.size() ? c_[i] : zero;
  }

  const Rat& lc() const {
    if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
  }

  const std::vector<Rat>& coeffs() const { return c_; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator-() const {
    Poly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return from_coeffs(std::move(c));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return from_coeffs(std::move(c));
  }

  friend Poly operator*(const Rat& s, const Poly& a) {
    if (s == 0) return Poly();
    Poly r(a);
    for (auto& v : r.c_) v *= s;
    return r;
  }

  // Exact division with remainder over Q.
  static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.is_zero() || a.c_.size() < b.c_.size()) return {Poly(), a};
    std::vector<Rat> rem = a.c_;
    std::vector<Rat> quot(a.c_.size() - b.c_.size() + 1, Rat(0));
    const Rat& blc = b.lc();
    for (std::size_t k = a.c_.size(); k-- >= b.c_.size();) {
      if (rem[k] == 0) {
        if (k == 0) break;
        continue;
      }
      Rat q = rem[k] / blc;
      quot[k - (b.c_.size() - 1)] = q;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        rem[k - (b.c_.size() - 1) + j] -= q * b.c_[j];
      if (k == 0) break;
    }
    return {from_coeffs(std::move(quot)), from_coeffs(std::move(rem))};
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rat((long)i) * c_[i];
    return from_coeffs(std::move(c));
  }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * x + c_[i];
      if (i == 0) break;
    }
    return acc;
  }

  // Horner at a Gaussian rational x + iy.
  std::pair<Rat, Rat> eval_gauss(const Rat& x, const Rat& y) const {
    Rat re(0), im(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
      Rat nre = re * x - im * y + c_[i];
      Rat nim = re * y + im * x;
      re = std::move(nre);
      im = std::move(nim);
      if (i == 0) break;
    }
    return {re, im};
  }

  // Interval Horner over a complex rectangle; exact rational endpoints.
  Box eval_box(const Box& z) const {
    Box acc = Box::point(Rat(0), Rat(0));
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * z + Box::point(c_[i], Rat(0));
      if (i == 0) break;
    }
    return acc;
  }

  // As above with outward dyadic rounding per step: endpoint bit lengths stay
  // near prec instead of compounding with the degree.
  Box eval_box(const Box& z, unsigned prec) const {
    Box zz = dyadic_outward(z, prec);
    Box acc = Box::point(Rat(0), Rat(0));
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = dyadic_outward(acc * zz + Box::point(c_[i], Rat(0)), prec);
      if (i == 0) break;
    }
    return acc;
  }

  // Rounded enclosure of the value at an exact point x + iy.
  Box eval_gauss_box(const Rat& x, const Rat& y, unsigned prec) const {
    return eval_box(Box::point(x, y), prec);
  }

  // ---- canonical primitive integer form ----

  // Primitive integer coefficients with positive leading coefficient.  This is
  // the one canonicalization minimal polynomials carry everywhere.
  Poly canonical() const {
    if (is_zero()) return Poly();
    Int den_lcm(1);
    for (const auto& v : c_) {
      Int d = v.get_den();
      Int g;
      mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
      den_lcm = den_lcm / g * d;
    }
    std::vector<Int> ic(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      Rat scaled = c_[i] * Rat(den_lcm);
      assert(scaled.get_den() == 1);
      ic[i] = scaled.get_num();
    }
    Int content(0);
    for (const auto& v : ic) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    if (sign(ic.back()) < 0) content = -content;
    std::vector<Rat> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = rat_of(ic[i], content);
    return from_coeffs(std::move(out));
  }

  bool is_integer() const {
    for (const auto& v : c_)
      if (v.get_den() != 1) return false;
    return true;
  }

  std::vector<Int> integer_coeffs() const {
    Poly p = canonical();
    std::vector<Int> out(p.c_.size());
    for (std::size_t i = 0; i < p.c_.size(); ++i) out[i] = p.c_[i].get_num();
    return out;
  }

  static Poly from_integer_coeffs(const std::vector<Int>& c) {
    std::vector<Rat> v(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) v[i] = Rat(c[i]);
    return from_coeffs(std::move(v));
  }

  // ---- gcd / squarefree ----

  // Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
  static Poly prem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("prem by zero");
    if (a.is_zero() || a.c_.size() < b.c_.size()) return a;
    long k = (long)a.c_.size() - (long)b.c_.size() + 1;
    Poly scaled = pow_rat(b.lc(), k) * a;
    return divrem(scaled, b).second;
  }

  static Poly gcd(const Poly& a, const Poly& b);

  Poly squarefree_part() const;

  // ---- resultant over Q ----

  static Rat resultant(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Rat(0);
    Poly f = a, g = b;
    Rat res(1);
    bool swapped = false;
    if (f.degree() < g.degree()) {
      std::swap(f, g);
      swapped = (f.degree() % 2 == 1) && (g.degree() % 2 == 1);
    }
    if (swapped) res = -res;
    while (true) {
      if (g.degree() == 0) {
        res *= pow_rat(g.lc(), f.degree());
        return res;
      }
      Poly r = divrem(f, g).second;
      if (r.is_zero()) return Rat(0);
      long m = f.degree(), n = g.degree(), d = r.degree();
      if ((m % 2 == 1) && (n % 2 == 1)) res = -res;
      res *= pow_rat(g.lc(), m - d);
      f = std::move(g);
      g = std::move(r);
    }
  }

  // ---- argument transforms (each maps roots as named) ----

  // Roots negated: p(-x).
  Poly reflected() const {
    Poly r(*this);
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
  }

  // Roots inverted: x^n p(1/x).  Requires p(0) != 0.
  Poly reciprocal_roots() const {
    if (is_zero() || c_.front() == 0) throw DomainError("reciprocal_roots: root at 0");
    Poly r(*this);
    std::reverse(r.c_.begin(), r.c_.end());
    return r;
  }

  // Roots scaled by s: p(x/s).
  Poly scaled_roots(const Rat& s) const {
    if (s == 0) throw DomainError("scaled_roots by 0");
    Poly r(*this);
    Rat f(1);
    for (std::size_t i = 1; i < r.c_.size(); ++i) {
      f /= s;
      r.c_[i] *= f;
    }
    return r.trimmed();
  }

  // Roots shifted by t: p(x - t).
  Poly shifted_roots(const Rat& t) const {
    if (is_zero()) return Poly();
    // Horner-style synthetic shift.
    std::vector<Rat> c = c_;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
      for (std::size_t j = c.size() - 1; j >= i + 1; --j) c[j - 1] += -t * c[j];
    return from_coeffs(std::move(c));
  }

  // Squares become the argument: q(x) = p(x^2); roots of q are the square
  // roots of roots of p.
  Poly composed_square() const {
    if (is_zero()) return Poly();
    std::vector<Rat> c(2 * c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[2 * i] = c_[i];
    return from_coeffs(std::move(c));
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const Rat& v = c_[i];
      if (v == 0) {
        if (i == 0) break;
        continue;
      }
      if (!out.empty()) out += sign(v) > 0 ? " + " : " - ";
      else if (sign(v) < 0) out += "-";
      Rat a = abs(v);
      bool coeff_one = (a == 1);
      if (i == 0 || !coeff_one) out += a.get_str();
      if (i > 0) {
        if (!coeff_one) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
      if (i == 0) break;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  Poly trimmed() const {
    Poly r(*this);
    r.trim();
    return r;
  }

  std::vector<Rat> c_;  // c_[i] is the coefficient of x^i; back() != 0
};

// Cauchy root bound: every complex root has |z| < bound.
inline Rat cauchy_root_bound(const Poly& p) {
  if (p.is_zero()) throw DomainError("root bound of zero polynomial");
  Rat m(0);
  Rat alc = abs(p.lc());
  for (int i = 0; i < p.degree(); ++i) m = rat_max(m, abs(p[i]) / alc);
  return m + 2;  // strict: all roots satisfy |z| <= 1 + m < m + 2
}

// ---- primitive integer polynomial kernel ----
//
// The pseudo-remainder sequences behind gcds and Sturm chains run over
// integer coefficient vectors with one content extraction per step; this
// avoids per-operation rational normalization entirely.
namespace intpoly {

using IVec = std::vector<Int>;  // dense, low order first, trimmed

inline void trim(IVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Scale to integers and strip positive content (sign preserved).
inline IVec from_poly(const Poly& p) {
  IVec out;
  if (p.is_zero()) return out;
  Int den_lcm(1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    Int d = p[i].get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / g * d;
  }
  out.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rat scaled = p[i] * Rat(den_lcm);
    out[i] = scaled.get_num();
  }
  Int content(0);
  for (const auto& v : out) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  if (content > 1)
    for (auto& v : out) v /= content;
  return out;
}

inline Poly to_poly(const IVec& a) {
  std::vector<Rat> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = Rat(a[i]);
  return Poly::from_coeffs(std::move(c));
}

inline void make_primitive(IVec& a) {
  Int content(0);
  for (const auto& v : a) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  if (content > 1)
    for (auto& v : a) v /= content;
}

inline IVec derivative(const IVec& a) {
  if (a.size() <= 1) return {};
  IVec d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = Int((unsigned long)i) * a[i];
  return d;
}

// Pseudo-remainder of a by b; sets mult_sign to the sign of the implied
// multiplier lc(b)^(deg a - deg b + 1).  With exact_scale false the result is
// only a positive multiple of the remainder (enough for gcds) and the unused
// powers of lc(b) are not applied.
inline IVec prem(IVec r, const IVec& b, int& mult_sign, bool exact_scale = true) {
  long e = (long)r.size() - (long)b.size() + 1;
  mult_sign = (sign(b.back()) < 0 && e % 2 == 1) ? -1 : 1;
  const Int& d = b.back();
  long steps = 0;
  while (r.size() >= b.size()) {
    Int top = r.back();
    std::size_t off = r.size() - b.size();
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
      r[i] *= d;
      if (i >= off) r[i] -= top * b[i - off];
    }
    r.pop_back();
    trim(r);
    ++steps;
    if (r.empty()) break;
  }
  if (exact_scale) {
    for (; steps < e; ++steps)
      for (auto& v : r) v *= d;
  } else if (sign(d) < 0 && (e - steps) % 2 == 1) {
    // keep the overall sign consistent with mult_sign
    for (auto& v : r) v = -v;
  }
  return r;
}

inline IVec gcd(IVec g, IVec h) {
  make_primitive(g);
  make_primitive(h);
  if (g.empty()) return h;
  if (h.empty()) return g;
  if (g.size() < h.size()) std::swap(g, h);
  int ms;
  while (!h.empty()) {
    IVec r = prem(g, h, ms, false);
    make_primitive(r);
    g = std::move(h);
    h = std::move(r);
  }
  if (!g.empty() && sign(g.back()) < 0)
    for (auto& v : g) v = -v;
  return g;
}

// Does g divide f exactly over Z?  Synthetic division with early abort on the
// first non-divisible coefficient; wrong candidates fail within a step or two.
inline bool divides(const IVec& g, IVec f) {
  if (g.empty()) return false;
  if (f.empty()) return true;
  if (f.size() < g.size()) return false;
  const Int& lc = g.back();
  while (f.size() >= g.size()) {
    Int q;
    Int r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), f.back().get_mpz_t(), lc.get_mpz_t());
    if (r != 0) return false;
    std::size_t off = f.size() - g.size();
    if (q != 0)
      for (std::size_t i = 0; i < g.size(); ++i) f[off + i] -= q * g[i];
    if (f.back() != 0) return false;
    f.pop_back();
    trim(f);
    if (f.empty()) return true;
  }
  return f.empty();
}

// Sound one-sided coprimality test: if gcd(a mod p, b mod p) is constant for
// some prime p not dividing either leading coefficient, then gcd(a, b) is
// constant over Q.  Returns false when no tried prime certifies it.
inline bool gcd_known_coprime(const IVec& a, const IVec& b) {
  if (a.empty() || b.empty()) return false;
  static const unsigned long primes[4] = {1000003UL, 1000033UL, 1000037UL, 1000039UL};
  for (unsigned long p : primes) {
    auto reduce = [&](const IVec& v) {
      std::vector<unsigned long> r(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        Int m;
        mpz_mod_ui(m.get_mpz_t(), v[i].get_mpz_t(), p);
        r[i] = mpz_get_ui(m.get_mpz_t());
      }
      while (!r.empty() && r.back() == 0) r.pop_back();
      return r;
    };
    std::vector<unsigned long> am = reduce(a), bm = reduce(b);
    if (am.size() != a.size() || bm.size() != b.size()) continue;  // degree dropped
    auto mulmod = [&](unsigned long x, unsigned long y) {
      return (unsigned long)((unsigned __int128)x * y % p);
    };
    auto invmod = [&](unsigned long x) {
      unsigned long r = 1, base = x % p, e = p - 2;
      while (e) {
        if (e & 1) r = mulmod(r, base);
        base = mulmod(base, base);
        e >>= 1;
      }
      return r;
    };
    while (!bm.empty()) {
      // am mod bm
      unsigned long binv = invmod(bm.back());
      while (am.size() >= bm.size()) {
        unsigned long q = mulmod(am.back(), binv);
        std::size_t off = am.size() - bm.size();
        if (q)
          for (std::size_t i = 0; i < bm.size(); ++i) {
            unsigned long t = mulmod(q, bm[i]);
            am[off + i] = am[off + i] >= t ? am[off + i] - t : am[off + i] + p - t;
          }
        am.pop_back();
        while (!am.empty() && am.back() == 0) am.pop_back();
        if (am.empty()) break;
      }
      std::swap(am, bm);
    }
    if (am.size() == 1) return true;  // modular gcd is a nonzero constant
  }
  return false;
}

// Sign of a at num/den with den > 0, via homogeneous integer evaluation.
inline int sign_at(const IVec& a, const Int& num, const Int& den) {
  if (a.empty()) return 0;
  Int v = a.back();
  Int qq(1);
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    qq *= den;
    v = v * num + a[i] * qq;
    if (i == 0) break;
  }
  return sign(v);
}

}  // namespace intpoly

inline Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.canonical();
  if (b.is_zero()) return a.canonical();
  intpoly::IVec ai = intpoly::from_poly(a), bi = intpoly::from_poly(b);
  if (intpoly::gcd_known_coprime(ai, bi)) return Poly(Rat(1));
  return intpoly::to_poly(intpoly::gcd(std::move(ai), std::move(bi)));
}

inline Poly Poly::squarefree_part() const {
  if (is_zero()) throw DomainError("squarefree part of zero polynomial");
  if (c_.size() <= 2) return canonical();
  intpoly::IVec f = intpoly::from_poly(*this);
  intpoly::IVec fd = intpoly::derivative(f);
  if (intpoly::gcd_known_coprime(f, fd)) return canonical();
  Poly g = intpoly::to_poly(intpoly::gcd(f, fd));
  if (g.size() == 1) return canonical();
  return divrem(*this, g).first.canonical();
}

}  // namespace kleinian
