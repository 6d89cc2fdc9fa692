#pragma once
// Exact factorization of univariate integer polynomials: squarefree reduction,
// Cantor-Zassenhaus mod a word-sized prime, quadratic Hensel lifting to a
// power of p past the Landau-Mignotte bound, then subset recombination with a
// trailing-coefficient filter.  Everything is deterministic (fixed seeds).

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "kleinian/poly.hpp"
#include "kleinian/rational.hpp"

namespace kleinian {
namespace detail {

// ---- arithmetic in F_p[x], p an odd word prime ----

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct ModCtx {
  u64 p;
  u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return (u64)((u128)a * b % p); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a % p, p - 2); }
};

using MPoly = std::vector<u64>;  // dense mod-p coefficients, trimmed

inline void mp_trim(MPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int mp_deg(const MPoly& a) { return (int)a.size() - 1; }

inline MPoly mp_mul(const ModCtx& m, const MPoly& a, const MPoly& b) {
  if (a.empty() || b.empty()) return {};
  MPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = m.add(c[i + j], m.mul(a[i], b[j]));
  }
  mp_trim(c);
  return c;
}

inline MPoly mp_sub(const ModCtx& m, const MPoly& a, const MPoly& b) {
  MPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = m.sub(c[i], b[i]);
  mp_trim(c);
  return c;
}

inline MPoly mp_rem(const ModCtx& m, MPoly a, const MPoly& b) {
  u64 binv = m.inv(b.back());
  while (a.size() >= b.size()) {
    u64 q = m.mul(a.back(), binv);
    std::size_t off = a.size() - b.size();
    if (q)
      for (std::size_t j = 0; j < b.size(); ++j) a[off + j] = m.sub(a[off + j], m.mul(q, b[j]));
    a.pop_back();
    mp_trim(a);
    if (a.empty()) break;
  }
  return a;
}

inline MPoly mp_divexact(const ModCtx& m, MPoly a, const MPoly& b) {
  MPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  u64 binv = m.inv(b.back());
  while (a.size() >= b.size()) {
    u64 qc = m.mul(a.back(), binv);
    std::size_t off = a.size() - b.size();
    q[off] = qc;
    if (qc)
      for (std::size_t j = 0; j < b.size(); ++j) a[off + j] = m.sub(a[off + j], m.mul(qc, b[j]));
    a.pop_back();
    mp_trim(a);
    if (a.empty()) break;
  }
  mp_trim(q);
  return q;
}

// Resultant over F_p by the Euclidean PRS with the standard degree bookkeeping.
inline u64 mp_resultant(const ModCtx& m, MPoly a, MPoly b) {
  if (a.empty() || b.empty()) return 0;
  u64 res = 1;
  bool neg = false;
  if (mp_deg(a) < mp_deg(b)) {
    if ((mp_deg(a) % 2 == 1) && (mp_deg(b) % 2 == 1)) neg = !neg;
    std::swap(a, b);
  }
  while (true) {
    if (mp_deg(b) == 0) {
      res = m.mul(res, m.pow(b[0], (u64)mp_deg(a)));
      break;
    }
    MPoly r = mp_rem(m, a, b);
    if (r.empty()) return 0;
    int da = mp_deg(a), db = mp_deg(b), dr = mp_deg(r);
    if ((da % 2 == 1) && (db % 2 == 1)) neg = !neg;
    res = m.mul(res, m.pow(b.back(), (u64)(da - dr)));
    a = std::move(b);
    b = std::move(r);
  }
  return neg ? m.sub(0, res) : res;
}

inline MPoly mp_gcd(const ModCtx& m, MPoly a, MPoly b) {
  while (!b.empty()) {
    MPoly r = mp_rem(m, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    u64 inv = m.inv(a.back());
    for (auto& c : a) c = m.mul(c, inv);
  }
  return a;
}

inline MPoly mp_powmod(const ModCtx& m, MPoly base, const Int& e, const MPoly& mod) {
  MPoly r = {1};
  base = mp_rem(m, std::move(base), mod);
  for (std::size_t bit = mpz_sizeinbase(e.get_mpz_t(), 2); bit-- > 0;) {
    r = mp_rem(m, mp_mul(m, r, r), mod);
    if (mpz_tstbit(e.get_mpz_t(), bit)) r = mp_rem(m, mp_mul(m, r, base), mod);
    if (bit == 0) break;
  }
  return r;
}

inline MPoly mp_deriv(const ModCtx& m, const MPoly& a) {
  if (a.size() <= 1) return {};
  MPoly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = m.mul(a[i], i % m.p);
  mp_trim(d);
  return d;
}

// Extended euclid in F_p[x]: s*a + t*b = gcd (gcd normalized monic).
inline void mp_ext_gcd(const ModCtx& m, MPoly a, MPoly b, MPoly& s, MPoly& t) {
  MPoly s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!b.empty()) {
    MPoly q = mp_divexact(m, a, b);
    MPoly r = mp_sub(m, a, mp_mul(m, q, b));
    a = std::move(b);
    b = std::move(r);
    MPoly s2 = mp_sub(m, s0, mp_mul(m, q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    MPoly t2 = mp_sub(m, t0, mp_mul(m, q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  u64 inv = m.inv(a.back());
  for (auto& c : s0) c = m.mul(c, inv);
  for (auto& c : t0) c = m.mul(c, inv);
  s = std::move(s0);
  t = std::move(t0);
}

// Deterministic pseudo-random stream for equal-degree splitting.
struct SplitRng {
  u64 state;
  explicit SplitRng(u64 seed) : state(seed * 6364136223846793005ULL + 1442695040888963407ULL) {}
  u64 next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 11;
  }
};

inline void mp_edf(const ModCtx& m, const MPoly& g, int d, SplitRng& rng,
                   std::vector<MPoly>& out) {
  if (mp_deg(g) == d) {
    out.push_back(g);
    return;
  }
  Int exp = (pow_int(Int((unsigned long)m.p), (unsigned long)d) - 1) / 2;
  while (true) {
    MPoly r(mp_deg(g), 0);
    for (auto& c : r) c = rng.next() % m.p;
    mp_trim(r);
    if (r.empty()) continue;
    MPoly t = mp_powmod(m, r, exp, g);
    if (t.empty()) continue;
    t[0] = m.sub(t[0], 1);
    mp_trim(t);
    if (t.empty()) continue;
    MPoly s = mp_gcd(m, t, g);
    if (!s.empty() && mp_deg(s) > 0 && mp_deg(s) < mp_deg(g)) {
      mp_edf(m, s, d, rng, out);
      mp_edf(m, mp_divexact(m, g, s), d, rng, out);
      return;
    }
  }
}

// Distinct-degree decomposition of a squarefree monic polynomial mod p:
// pairs (product of all irreducible factors of degree d, d).
inline std::vector<std::pair<MPoly, int>> mp_ddf(const ModCtx& m, const MPoly& f) {
  std::vector<std::pair<MPoly, int>> out;
  MPoly h = {0, 1};  // x
  MPoly rem = f;
  int d = 0;
  while (mp_deg(rem) >= 2 * (d + 1)) {
    ++d;
    h = mp_powmod(m, h, Int((unsigned long)m.p), rem);
    MPoly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = m.sub(hx[1], 1);
    mp_trim(hx);
    MPoly g = hx.empty() ? rem : mp_gcd(m, hx, rem);
    if (!g.empty() && mp_deg(g) > 0) {
      out.push_back({g, d});
      rem = mp_divexact(m, rem, g);
      h = mp_rem(m, std::move(h), rem);
    }
  }
  if (mp_deg(rem) > 0) out.push_back({rem, mp_deg(rem)});
  return out;
}

inline int mp_factor_count(const std::vector<std::pair<MPoly, int>>& ddf) {
  int count = 0;
  for (const auto& [g, d] : ddf) count += mp_deg(g) / d;
  return count;
}

// Full factorization from a distinct-degree decomposition.
inline std::vector<MPoly> mp_factor_from_ddf(const ModCtx& m,
                                             const std::vector<std::pair<MPoly, int>>& ddf) {
  std::vector<MPoly> out;
  SplitRng rng(0x9e3779b97f4a7c15ULL ^ m.p);
  for (const auto& [g, d] : ddf) mp_edf(m, g, d, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---- lifted arithmetic: Z/m[x] with m = p^k, mpz coefficients ----

using ZPoly = std::vector<Int>;

inline void zp_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Int zmod(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Symmetric representative in (-m/2, m/2].
inline Int zmods(const Int& a, const Int& m) {
  Int r = zmod(a, m);
  if (2 * r > m) r -= m;
  return r;
}

inline ZPoly zp_reduce(const ZPoly& a, const Int& m) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = zmod(a[i], m);
  zp_trim(r);
  return r;
}

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return zp_reduce(c, m);
}

inline ZPoly zp_add(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly c(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return zp_reduce(c, m);
}

inline ZPoly zp_sub(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly c(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return zp_reduce(c, m);
}

// Division by a monic divisor.
inline void zp_divrem_monic(const ZPoly& a, const ZPoly& b, const Int& m, ZPoly& q, ZPoly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
  while (r.size() >= b.size()) {
    Int qc = r.back();
    std::size_t off = r.size() - b.size();
    q[off] = qc;
    if (qc != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[off + j] = zmod(r[off + j] - qc * b[j], m);
    r.pop_back();
    zp_trim(r);
    if (r.empty()) break;
  }
  zp_trim(q);
}

// One quadratic Hensel step: modulus m -> m^2.
struct HenselPair {
  ZPoly g, h, s, t;
};

inline HenselPair hensel_step(const ZPoly& f, const HenselPair& in, const Int& m) {
  Int m2 = m * m;
  HenselPair out;
  ZPoly e = zp_sub(zp_reduce(f, m2), zp_mul(in.g, in.h, m2), m2);
  ZPoly q, r;
  zp_divrem_monic(zp_mul(in.s, e, m2), in.h, m2, q, r);
  out.g = zp_add(in.g, zp_add(zp_mul(in.t, e, m2), zp_mul(q, in.g, m2), m2), m2);
  out.h = zp_add(in.h, r, m2);
  ZPoly b = zp_sub(zp_add(zp_mul(in.s, out.g, m2), zp_mul(in.t, out.h, m2), m2), ZPoly{Int(1)}, m2);
  ZPoly c, d;
  zp_divrem_monic(zp_mul(in.s, b, m2), out.h, m2, c, d);
  out.s = zp_sub(in.s, d, m2);
  out.t = zp_sub(in.t, zp_add(zp_mul(in.t, b, m2), zp_mul(c, out.g, m2), m2), m2);
  return out;
}

inline ZPoly zp_from_mod(const MPoly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Int((unsigned long)a[i]);
  return r;
}

// Lift f = lc(f) * prod(facs) from mod p to mod p^(2^levels) >= target via a
// factor tree.  Returns the lifted factors, monicized mod the final modulus.
inline void hensel_tree(const ZPoly& f, const std::vector<MPoly>& facs, std::size_t lo,
                        std::size_t hi, const ModCtx& mp, const Int& p, const Int& target,
                        std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(f);
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  MPoly left = {1}, right = {1};
  for (std::size_t i = lo; i < mid; ++i) left = mp_mul(mp, left, facs[i]);
  for (std::size_t i = mid; i < hi; ++i) right = mp_mul(mp, right, facs[i]);
  // left absorbs the leading coefficient
  u64 lmod = 0;
  {
    Int lcf = zmod(f.back(), p);
    lmod = mpz_get_ui(lcf.get_mpz_t());
  }
  for (auto& c : left) c = mp.mul(c, lmod);
  MPoly s, t;
  mp_ext_gcd(mp, left, right, s, t);
  HenselPair hp{zp_from_mod(left), zp_from_mod(right), zp_from_mod(s), zp_from_mod(t)};
  Int m = p;
  while (m < target) {
    hp = hensel_step(f, hp, m);
    m = m * m;
  }
  hensel_tree(hp.g, facs, lo, mid, mp, p, target, out);
  hensel_tree(hp.h, facs, mid, hi, mp, p, target, out);
}

inline Int zp_inv_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw DomainError("zp_inv_mod: not invertible");
  return r;
}

// ---- the driver ----

inline std::vector<std::vector<Int>> zassenhaus(const std::vector<Int>& f_in) {
  std::vector<Int> f = f_in;  // primitive, squarefree, positive lc, f(0) != 0
  int n = (int)f.size() - 1;
  if (n <= 1) return {f};

  // Prime selection: p must not divide lc and f must stay squarefree mod p.
  // Among the first few admissible primes keep the one with fewest modular
  // factors, and intersect the achievable factor-degree sets: a subset of
  // modular factors can only assemble into a true factor if its degree sum is
  // achievable modulo every admissible prime.
  ModCtx best_ctx{0};
  std::vector<std::pair<MPoly, int>> best_ddf;
  int best_count = 0;
  std::vector<bool> degree_ok((std::size_t)n + 1, true);
  Int prime(1000003 - 1);
  int tried = 0;
  while (tried < 8 && (best_count == 0 || best_count > 6 || tried < 3)) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    ModCtx m{mpz_get_ui(prime.get_mpz_t())};
    if (zmod(f.back(), prime) == 0) continue;
    MPoly fp(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) fp[i] = mpz_get_ui(zmod(f[i], prime).get_mpz_t());
    mp_trim(fp);
    MPoly d = mp_deriv(m, fp);
    if (d.empty()) continue;
    MPoly g = mp_gcd(m, fp, d);
    if (mp_deg(g) != 0) continue;
    // monicize
    u64 inv = m.inv(fp.back());
    MPoly fpm = fp;
    for (auto& c : fpm) c = m.mul(c, inv);
    auto ddf = mp_ddf(m, fpm);
    int count = mp_factor_count(ddf);
    ++tried;
    // subset-sum bitset of modular factor degrees (each degree-d group of
    // total degree D contributes D/d factors of degree d)
    std::vector<bool> reach((std::size_t)n + 1, false);
    reach[0] = true;
    for (const auto& [grp, dd] : ddf) {
      int copies = mp_deg(grp) / dd;
      for (int c = 0; c < copies; ++c)
        for (int s = n; s >= dd; --s)
          if (reach[(std::size_t)(s - dd)]) reach[(std::size_t)s] = true;
    }
    for (int s = 0; s <= n; ++s)
      if (!reach[(std::size_t)s]) degree_ok[(std::size_t)s] = false;
    if (best_count == 0 || count < best_count) {
      best_ctx = m;
      best_ddf = std::move(ddf);
      best_count = count;
    }
    if (best_count == 1) break;
  }
  if (best_count == 1) return {f};  // irreducible mod p => irreducible
  {
    bool proper_degree = false;
    for (int s = 1; s < n; ++s)
      if (degree_ok[(std::size_t)s]) proper_degree = true;
    if (!proper_degree) return {f};  // no admissible proper factor degree
  }
  std::vector<MPoly> best_facs = mp_factor_from_ddf(best_ctx, best_ddf);

  // Landau-Mignotte style bound: a factor of degree d (times lc) has
  // coefficients bounded by 2^d * |lc| * ||f||_2.  Recombination only ever
  // multiplies out subsets of degree <= ceil(n/2) (larger subsets are tested
  // through their complements), so d = ceil(n/2) suffices and halves the
  // lifting precision.
  Int norm2_sq(0);
  for (const auto& c : f) norm2_sq += c * c;
  Int norm2;
  mpz_sqrt(norm2.get_mpz_t(), norm2_sq.get_mpz_t());
  norm2 += 1;
  Int bound = pow_int(2, (unsigned long)((n + 1) / 2 + 1)) * abs(f.back()) * norm2;
  Int p((unsigned long)best_ctx.p);
  Int target = 2 * bound + 1;
  Int modulus = p;
  while (modulus < target) modulus = modulus * modulus;

  ZPoly fz(f.begin(), f.end());
  std::vector<ZPoly> lifted;
  hensel_tree(zp_reduce(fz, modulus), best_facs, 0, best_facs.size(), best_ctx, p, modulus,
              lifted);
  // Monicize the lifted factors (the leftmost one carries lc).
  for (auto& g : lifted) {
    Int inv = zp_inv_mod(g.back(), modulus);
    for (auto& c : g) c = zmod(c * inv, modulus);
  }

  // Subset recombination.
  std::vector<std::vector<Int>> result;
  std::vector<Int> fcur = f;
  std::vector<std::size_t> active(lifted.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;

  auto poly_of = [](const std::vector<Int>& v) { return Poly::from_integer_coeffs(v); };

  long trials = 0;
  const long trial_budget = 1 << 22;

  std::size_t s = 1;
  while (2 * s <= active.size()) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    bool removed = false;
    while (true) {
      if (++trials > trial_budget)
        throw ResourceError("factorization recombination budget exhausted");
      int degsum = 0;
      for (std::size_t i : idx) degsum += (int)lifted[active[i]].size() - 1;
      int fdeg = (int)fcur.size() - 1;
      bool use_complement = 2 * degsum > fdeg;
      int cand_deg = use_complement ? fdeg - degsum : degsum;
      bool plausible = degsum <= fdeg && degree_ok[(std::size_t)degsum];
      std::vector<std::size_t> cand_set;
      if (plausible) {
        if (use_complement) {
          for (std::size_t i = 0, j = 0; i < active.size(); ++i) {
            if (j < idx.size() && idx[j] == i) {
              ++j;
              continue;
            }
            cand_set.push_back(i);
          }
        } else {
          cand_set = idx;
        }
        (void)cand_deg;
        // trailing-coefficient filter
        Int tc = zmod(fcur.back(), modulus);
        for (std::size_t i : cand_set) tc = zmod(tc * lifted[active[i]][0], modulus);
        tc = zmods(tc, modulus);
        Int l_f0 = fcur.back() * fcur[0];
        plausible = (tc != 0) && mpz_divisible_p(l_f0.get_mpz_t(), tc.get_mpz_t());
      }
      if (plausible) {
        ZPoly cand = {zmod(fcur.back(), modulus)};
        for (std::size_t i : cand_set) cand = zp_mul(cand, lifted[active[i]], modulus);
        std::vector<Int> sym(cand.size());
        for (std::size_t i = 0; i < cand.size(); ++i) sym[i] = zmods(cand[i], modulus);
        std::vector<Int> g_int = intpoly::from_poly(poly_of(sym));
        if (sign(g_int.back()) < 0)
          for (auto& v : g_int) v = -v;
        if (intpoly::divides(g_int, fcur)) {
          Poly g = poly_of(g_int);
          Poly fc = poly_of(fcur);
          auto [q, r] = Poly::divrem(fc, g);
          result.push_back(g.integer_coeffs());
          fcur = q.canonical().integer_coeffs();
          std::vector<std::size_t> na;
          std::vector<char> drop(active.size(), 0);
          for (std::size_t i : cand_set) drop[i] = 1;
          for (std::size_t i = 0; i < active.size(); ++i)
            if (!drop[i]) na.push_back(active[i]);
          active = std::move(na);
          removed = true;
          break;
        }
      }
      // next s-combination
      long pos = (long)s - 1;
      while (pos >= 0 && idx[pos] == active.size() - s + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (std::size_t j = pos + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!removed) ++s;
  }
  if ((int)fcur.size() - 1 >= 1) result.push_back(Poly::from_integer_coeffs(fcur).canonical().integer_coeffs());
  return result;
}

// Shared descending list of word primes near 2^31 for CRT reconstructions.
inline const std::vector<u64>& crt_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> out;
    Int p(2147483648UL);
    for (int i = 0; i < 512; ++i) {
      Int prev = p - 1;
      while (mpz_probab_prime_p(prev.get_mpz_t(), 25) == 0) prev -= 1;
      out.push_back(mpz_get_ui(prev.get_mpz_t()));
      p = prev;
    }
    return out;
  }();
  return primes;
}

// Exact resultant of two integer polynomials by word-prime CRT under the
// Hadamard bound on the Sylvester determinant.
inline Int resultant_int(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.empty() || b.empty()) return Int(0);
  int m = (int)a.size() - 1, n = (int)b.size() - 1;
  if (m == 0 && n == 0) return Int(1);
  if (m == 0) return pow_int(a[0], (unsigned long)n);
  if (n == 0) return pow_int(b[0], (unsigned long)m);
  Int na2(0), nb2(0);
  for (const auto& c : a) na2 += c * c;
  for (const auto& c : b) nb2 += c * c;
  // |res|^2 <= ||a||_2^(2n) * ||b||_2^(2m)
  Int bound2 = pow_int(na2 + 1, (unsigned long)n) * pow_int(nb2 + 1, (unsigned long)m);
  Int bound;
  mpz_sqrt(bound.get_mpz_t(), bound2.get_mpz_t());
  bound += 1;
  Int target = 2 * bound + 1;

  Int modulus(1), residue(0);
  for (u64 pw : crt_primes()) {
    if (modulus >= target) break;
    ModCtx ctx{pw};
    Int p((unsigned long)pw);
    if (zmod(a.back(), p) == 0 || zmod(b.back(), p) == 0) continue;
    MPoly am(a.size()), bm(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) am[i] = mpz_get_ui(zmod(a[i], p).get_mpz_t());
    for (std::size_t i = 0; i < b.size(); ++i) bm[i] = mpz_get_ui(zmod(b[i], p).get_mpz_t());
    u64 r = mp_resultant(ctx, am, bm);
    Int diff = zmod(Int((unsigned long)r) - residue, p);
    Int minv = zp_inv_mod(zmod(modulus, p), p);
    residue += modulus * zmod(diff * minv, p);
    modulus *= p;
  }
  if (modulus < target) throw ResourceError("resultant_int: prime pool exhausted");
  return zmods(residue, modulus);
}

// All values res_y(A(y), B(xs[j] - y)) at integer sample points, by per-prime
// modular Taylor shifts and PRS resultants with one CRT pass per point.
inline std::vector<Int> resultant_sum_samples(const std::vector<Int>& a,
                                              const std::vector<Int>& b,
                                              const std::vector<long>& xs) {
  int m = (int)a.size() - 1, n = (int)b.size() - 1;
  Int na2(0), nb2(0);
  for (const auto& c : a) na2 += c * c;
  for (const auto& c : b) nb2 += c * c;
  // worst-case Hadamard bound over the sample points: ||B(x0-y)||_2 grows by
  // at most (1+|x0|)^n * 2^n
  long xmax = 0;
  for (long x : xs) xmax = std::max(xmax, x < 0 ? -x : x);
  Int shift_factor = pow_int(Int(2 * (xmax + 1)), (unsigned long)(2 * n));
  Int bound2 = pow_int(na2 + 1, (unsigned long)n) *
               pow_int((nb2 + 1) * shift_factor + 1, (unsigned long)m);
  Int bound;
  mpz_sqrt(bound.get_mpz_t(), bound2.get_mpz_t());
  bound += 1;
  Int target = 2 * bound + 1;

  std::vector<Int> residue(xs.size(), Int(0));
  Int modulus(1);
  for (u64 pw : crt_primes()) {
    if (modulus >= target) break;
    ModCtx ctx{pw};
    Int p((unsigned long)pw);
    if (zmod(a.back(), p) == 0 || zmod(b.back(), p) == 0) continue;
    MPoly am(a.size()), bm(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) am[i] = mpz_get_ui(zmod(a[i], p).get_mpz_t());
    for (std::size_t i = 0; i < b.size(); ++i) bm[i] = mpz_get_ui(zmod(b[i], p).get_mpz_t());
    Int minv = zp_inv_mod(zmod(modulus, p), p);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      // B(x0 + y) mod p via synthetic Taylor shift, then y -> -y
      MPoly c = bm;
      u64 x0 = (u64)((xs[j] % (long)pw + (long)pw) % (long)pw);
      for (std::size_t i = 0; i + 1 < c.size(); ++i)
        for (std::size_t k = c.size() - 1; k >= i + 1; --k)
          c[k - 1] = ctx.add(c[k - 1], ctx.mul(x0, c[k]));
      for (std::size_t i = 1; i < c.size(); i += 2) c[i] = ctx.sub(0, c[i]);
      u64 r = mp_resultant(ctx, am, c);
      Int diff = zmod(Int((unsigned long)r) - residue[j], p);
      residue[j] += modulus * zmod(diff * minv, p);
    }
    modulus *= p;
  }
  if (modulus < target) throw ResourceError("resultant samples: prime pool exhausted");
  for (auto& r : residue) r = zmods(r, modulus);
  return residue;
}

// Same for res_y(y^m A(x/y), B(y)) at the sample points.
inline std::vector<Int> resultant_product_samples(const std::vector<Int>& a,
                                                  const std::vector<Int>& b,
                                                  const std::vector<long>& xs) {
  int m = (int)a.size() - 1, n = (int)b.size() - 1;
  Int na2(0), nb2(0);
  for (const auto& c : a) na2 += c * c;
  for (const auto& c : b) nb2 += c * c;
  long xmax = 0;
  for (long x : xs) xmax = std::max(xmax, x < 0 ? -x : x);
  Int scale = pow_int(Int(xmax + 1), (unsigned long)(2 * m));
  Int bound2 = pow_int((na2 + 1) * scale + 1, (unsigned long)n) *
               pow_int(nb2 + 1, (unsigned long)m);
  Int bound;
  mpz_sqrt(bound.get_mpz_t(), bound2.get_mpz_t());
  bound += 1;
  Int target = 2 * bound + 1;

  std::vector<Int> residue(xs.size(), Int(0));
  Int modulus(1);
  for (u64 pw : crt_primes()) {
    if (modulus >= target) break;
    ModCtx ctx{pw};
    Int p((unsigned long)pw);
    if (zmod(a.back(), p) == 0 || zmod(b.back(), p) == 0 || zmod(a[0], p) == 0) continue;
    MPoly am(a.size()), bm(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) am[i] = mpz_get_ui(zmod(a[i], p).get_mpz_t());
    for (std::size_t i = 0; i < b.size(); ++i) bm[i] = mpz_get_ui(zmod(b[i], p).get_mpz_t());
    Int minv = zp_inv_mod(zmod(modulus, p), p);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      u64 x0 = (u64)((xs[j] % (long)pw + (long)pw) % (long)pw);
      MPoly c((std::size_t)m + 1, 0);
      u64 xp = 1;
      for (int k = 0; k <= m; ++k) {
        c[(std::size_t)(m - k)] = ctx.mul(am[(std::size_t)k], xp);
        xp = ctx.mul(xp, x0);
      }
      mp_trim(c);
      u64 r = c.empty() ? 0 : mp_resultant(ctx, c, bm);
      Int diff = zmod(Int((unsigned long)r) - residue[j], p);
      residue[j] += modulus * zmod(diff * minv, p);
    }
    modulus *= p;
  }
  if (modulus < target) throw ResourceError("resultant samples: prime pool exhausted");
  for (auto& r : residue) r = zmods(r, modulus);
  return residue;
}

}  // namespace detail

// Distinct irreducible factors of p over Q (multiplicities collapsed), each in
// canonical primitive-integer form, sorted deterministically.  Results are
// memoized; the cache is guarded by a mutex so concurrent readers are safe.
inline std::vector<Poly> factor_distinct(const Poly& p) {
  if (p.is_zero()) throw DomainError("factor of zero polynomial");
  Poly sf = p.squarefree_part();
  if (sf.degree() == 0) return {};

  static std::mutex cache_mutex;
  static std::map<std::vector<Int>, std::vector<Poly>> cache;
  std::vector<Int> key = sf.integer_coeffs();
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  std::vector<Int> f = key;
  std::vector<std::vector<Int>> raw;
  // pull out a root at zero first: squarefree, so at most a single x factor
  if (f[0] == 0) {
    raw.push_back({Int(0), Int(1)});
    f.erase(f.begin());
  }
  if (f.size() > 1) {
    auto fs = detail::zassenhaus(f);
    raw.insert(raw.end(), fs.begin(), fs.end());
  }
  std::vector<Poly> out;
  out.reserve(raw.size());
  for (const auto& c : raw) out.push_back(Poly::from_integer_coeffs(c).canonical());
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::move(key), out);
  }
  return out;
}

inline bool is_irreducible(const Poly& p) {
  if (p.is_zero() || p.degree() == 0) return false;
  auto f = factor_distinct(p);
  return f.size() == 1 && f[0].degree() == p.degree();
}

}  // namespace kleinian
