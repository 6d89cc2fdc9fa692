#pragma once
// Arbitrary-precision integers and rationals (GMP) plus the small helpers the
// polynomial and interval layers lean on.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace kleinian {

using Int = mpz_class;
using Rat = mpq_class;

// Precondition violations (bad inputs, calls outside an operation's domain).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A configured budget (steps, words, subsets, precision) was exhausted.
// Deliberately distinct from DomainError: it never means "wrong answer".
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw DomainError("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat_of(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("rat_of: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& n) { return sgn(n); }

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (e < 0) {
    if (base == 0) throw DomainError("pow_rat: 0^negative");
    return pow_rat(Rat(1) / base, -e);
  }
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), (unsigned long)e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), (unsigned long)e);
  return r;  // already canonical: num/den coprime stays coprime under powers
}

// 2^-k as a rational.
inline Rat pow2(long k) {
  if (k >= 0) return Rat(pow_int(2, (unsigned long)k));
  return rat_of(1, pow_int(2, (unsigned long)(-k)));
}

inline Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

inline Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

// Outward rounding onto the dyadic grid with denominator 2^prec.  Used to
// keep endpoint bit lengths from compounding across iterated arithmetic.
inline Rat dyadic_floor(const Rat& q, unsigned prec) {
  Int num;
  mpz_mul_2exp(num.get_mpz_t(), q.get_num().get_mpz_t(), prec);
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  Rat r;
  mpz_set(mpq_numref(r.get_mpq_t()), fl.get_mpz_t());
  mpz_set_ui(mpq_denref(r.get_mpq_t()), 1);
  mpz_mul_2exp(mpq_denref(r.get_mpq_t()), mpq_denref(r.get_mpq_t()), prec);
  r.canonicalize();
  return r;
}

inline Rat dyadic_ceil(const Rat& q, unsigned prec) {
  Int num;
  mpz_mul_2exp(num.get_mpz_t(), q.get_num().get_mpz_t(), prec);
  Int cl;
  mpz_cdiv_q(cl.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  Rat r;
  mpz_set(mpq_numref(r.get_mpq_t()), cl.get_mpz_t());
  mpz_set_ui(mpq_denref(r.get_mpq_t()), 1);
  mpz_mul_2exp(mpq_denref(r.get_mpq_t()), mpq_denref(r.get_mpq_t()), prec);
  r.canonicalize();
  return r;
}

inline const Rat& rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline const Rat& rat_max(const Rat& a, const Rat& b) { return a > b ? a : b; }

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw ParseError("bad rational literal: '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in rational: '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string int_to_string(const Int& n) { return n.get_str(); }

inline Int int_from_string(const std::string& s) {
  Int n;
  if (s.empty() || mpz_set_str(n.get_mpz_t(), s.c_str(), 10) != 0)
    throw ParseError("bad integer literal: '" + s + "'");
  return n;
}

}  // namespace kleinian
