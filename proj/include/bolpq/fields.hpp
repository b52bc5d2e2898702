#pragma once

#include <cstdint>

#include "bolpq/errors.hpp"

namespace bolpq {

// Deterministic Miller-Rabin, valid for every 64-bit input.
bool is_prime(uint64_t n);

// Arithmetic in F_p for an odd prime p < 2^31.
// Values are canonical representatives in [0, p); products go through
// 128-bit intermediates so no reduction can overflow.
class PrimeField {
 public:
  explicit PrimeField(int64_t p) : p_(p) {}

  int64_t p() const { return p_; }

  int64_t reduce(int64_t a) const {
    a %= p_;
    return a < 0 ? a + p_ : a;
  }
  int64_t add(int64_t a, int64_t b) const {
    int64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  int64_t sub(int64_t a, int64_t b) const {
    int64_t s = a - b;
    return s < 0 ? s + p_ : s;
  }
  int64_t neg(int64_t a) const { return a == 0 ? 0 : p_ - a; }
  int64_t mul(int64_t a, int64_t b) const {
    return static_cast<int64_t>(static_cast<__int128>(a) * b % p_);
  }
  int64_t pow(int64_t a, int64_t e) const;
  int64_t inv(int64_t a) const;  // throws division_by_zero on a == 0
  int64_t half() const { return inv(2 % p_); }
  bool is_square(int64_t a) const;  // Euler criterion; 0 counts as a square

 private:
  int64_t p_;
};

// u + v*sqrt(t); meaningful relative to a QuadField.
struct Fp2 {
  int64_t u = 0;
  int64_t v = 0;

  friend bool operator==(const Fp2&, const Fp2&) = default;
};

// F_{p^2} realized as F_p[sqrt(t)] for a fixed non-square t.
// Conjugation, norm and trace are the usual quadratic-extension maps:
// (u+v*sqrt(t))* = u-v*sqrt(t), N(a) = a a* = u^2-v^2 t, tr(a) = a+a* = 2u.
class QuadField {
 public:
  QuadField(const PrimeField& base, int64_t t) : fp_(base), t_(base.reduce(t)) {}

  const PrimeField& base() const { return fp_; }
  int64_t t() const { return t_; }

  Fp2 zero() const { return {0, 0}; }
  Fp2 one() const { return {1, 0}; }
  Fp2 from_base(int64_t a) const { return {fp_.reduce(a), 0}; }
  bool is_zero(const Fp2& a) const { return a.u == 0 && a.v == 0; }

  Fp2 add(const Fp2& a, const Fp2& b) const {
    return {fp_.add(a.u, b.u), fp_.add(a.v, b.v)};
  }
  Fp2 sub(const Fp2& a, const Fp2& b) const {
    return {fp_.sub(a.u, b.u), fp_.sub(a.v, b.v)};
  }
  Fp2 neg(const Fp2& a) const { return {fp_.neg(a.u), fp_.neg(a.v)}; }
  Fp2 mul(const Fp2& a, const Fp2& b) const {
    return {fp_.add(fp_.mul(a.u, b.u), fp_.mul(fp_.mul(a.v, b.v), t_)),
            fp_.add(fp_.mul(a.u, b.v), fp_.mul(a.v, b.u))};
  }
  Fp2 conj(const Fp2& a) const { return {a.u, fp_.neg(a.v)}; }
  int64_t norm(const Fp2& a) const {
    return fp_.sub(fp_.mul(a.u, a.u), fp_.mul(fp_.mul(a.v, a.v), t_));
  }
  int64_t trace(const Fp2& a) const { return fp_.add(a.u, a.u); }
  Fp2 inv(const Fp2& a) const;  // throws division_by_zero on 0
  Fp2 div(const Fp2& a, const Fp2& b) const { return mul(a, inv(b)); }
  Fp2 pow(Fp2 a, int64_t e) const;

 private:
  PrimeField fp_;
  int64_t t_;
};

enum class RootCase {
  q_divides_p_minus_1,
  q_divides_p_plus_1,
  no_divide,
};

const char* to_string(RootCase c);

// The pair (p, q) with the canonical non-square t, the extension
// F_p[sqrt(t)] and the canonical primitive q-th root of unity omega.
// Immutable after make_context; safe to copy and share across threads.
struct FieldCtx {
  int64_t p;
  int64_t q;
  int64_t t;
  RootCase root_case;
  Fp2 omega;  // (0,0) when root_case == no_divide
  PrimeField fp;
  QuadField fq;

  FieldCtx(int64_t p_, int64_t q_, int64_t t_, RootCase rc, Fp2 om)
      : p(p_), q(q_), t(t_), root_case(rc), omega(om), fp(p_), fq(fp, t_) {}

  bool has_omega() const { return root_case != RootCase::no_divide; }
  Fp2 omega_pow(int64_t i) const;  // omega^i, exponent taken mod q
};

// Canonical context for odd primes q < p:
//   t      = smallest positive non-residue mod p,
//   omega  = smallest base-field q-th root != 1     (q | p-1),
//          = lexicographically first (u,v) with omega^q = 1, omega != 1
//                                                   (q | p+1),
//          = unset                                  (otherwise).
// Deterministic: the same (p, q) always yields the same context.
FieldCtx make_context(int64_t p, int64_t q);

// True iff x != 0 and x^q = 1, i.e. x is a power of omega.
// Throws no_root_of_unity when the context has no omega.
bool in_omega_subgroup(const FieldCtx& ctx, const Fp2& x);

}  // namespace bolpq
