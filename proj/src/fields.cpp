#include "bolpq/fields.hpp"

#include <algorithm>

namespace bolpq {

namespace {

uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t s : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % s == 0) return n == s;
  }
  uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This witness set decides primality for all n < 3.3 * 10^24.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int64_t PrimeField::pow(int64_t a, int64_t e) const {
  return static_cast<int64_t>(powmod64(static_cast<uint64_t>(reduce(a)),
                                       static_cast<uint64_t>(e),
                                       static_cast<uint64_t>(p_)));
}

int64_t PrimeField::inv(int64_t a) const {
  a = reduce(a);
  if (a == 0) throw division_by_zero("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

bool PrimeField::is_square(int64_t a) const {
  a = reduce(a);
  if (a == 0) return true;
  return pow(a, (p_ - 1) / 2) == 1;
}

Fp2 QuadField::inv(const Fp2& a) const {
  if (is_zero(a)) throw division_by_zero("inverse of zero in F_{p^2}");
  // t is a non-square, so the norm form is anisotropic: N(a) != 0 here.
  int64_t n_inv = fp_.inv(norm(a));
  Fp2 c = conj(a);
  return {fp_.mul(c.u, n_inv), fp_.mul(c.v, n_inv)};
}

Fp2 QuadField::pow(Fp2 a, int64_t e) const {
  Fp2 r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

const char* to_string(RootCase c) {
  switch (c) {
    case RootCase::q_divides_p_minus_1:
      return "q_divides_p_minus_1";
    case RootCase::q_divides_p_plus_1:
      return "q_divides_p_plus_1";
    case RootCase::no_divide:
      return "no_divide";
  }
  return "?";
}

Fp2 FieldCtx::omega_pow(int64_t i) const {
  int64_t e = ((i % q) + q) % q;
  return fq.pow(omega, e);
}

namespace {

bool lex_less(const Fp2& a, const Fp2& b) {
  return a.u != b.u ? a.u < b.u : a.v < b.v;
}

}  // namespace

FieldCtx make_context(int64_t p, int64_t q) {
  constexpr int64_t kMaxP = (int64_t{1} << 31) - 1;
  if (p < 3 || q < 3 || p % 2 == 0 || q % 2 == 0 || p <= q || p > kMaxP ||
      !is_prime(static_cast<uint64_t>(p)) || !is_prime(static_cast<uint64_t>(q))) {
    throw invalid_primes("p and q must be odd primes with q < p <= 2^31-1");
  }

  PrimeField fp(p);
  int64_t t = 2;
  while (fp.is_square(t)) ++t;
  QuadField fq(fp, t);

  RootCase rc = RootCase::no_divide;
  if ((p - 1) % q == 0) {
    rc = RootCase::q_divides_p_minus_1;
  } else if ((p + 1) % q == 0) {
    rc = RootCase::q_divides_p_plus_1;
  }

  Fp2 omega{0, 0};
  if (rc == RootCase::q_divides_p_minus_1) {
    // The q-th roots of unity form the unique subgroup of order q of F_p*.
    // Enumerate it from any primitive member and keep the smallest one != 1.
    int64_t gen = 0;
    for (int64_t h = 2;; ++h) {
      int64_t z = fp.pow(h, (p - 1) / q);
      if (z != 1) {
        gen = z;
        break;
      }
    }
    int64_t best = gen;
    int64_t w = gen;
    for (int64_t k = 2; k < q; ++k) {
      w = fp.mul(w, gen);
      best = std::min(best, w);
    }
    omega = {best, 0};
  } else if (rc == RootCase::q_divides_p_plus_1) {
    // beta^((p^2-1)/q) is a q-th root of unity for any beta != 0; some
    // beta = u + sqrt(t) gives a nontrivial one (the line u + sqrt(t)
    // cannot sit inside the index-q subgroup).
    Fp2 gen{0, 0};
    for (int64_t u = 0;; ++u) {
      Fp2 beta{u, 1};
      Fp2 z = fq.pow(beta, (p - 1) * (p + 1) / q);
      if (!(z == fq.one())) {
        gen = z;
        break;
      }
    }
    Fp2 best = gen;
    Fp2 w = gen;
    for (int64_t k = 2; k < q; ++k) {
      w = fq.mul(w, gen);
      if (lex_less(w, best)) best = w;
    }
    omega = best;
  }

  return FieldCtx(p, q, t, rc, omega);
}

bool in_omega_subgroup(const FieldCtx& ctx, const Fp2& x) {
  if (!ctx.has_omega()) {
    throw no_root_of_unity("q divides neither p-1 nor p+1: no q-th root of unity");
  }
  if (ctx.fq.is_zero(x)) return false;
  return ctx.fq.pow(x, ctx.q) == ctx.fq.one();
}

}  // namespace bolpq
