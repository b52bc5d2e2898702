#include "bolpq/spectrum.hpp"

#include <stdexcept>
#include <string>

namespace bolpq {

bool is_good_gamma(const FieldCtx& ctx, const Fp2& gamma) {
  if (ctx.fq.is_zero(gamma)) return true;
  Fp2 marker = ctx.fq.sub(ctx.fq.one(), ctx.fq.inv(gamma));
  return !in_omega_subgroup(ctx, marker);
}

GammaSets build_gamma_sets(const FieldCtx& ctx) {
  if (!ctx.has_omega()) {
    throw no_root_of_unity("gamma sets need a q-th root of unity");
  }
  const int64_t p = ctx.p;
  const int64_t q = ctx.q;

  GammaSets gs;
  gs.gamma_all.reserve(static_cast<size_t>(p));
  if (ctx.root_case == RootCase::q_divides_p_minus_1) {
    for (int64_t a = 0; a < p; ++a) gs.gamma_all.push_back({a, 0});
  } else {
    const int64_t half = ctx.fp.half();
    for (int64_t m = 0; m < p; ++m) gs.gamma_all.push_back({half, m});
  }

  for (const Fp2& g : gs.gamma_all) {
    if (is_good_gamma(ctx, g)) gs.gamma_good.push_back(g);
  }

  for (const Fp2& g : gs.gamma_good) {
    if (ctx.root_case == RootCase::q_divides_p_minus_1) {
      if (g.u >= 1 && g.u <= (p + 1) / 2) gs.gamma_canonical.push_back(g);
    } else {
      if (g.v <= (p - 1) / 2) gs.gamma_canonical.push_back(g);
    }
  }

  if (gs.gamma_good.size() != static_cast<size_t>(p - q + 1) ||
      gs.gamma_canonical.size() != static_cast<size_t>((p - q + 2) / 2)) {
    throw std::logic_error("gamma set cardinalities off: |Gamma'| must be p-q+1 and |Gamma| (p-q+2)/2");
  }
  return gs;
}

SolutionSeq theta_from_gamma(const FieldCtx& ctx, const Fp2& gamma) {
  if (!ctx.has_omega()) {
    throw no_root_of_unity("theta_from_gamma needs a q-th root of unity");
  }
  if (ctx.root_case == RootCase::q_divides_p_minus_1) {
    if (gamma.v != 0) throw not_real_solution("gamma must lie in F_p when q | p-1");
  } else {
    if (gamma.u != ctx.fp.half()) {
      throw not_real_solution("gamma must be of the form 1/2 + m*sqrt(t) when q | p+1");
    }
  }
  if (!is_good_gamma(ctx, gamma)) {
    throw bad_gamma("1 - gamma^{-1} is a power of omega: sequence would hit 0 or -1");
  }

  const auto& fq = ctx.fq;
  const int64_t q = ctx.q;
  Fp2 co_gamma = fq.sub(fq.one(), gamma);
  Fp2 omega_inv = fq.inv(ctx.omega);

  SolutionSeq s;
  s.gamma = gamma;
  s.u.reserve(static_cast<size_t>(q));
  Fp2 wp = fq.one();
  Fp2 wn = fq.one();
  for (int64_t i = 0; i < q; ++i) {
    Fp2 ui = fq.add(fq.mul(gamma, wp), fq.mul(co_gamma, wn));
    if (ui.v != 0) throw std::logic_error("sequence entry escaped the base field");
    s.u.push_back(ui.u);
    wp = fq.mul(wp, ctx.omega);
    wn = fq.mul(wn, omega_inv);
  }

  Fp2 lam = fq.add(ctx.omega, omega_inv);
  if (lam.v != 0) throw std::logic_error("omega + omega^{-1} escaped the base field");
  s.lambda = lam.u;

  if (s.u[0] != 1) throw std::logic_error("u_0 != 1");
  for (int64_t a : s.u) {
    if (a == 0) throw std::logic_error("zero entry in a sequence from a good gamma");
  }
  for (int64_t a : s.u) {
    for (int64_t b : s.u) {
      if (ctx.fp.add(a, b) == 0) {
        throw std::logic_error("-1 ratio in a sequence from a good gamma");
      }
    }
  }

  s.theta.reserve(s.u.size());
  for (int64_t a : s.u) s.theta.push_back(ctx.fp.inv(a));
  return s;
}

SolutionSeq all_ones_seq(const FieldCtx& ctx) {
  SolutionSeq s;
  s.u.assign(static_cast<size_t>(ctx.q), 1);
  s.theta = s.u;
  s.lambda = 2;
  return s;
}

bool circulant_eigencheck(const FieldCtx& ctx, const SolutionSeq& seq) {
  const int64_t q = ctx.q;
  if (static_cast<int64_t>(seq.u.size()) != q) return false;
  const auto& fq = ctx.fq;

  std::vector<std::vector<Fp2>> a(static_cast<size_t>(q),
                                  std::vector<Fp2>(static_cast<size_t>(q), fq.zero()));
  for (int64_t i = 0; i < q; ++i) {
    a[i][(i + 1) % q] = fq.one();
    a[i][(i - 1 + q) % q] = fq.one();
  }

  std::vector<Fp2> u(static_cast<size_t>(q));
  for (int64_t i = 0; i < q; ++i) u[i] = fq.from_base(seq.u[i]);
  Fp2 lambda = fq.from_base(seq.lambda);

  for (int64_t i = 0; i < q; ++i) {
    Fp2 acc = fq.zero();
    for (int64_t j = 0; j < q; ++j) acc = fq.add(acc, fq.mul(a[i][j], u[j]));
    if (!(acc == fq.mul(lambda, u[i]))) return false;
  }
  return true;
}

std::optional<int64_t> seq_isomorphic(const SolutionSeq& a, const SolutionSeq& b) {
  const int64_t q = static_cast<int64_t>(a.u.size());
  if (b.u.size() != a.u.size()) return std::nullopt;
  for (int64_t s = 1; s < q; ++s) {
    bool ok = true;
    for (int64_t i = 0; i < q && ok; ++i) {
      ok = a.u[i] == b.u[(s * i) % q];
    }
    if (ok) return s;
  }
  return std::nullopt;
}

std::optional<std::pair<int64_t, int64_t>> seq_isotopic(const PrimeField& fp,
                                                        const SolutionSeq& a,
                                                        const SolutionSeq& b) {
  const int64_t q = static_cast<int64_t>(a.u.size());
  if (b.u.size() != a.u.size()) return std::nullopt;
  for (int64_t s = 1; s < q; ++s) {
    for (int64_t r = 0; r < q; ++r) {
      int64_t vr_inv = fp.inv(b.u[r]);
      bool ok = true;
      for (int64_t i = 0; i < q && ok; ++i) {
        ok = a.u[i] == fp.mul(vr_inv, b.u[(s * i + r) % q]);
      }
      if (ok) return std::make_pair(s, r);
    }
  }
  return std::nullopt;
}

bool is_bruck_seq(const SolutionSeq& a) {
  const int64_t q = static_cast<int64_t>(a.u.size());
  for (int64_t i = 0; i < q; ++i) {
    if (a.u[i] != a.u[(q - i) % q]) return false;
  }
  return true;
}

}  // namespace bolpq
