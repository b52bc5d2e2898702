#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bolpq/fields.hpp"

namespace bolpq {

// A period-q solution of the recurrence u_{n+2} = lambda*u_{n+1} - u_n over
// F_p with u_0 = 1, entries nonzero, and no ratio u_i^{-1} u_j equal to -1.
// theta_i = u_i^{-1} are the scalars the loop construction consumes.
// gamma is the generating parameter; absent for the all-ones sequence.
struct SolutionSeq {
  std::vector<int64_t> u;
  std::vector<int64_t> theta;
  int64_t lambda = 0;
  std::optional<Fp2> gamma;

  friend bool operator==(const SolutionSeq&, const SolutionSeq&) = default;
};

// Gamma'' (the p-element parameter domain), Gamma' (parameters whose
// sequence avoids 0 and -1), and Gamma (one representative per
// {gamma, 1-gamma} pair), all in ascending enumeration order.
struct GammaSets {
  std::vector<Fp2> gamma_all;
  std::vector<Fp2> gamma_good;
  std::vector<Fp2> gamma_canonical;
};

GammaSets build_gamma_sets(const FieldCtx& ctx);

// gamma == 0 is exempt from the badness test: 1 - gamma^{-1} is undefined
// there and the resulting sequence omega^{-i} is valid.
bool is_good_gamma(const FieldCtx& ctx, const Fp2& gamma);

// u_i = gamma*omega^i + (1-gamma)*omega^{-i}, lambda = omega + omega^{-1}.
// Throws not_real_solution for gamma outside Gamma'' and bad_gamma for
// parameters whose sequence would hit 0 or -1.
SolutionSeq theta_from_gamma(const FieldCtx& ctx, const Fp2& gamma);

// The constant sequence: lambda = 2, no gamma. Valid for every context,
// including no_divide; it yields the cyclic group.
SolutionSeq all_ones_seq(const FieldCtx& ctx);

// Materializes the q x q circulant with first row (0,1,0,...,0,1) over
// F_{p^2} and checks A u = lambda u componentwise.
bool circulant_eigencheck(const FieldCtx& ctx, const SolutionSeq& seq);

// Smallest s in 1..q-1 with a_i = b_{si mod q} for all i, if any.
std::optional<int64_t> seq_isomorphic(const SolutionSeq& a, const SolutionSeq& b);

// First (s, r), s in 1..q-1, r in 0..q-1, with a_i = b_r^{-1} b_{si+r}
// for all i; (1, 0) degenerates to seq_isomorphic.
std::optional<std::pair<int64_t, int64_t>> seq_isotopic(const PrimeField& fp,
                                                        const SolutionSeq& a,
                                                        const SolutionSeq& b);

// Palindrome test a_i = a_{-i}; the Bruck condition on sequences.
bool is_bruck_seq(const SolutionSeq& a);

}  // namespace bolpq
