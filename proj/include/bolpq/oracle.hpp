#pragma once

#include <cstdint>
#include <vector>

#include "bolpq/loop.hpp"

namespace bolpq::oracle {

// All permutations f of Z_p with f(0) = 0 such that x -> x + f(x) is a
// bijection, in lexicographic order. Guarded at p <= 13.
std::vector<std::vector<int32_t>> complete_mappings_fixing_zero(int64_t p);

// True iff perm is x -> c*x for some scalar c.
bool is_linear_map(const std::vector<int32_t>& perm);

struct BruteForceRun {
  std::vector<LoopTable> tables;  // sorted by table contents
  // ensemble (theta_1 .. theta_{q-1}) behind each table, same order
  std::vector<std::vector<std::vector<int32_t>>> ensembles;
  bool linear_only = true;
  int64_t complete_mapping_count = 0;
  int64_t nonlinear_complete_mapping_count = 0;
};

// Exhaustive scan of all ensembles (theta_1, ..., theta_{q-1}) over the
// complete mappings fixing zero; keeps the tables that are genuine right
// Bol loops by full triple scan. Guarded at p <= 7, q = 3.
BruteForceRun run_bruteforce(int64_t p, int64_t q);

// The tables of run_bruteforce.
std::vector<LoopTable> enumerate_bol_bruteforce(int64_t p, int64_t q);

// Backtracking isomorphism over generator images: maps a fixed (a, b) of
// t1 (orders q and p) onto every same-order pair of t2, extends through
// the a^i b^j factorization and verifies the whole table. Exact.
// Orders must match (incompatible_orders) and stay <= 63 (enumeration_limit).
bool brute_isomorphic(const LoopTable& t1, const LoopTable& t2);

// Greedy partition by brute_isomorphic; representative = lexicographically
// least table of each class, classes in first-seen order.
std::vector<LoopTable> classify_up_to_iso(const std::vector<LoopTable>& tables);

}  // namespace bolpq::oracle
