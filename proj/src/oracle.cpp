#include "bolpq/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "bolpq/fields.hpp"

namespace bolpq::oracle {

namespace {

bool complete_mapping(const std::vector<int32_t>& f, int64_t p) {
  std::vector<bool> seen(static_cast<size_t>(p), false);
  for (int64_t x = 0; x < p; ++x) {
    int64_t y = (x + f[static_cast<size_t>(x)]) % p;
    if (seen[static_cast<size_t>(y)]) return false;
    seen[static_cast<size_t>(y)] = true;
  }
  return true;
}

std::vector<int32_t> invert(const std::vector<int32_t>& f) {
  std::vector<int32_t> r(f.size());
  for (size_t x = 0; x < f.size(); ++x) r[static_cast<size_t>(f[x])] = static_cast<int32_t>(x);
  return r;
}

std::vector<int32_t> compose_maps(const std::vector<int32_t>& first,
                                  const std::vector<int32_t>& second) {
  std::vector<int32_t> r(first.size());
  for (size_t x = 0; x < first.size(); ++x) r[x] = second[static_cast<size_t>(first[x])];
  return r;
}

}  // namespace

std::vector<std::vector<int32_t>> complete_mappings_fixing_zero(int64_t p) {
  if (p < 3 || p > 13 || !is_prime(static_cast<uint64_t>(p))) {
    throw enumeration_limit("complete mapping scan is limited to odd primes p <= 13");
  }
  std::vector<int32_t> perm(static_cast<size_t>(p));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int32_t>> out;
  do {
    if (complete_mapping(perm, p)) out.push_back(perm);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return out;
}

bool is_linear_map(const std::vector<int32_t>& perm) {
  const int64_t p = static_cast<int64_t>(perm.size());
  int64_t c = perm[1];
  for (int64_t x = 0; x < p; ++x) {
    if (perm[static_cast<size_t>(x)] != (c * x) % p) return false;
  }
  return true;
}

BruteForceRun run_bruteforce(int64_t p, int64_t q) {
  if (q != 3 || p > 7) {
    throw enumeration_limit("brute-force Bol enumeration is limited to q = 3, p <= 7");
  }
  auto cms = complete_mappings_fixing_zero(p);

  BruteForceRun run;
  run.complete_mapping_count = static_cast<int64_t>(cms.size());
  for (const auto& f : cms) {
    if (!is_linear_map(f)) ++run.nonlinear_complete_mapping_count;
  }

  std::vector<std::vector<int32_t>> inv_cms;
  inv_cms.reserve(cms.size());
  for (const auto& f : cms) inv_cms.push_back(invert(f));

  std::vector<int32_t> id(static_cast<size_t>(p));
  std::iota(id.begin(), id.end(), 0);

  struct Hit {
    LoopTable table;
    std::vector<std::vector<int32_t>> ensemble;
  };
  std::vector<Hit> hits;

  for (size_t i1 = 0; i1 < cms.size(); ++i1) {
    for (size_t i2 = 0; i2 < cms.size(); ++i2) {
      // a tuple yields a loop only if every theta_i^{-1} theta_j is complete
      if (!complete_mapping(inv_cms[i1], p) || !complete_mapping(inv_cms[i2], p)) continue;
      if (!complete_mapping(compose_maps(inv_cms[i1], cms[i2]), p)) continue;
      if (!complete_mapping(compose_maps(inv_cms[i2], cms[i1]), p)) continue;

      LoopTable t = build_from_complete_mappings(p, q, {id, cms[i1], cms[i2]});
      if (!is_right_bol(t)) continue;
      hits.push_back({std::move(t), {cms[i1], cms[i2]}});
    }
  }

  std::sort(hits.begin(), hits.end(),
            [](const Hit& a, const Hit& b) { return a.table.cells < b.table.cells; });
  for (auto& h : hits) {
    for (const auto& f : h.ensemble) {
      if (!is_linear_map(f)) run.linear_only = false;
    }
    run.tables.push_back(std::move(h.table));
    run.ensembles.push_back(std::move(h.ensemble));
  }
  return run;
}

std::vector<LoopTable> enumerate_bol_bruteforce(int64_t p, int64_t q) {
  return run_bruteforce(p, q).tables;
}

namespace {

// first element of each order, plus the full list per order
std::vector<int32_t> elements_of_order(const LoopTable& t, int64_t k) {
  std::vector<int32_t> out;
  for (int32_t x = 0; x < t.n; ++x) {
    if (element_order(t, x) == k) out.push_back(x);
  }
  return out;
}

std::pair<int64_t, int64_t> factor_pq(int32_t n) {
  for (int64_t q = 3; q * q <= n; q += 2) {
    if (n % q == 0) return {n / q, q};
  }
  throw incompatible_orders("table order is not a product of two odd primes");
}

}  // namespace

bool brute_isomorphic(const LoopTable& t1, const LoopTable& t2) {
  if (t1.n != t2.n) throw incompatible_orders("tables have different orders");
  if (t1.n > 63) throw enumeration_limit("backtracking isomorphism is limited to order <= 63");
  const int32_t n = t1.n;
  auto [p, q] = factor_pq(n);

  auto a1s = elements_of_order(t1, q);
  auto b1s = elements_of_order(t1, p);
  if (a1s.empty() || b1s.empty()) throw incompatible_orders("no generator pair of orders q and p");
  int32_t a1 = a1s[0];
  int32_t b1 = b1s[0];

  std::vector<int32_t> a1pow(static_cast<size_t>(q)), b1pow(static_cast<size_t>(p));
  for (int64_t i = 0; i < q; ++i) a1pow[i] = power(t1, a1, i);
  for (int64_t j = 0; j < p; ++j) b1pow[j] = power(t1, b1, j);

  auto a2s = elements_of_order(t2, q);
  auto b2s = elements_of_order(t2, p);

  std::vector<int32_t> phi(static_cast<size_t>(n));
  for (int32_t a2 : a2s) {
    std::vector<int32_t> a2pow(static_cast<size_t>(q));
    for (int64_t i = 0; i < q; ++i) a2pow[i] = power(t2, a2, i);
    for (int32_t b2 : b2s) {
      std::vector<int32_t> b2pow(static_cast<size_t>(p));
      for (int64_t j = 0; j < p; ++j) b2pow[j] = power(t2, b2, j);

      // extend (a1,b1) -> (a2,b2) through the a^i b^j factorization
      bool valid = true;
      std::vector<bool> used(static_cast<size_t>(n), false);
      for (int64_t i = 0; i < q && valid; ++i) {
        for (int64_t j = 0; j < p; ++j) {
          int32_t src = t1.at(a1pow[static_cast<size_t>(i)], b1pow[static_cast<size_t>(j)]);
          int32_t dst = t2.at(a2pow[static_cast<size_t>(i)], b2pow[static_cast<size_t>(j)]);
          if (used[static_cast<size_t>(dst)]) {
            valid = false;
            break;
          }
          used[static_cast<size_t>(dst)] = true;
          phi[static_cast<size_t>(src)] = dst;
        }
      }
      if (!valid) continue;
      for (int32_t x = 0; x < n && valid; ++x) {
        for (int32_t y = 0; y < n; ++y) {
          if (phi[static_cast<size_t>(t1.at(x, y))] !=
              t2.at(phi[static_cast<size_t>(x)], phi[static_cast<size_t>(y)])) {
            valid = false;
            break;
          }
        }
      }
      if (valid) return true;
    }
  }
  return false;
}

std::vector<LoopTable> classify_up_to_iso(const std::vector<LoopTable>& tables) {
  std::vector<std::vector<const LoopTable*>> classes;
  for (const LoopTable& t : tables) {
    bool placed = false;
    for (auto& cls : classes) {
      if (brute_isomorphic(*cls[0], t)) {
        cls.push_back(&t);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({&t});
  }
  std::vector<LoopTable> reps;
  reps.reserve(classes.size());
  for (const auto& cls : classes) {
    const LoopTable* best = cls[0];
    for (const LoopTable* t : cls) {
      if (t->cells < best->cells) best = t;
    }
    reps.push_back(*best);
  }
  return reps;
}

}  // namespace bolpq::oracle
