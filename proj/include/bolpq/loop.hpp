#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bolpq/fields.hpp"
#include "bolpq/spectrum.hpp"

namespace bolpq {

// Cayley table of a loop on points 0..n-1 with 0 the two-sided identity.
// Constructed loops live on Z_q x Z_p with the encoding (i,j) -> i*p + j,
// so a = (1,0) is point p and b = (0,1) is point 1.
struct LoopTable {
  int32_t n = 0;
  std::vector<int32_t> cells;  // row-major, cells[x*n+y] = x*y

  struct Meta {
    int64_t p = 0;
    int64_t q = 0;
    friend bool operator==(const Meta&, const Meta&) = default;
  };
  std::optional<Meta> meta;

  int32_t at(int32_t x, int32_t y) const { return cells[static_cast<size_t>(x) * n + y]; }
  bool same_table(const LoopTable& o) const { return n == o.n && cells == o.cells; }

  friend bool operator==(const LoopTable&, const LoopTable&) = default;
};

// Loop on Z_q x Z_p with product
//   (i,j)(k,l) = (i+k, l(1+th_k)^{-1} + (j + l(1+th_k)^{-1}) th_i^{-1} th_{i+k}),
// th_i = u_i^{-1}. Validates the full sequence contract (u_0 = 1, cyclic
// recurrence, no 0 or -1 ratios); throws invalid_theta otherwise.
LoopTable build_bol_loop(const FieldCtx& ctx, const SolutionSeq& seq);

// Abstract construction from an ensemble of q complete mappings of Z_p
// (theta_0 = id, 0 theta_i = 0, every theta_i^{-1} theta_j complete):
//   (i,j)(k,l) = (i+k, m + (j+m) theta_i^{-1} theta_{i+k}),  m + m theta_k = l.
// Throws not_complete_mapping naming the first offending pair.
LoopTable build_from_complete_mappings(int64_t p, int64_t q,
                                       const std::vector<std::vector<int32_t>>& thetas);

bool is_loop(const LoopTable& t);          // Latin square + identity at 0
bool is_right_bol(const LoopTable& t);     // ((wu)v)u = w((uv)u), all triples
bool has_aip(const LoopTable& t);          // (uv)^{-1} = u^{-1} v^{-1}
bool is_associative(const LoopTable& t);

// Right powers x^k = 1 R_x^k; order = least k >= 1 with x^k = 1.
int64_t element_order(const LoopTable& t, int32_t x);
int32_t power(const LoopTable& t, int32_t x, int64_t k);
// x^{(|x|+1)/2}; exact square root in uniquely 2-divisible loops.
int32_t sqrt_element(const LoopTable& t, int32_t x);
// Two-sided inverse; throws when left and right inverses differ.
int32_t inverse_element(const LoopTable& t, int32_t x);

struct Divisions {
  int32_t n = 0;
  std::vector<int32_t> ldiv;  // ldiv[u*n+v] = u\v
  std::vector<int32_t> rdiv;  // rdiv[v*n+u] = v/u
  int32_t left(int32_t u, int32_t v) const { return ldiv[static_cast<size_t>(u) * n + v]; }
  int32_t right(int32_t v, int32_t u) const { return rdiv[static_cast<size_t>(v) * n + u]; }
};
Divisions divisions(const LoopTable& t);

// u\v = (u^{-1} (v u)) u^{-1} at every pair; the right Bol expression for
// left division.
bool left_division_bol_identity(const LoopTable& t);

// v -> (u^{-1} (v u^2)) u^{-1}, returned as an image vector. Coincides with
// R_u L_u^{-1} on right Bol tables.
std::vector<int32_t> t_map(const LoopTable& t, int32_t u);

// Reads the complete mappings theta_i back off a right Bol table of order
// pq via b^j T_{a^i} = b^{j theta_i}. Throws not_bol_structure when the
// designated generators are missing or <b> is not T-invariant.
std::vector<std::vector<int32_t>> extract_theta(const LoopTable& t);

struct Nuclei {
  std::vector<int32_t> left;
  std::vector<int32_t> middle;
  std::vector<int32_t> right;
};
Nuclei nuclei(const LoopTable& t);

std::vector<int32_t> subloop_generated(const LoopTable& t, const std::vector<int32_t>& gens);

// Normality decided two independent ways: invariance of S under the
// standard inner mapping generators (R_{x,y}, L_{x,y}, T_x) and the block
// test (xS)(yS) subset of (xy)S. Disagreement means a bug and throws.
bool is_normal_subloop(const LoopTable& t, const std::vector<int32_t>& s);

// (Q,o) with u o v = (v u^2 v)^{1/2}; right Bruck when the input is right
// Bol of odd order. Powers and inverses agree with the input loop.
LoopTable associated_bruck(const LoopTable& t);

// Structural identity checks; full scans unless noted.
bool right_power_alternative_holds(const LoopTable& t);        // R_x^i = R_{x^i}
bool translation_orders_match(const LoopTable& t);             // |R_u| = |u|
bool factorization_triples_distinct(const LoopTable& t);       // a^i b^j, b^j a^i, b^j a^i b^j
bool t_map_power_law_holds(const LoopTable& t, int64_t kmax);  // (vT_u)^k law
bool twisted_section_closure_holds(const LoopTable& t);        // R_u R_v R_u = R_{(uv)u}
bool unique_solution_law_holds(const LoopTable& t);            // u v^n u = v^m, sampled
// The set of the p elements of order dividing p, if it is the unique
// order-p subloop; nullopt when the count is off or a second one exists.
std::optional<std::vector<int32_t>> unique_order_p_subloop(const LoopTable& t);
// sigma^{-1} R°_v sigma = L_v R_v with sigma the squaring map.
bool squaring_conjugation_bridge_holds(const LoopTable& t);

}  // namespace bolpq
