#pragma once

#include <cstdint>
#include <vector>

#include "bolpq/loop.hpp"

namespace bolpq {

struct Perm {
  std::vector<int32_t> img;

  static Perm identity(int32_t n) {
    Perm p;
    p.img.resize(static_cast<size_t>(n));
    for (int32_t i = 0; i < n; ++i) p.img[static_cast<size_t>(i)] = i;
    return p;
  }

  int32_t degree() const { return static_cast<int32_t>(img.size()); }
  int32_t operator[](int32_t x) const { return img[static_cast<size_t>(x)]; }
  bool is_identity() const;
  Perm inverse() const;
  int64_t order() const;  // lcm of cycle lengths

  friend bool operator==(const Perm&, const Perm&) = default;
};

// f then g; points are acted on from the right throughout.
Perm compose(const Perm& f, const Perm& g);

struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = 1469598103934665603ull;
    for (int32_t x : p.img) {
      h ^= static_cast<size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Permutation group with a deterministic Schreier-Sims stabilizer chain.
// Base points are picked in natural order (smallest moved point first);
// optional initial base points are forced to the front, which pins the
// stabilizer of a chosen point at level 1.
class PermGroup {
 public:
  PermGroup(int32_t degree, std::vector<Perm> generators,
            std::vector<int32_t> initial_base = {});

  int32_t degree() const { return degree_; }
  uint64_t order() const;
  bool contains(const Perm& g) const;
  const std::vector<Perm>& generators() const { return input_gens_; }
  const std::vector<int32_t>& base() const { return base_; }

  // Strong generators of the stabilizer of the first `level` base points
  // (level 0 returns generators of the whole group).
  std::vector<Perm> strong_generators(size_t level) const;

  // Breadth-first enumeration; throws enumeration_limit past `limit`.
  std::vector<Perm> elements(uint64_t limit = 1000000) const;

 private:
  struct Level {
    int32_t point = -1;
    std::vector<Perm> gens;
    std::vector<int32_t> orbit;
    std::vector<int32_t> pos;  // pos[x] = index in orbit, or -1
    std::vector<Perm> reps;    // reps[i] maps point to orbit[i]
  };

  void append_level(int32_t point);
  void rebuild_orbit(size_t i);
  void insert_strong_generator(const Perm& g);
  bool verify_once();
  std::pair<Perm, size_t> sift(Perm g, size_t from) const;

  int32_t degree_;
  std::vector<Perm> input_gens_;
  std::vector<int32_t> base_;
  std::vector<Level> levels_;
};

// Group generated by all right translations, with base point 0 first.
// For tables carrying (p,q) coordinates the two-generator property
// <R_a, R_b> = RMlt is verified by order comparison.
PermGroup rmlt(const LoopTable& t);

// Stabilizer of the identity inside rmlt(t).
PermGroup rinn(const LoopTable& t);

struct SylowAudit {
  bool normal = false;
  bool elementary_abelian = false;
  uint64_t order = 0;  // number of elements of p-power order
};

// Collects every element of p-power order by full enumeration; the set is
// the unique Sylow p-subgroup exactly when it is closed under the product.
SylowAudit sylow_p_audit(const PermGroup& g, int64_t p);

struct JExtensionAudit {
  bool fixed_eq_rinn = false;
  bool antifixed_eq_section = false;
};

// With J the inversion map of a right Bruck loop of odd order, checks that
// the fixed points of conjugation by J on RMlt are exactly RInn and the
// anti-fixed points are exactly the right section.
JExtensionAudit j_extension_audit(const LoopTable& t);

}  // namespace bolpq
