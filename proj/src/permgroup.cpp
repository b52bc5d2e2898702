#include "bolpq/permgroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace bolpq {

bool Perm::is_identity() const {
  for (int32_t i = 0; i < degree(); ++i) {
    if (img[static_cast<size_t>(i)] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.img.resize(img.size());
  for (int32_t i = 0; i < degree(); ++i) r.img[static_cast<size_t>(img[static_cast<size_t>(i)])] = i;
  return r;
}

int64_t Perm::order() const {
  std::vector<bool> seen(img.size(), false);
  int64_t ord = 1;
  for (int32_t s = 0; s < degree(); ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    int64_t len = 0;
    int32_t x = s;
    do {
      seen[static_cast<size_t>(x)] = true;
      x = img[static_cast<size_t>(x)];
      ++len;
    } while (x != s);
    ord = std::lcm(ord, len);
  }
  return ord;
}

Perm compose(const Perm& f, const Perm& g) {
  Perm r;
  r.img.resize(f.img.size());
  for (size_t i = 0; i < f.img.size(); ++i) {
    r.img[i] = g.img[static_cast<size_t>(f.img[i])];
  }
  return r;
}

PermGroup::PermGroup(int32_t degree, std::vector<Perm> generators,
                     std::vector<int32_t> initial_base)
    : degree_(degree) {
  for (int32_t b : initial_base) append_level(b);
  for (Perm& g : generators) {
    if (g.degree() != degree_) throw error("generator degree mismatch");
    if (!g.is_identity()) input_gens_.push_back(std::move(g));
  }
  for (const Perm& g : input_gens_) {
    if (contains(g)) continue;  // chain is verified between insertions
    insert_strong_generator(g);
    while (!verify_once()) {
    }
  }
}

void PermGroup::append_level(int32_t point) {
  Level l;
  l.point = point;
  levels_.push_back(std::move(l));
  base_.push_back(point);
  rebuild_orbit(levels_.size() - 1);
}

void PermGroup::rebuild_orbit(size_t i) {
  Level& l = levels_[i];
  l.orbit.assign(1, l.point);
  l.pos.assign(static_cast<size_t>(degree_), -1);
  l.pos[static_cast<size_t>(l.point)] = 0;
  l.reps.assign(1, Perm::identity(degree_));
  for (size_t head = 0; head < l.orbit.size(); ++head) {
    int32_t x = l.orbit[head];
    for (const Perm& s : l.gens) {
      int32_t y = s[x];
      if (l.pos[static_cast<size_t>(y)] < 0) {
        l.pos[static_cast<size_t>(y)] = static_cast<int32_t>(l.orbit.size());
        l.orbit.push_back(y);
        l.reps.push_back(compose(l.reps[head], s));
      }
    }
  }
}

void PermGroup::insert_strong_generator(const Perm& g) {
  size_t j = 0;
  while (j < base_.size() && g[base_[j]] == base_[j]) ++j;
  if (j == base_.size()) {
    int32_t moved = -1;
    for (int32_t x = 0; x < degree_; ++x) {
      if (g[x] != x) {
        moved = x;
        break;
      }
    }
    if (moved < 0) return;  // identity
    append_level(moved);
  }
  for (size_t k = 0; k <= j; ++k) levels_[k].gens.push_back(g);
  for (size_t k = 0; k <= j; ++k) rebuild_orbit(k);
}

bool PermGroup::verify_once() {
  for (size_t i = 0; i < levels_.size(); ++i) {
    Level& l = levels_[i];
    for (size_t oi = 0; oi < l.orbit.size(); ++oi) {
      for (const Perm& s : l.gens) {
        int32_t y = s[l.orbit[oi]];
        Perm schreier =
            compose(compose(l.reps[oi], s), l.reps[static_cast<size_t>(l.pos[static_cast<size_t>(y)])].inverse());
        auto [residue, lvl] = sift(std::move(schreier), i + 1);
        if (!residue.is_identity()) {
          insert_strong_generator(residue);
          return false;
        }
      }
    }
  }
  return true;
}

std::pair<Perm, size_t> PermGroup::sift(Perm g, size_t from) const {
  for (size_t i = from; i < levels_.size(); ++i) {
    const Level& l = levels_[i];
    int32_t x = g[l.point];
    if (x == l.point) continue;
    int32_t idx = l.pos[static_cast<size_t>(x)];
    if (idx < 0) return {std::move(g), i};
    g = compose(g, l.reps[static_cast<size_t>(idx)].inverse());
  }
  return {std::move(g), levels_.size()};
}

uint64_t PermGroup::order() const {
  uint64_t o = 1;
  for (const Level& l : levels_) o *= l.orbit.size();
  return o;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  return sift(g, 0).first.is_identity();
}

std::vector<Perm> PermGroup::strong_generators(size_t level) const {
  if (level >= levels_.size()) return {};
  return levels_[level].gens;
}

std::vector<Perm> PermGroup::elements(uint64_t limit) const {
  std::vector<Perm> out;
  std::unordered_set<Perm, PermHash> seen;
  out.push_back(Perm::identity(degree_));
  seen.insert(out[0]);
  for (size_t head = 0; head < out.size(); ++head) {
    Perm current = out[head];  // copy: out may reallocate
    for (const Perm& g : input_gens_) {
      Perm next = compose(current, g);
      if (seen.insert(next).second) {
        if (seen.size() > limit) {
          throw enumeration_limit("group enumeration exceeds the element limit");
        }
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

PermGroup rmlt(const LoopTable& t) {
  if (!is_loop(t)) throw error("rmlt needs a loop table");
  const int32_t n = t.n;
  std::vector<Perm> gens;
  gens.reserve(static_cast<size_t>(n));
  for (int32_t u = 1; u < n; ++u) {
    Perm r;
    r.img.resize(static_cast<size_t>(n));
    for (int32_t v = 0; v < n; ++v) r.img[static_cast<size_t>(v)] = t.at(v, u);
    gens.push_back(std::move(r));
  }
  PermGroup g(n, std::move(gens), {0});

  if (t.meta) {
    const int32_t a = static_cast<int32_t>(t.meta->p);
    const int32_t b = 1;
    Perm ra, rb;
    ra.img.resize(static_cast<size_t>(n));
    rb.img.resize(static_cast<size_t>(n));
    for (int32_t v = 0; v < n; ++v) {
      ra.img[static_cast<size_t>(v)] = t.at(v, a);
      rb.img[static_cast<size_t>(v)] = t.at(v, b);
    }
    PermGroup two(n, {ra, rb}, {0});
    if (two.order() != g.order()) {
      throw std::logic_error("<R_a, R_b> does not generate the right multiplication group");
    }
  }
  return g;
}

PermGroup rinn(const LoopTable& t) {
  PermGroup g = rmlt(t);
  PermGroup h(t.n, g.strong_generators(1));
  if (h.order() * static_cast<uint64_t>(t.n) != g.order()) {
    throw std::logic_error("|RInn| * |Q| != |RMlt|");
  }
  return h;
}

namespace {

bool is_p_power(int64_t k, int64_t p) {
  while (k % p == 0) k /= p;
  return k == 1;
}

}  // namespace

SylowAudit sylow_p_audit(const PermGroup& g, int64_t p) {
  std::vector<Perm> elems = g.elements();
  std::vector<Perm> pelems;
  for (const Perm& e : elems) {
    if (is_p_power(e.order(), p)) pelems.push_back(e);
  }

  SylowAudit audit;
  audit.order = pelems.size();

  if (pelems.size() <= 4096) {
    std::unordered_set<Perm, PermHash> set(pelems.begin(), pelems.end());
    audit.normal = true;
    for (const Perm& x : pelems) {
      for (const Perm& y : pelems) {
        if (!set.count(compose(x, y))) {
          audit.normal = false;
          break;
        }
      }
      if (!audit.normal) break;
    }
    audit.elementary_abelian = true;
    for (const Perm& x : pelems) {
      if (!x.is_identity() && x.order() != p) {
        audit.elementary_abelian = false;
        break;
      }
    }
    for (size_t i = 0; i < pelems.size() && audit.elementary_abelian; ++i) {
      for (size_t j = i + 1; j < pelems.size(); ++j) {
        if (!(compose(pelems[i], pelems[j]) == compose(pelems[j], pelems[i]))) {
          audit.elementary_abelian = false;
          break;
        }
      }
    }
  } else {
    // closure of the set is equivalent to <set> having the same size
    PermGroup h(g.degree(), pelems);
    audit.normal = h.order() == pelems.size();
    audit.elementary_abelian = true;
    for (const Perm& x : pelems) {
      if (!x.is_identity() && x.order() != p) {
        audit.elementary_abelian = false;
        break;
      }
    }
    std::vector<Perm> sgens = h.strong_generators(0);
    for (size_t i = 0; i < sgens.size() && audit.elementary_abelian; ++i) {
      for (size_t j = i + 1; j < sgens.size(); ++j) {
        if (!(compose(sgens[i], sgens[j]) == compose(sgens[j], sgens[i]))) {
          audit.elementary_abelian = false;
          break;
        }
      }
    }
  }
  return audit;
}

JExtensionAudit j_extension_audit(const LoopTable& t) {
  if (t.n % 2 == 0 || !is_right_bol(t) || !has_aip(t)) {
    throw requires_bruck("J-extension audit needs a right Bruck loop of odd order");
  }
  PermGroup g = rmlt(t);
  std::vector<Perm> elems = g.elements();

  Perm j;
  j.img.resize(static_cast<size_t>(t.n));
  for (int32_t x = 0; x < t.n; ++x) j.img[static_cast<size_t>(x)] = inverse_element(t, x);

  std::unordered_set<Perm, PermHash> section;
  for (int32_t u = 0; u < t.n; ++u) {
    Perm r;
    r.img.resize(static_cast<size_t>(t.n));
    for (int32_t v = 0; v < t.n; ++v) r.img[static_cast<size_t>(v)] = t.at(v, u);
    section.insert(std::move(r));
  }

  JExtensionAudit audit;
  audit.fixed_eq_rinn = true;
  audit.antifixed_eq_section = true;
  for (const Perm& phi : elems) {
    Perm conj = compose(compose(j, phi), j);
    bool fixed = conj == phi;
    bool in_rinn = phi[0] == 0;
    if (fixed != in_rinn) audit.fixed_eq_rinn = false;
    bool anti = conj == phi.inverse();
    bool in_section = section.count(phi) > 0;
    if (anti != in_section) audit.antifixed_eq_section = false;
    if (!audit.fixed_eq_rinn && !audit.antifixed_eq_section) break;
  }
  return audit;
}

}  // namespace bolpq
