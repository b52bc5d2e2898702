#include <doctest.h>

#include <algorithm>

#include "bolpq/permgroup.hpp"
#include "bolpq/spectrum.hpp"

using namespace bolpq;

namespace {

LoopTable make_cyclic(int32_t n) {
  LoopTable t;
  t.n = n;
  t.cells.resize(static_cast<size_t>(n) * n);
  for (int32_t x = 0; x < n; ++x) {
    for (int32_t y = 0; y < n; ++y) t.cells[static_cast<size_t>(x) * n + y] = (x + y) % n;
  }
  return t;
}

Perm cycle(int32_t n, std::vector<int32_t> pts) {
  Perm p = Perm::identity(n);
  for (size_t i = 0; i < pts.size(); ++i) {
    p.img[static_cast<size_t>(pts[i])] = pts[(i + 1) % pts.size()];
  }
  return p;
}

LoopTable build_gamma_loop(int64_t p, int64_t q, Fp2 gamma) {
  FieldCtx ctx = make_context(p, q);
  return build_bol_loop(ctx, theta_from_gamma(ctx, gamma));
}

}  // namespace

TEST_CASE("stabilizer chain order matches brute-force enumeration") {
  SUBCASE("trivial group") {
    PermGroup g(5, {});
    CHECK(g.order() == 1);
    CHECK(g.contains(Perm::identity(5)));
    CHECK_FALSE(g.contains(cycle(5, {0, 1})));
  }
  SUBCASE("single pq-cycle") {
    PermGroup g(15, {cycle(15, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14})});
    CHECK(g.order() == 15);
    CHECK(g.elements().size() == 15);
  }
  SUBCASE("symmetric group S_4") {
    PermGroup g(4, {cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})});
    CHECK(g.order() == 24);
    CHECK(g.elements().size() == 24);
  }
  SUBCASE("dihedral group of order 14") {
    Perm rot = cycle(7, {0, 1, 2, 3, 4, 5, 6});
    Perm flip = Perm::identity(7);
    for (int32_t i = 0; i < 7; ++i) flip.img[static_cast<size_t>(i)] = (7 - i) % 7;
    PermGroup g(7, {rot, flip});
    CHECK(g.order() == 14);
    CHECK(g.elements().size() == 14);
  }
  SUBCASE("membership by sifting") {
    Perm rot = cycle(6, {0, 1, 2, 3, 4, 5});
    PermGroup g(6, {rot});
    CHECK(g.contains(compose(rot, rot)));
    CHECK_FALSE(g.contains(cycle(6, {0, 1})));
    auto elems = g.elements();
    for (const Perm& e : elems) CHECK(g.contains(e));
  }
}

TEST_CASE("chain order equals enumeration on every rmlt in the small corpus") {
  std::vector<LoopTable> corpus;
  corpus.push_back(make_cyclic(15));
  corpus.push_back(build_gamma_loop(7, 3, {4, 0}));
  corpus.push_back(build_gamma_loop(7, 3, {3, 0}));
  corpus.push_back(build_gamma_loop(7, 3, {1, 0}));
  corpus.push_back(build_gamma_loop(5, 3, {3, 0}));
  corpus.push_back(build_gamma_loop(5, 3, {3, 2}));
  for (const LoopTable& t : corpus) {
    PermGroup g = rmlt(t);
    CHECK(g.order() == g.elements().size());
  }
}

TEST_CASE("rmlt orders") {
  CHECK(rmlt(make_cyclic(15)).order() == 15);

  PermGroup b73 = rmlt(build_gamma_loop(7, 3, {4, 0}));
  CHECK(b73.order() == 147);  // p^2 q

  uint64_t g3 = rmlt(build_gamma_loop(7, 3, {3, 0})).order();
  CHECK((g3 == 147 || g3 == 1029));

  CHECK(rmlt(build_gamma_loop(5, 3, {3, 0})).order() == 75);
}

TEST_CASE("rinn") {
  CHECK(rinn(make_cyclic(15)).order() == 1);

  LoopTable b = build_gamma_loop(7, 3, {4, 0});
  PermGroup inner = rinn(b);
  CHECK(inner.order() == 7);  // 147 / 21

  // fixed points of RInn are exactly the left nucleus
  Nuclei nu = nuclei(b);
  auto elems = inner.elements();
  std::vector<int32_t> fixed;
  for (int32_t x = 0; x < b.n; ++x) {
    bool all_fix = true;
    for (const Perm& e : elems) {
      if (e[x] != x) {
        all_fix = false;
        break;
      }
    }
    if (all_fix) fixed.push_back(x);
  }
  CHECK(fixed == nu.left);
}

TEST_CASE("|RMlt| divisibility and Sylow normality on nonassociative loops") {
  for (auto [p, q] : {std::pair<int64_t, int64_t>{5, 3}, {7, 3}, {11, 3}}) {
    FieldCtx ctx = make_context(p, q);
    GammaSets gs = build_gamma_sets(ctx);
    for (const Fp2& g : gs.gamma_canonical) {
      LoopTable t = build_bol_loop(ctx, theta_from_gamma(ctx, g));
      if (is_associative(t)) continue;
      PermGroup rm = rmlt(t);
      uint64_t o = rm.order();
      uint64_t p2q = static_cast<uint64_t>(p) * p * q;
      CHECK((o == p2q || o == p2q * p));
      CHECK(o % static_cast<uint64_t>(t.n) == 0);
      SylowAudit audit = sylow_p_audit(rm, p);
      CHECK(audit.normal);
    }
  }
}

TEST_CASE("sylow audit examples") {
  SylowAudit b73 = sylow_p_audit(rmlt(build_gamma_loop(7, 3, {4, 0})), 7);
  CHECK(b73.normal);
  CHECK(b73.elementary_abelian);
  CHECK(b73.order == 49);

  SylowAudit z15 = sylow_p_audit(rmlt(make_cyclic(15)), 5);
  CHECK(z15.normal);
  CHECK(z15.elementary_abelian);
  CHECK(z15.order == 5);

  // nonabelian group of order 21 = gamma = 1 over (7,3)
  LoopTable na21 = build_gamma_loop(7, 3, {1, 0});
  REQUIRE(is_associative(na21));
  SylowAudit s21 = sylow_p_audit(rmlt(na21), 7);
  CHECK(s21.normal);
  CHECK(s21.elementary_abelian);
  CHECK(s21.order == 7);
}

TEST_CASE("J-extension audit") {
  JExtensionAudit b73 = j_extension_audit(build_gamma_loop(7, 3, {4, 0}));
  CHECK(b73.fixed_eq_rinn);
  CHECK(b73.antifixed_eq_section);

  JExtensionAudit b53 = j_extension_audit(build_gamma_loop(5, 3, {3, 0}));
  CHECK(b53.fixed_eq_rinn);
  CHECK(b53.antifixed_eq_section);

  JExtensionAudit z15 = j_extension_audit(make_cyclic(15));
  CHECK(z15.fixed_eq_rinn);
  CHECK(z15.antifixed_eq_section);

  CHECK_THROWS_AS(j_extension_audit(build_gamma_loop(7, 3, {3, 0})), requires_bruck);
}

TEST_CASE("|RMlt| has the same prime divisors as the loop order") {
  auto prime_divisors = [](uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        out.push_back(d);
        while (n % d == 0) n /= d;
      }
    }
    if (n > 1) out.push_back(n);
    return out;
  };
  FieldCtx c11 = make_context(11, 3);
  GammaSets gs11 = build_gamma_sets(c11);
  std::vector<LoopTable> corpus = {
      make_cyclic(15),
      build_gamma_loop(7, 3, {4, 0}),
      build_gamma_loop(7, 3, {3, 0}),
      build_bol_loop(c11, theta_from_gamma(c11, gs11.gamma_canonical[1])),
  };
  for (const LoopTable& t : corpus) {
    CHECK(prime_divisors(rmlt(t).order()) == prime_divisors(static_cast<uint64_t>(t.n)));
  }
}

TEST_CASE("twisted section closure seen from the permutation side") {
  LoopTable t = build_gamma_loop(7, 3, {3, 0});
  std::vector<Perm> r(static_cast<size_t>(t.n));
  for (int32_t u = 0; u < t.n; ++u) {
    r[static_cast<size_t>(u)].img.resize(static_cast<size_t>(t.n));
    for (int32_t v = 0; v < t.n; ++v) r[static_cast<size_t>(u)].img[static_cast<size_t>(v)] = t.at(v, u);
  }
  for (int32_t u = 0; u < t.n; ++u) {
    for (int32_t v = 0; v < t.n; ++v) {
      Perm lhs = compose(compose(r[static_cast<size_t>(u)], r[static_cast<size_t>(v)]),
                         r[static_cast<size_t>(u)]);
      CHECK(lhs == r[static_cast<size_t>(t.at(t.at(u, v), u))]);
    }
  }
}
