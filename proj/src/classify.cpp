#include "bolpq/classify.hpp"

#include <stdexcept>

namespace bolpq {

std::vector<SolutionSeq> class_representatives(const FieldCtx& ctx) {
  std::vector<SolutionSeq> reps;
  reps.push_back(all_ones_seq(ctx));
  if (ctx.has_omega()) {
    GammaSets gs = build_gamma_sets(ctx);
    for (const Fp2& g : gs.gamma_canonical) reps.push_back(theta_from_gamma(ctx, g));
  }
  return reps;
}

namespace {

// Partition by seq_isomorphic; returns one index per class, first seen.
std::vector<size_t> iso_class_leaders(const std::vector<SolutionSeq>& seqs) {
  std::vector<size_t> leaders;
  for (size_t i = 0; i < seqs.size(); ++i) {
    bool placed = false;
    for (size_t lead : leaders) {
      if (seq_isomorphic(seqs[i], seqs[lead])) {
        placed = true;
        break;
      }
    }
    if (!placed) leaders.push_back(i);
  }
  return leaders;
}

void audit_entry(const FieldCtx& ctx, GammaEntry& entry, const LoopTable& table,
                 std::vector<std::string>& failures) {
  const int64_t p = ctx.p;
  const int64_t q = ctx.q;
  auto label = [&]() {
    if (!entry.seq.gamma) return std::string("cyclic");
    return "gamma=(" + std::to_string(entry.seq.gamma->u) + "," +
           std::to_string(entry.seq.gamma->v) + ")";
  };
  auto fail = [&](const std::string& what) { failures.push_back(label() + ": " + what); };

  if (!is_loop(table)) fail("table is not a loop");
  if (!is_right_bol(table)) fail("right Bol identity fails");
  if (entry.seq.gamma) {
    if (!circulant_eigencheck(ctx, entry.seq)) fail("circulant eigencheck fails");
  }

  PermGroup g = rmlt(table);
  GroupAuditReport gr;
  gr.order = g.order();
  gr.sylow = sylow_p_audit(g, p);
  gr.rinn_order = PermGroup(table.n, g.strong_generators(1)).order();
  if (gr.rinn_order * static_cast<uint64_t>(table.n) != gr.order) {
    fail("|RInn| * |Q| != |RMlt|");
  }
  if (entry.bruck) {
    JExtensionAudit jx = j_extension_audit(table);
    gr.j_extension = jx;
    if (!jx.fixed_eq_rinn) fail("fixed points of J are not RInn");
    if (!jx.antifixed_eq_section) fail("anti-fixed points of J are not the right section");
  }

  if (!entry.group) {
    if (entry.lnuc_size != p) fail("left nucleus size != p");
    if (entry.mnuc_size != 1 || entry.rnuc_size != 1) fail("middle or right nucleus nontrivial");
    auto sub = unique_order_p_subloop(table);
    if (!sub) {
      fail("no unique subloop of order p");
    } else {
      Nuclei nu = nuclei(table);
      if (nu.left != *sub) fail("left nucleus differs from the order-p subloop");
      if (!is_normal_subloop(table, *sub)) fail("order-p subloop is not normal");
    }
    uint64_t pq2 = static_cast<uint64_t>(p) * p * q;
    uint64_t pq3 = pq2 * static_cast<uint64_t>(p);
    if (entry.rmlt_order != pq2 && entry.rmlt_order != pq3) {
      fail("|RMlt| is neither p^2 q nor p^3 q");
    }
    if (!gr.sylow.normal) fail("Sylow p-subgroup of RMlt is not normal");
    if (entry.bruck) {
      if (entry.rmlt_order != pq2) fail("|RMlt| of the Bruck loop != p^2 q");
      if (!gr.sylow.elementary_abelian) {
        fail("Sylow p-subgroup of Bruck RMlt not elementary abelian");
      }
    }
  } else {
    if (!is_associative(table)) fail("group flag set on a nonassociative table");
  }
  entry.rmlt_report = gr;
}

}  // namespace

ClassificationReport classify_pq(int64_t p, int64_t q, const ClassifyOptions& opt) {
  FieldCtx ctx = make_context(p, q);

  ClassificationReport rep;
  rep.p = p;
  rep.q = q;
  rep.root_case = ctx.root_case;
  rep.t = ctx.t;
  if (ctx.has_omega()) rep.omega = ctx.omega;

  // every valid sequence: all-ones plus the whole of Gamma'
  std::vector<SolutionSeq> all;
  all.push_back(all_ones_seq(ctx));
  size_t canonical_count = 0;
  if (ctx.has_omega()) {
    GammaSets gs = build_gamma_sets(ctx);
    for (const Fp2& g : gs.gamma_good) all.push_back(theta_from_gamma(ctx, g));
    canonical_count = gs.gamma_canonical.size();
  }
  std::vector<size_t> leaders = iso_class_leaders(all);
  rep.iso_count = static_cast<int64_t>(leaders.size());
  if (rep.iso_count != static_cast<int64_t>(1 + canonical_count)) {
    throw std::logic_error("class count does not match the canonical transversal");
  }

  std::vector<SolutionSeq> reps = class_representatives(ctx);
  for (const SolutionSeq& seq : reps) {
    GammaEntry e;
    e.seq = seq;
    e.bruck = is_bruck_seq(seq);
    if (opt.entry_details) {
      LoopTable table = build_bol_loop(ctx, seq);
      e.group = is_associative(table);
      e.rmlt_order = rmlt(table).order();
      Nuclei nu = nuclei(table);
      e.lnuc_size = static_cast<int64_t>(nu.left.size());
      e.mnuc_size = static_cast<int64_t>(nu.middle.size());
      e.rnuc_size = static_cast<int64_t>(nu.right.size());
    }
    rep.entries.push_back(std::move(e));
  }

  if (opt.isotopy) rep.isotopy_count = isotopy_class_count(ctx, reps);

  if (opt.audit) {
    if (!opt.entry_details) throw std::logic_error("audit requires entry details");
    for (GammaEntry& e : rep.entries) {
      LoopTable table = build_bol_loop(ctx, e.seq);
      audit_entry(ctx, e, table, rep.audit_failures);
    }
    int64_t nonassoc_bruck = 0;
    const int64_t half = ctx.fp.half();
    for (const GammaEntry& e : rep.entries) {
      if (e.bruck && !e.group) {
        ++nonassoc_bruck;
        if (!e.seq.gamma || !(*e.seq.gamma == Fp2{half, 0})) {
          rep.audit_failures.push_back("nonassociative Bruck entry is not gamma = 1/2");
        }
      }
    }
    if (ctx.has_omega() && nonassoc_bruck != 1) {
      rep.audit_failures.push_back("expected exactly one nonassociative Bruck class");
    }
    int64_t expected = ctx.has_omega() ? (p - q + 4) / 2 : 1;
    if (rep.iso_count != expected) {
      rep.audit_failures.push_back("isomorphism class count differs from (p-q+4)/2");
    }
    rep.audit_passed = rep.audit_failures.empty();
  }
  return rep;
}

int64_t isotopy_class_count(const FieldCtx& ctx, const std::vector<SolutionSeq>& reps) {
  std::vector<size_t> leaders;
  for (size_t i = 0; i < reps.size(); ++i) {
    bool placed = false;
    for (size_t lead : leaders) {
      if (seq_isotopic(ctx.fp, reps[i], reps[lead])) {
        placed = true;
        break;
      }
    }
    if (!placed) leaders.push_back(i);
  }
  return static_cast<int64_t>(leaders.size());
}

int64_t conjecture_3p_prediction(int64_t p) { return (p + 5) / 6 + 1; }

}  // namespace bolpq
