#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bolpq/fields.hpp"
#include "bolpq/loop.hpp"
#include "bolpq/permgroup.hpp"
#include "bolpq/spectrum.hpp"

namespace bolpq {

// Audit-time snapshot of the right multiplication group.
struct GroupAuditReport {
  uint64_t order = 0;
  SylowAudit sylow;
  uint64_t rinn_order = 0;
  std::optional<JExtensionAudit> j_extension;  // Bruck entries only
};

// One isomorphism-class representative: the all-ones sequence (cyclic
// group, gamma absent) or u(gamma) for a canonical gamma.
struct GammaEntry {
  SolutionSeq seq;
  bool bruck = false;
  bool group = false;
  uint64_t rmlt_order = 0;
  int64_t lnuc_size = 0;
  int64_t mnuc_size = 0;
  int64_t rnuc_size = 0;
  std::optional<GroupAuditReport> rmlt_report;  // filled by the audit
};

struct ClassificationReport {
  int64_t p = 0;
  int64_t q = 0;
  RootCase root_case = RootCase::no_divide;
  int64_t t = 0;
  std::optional<Fp2> omega;
  std::vector<GammaEntry> entries;  // all-ones first, then Gamma ascending
  int64_t iso_count = 0;
  std::optional<int64_t> isotopy_count;
  std::optional<bool> audit_passed;
  std::vector<std::string> audit_failures;
};

struct ClassifyOptions {
  bool isotopy = false;
  bool audit = false;
  // per-entry tables, flags, RMlt orders and nuclei; disable for
  // counting-only runs (the conjecture sweep)
  bool entry_details = true;
};

// Enumerates every valid sequence (all of Gamma' plus the all-ones),
// partitions them by seq_isomorphic, and reports one entry per class.
// For no_divide contexts the report contains the cyclic group alone.
ClassificationReport classify_pq(int64_t p, int64_t q, const ClassifyOptions& opt = {});

// Isomorphism-class representatives as sequences: all-ones first, then
// one u(gamma) per canonical gamma. Empty gamma part when no omega exists.
std::vector<SolutionSeq> class_representatives(const FieldCtx& ctx);

// Number of isotopism classes among the representatives.
int64_t isotopy_class_count(const FieldCtx& ctx, const std::vector<SolutionSeq>& reps);

int64_t conjecture_3p_prediction(int64_t p);  // floor((p+5)/6) + 1

}  // namespace bolpq
