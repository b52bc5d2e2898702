#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bolpq/classify.hpp"
#include "bolpq/fields.hpp"
#include "bolpq/loop.hpp"
#include "bolpq/oracle.hpp"
#include "bolpq/permgroup.hpp"
#include "bolpq/spectrum.hpp"
#include "bolpq/table_io.hpp"

using nlohmann::json;

namespace {

// Exit codes are a stable contract:
//   0 ok, 2 no-divide, 3 bad gamma, 4 audit failure, 5 enumeration limit,
//   1 anything else.
constexpr int kExitNoDivide = 2;
constexpr int kExitBadGamma = 3;
constexpr int kExitAuditFailure = 4;
constexpr int kExitEnumerationLimit = 5;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw bolpq::error("cannot open output file: " + out_path);
  os << text;
}

struct ConstructArgs {
  int64_t p = 0;
  int64_t q = 0;
  std::optional<int64_t> gamma;
  std::optional<int64_t> gamma_m;
  std::optional<int64_t> gamma_index;
  bool cyclic = false;
  std::string format = "json";
  std::string out;
};

int cmd_construct(const ConstructArgs& args) {
  bolpq::FieldCtx ctx = bolpq::make_context(args.p, args.q);

  bolpq::SolutionSeq seq;
  if (args.cyclic) {
    seq = bolpq::all_ones_seq(ctx);
  } else {
    if (!ctx.has_omega()) {
      std::cerr << "only the cyclic group exists: q divides neither p-1 nor p+1"
                << " (use --cyclic to construct it)\n";
      return kExitNoDivide;
    }
    bolpq::Fp2 gamma;
    if (args.gamma) {
      if (ctx.root_case != bolpq::RootCase::q_divides_p_minus_1) {
        std::cerr << "--gamma takes a base-field value and needs q | p-1; use --gamma-m here\n";
        return kExitBadGamma;
      }
      gamma = {ctx.fp.reduce(*args.gamma), 0};
    } else if (args.gamma_m) {
      if (ctx.root_case != bolpq::RootCase::q_divides_p_plus_1) {
        std::cerr << "--gamma-m selects 1/2 + m*sqrt(t) and needs q | p+1; use --gamma here\n";
        return kExitBadGamma;
      }
      gamma = {ctx.fp.half(), ctx.fp.reduce(*args.gamma_m)};
    } else {
      bolpq::GammaSets gs = bolpq::build_gamma_sets(ctx);
      int64_t idx = *args.gamma_index;
      if (idx < 0 || idx >= static_cast<int64_t>(gs.gamma_canonical.size())) {
        std::cerr << "--gamma-index out of range: |Gamma| = " << gs.gamma_canonical.size() << "\n";
        return kExitBadGamma;
      }
      gamma = gs.gamma_canonical[static_cast<size_t>(idx)];
    }
    seq = bolpq::theta_from_gamma(ctx, gamma);
  }

  bolpq::LoopTable table = bolpq::build_bol_loop(ctx, seq);

  json meta;
  meta["schema"] = 1;
  meta["case"] = bolpq::to_string(ctx.root_case);
  meta["t"] = ctx.t;
  meta["omega"] = ctx.has_omega() ? bolpq::fp2_to_json(ctx.omega) : json(nullptr);
  json seq_json = bolpq::seq_to_json(seq);
  for (auto& [key, value] : seq_json.items()) meta[key] = value;

  if (args.format == "json") {
    json doc = bolpq::table_to_json(table);
    for (auto& [key, value] : meta.items()) doc[key] = value;
    write_output(doc.dump(2) + "\n", args.out);
  } else {
    std::string text = args.format == "csv" ? bolpq::table_to_csv(table) : bolpq::table_to_gap(table);
    write_output(text, args.out);
    if (!args.out.empty()) std::cout << meta.dump(2) << "\n";
  }
  return 0;
}

int cmd_classify(int64_t p, int64_t q, bool isotopy, bool audit, const std::string& out) {
  bolpq::ClassifyOptions opt;
  opt.isotopy = isotopy;
  opt.audit = audit;
  bolpq::ClassificationReport rep = bolpq::classify_pq(p, q, opt);
  write_output(bolpq::report_to_json(rep).dump(2) + "\n", out);
  if (audit && !rep.audit_failures.empty()) {
    for (const std::string& f : rep.audit_failures) std::cerr << "audit: " << f << "\n";
    return kExitAuditFailure;
  }
  return 0;
}

int cmd_conjecture3p(int64_t pmax) {
  std::cout << "p\tisotopy\tpredicted\tmatch\n";
  int64_t mismatches = 0;
  int64_t checked = 0;
  for (int64_t p = 5; p < pmax; p += 2) {
    if (!bolpq::is_prime(static_cast<uint64_t>(p))) continue;
    bolpq::FieldCtx ctx = bolpq::make_context(p, 3);
    std::vector<bolpq::SolutionSeq> reps = bolpq::class_representatives(ctx);
    int64_t count = bolpq::isotopy_class_count(ctx, reps);
    int64_t predicted = bolpq::conjecture_3p_prediction(p);
    bool match = count == predicted;
    ++checked;
    if (!match) ++mismatches;
    std::cout << p << "\t" << count << "\t" << predicted << "\t"
              << (match ? "ok" : "MISMATCH") << "\n";
  }
  std::cout << "# " << checked << " primes checked, " << mismatches << " mismatches\n";
  return 0;
}

int cmd_oracle(int64_t p, int64_t q) {
  bolpq::oracle::BruteForceRun run = bolpq::oracle::run_bruteforce(p, q);
  std::vector<bolpq::LoopTable> oracle_reps = bolpq::oracle::classify_up_to_iso(run.tables);

  bolpq::FieldCtx ctx = bolpq::make_context(p, q);
  std::vector<bolpq::SolutionSeq> seqs = bolpq::class_representatives(ctx);
  std::vector<bolpq::LoopTable> constructed;
  constructed.reserve(seqs.size());
  for (const auto& s : seqs) constructed.push_back(bolpq::build_bol_loop(ctx, s));

  json matching = json::array();
  bool matched = oracle_reps.size() == constructed.size();
  for (size_t i = 0; i < oracle_reps.size(); ++i) {
    int64_t hit = -1;
    int64_t hits = 0;
    for (size_t j = 0; j < constructed.size(); ++j) {
      if (bolpq::oracle::brute_isomorphic(oracle_reps[i], constructed[j])) {
        hit = static_cast<int64_t>(j);
        ++hits;
      }
    }
    if (hits != 1) matched = false;
    matching.push_back({{"oracle_class", i}, {"constructed_entry", hit}});
  }

  json j;
  j["schema"] = 1;
  j["p"] = p;
  j["q"] = q;
  j["raw_tables"] = run.tables.size();
  j["classes"] = oracle_reps.size();
  j["linear_only"] = run.linear_only;
  j["counts"] = {{"oracle_classes", oracle_reps.size()},
                 {"constructive_classes", constructed.size()},
                 {"expected", (p - q + 4) / 2},
                 {"complete_mappings", run.complete_mapping_count},
                 {"nonlinear_complete_mappings", run.nonlinear_complete_mapping_count}};
  j["matched"] = matched;
  j["class_matching"] = std::move(matching);
  std::cout << j.dump(2) << "\n";
  return matched ? 0 : kExitAuditFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction and classification of right Bol loops of order pq"};
  app.require_subcommand(1);

  ConstructArgs cargs;
  CLI::App* construct = app.add_subcommand(
      "construct", "Build one loop table from a parameter gamma (or the cyclic group)");
  construct->add_option("--p", cargs.p, "odd prime p")->required();
  construct->add_option("--q", cargs.q, "odd prime q < p")->required();
  auto* og = construct->add_option_group("gamma", "parameter selection");
  og->add_option("--gamma", cargs.gamma, "gamma as a base-field integer (q | p-1)");
  og->add_option("--gamma-m", cargs.gamma_m, "m in gamma = 1/2 + m*sqrt(t) (q | p+1)");
  og->add_option("--gamma-index", cargs.gamma_index, "0-based index into the canonical Gamma");
  og->add_flag("--cyclic", cargs.cyclic, "the all-ones sequence (cyclic group)");
  og->require_option(1);
  construct->add_option("--format", cargs.format, "json|csv|gap")
      ->check(CLI::IsMember({"json", "csv", "gap"}))
      ->capture_default_str();
  construct->add_option("--out", cargs.out, "write the table to this file");

  int64_t p = 0, q = 0, pmax = 0;
  bool isotopy = false, audit = false;
  std::string out;
  CLI::App* classify = app.add_subcommand("classify", "Classify all right Bol loops of order pq");
  classify->add_option("--p", p, "odd prime p")->required();
  classify->add_option("--q", q, "odd prime q < p")->required();
  classify->add_flag("--isotopy", isotopy, "also count isotopism classes");
  classify->add_flag("--audit", audit, "run the structural audits (exit 4 on failure)");
  classify->add_option("--out", out, "write the report to this file");

  CLI::App* conjecture = app.add_subcommand(
      "conjecture3p", "Compare isotopism counts for q = 3 against floor((p+5)/6) + 1");
  conjecture->add_option("--pmax", pmax, "sweep all primes 3 < p < pmax")
      ->required()
      ->check(CLI::Range(int64_t{5}, int64_t{100000}));

  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "Brute-force enumeration cross-check (q = 3, p <= 7)");
  oracle_cmd->add_option("--p", p, "odd prime p")->required();
  oracle_cmd->add_option("--q", q, "odd prime q < p")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) return cmd_construct(cargs);
    if (classify->parsed()) return cmd_classify(p, q, isotopy, audit, out);
    if (conjecture->parsed()) return cmd_conjecture3p(pmax);
    if (oracle_cmd->parsed()) return cmd_oracle(p, q);
  } catch (const bolpq::bad_gamma& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadGamma;
  } catch (const bolpq::not_real_solution& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadGamma;
  } catch (const bolpq::enumeration_limit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEnumerationLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
