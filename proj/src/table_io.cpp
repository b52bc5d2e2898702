#include "bolpq/table_io.hpp"

#include <cctype>
#include <sstream>

namespace bolpq {

using nlohmann::json;

json table_to_json(const LoopTable& t) {
  json j;
  j["n"] = t.n;
  if (t.meta) {
    j["p"] = t.meta->p;
    j["q"] = t.meta->q;
  }
  json rows = json::array();
  for (int32_t x = 0; x < t.n; ++x) {
    json row = json::array();
    for (int32_t y = 0; y < t.n; ++y) row.push_back(t.at(x, y));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j;
}

LoopTable table_from_json(const json& j) {
  LoopTable t;
  t.n = j.at("n").get<int32_t>();
  if (j.contains("p") && j.contains("q") && !j["p"].is_null()) {
    t.meta = LoopTable::Meta{j["p"].get<int64_t>(), j["q"].get<int64_t>()};
  }
  const json& rows = j.at("table");
  if (static_cast<int32_t>(rows.size()) != t.n) throw error("table row count != n");
  t.cells.reserve(static_cast<size_t>(t.n) * t.n);
  for (const json& row : rows) {
    if (static_cast<int32_t>(row.size()) != t.n) throw error("table column count != n");
    for (const json& cell : row) t.cells.push_back(cell.get<int32_t>());
  }
  return t;
}

std::string table_to_csv(const LoopTable& t) {
  std::ostringstream os;
  for (int32_t x = 0; x < t.n; ++x) {
    for (int32_t y = 0; y < t.n; ++y) {
      if (y) os << ',';
      os << t.at(x, y);
    }
    os << '\n';
  }
  return os.str();
}

LoopTable table_from_csv(const std::string& text) {
  std::vector<std::vector<int32_t>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<int32_t> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(static_cast<int32_t>(std::stol(cell)));
    rows.push_back(std::move(row));
  }
  LoopTable t;
  t.n = static_cast<int32_t>(rows.size());
  for (const auto& row : rows) {
    if (static_cast<int32_t>(row.size()) != t.n) throw error("ragged CSV table");
    t.cells.insert(t.cells.end(), row.begin(), row.end());
  }
  return t;
}

std::string table_to_gap(const LoopTable& t) {
  std::ostringstream os;
  os << "LoopByCayleyTable([\n";
  for (int32_t x = 0; x < t.n; ++x) {
    os << '[';
    for (int32_t y = 0; y < t.n; ++y) {
      if (y) os << ',';
      os << t.at(x, y) + 1;
    }
    os << ']';
    if (x + 1 < t.n) os << ',';
    os << '\n';
  }
  os << "]);\n";
  return os.str();
}

LoopTable table_from_gap(const std::string& text) {
  if (text.find("LoopByCayleyTable") == std::string::npos) {
    throw error("missing LoopByCayleyTable constructor");
  }
  std::vector<std::vector<int32_t>> rows;
  size_t i = text.find('(');
  int depth = 0;
  std::vector<int32_t>* current = nullptr;
  std::vector<int32_t> row;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '[') {
      ++depth;
      if (depth == 2) {
        row.clear();
        current = &row;
      }
    } else if (c == ']') {
      if (depth == 2 && current) {
        rows.push_back(row);
        current = nullptr;
      }
      --depth;
    } else if (std::isdigit(static_cast<unsigned char>(c)) && current) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      current->push_back(static_cast<int32_t>(std::stol(text.substr(i, j - i))) - 1);
      i = j - 1;
    }
  }
  LoopTable t;
  t.n = static_cast<int32_t>(rows.size());
  for (const auto& r : rows) {
    if (static_cast<int32_t>(r.size()) != t.n) throw error("ragged GAP table");
    t.cells.insert(t.cells.end(), r.begin(), r.end());
  }
  return t;
}

json perm_to_json(const Perm& g) { return json(g.img); }

json fp2_to_json(const Fp2& x) { return json::array({x.u, x.v}); }

json seq_to_json(const SolutionSeq& s) {
  json j;
  j["lambda"] = s.lambda;
  j["gamma"] = s.gamma ? fp2_to_json(*s.gamma) : json(nullptr);
  j["u"] = s.u;
  j["theta"] = s.theta;
  return j;
}

json report_to_json(const ClassificationReport& rep) {
  json j;
  j["schema"] = 1;
  j["p"] = rep.p;
  j["q"] = rep.q;
  j["case"] = to_string(rep.root_case);
  j["t"] = rep.t;
  j["omega"] = rep.omega ? fp2_to_json(*rep.omega) : json(nullptr);
  json entries = json::array();
  for (const GammaEntry& e : rep.entries) {
    json je = seq_to_json(e.seq);
    if (e.seq.gamma) {
      // the user-facing parameter: gamma itself when q | p-1, the
      // coefficient m of 1/2 + m*sqrt(t) when q | p+1
      je["gamma_param"] =
          rep.root_case == RootCase::q_divides_p_minus_1 ? e.seq.gamma->u : e.seq.gamma->v;
    } else {
      je["gamma_param"] = nullptr;
    }
    je["bruck"] = e.bruck;
    je["group"] = e.group;
    je["rmlt_order"] = e.rmlt_order;
    je["nuclei"] = {{"left", e.lnuc_size}, {"middle", e.mnuc_size}, {"right", e.rnuc_size}};
    if (e.rmlt_report) {
      json jg;
      jg["order"] = e.rmlt_report->order;
      jg["sylow"] = {{"normal", e.rmlt_report->sylow.normal},
                     {"elementary_abelian", e.rmlt_report->sylow.elementary_abelian},
                     {"order", e.rmlt_report->sylow.order}};
      jg["rinn_order"] = e.rmlt_report->rinn_order;
      if (e.rmlt_report->j_extension) {
        jg["j_extension"] = {{"fixed_eq_rinn", e.rmlt_report->j_extension->fixed_eq_rinn},
                             {"antifixed_eq_section", e.rmlt_report->j_extension->antifixed_eq_section}};
      }
      je["rmlt"] = std::move(jg);
    }
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  j["iso_count"] = rep.iso_count;
  if (rep.isotopy_count) j["isotopy_count"] = *rep.isotopy_count;
  if (rep.audit_passed) {
    j["audit"] = {{"passed", *rep.audit_passed}, {"failures", rep.audit_failures}};
  }
  return j;
}

}  // namespace bolpq
