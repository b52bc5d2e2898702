#pragma once

#include <string>

#include <json.hpp>

#include "bolpq/classify.hpp"
#include "bolpq/loop.hpp"
#include "bolpq/permgroup.hpp"
#include "bolpq/spectrum.hpp"

namespace bolpq {

// Image array [0^g, 1^g, ...].
nlohmann::json perm_to_json(const Perm& g);

// {"n":.., "p":.., "q":.., "table":[[..],..]}  (0-based entries;
// p and q only when the table carries them)
nlohmann::json table_to_json(const LoopTable& t);
LoopTable table_from_json(const nlohmann::json& j);

// n rows of n comma-separated 0-based entries, LF line endings.
std::string table_to_csv(const LoopTable& t);
LoopTable table_from_csv(const std::string& text);

// LoopByCayleyTable([[...],...]); with 1-based entries, one row per line.
std::string table_to_gap(const LoopTable& t);
LoopTable table_from_gap(const std::string& text);

// {"lambda":.., "gamma":[u,v]|null, "u":[..], "theta":[..]}
nlohmann::json seq_to_json(const SolutionSeq& s);

nlohmann::json fp2_to_json(const Fp2& x);

nlohmann::json report_to_json(const ClassificationReport& rep);

}  // namespace bolpq
