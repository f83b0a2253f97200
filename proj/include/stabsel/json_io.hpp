#pragma once

#include <json.hpp>

#include "stabsel/core.hpp"
#include "stabsel/lottery_solver.hpp"
#include "stabsel/rounding.hpp"
#include "stabsel/stability.hpp"

namespace stabsel {

using json = nlohmann::json;

// Instance:
//   {"m": int, "n": int, "K": number,
//    "weights": {"mode":"additive","s":[...]} |
//               {"mode":"multi","w":[[...]],"limits":[...]},
//    "preference": {"type":"approval","sets":[[int]]} | ...}
json instance_to_json(const Instance& inst);
Instance instance_from_json(const json& j);  // throws std::invalid_argument

// Lottery: {"K": number, "support": [{"committee":[int],"prob":number}]}
json lottery_to_json(const Lottery& lot);
Lottery lottery_from_json(const json& j);

// {"target_c":..., "stable":..., "worst_ratio":..., "worst_blocker":[...]|null,
//  "bound":"all"|{"L":int}}
json report_to_json(const StabilityReport& rep);

json game_solution_to_json(const GameSolution& sol);

json round_record_to_json(const RoundRecord& rec);

}  // namespace stabsel
