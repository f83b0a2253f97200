#include "stabsel/json_io.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stabsel {

namespace {

json weights_to_json(const WeightSpec& spec) {
  json j;
  if (const auto* add = std::get_if<AdditiveWeights>(&spec)) {
    j["mode"] = "additive";
    j["s"] = add->s;
  } else {
    const auto& multi = std::get<MultiConstraintWeights>(spec);
    j["mode"] = "multi";
    j["w"] = multi.w;
    j["limits"] = multi.limits;
  }
  return j;
}

json preference_to_json(const PreferenceModel& model) {
  json j;
  if (const auto* approval = std::get_if<ApprovalModel>(&model)) {
    j["type"] = "approval";
    j["sets"] = approval->sets;
  } else if (const auto* ranking = std::get_if<RankingModel>(&model)) {
    j["type"] = "ranking";
    j["orders"] = ranking->orders;
  } else if (const auto* budget = std::get_if<BudgetModel>(&model)) {
    j["type"] = "budget";
    j["utilities"] = budget->utilities;
  } else if (const auto* facility = std::get_if<FacilityModel>(&model)) {
    j["type"] = "facility";
    j["distances"] = facility->distances;
  } else {
    const auto& oracle = std::get<OracleModel>(model);
    j["type"] = "oracle";
    json universe = json::array();
    for (const Committee& c : oracle.universe) universe.push_back(c.members());
    j["universe"] = std::move(universe);
    j["scores"] = oracle.scores;
  }
  return j;
}

WeightSpec weights_from_json(const json& j) {
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "additive") {
    AdditiveWeights add;
    add.s = j.at("s").get<std::vector<double>>();
    return add;
  }
  if (mode == "multi") {
    MultiConstraintWeights multi;
    multi.w = j.at("w").get<std::vector<std::vector<double>>>();
    multi.limits = j.at("limits").get<std::vector<double>>();
    return multi;
  }
  throw std::invalid_argument("unknown weights mode \"" + mode + "\"");
}

PreferenceModel preference_from_json(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "approval") {
    ApprovalModel model;
    model.sets = j.at("sets").get<std::vector<std::vector<int>>>();
    return model;
  }
  if (type == "ranking") {
    RankingModel model;
    model.orders = j.at("orders").get<std::vector<std::vector<int>>>();
    return model;
  }
  if (type == "budget") {
    BudgetModel model;
    model.utilities = j.at("utilities").get<std::vector<std::vector<double>>>();
    return model;
  }
  if (type == "facility") {
    FacilityModel model;
    model.distances = j.at("distances").get<std::vector<std::vector<double>>>();
    return model;
  }
  if (type == "oracle") {
    OracleModel model;
    for (const auto& members : j.at("universe"))
      model.universe.emplace_back(members.get<std::vector<int>>());
    model.scores = j.at("scores").get<std::vector<std::vector<double>>>();
    return model;
  }
  throw std::invalid_argument("unknown preference type \"" + type + "\"");
}

}  // namespace

json instance_to_json(const Instance& inst) {
  json j;
  j["m"] = inst.m();
  j["n"] = inst.n();
  j["K"] = inst.limit();
  j["weights"] = weights_to_json(inst.weights());
  j["preference"] = preference_to_json(inst.preference());
  return j;
}

Instance instance_from_json(const json& j) {
  try {
    Instance inst(j.at("m").get<int>(), j.at("n").get<int>(),
                  j.at("K").get<double>(), weights_from_json(j.at("weights")),
                  preference_from_json(j.at("preference")));
    if (ValidationReport rep = inst.validate(); !rep.ok)
      throw std::invalid_argument("invalid instance: " + rep.message);
    return inst;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed instance JSON: ") +
                                e.what());
  }
}

json lottery_to_json(const Lottery& lot) {
  json j;
  j["K"] = lot.limit;
  json support = json::array();
  for (const auto& [c, prob] : lot.support)
    support.push_back({{"committee", c.members()}, {"prob", prob}});
  j["support"] = std::move(support);
  return j;
}

Lottery lottery_from_json(const json& j) {
  try {
    std::vector<std::pair<Committee, double>> entries;
    for (const auto& entry : j.at("support"))
      entries.emplace_back(
          Committee(entry.at("committee").get<std::vector<int>>()),
          entry.at("prob").get<double>());
    return Lottery::make(j.at("K").get<double>(), std::move(entries));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed lottery JSON: ") +
                                e.what());
  }
}

json report_to_json(const StabilityReport& rep) {
  json j;
  j["target_c"] = rep.target_c;
  j["stable"] = rep.stable;
  j["worst_ratio"] = rep.worst_ratio;
  j["worst_blocker"] =
      rep.worst_blocker ? json(rep.worst_blocker->members()) : json(nullptr);
  j["bound"] = is_all_committees(rep.bound)
                   ? json("all")
                   : json{{"L", std::get<UpToSize>(rep.bound).L}};
  return j;
}

json game_solution_to_json(const GameSolution& sol) {
  json j;
  j["value"] = sol.value;
  json mix = json::array();
  for (const auto& [c, prob] : sol.attacker_mix)
    mix.push_back({{"committee", c.members()}, {"prob", prob}});
  j["attacker_mix"] = std::move(mix);
  j["defender_lottery"] = lottery_to_json(sol.defender_lottery);
  j["iterations"] = sol.iterations;
  j["certified"] = sol.certified;
  return j;
}

json round_record_to_json(const RoundRecord& rec) {
  json j;
  j["t"] = rec.t;
  j["voters_before"] = rec.voters_before;
  j["K"] = rec.K;
  j["chosen"] = rec.chosen.members();
  j["removed"] = rec.removed;
  j["support_size"] = rec.support_size;
  j["provider_measured_c"] = rec.provider_measured_c;
  return j;
}

}  // namespace stabsel
