#pragma once

#include <json.hpp>

#include "rebal/addition.hpp"
#include "rebal/removal.hpp"
#include "rebal/verify.hpp"

namespace rebal {

nlohmann::json to_json(const SubsegmentLabel& label);
nlohmann::json to_json(const SplitPlan& plan);
nlohmann::json to_json(const AdditionPlan& plan);
/// Payload bits are included (hex, bit 0 first) only when `full`.
nlohmann::json to_json(const TransmissionLog& log, bool full);
nlohmann::json to_json(const std::vector<MergeRecipe>& recipes);
nlohmann::json to_json(const LoadReport& report);
nlohmann::json to_json(const VerificationReport& report);

nlohmann::json removal_trace(const RemovalResult& result, const VerificationReport& verification, std::uint64_t seed,
                             bool full);
nlohmann::json addition_trace(const AdditionResult& result, const VerificationReport& verification,
                              std::uint64_t seed, bool full);

}  // namespace rebal
