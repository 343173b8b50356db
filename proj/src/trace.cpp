#include "rebal/trace.hpp"

namespace rebal {

using nlohmann::json;

namespace {

json rational_json(const Rational& q)
{
    return json{{"num", q.numerator()}, {"den", q.denominator()}, {"text", to_string(q)}, {"float", to_double(q)}};
}

const char* role_name(SegmentRole role)
{
    switch (role) {
    case SegmentRole::first_corner: return "first_corner";
    case SegmentRole::middle: return "middle";
    case SegmentRole::last_corner: return "last_corner";
    }
    return "?";
}

}  // namespace

json to_json(const SubsegmentLabel& label)
{
    return json{{"label", to_string(label)},
                {"segment", label.base.index},
                {"generation", label.base.generation == Generation::original ? "original" : "target"},
                {"superscript", label.superscript},
                {"first_atom", label.range.first},
                {"size_atoms", label.range.count}};
}

json to_json(const SplitPlan& plan)
{
    json segments = json::array();
    for (const auto& s : plan.segments) {
        json pieces = json::array();
        for (const auto& p : s.pieces) pieces.push_back(to_json(p));
        segments.push_back(json{{"segment", s.base.index}, {"role", role_name(s.role)}, {"pieces", pieces}});
    }
    return json{{"removed", plan.relabel.removed}, {"p", plan.p}, {"segments", segments}};
}

json to_json(const AdditionPlan& plan)
{
    json small = json::array();
    json kept = json::array();
    for (const auto& p : plan.small_parts) small.push_back(to_json(p));
    for (const auto& p : plan.kept_parts) kept.push_back(to_json(p));
    json discards = json::array();
    for (const auto& [node, seg] : plan.discards) discards.push_back(json{{"node", node}, {"segment", seg}});
    return json{{"small_parts", small}, {"kept_parts", kept}, {"shipped", plan.shipped}, {"discards", discards}};
}

json to_json(const TransmissionLog& log, bool full)
{
    json out = json::array();
    for (const auto& b : log.broadcasts) {
        json ops = json::array();
        for (const auto& op : b.operands) ops.push_back(to_json(op));
        json entry{{"sender", b.sender},
                   {"kind", b.kind == BroadcastKind::coded ? "coded" : "uncoded"},
                   {"operands", ops},
                   {"payload_atoms", b.payload_atoms}};
        if (full) entry["payload"] = b.payload.to_hex();
        out.push_back(std::move(entry));
    }
    return json{{"total_atoms", log.total_atoms}, {"broadcasts", out}};
}

json to_json(const std::vector<MergeRecipe>& recipes)
{
    json out = json::array();
    for (const auto& r : recipes) {
        json parts = json::array();
        for (const auto& p : r.parts) parts.push_back(to_json(p));
        out.push_back(
            json{{"target", r.target.index}, {"parts", parts}, {"holders", r.holders}, {"size_atoms", r.size_atoms()}});
    }
    return out;
}

json to_json(const LoadReport& report)
{
    json out{{"K", report.params.K},
             {"r", report.params.r},
             {"T", report.params.T},
             {"scheme", to_string(report.scheme_used)},
             {"measured_load", rational_json(report.measured_load)},
             {"expected_load", rational_json(report.expected_load)},
             {"matches_formula", report.matches_formula()},
             {"L_u", rational_json(report.L_u)},
             {"removal_lower_bound", rational_json(report.removal_lower_bound)},
             {"addition_lower_bound", rational_json(report.addition_lower_bound)}};
    if (report.L1) out["L1"] = rational_json(*report.L1);
    if (report.L2) out["L2"] = rational_json(*report.L2);
    if (report.L_rem) out["L_rem"] = rational_json(*report.L_rem);
    if (report.L_add) out["L_add"] = rational_json(*report.L_add);
    if (report.r_th) out["r_th"] = *report.r_th;
    return out;
}

json to_json(const VerificationReport& report)
{
    return json{{"is_balanced", report.is_balanced},
                {"is_cyclic", report.is_cyclic},
                {"replication_ok", report.replication_ok},
                {"content_ok", report.content_ok},
                {"violations", report.violations}};
}

json removal_trace(const RemovalResult& result, const VerificationReport& verification, std::uint64_t seed, bool full)
{
    return json{{"operation", "remove"},
                {"seed", seed},
                {"split_plan", to_json(result.plan)},
                {"transmissions", to_json(result.log, full)},
                {"merge_recipes", to_json(result.recipes)},
                {"load", to_json(result.report)},
                {"verification", to_json(verification)}};
}

json addition_trace(const AdditionResult& result, const VerificationReport& verification, std::uint64_t seed,
                    bool full)
{
    return json{{"operation", "add"},
                {"seed", seed},
                {"addition_plan", to_json(result.plan)},
                {"transmissions", to_json(result.log, full)},
                {"merge_recipes", to_json(result.recipes)},
                {"load", to_json(result.report)},
                {"verification", to_json(verification)}};
}

}  // namespace rebal
