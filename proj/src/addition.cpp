#include "rebal/addition.hpp"

#include <algorithm>

namespace rebal {

AdditionPlan make_addition_plan(const SystemParams& params)
{
    params.validate();
    const int K = params.K;
    const int r = params.r;
    const std::int64_t atoms = params.atoms_per_segment();
    const std::int64_t small = atoms / (K + 1);  // 2(K-1)

    AdditionPlan plan;
    plan.params = params;
    for (int i = 1; i <= K; ++i) {
        std::vector<int> dest{K + 1};
        for (int k = 1; k <= std::min(r - 1, i - 1); ++k) dest.push_back(k);
        std::sort(dest.begin(), dest.end());
        const SegmentLabel base{i, Generation::original};
        plan.small_parts.push_back(SubsegmentLabel{base, dest, AtomRange{atoms - small, small}});

        const bool shipped = i >= K - r + 2;
        plan.kept_parts.push_back(
            SubsegmentLabel{base, shipped ? std::vector<int>{K + 1} : std::vector<int>{}, AtomRange{0, atoms - small}});
        if (shipped) plan.shipped.push_back(i);
    }
    for (int i = 1; i <= r - 1; ++i) plan.discards.emplace_back(i, K - r + 1 + i);
    return plan;
}

std::vector<MergeRecipe> build_addition_recipes(const AdditionPlan& plan)
{
    const int K = plan.params.K;
    const int r = plan.params.r;
    std::vector<MergeRecipe> recipes;
    for (int i = 1; i <= K; ++i)
        recipes.push_back(MergeRecipe{SegmentLabel{i, Generation::target}, {plan.kept_parts[i - 1]},
                                      cyclic_window(i, r, K + 1)});
    recipes.push_back(
        MergeRecipe{SegmentLabel{K + 1, Generation::target}, plan.small_parts, cyclic_window(K + 1, r, K + 1)});
    return recipes;
}

AdditionResult rebalance_add(const Database& db, const FaultPlan& faults)
{
    const SystemParams params{db.node_count, db.replication, db.segment_bits()};
    params.validate();
    const int K = params.K;

    AdditionResult result;
    result.plan = make_addition_plan(params);
    result.recipes = build_addition_recipes(result.plan);

    Database working = db;
    working.nodes[K + 1];
    working.node_count = K + 1;
    if (faults.flip_before) {
        const auto& f = *faults.flip_before;
        auto node = working.nodes.find(f.node);
        if (node == working.nodes.end()) throw ParamError("bit-flip fault names an absent node");
        auto piece = node->second.find(f.label);
        if (piece == node->second.end() || f.bit >= piece->second.bits.size())
            throw ParamError("bit-flip fault names data the node does not store");
        piece->second.bits.flip(f.bit);
    }

    Bus bus(working, faults.drop_broadcast);
    for (int i = 1; i <= K; ++i) bus.send_uncoded(i, result.plan.small_parts[i - 1]);
    for (int i : result.plan.shipped) bus.send_uncoded(i, result.plan.kept_parts[i - 1]);
    result.log = bus.take_log();

    // Merging reads the pre-discard state; only recipe outputs survive it.
    MergeOptions merge;
    merge.node_count = K + 1;
    merge.lenient = !faults.empty();
    merge.reorder = faults.reorder_parts;
    result.final_db = apply_merge(working, result.recipes, merge);

    LoadReport& rep = result.report;
    rep.params = params;
    rep.scheme_used = SchemeChoice::uncoded;
    rep.measured_load = result.log.load(params.atoms_per_segment());
    rep.L_add = addition_load(K, params.r);
    rep.L_u = uncoded_removal_load(params.r);
    rep.removal_lower_bound = removal_lower_bound(K, params.r);
    rep.addition_lower_bound = addition_lower_bound(params);
    if (params.r >= 3) {
        rep.L1 = load_scheme1(K, params.r);
        rep.L2 = load_scheme2(K, params.r);
        rep.L_rem = removal_load(K, params.r);
    }
    if (K >= 4) rep.r_th = threshold(K);
    rep.expected_load = *rep.L_add;
    return result;
}

}  // namespace rebal
