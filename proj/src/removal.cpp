#include "rebal/removal.hpp"

#include <algorithm>

namespace rebal {

namespace {

// Both schemes end with the uncoded corner pieces: node 1 sends every piece of
// W_K except the primary, node K-1 every piece of W_{K-r+1} except its primary.
void send_corners(Bus& bus, const SplitPlan& plan)
{
    const int K = plan.params.K;
    const auto& last = plan.last_corner().pieces;
    for (auto it = last.begin() + 1; it != last.end(); ++it) bus.send_uncoded(plan.relabel.actual(1), *it);
    const auto& first = plan.first_corner().pieces;
    for (auto it = first.begin() + 1; it != first.end(); ++it) bus.send_uncoded(plan.relabel.actual(K - 1), *it);
}

void send(Bus& bus, int sender, std::vector<SubsegmentLabel> operands)
{
    if (operands.size() == 1) bus.send_uncoded(sender, operands.front());
    else bus.send_xor(sender, std::move(operands));
}

// W_{K-r+i}^{i}: the piece of segment K-r+i destined to node i.
const SubsegmentLabel& toward_low(const SplitPlan& plan, int i)
{
    return i == 1 ? plan.first_primary() : plan.middle_low(i - 1);
}

// W_{K-r+i+1}^{K-r+i}: the piece of segment K-r+i+1 destined to node K-r+i.
const SubsegmentLabel& toward_high(const SplitPlan& plan, int i)
{
    return i == plan.params.r - 1 ? plan.last_primary() : plan.middle_high(i);
}

TransmissionLog run_on(Database& working, const SplitPlan& plan, void (*scheme)(Bus&, const SplitPlan&))
{
    Bus bus(working);
    scheme(bus, plan);
    return bus.take_log();
}

}  // namespace

void run_scheme1(Bus& bus, const SplitPlan& plan)
{
    const int K = plan.params.K;
    const int r = plan.params.r;
    const int node1 = plan.relabel.actual(1);
    const int node_km1 = plan.relabel.actual(K - 1);

    for (int i = 2; i <= r - 1; ++i) bus.send_xor(node1, {toward_low(plan, i), toward_high(plan, i)});
    bus.send_xor(node_km1, {toward_low(plan, 1), toward_high(plan, 1)});
    send_corners(bus, plan);
}

void run_scheme2(Bus& bus, const SplitPlan& plan)
{
    const int K = plan.params.K;
    const int r = plan.params.r;
    const int gap = K - r;
    const int node1 = plan.relabel.actual(1);
    const int node_km1 = plan.relabel.actual(K - 1);

    for (int i = 1; i <= gap; ++i) {
        // Operand j is W_{K+1-i-j(K-r)}^{K-i-j(K-r)} (from node 1) and
        // W_{K-r+i+j(K-r)}^{i+j(K-r)} (from node K-1) for j = 0..J. When
        // r-1-i < 0 the range is empty and nothing is sent.
        if (r - 1 - i < 0) continue;
        const int J = (r - 1 - i) / gap;
        std::vector<SubsegmentLabel> from1;
        std::vector<SubsegmentLabel> from_km1;
        for (int j = 0; j <= J; ++j) {
            from1.push_back(toward_high(plan, r - i - j * gap));
            from_km1.push_back(toward_low(plan, i + j * gap));
        }
        send(bus, node1, std::move(from1));
        send(bus, node_km1, std::move(from_km1));
    }
    send_corners(bus, plan);
}

void run_uncoded_removal(Bus& bus, const SplitPlan& plan)
{
    for (const auto& split : plan.segments) {
        std::vector<int> dest;
        for (const auto& piece : split.pieces) dest.insert(dest.end(), piece.superscript.begin(), piece.superscript.end());
        std::sort(dest.begin(), dest.end());
        dest.erase(std::unique(dest.begin(), dest.end()), dest.end());

        const SubsegmentLabel whole{split.base, dest, AtomRange{0, plan.params.atoms_per_segment()}};
        // Lowest surviving holder: S_i in actual labels, minus the removed node.
        std::vector<int> holders;
        for (int k : storage_set(split.base.index, plan.params.K, plan.params.r))
            if (k != plan.relabel.removed) holders.push_back(k);
        bus.send_uncoded(*std::min_element(holders.begin(), holders.end()), whole);
    }
}

TransmissionLog run_scheme1(Database& working, const SplitPlan& plan) { return run_on(working, plan, run_scheme1); }
TransmissionLog run_scheme2(Database& working, const SplitPlan& plan) { return run_on(working, plan, run_scheme2); }
TransmissionLog run_uncoded_removal(Database& working, const SplitPlan& plan)
{
    return run_on(working, plan, run_uncoded_removal);
}

RemovalResult rebalance_remove(const Database& db, int removed, SchemeChoice choice, const FaultPlan& faults)
{
    const SystemParams params{db.node_count, db.replication, db.segment_bits()};
    params.validate_for_removal();
    if (removed < 1 || removed > params.K) throw ParamError("removed node out of range");

    RemovalResult result;
    result.plan = make_split_plan(params, removed);

    Database working = db;
    working.nodes.erase(removed);
    if (faults.flip_before) {
        const auto& f = *faults.flip_before;
        auto node = working.nodes.find(f.node);
        if (node == working.nodes.end()) throw ParamError("bit-flip fault names an absent node");
        auto piece = node->second.find(f.label);
        if (piece == node->second.end() || f.bit >= piece->second.bits.size())
            throw ParamError("bit-flip fault names data the node does not store");
        piece->second.bits.flip(f.bit);
    }

    const SchemeChoice used = choice == SchemeChoice::automatic ? select_scheme(params.K, params.r) : choice;
    Bus bus(working, faults.drop_broadcast);
    switch (used) {
    case SchemeChoice::scheme1: run_scheme1(bus, result.plan); break;
    case SchemeChoice::scheme2: run_scheme2(bus, result.plan); break;
    case SchemeChoice::uncoded: run_uncoded_removal(bus, result.plan); break;
    case SchemeChoice::automatic: break;
    }
    result.log = bus.take_log();

    result.recipes = build_merge_recipes(params, result.plan);
    MergeOptions merge;
    merge.node_count = params.K - 1;
    merge.final_label = [rl = result.plan.relabel](int n) { return rl.canonical(n); };
    merge.lenient = !faults.empty();
    merge.reorder = faults.reorder_parts;
    result.final_db = apply_merge(working, result.recipes, merge);

    LoadReport& rep = result.report;
    rep.params = params;
    rep.scheme_used = used;
    rep.measured_load = result.log.load(params.atoms_per_segment());
    rep.L1 = load_scheme1(params.K, params.r);
    rep.L2 = load_scheme2(params.K, params.r);
    rep.L_rem = removal_load(params.K, params.r);
    rep.L_u = uncoded_removal_load(params.r);
    rep.removal_lower_bound = removal_lower_bound(params.K, params.r);
    rep.addition_lower_bound = addition_lower_bound(params);
    rep.r_th = threshold(params.K);
    switch (used) {
    case SchemeChoice::scheme1: rep.expected_load = corner_load(params.K, params.r) + *rep.L1; break;
    case SchemeChoice::scheme2: rep.expected_load = corner_load(params.K, params.r) + *rep.L2; break;
    default: rep.expected_load = rep.L_u; break;
    }
    return result;
}

}  // namespace rebal
