#pragma once

#include <vector>

#include "rebal/analytics.hpp"
#include "rebal/bus.hpp"
#include "rebal/faults.hpp"
#include "rebal/merge.hpp"
#include "rebal/split.hpp"

namespace rebal {

// The transmission phases operate on the working database (the surviving
// nodes) and leave every delivered piece stored at its destinations.

/// Coded pairs W_{K-r+i}^{i} xor W_{K-r+i+1}^{K-r+i}, then the corner pieces.
void run_scheme1(Bus& bus, const SplitPlan& plan);
/// Coded chains of operands spaced K-r apart, then the corner pieces.
void run_scheme2(Bus& bus, const SplitPlan& plan);
/// Every segment of the removed node, whole, from its lowest surviving holder.
void run_uncoded_removal(Bus& bus, const SplitPlan& plan);

TransmissionLog run_scheme1(Database& working, const SplitPlan& plan);
TransmissionLog run_scheme2(Database& working, const SplitPlan& plan);
TransmissionLog run_uncoded_removal(Database& working, const SplitPlan& plan);

struct RemovalResult {
    Database final_db;  // K-1 nodes in canonical labels
    TransmissionLog log;
    LoadReport report;
    SplitPlan plan;
    std::vector<MergeRecipe> recipes;
};

/// Split, transmit with the chosen scheme, merge. `automatic` resolves to
/// Scheme 1 iff L1 <= L2. Throws on any protocol, decode or merge failure
/// unless a fault is injected, in which case merging is lenient.
RemovalResult rebalance_remove(const Database& db, int removed, SchemeChoice choice, const FaultPlan& faults = {});

}  // namespace rebal
