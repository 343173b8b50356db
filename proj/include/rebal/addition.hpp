#pragma once

#include <utility>
#include <vector>

#include "rebal/analytics.hpp"
#include "rebal/bus.hpp"
#include "rebal/faults.hpp"
#include "rebal/merge.hpp"

namespace rebal {

/// Split of every segment for a new node K+1.
struct AdditionPlan {
    SystemParams params;
    /// small_parts[i-1] = W_i^{{K+1} ∪ [min(r-1,i-1)]}, the trailing T/(K+1).
    std::vector<SubsegmentLabel> small_parts;
    /// kept_parts[i-1] = the leading KT/(K+1) of W_i, which becomes Wt_i. The
    /// superscript is {K+1} for the segments shipped to the new node, empty
    /// otherwise.
    std::vector<SubsegmentLabel> kept_parts;
    /// Segments K-r+2..K, sent whole (kept part) to node K+1.
    std::vector<int> shipped;
    /// (node i, segment K-r+1+i) for i in [r-1].
    std::vector<std::pair<int, int>> discards;
};

AdditionPlan make_addition_plan(const SystemParams& params);

/// Wt_1..Wt_K from the kept parts, Wt_{K+1} from the small parts in ascending
/// segment order. Holders are on K+1 nodes.
std::vector<MergeRecipe> build_addition_recipes(const AdditionPlan& plan);

struct AdditionResult {
    Database final_db;  // K+1 nodes
    TransmissionLog log;
    LoadReport report;
    AdditionPlan plan;
    std::vector<MergeRecipe> recipes;
};

/// K uncoded small-part broadcasts, concatenation of Wt_{K+1}, r-1 kept parts
/// shipped to node K+1, then discards.
AdditionResult rebalance_add(const Database& db, const FaultPlan& faults = {});

}  // namespace rebal
