#pragma once

#include <functional>
#include <vector>

#include "rebal/faults.hpp"
#include "rebal/model.hpp"
#include "rebal/split.hpp"

namespace rebal {

/// How one target segment is assembled, and where.
struct MergeRecipe {
    SegmentLabel target;                 // target generation, canonical index
    std::vector<SubsegmentLabel> parts;  // concatenation order, actual labels
    std::vector<int> holders;            // actual node labels, cyclic order

    std::int64_t size_atoms() const;
};

/// Target segments Wt_1..Wt_{K-1} after removal, from the split plan.
std::vector<MergeRecipe> build_merge_recipes(const SystemParams& params, const SplitPlan& plan);

struct MergeOptions {
    /// Final node count and the map from actual to final node labels.
    int node_count = 0;
    std::function<int(int)> final_label = [](int n) { return n; };
    /// Skip (rather than abort on) holders missing a part.
    bool lenient = false;
    std::optional<FaultPlan::Reorder> reorder;
};

/// Every holder concatenates its parts into the target segment; everything
/// else is discarded and nodes are renamed to their final labels.
Database apply_merge(const Database& db, const std::vector<MergeRecipe>& recipes, const MergeOptions& options);

}  // namespace rebal
