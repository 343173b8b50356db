#pragma once

#include <utility>
#include <vector>

#include "rebal/model.hpp"

namespace rebal {

/// Label translation between the "node K removed" coordinates the schemes are
/// written in and the actual node/segment labels when node `removed` fails.
struct Relabel {
    int K = 0;
    int removed = 0;

    int actual(int label) const { return relabel_for_removed_node(label, removed, K); }
    int canonical(int actual_label) const { return canonical_label(actual_label, removed, K); }
    /// Maps every element and sorts the result.
    std::vector<int> actual(const std::vector<int>& labels) const;
    SubsegmentLabel actual(const SubsegmentLabel& label) const;
};

enum class SegmentRole { first_corner, middle, last_corner };

struct SegmentSplit {
    SegmentRole role = SegmentRole::middle;
    int middle_index = 0;  // i in [r-2] for middles, 0 for corners
    SegmentLabel base;
    /// Pieces in listing order; their atom ranges tile the segment in this order.
    std::vector<SubsegmentLabel> pieces;
};

/// Partition of the removed node's r segments.
///
/// Corner piece order is: primary piece, the half-size piece (only when K-r is
/// odd), then the pair pieces j = 1..p. Labels are actual labels, already
/// translated through Relabel.
struct SplitPlan {
    SystemParams params;
    Relabel relabel;
    int p = 0;
    bool odd = false;  // K - r odd
    std::vector<SegmentSplit> segments;  // first corner, middles 1..r-2, last corner

    const SegmentSplit& first_corner() const { return segments.front(); }
    const SegmentSplit& last_corner() const { return segments.back(); }
    const SegmentSplit& middle(int i) const;

    const SubsegmentLabel& first_primary() const { return first_corner().pieces.front(); }
    const SubsegmentLabel& last_primary() const { return last_corner().pieces.front(); }
    /// Half-size corner piece; only when K-r is odd.
    const SubsegmentLabel& corner_half(SegmentRole corner) const;
    /// Pair piece j in [p] of a corner segment.
    const SubsegmentLabel& corner_pair(SegmentRole corner, int j) const;
    /// Piece of middle segment i destined to {i+1}.
    const SubsegmentLabel& middle_low(int i) const { return middle(i).pieces[0]; }
    /// Piece of middle segment i destined to {i+K-r}.
    const SubsegmentLabel& middle_high(int i) const { return middle(i).pieces[1]; }

    std::size_t piece_count() const;
    const SegmentSplit& split_of(int actual_segment) const;
};

/// Middle segment W_{K-r+1+i}, i in [r-2], in removed-node-K coordinates.
std::vector<SubsegmentLabel> split_middle(int i, const SystemParams& params);

/// Pieces of W_{K-r+1} and W_K in removed-node-K coordinates.
std::pair<std::vector<SubsegmentLabel>, std::vector<SubsegmentLabel>> split_corners(const SystemParams& params);

SplitPlan make_split_plan(const SystemParams& params, int removed);

}  // namespace rebal
