#include "rebal/split.hpp"

#include <algorithm>

namespace rebal {

namespace {

// Piece sizes are multiples of T/(2(K-1)), which is K+1 atoms.
std::int64_t half_unit(const SystemParams& params) { return params.K + 1; }

std::vector<int> sorted(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

// Appends a piece taking the next `units` half-units of the segment.
void push_piece(std::vector<SubsegmentLabel>& pieces, SegmentLabel base, std::vector<int> dest,
                std::int64_t units, const SystemParams& params)
{
    const std::int64_t first = pieces.empty() ? 0 : pieces.back().range.end();
    pieces.push_back(SubsegmentLabel{base, sorted(std::move(dest)), AtomRange{first, units * half_unit(params)}});
}

}  // namespace

std::vector<int> Relabel::actual(const std::vector<int>& labels) const
{
    std::vector<int> out;
    out.reserve(labels.size());
    for (int j : labels) out.push_back(actual(j));
    return sorted(std::move(out));
}

SubsegmentLabel Relabel::actual(const SubsegmentLabel& label) const
{
    SubsegmentLabel out = label;
    if (label.base.generation == Generation::original) out.base.index = actual(label.base.index);
    out.superscript = actual(label.superscript);
    return out;
}

const SegmentSplit& SplitPlan::middle(int i) const
{
    if (i < 1 || i > params.r - 2) throw ParamError("middle segment index out of range");
    return segments[static_cast<std::size_t>(i)];
}

const SubsegmentLabel& SplitPlan::corner_half(SegmentRole corner) const
{
    if (!odd) throw ParamError("half-size corner piece exists only for odd K-r");
    return (corner == SegmentRole::first_corner ? first_corner() : last_corner()).pieces[1];
}

const SubsegmentLabel& SplitPlan::corner_pair(SegmentRole corner, int j) const
{
    if (j < 1 || j > p) throw ParamError("corner pair index out of range");
    const auto& split = corner == SegmentRole::first_corner ? first_corner() : last_corner();
    return split.pieces[static_cast<std::size_t>((odd ? 1 : 0) + j)];
}

std::size_t SplitPlan::piece_count() const
{
    std::size_t n = 0;
    for (const auto& s : segments) n += s.pieces.size();
    return n;
}

const SegmentSplit& SplitPlan::split_of(int actual_segment) const
{
    for (const auto& s : segments)
        if (s.base.index == actual_segment) return s;
    throw ParamError("segment " + std::to_string(actual_segment) + " is not held by the removed node");
}

std::vector<SubsegmentLabel> split_middle(int i, const SystemParams& params)
{
    const int K = params.K;
    const int r = params.r;
    if (r < 3 || i < 1 || i > r - 2) throw ParamError("split_middle: i must lie in [r-2]");
    const SegmentLabel base{K - r + 1 + i, Generation::original};
    std::vector<SubsegmentLabel> pieces;
    push_piece(pieces, base, {i + 1}, K + r - 2 * i - 2, params);
    push_piece(pieces, base, {i + K - r}, K - r + 2 * i, params);
    return pieces;
}

std::pair<std::vector<SubsegmentLabel>, std::vector<SubsegmentLabel>> split_corners(const SystemParams& params)
{
    const int K = params.K;
    const int r = params.r;
    if (r < 3 || r > K - 1) throw ParamError("split_corners: requires 3 <= r <= K-1");
    const int p = (K - r) / 2;
    const bool odd = (K - r) % 2 == 1;
    const int n = K - 1;  // superscripts live on the surviving nodes

    const SegmentLabel first{K - r + 1, Generation::original};
    std::vector<SubsegmentLabel> low;
    push_piece(low, first, {1}, K + r - 2, params);
    if (odd) push_piece(low, first, cyclic_window(K - r - p, std::min(r, p + 1), n), 1, params);
    for (int j = 1; j <= p; ++j) push_piece(low, first, cyclic_window(K - r + 1 - j, std::min(r, j), n), 2, params);

    const SegmentLabel last{K, Generation::original};
    std::vector<SubsegmentLabel> high;
    push_piece(high, last, {K - 1}, K + r - 2, params);
    if (odd) push_piece(high, last, cyclic_window_down(r + p, std::min(r, p + 1), n), 1, params);
    for (int j = 1; j <= p; ++j) push_piece(high, last, cyclic_window_down(r - 1 + j, std::min(r, j), n), 2, params);

    return {std::move(low), std::move(high)};
}

SplitPlan make_split_plan(const SystemParams& params, int removed)
{
    params.validate_for_removal();
    if (removed < 1 || removed > params.K) throw ParamError("removed node out of range");

    SplitPlan plan;
    plan.params = params;
    plan.relabel = Relabel{params.K, removed};
    plan.p = (params.K - params.r) / 2;
    plan.odd = (params.K - params.r) % 2 == 1;

    auto to_actual = [&](std::vector<SubsegmentLabel> pieces) {
        for (auto& piece : pieces) piece = plan.relabel.actual(piece);
        return pieces;
    };

    auto [low, high] = split_corners(params);
    plan.segments.push_back(SegmentSplit{SegmentRole::first_corner, 0,
                                         SegmentLabel{plan.relabel.actual(params.K - params.r + 1)}, to_actual(low)});
    for (int i = 1; i <= params.r - 2; ++i)
        plan.segments.push_back(SegmentSplit{SegmentRole::middle, i,
                                             SegmentLabel{plan.relabel.actual(params.K - params.r + 1 + i)},
                                             to_actual(split_middle(i, params))});
    plan.segments.push_back(
        SegmentSplit{SegmentRole::last_corner, 0, SegmentLabel{plan.relabel.actual(params.K)}, to_actual(high)});
    return plan;
}

}  // namespace rebal
