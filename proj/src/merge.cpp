#include "rebal/merge.hpp"

#include <algorithm>

namespace rebal {

std::int64_t MergeRecipe::size_atoms() const
{
    std::int64_t n = 0;
    for (const auto& part : parts) n += part.size_atoms();
    return n;
}

namespace {

void expect_superscript(const SubsegmentLabel& got, const std::vector<int>& expected)
{
    if (got.superscript != expected)
        throw MergeFailure("merge recipe refers to " + to_string(got) + " but the split produced another label");
}

}  // namespace

std::vector<MergeRecipe> build_merge_recipes(const SystemParams& params, const SplitPlan& plan)
{
    params.validate_for_removal();
    const int K = params.K;
    const int r = params.r;
    const int n = K - 1;
    const int p = plan.p;
    const Relabel& rl = plan.relabel;
    const std::int64_t atoms = params.atoms_per_segment();

    auto base = [&](int i) { return whole_segment(SegmentLabel{rl.actual(i)}, atoms); };
    std::vector<MergeRecipe> recipes;
    auto add = [&](int t, std::vector<SubsegmentLabel> parts) {
        std::vector<int> holders;
        for (int k : cyclic_window(t, r, n)) holders.push_back(rl.actual(k));
        recipes.push_back(MergeRecipe{SegmentLabel{t, Generation::target}, std::move(parts), std::move(holders)});
    };

    // Low range: Wt_i = W_i | piece of W_K.
    auto low = [&](int i) {
        const auto& piece = plan.corner_pair(SegmentRole::last_corner, i);
        expect_superscript(piece, rl.actual(cyclic_window_down(r - 1 + i, std::min(r, i), n)));
        add(i, {base(i), piece});
    };
    // High range: Wt_i = W_i | piece of W_{K-r+1}.
    auto high = [&](int i) {
        const auto& piece = plan.corner_pair(SegmentRole::first_corner, K - r + 1 - i);
        expect_superscript(piece, rl.actual(cyclic_window(i, std::min(r, K - r - i + 1), n)));
        add(i, {base(i), piece});
    };

    if (!plan.odd) {
        for (int i = 1; i <= (K - r) / 2; ++i) low(i);
        for (int i = (K - r) / 2 + 1; i <= K - r; ++i) high(i);
    } else {
        for (int i = 1; i <= (K - r - 1) / 2; ++i) low(i);
        const int mid = (K - r + 1) / 2;
        const auto& from_last = plan.corner_half(SegmentRole::last_corner);
        const auto& from_first = plan.corner_half(SegmentRole::first_corner);
        expect_superscript(from_last, rl.actual(cyclic_window_down(r + p, std::min(r, p + 1), n)));
        expect_superscript(from_first, rl.actual(cyclic_window(K - r - p, std::min(r, p + 1), n)));
        add(mid, {base(mid), from_last, from_first});
        for (int i = (K - r + 1) / 2 + 1; i <= K - r; ++i) high(i);
    }

    // Wt_{K-r+i} = W_{K-r+i}^{i} | W_{K-r+i+1}^{K-r+i}.
    for (int i = 1; i <= r - 1; ++i) {
        const auto& head = i == 1 ? plan.first_primary() : plan.middle_low(i - 1);
        const auto& tail = i == r - 1 ? plan.last_primary() : plan.middle_high(i);
        expect_superscript(head, rl.actual(std::vector<int>{i}));
        expect_superscript(tail, rl.actual(std::vector<int>{K - r + i}));
        add(K - r + i, {head, tail});
    }

    std::sort(recipes.begin(), recipes.end(),
              [](const MergeRecipe& a, const MergeRecipe& b) { return a.target < b.target; });
    return recipes;
}

Database apply_merge(const Database& db, const std::vector<MergeRecipe>& recipes, const MergeOptions& options)
{
    Database out;
    out.node_count = options.node_count;
    out.replication = db.replication;
    out.atom_bits = db.atom_bits;
    out.seed = db.seed;
    out.segment_atoms = recipes.empty() ? 0 : recipes.front().size_atoms();
    for (int k = 1; k <= options.node_count; ++k) out.nodes[k];

    for (const auto& recipe : recipes) {
        if (recipe.size_atoms() != out.segment_atoms)
            throw MergeFailure("target segment " + std::to_string(recipe.target.index) + " has "
                               + std::to_string(recipe.size_atoms()) + " atoms, expected "
                               + std::to_string(out.segment_atoms));
        const auto label = whole_segment(recipe.target, out.segment_atoms);
        for (int holder : recipe.holders) {
            auto order = recipe.parts;
            if (options.reorder && options.reorder->target == recipe.target.index && options.reorder->holder == holder)
                std::reverse(order.begin(), order.end());

            Piece merged;
            bool complete = true;
            for (const auto& part : order) {
                auto piece = db.extract(holder, part);
                if (!piece) {
                    if (!options.lenient)
                        throw MergeFailure("node " + std::to_string(holder) + " lacks " + to_string(part)
                                           + " for target segment " + std::to_string(recipe.target.index));
                    complete = false;
                    break;
                }
                append_runs(merged.provenance, piece->provenance);
                merged.bits.append(piece->bits);
            }
            if (complete) out.store(options.final_label(holder), label, std::move(merged));
        }
    }
    return out;
}

}  // namespace rebal
