#include "rebal/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rebal {

void VerificationReport::absorb(const VerificationReport& other)
{
    is_balanced = is_balanced && other.is_balanced;
    is_cyclic = is_cyclic && other.is_cyclic;
    replication_ok = replication_ok && other.replication_ok;
    content_ok = content_ok && other.content_ok;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

namespace {

std::string node_str(int k) { return "node " + std::to_string(k); }

}  // namespace

VerificationReport verify_cyclic_balanced(const Database& db, const SystemParams& expected)
{
    VerificationReport rep;
    const int N = expected.K;
    const int r = expected.r;

    std::set<int> node_ids;
    for (const auto& [k, _] : db.nodes) node_ids.insert(k);
    for (int k = 1; k <= N; ++k) {
        if (!node_ids.erase(k)) {
            rep.is_balanced = false;
            rep.violations.push_back(node_str(k) + " is missing");
        }
    }
    for (int k : node_ids) {
        rep.is_balanced = false;
        rep.violations.push_back(node_str(k) + " is not part of a " + std::to_string(N) + "-node system");
    }

    // segment index -> (node -> stored copy)
    std::map<int, std::map<int, const Piece*>> copies;
    std::set<Generation> generations;
    for (const auto& [k, store] : db.nodes) {
        int count = 0;
        for (const auto& [label, piece] : store) {
            if (!label.is_whole()) {
                rep.is_balanced = false;
                rep.violations.push_back(node_str(k) + " still stores the piece " + to_string(label));
                continue;
            }
            ++count;
            generations.insert(label.base.generation);
            if (static_cast<std::int64_t>(piece.bits.size()) != expected.T) {
                rep.is_balanced = false;
                rep.violations.push_back(node_str(k) + " stores " + to_string(label.base) + " with "
                                         + std::to_string(piece.bits.size()) + " bits, expected "
                                         + std::to_string(expected.T));
            }
            if (label.base.index < 1 || label.base.index > N) {
                rep.is_cyclic = false;
                rep.violations.push_back(node_str(k) + " stores unknown segment " + to_string(label.base));
                continue;
            }
            copies[label.base.index][k] = &piece;
        }
        if (count != r) {
            rep.is_balanced = false;
            rep.violations.push_back(node_str(k) + " stores " + std::to_string(count) + " segments, expected "
                                     + std::to_string(r));
        }
    }
    if (generations.size() > 1) {
        rep.is_cyclic = false;
        rep.violations.push_back("original and target segments are mixed");
    }

    for (int i = 1; i <= N; ++i) {
        const auto want_vec = storage_set(i, N, r);
        const std::set<int> want(want_vec.begin(), want_vec.end());
        const auto& held = copies[i];
        std::set<int> have;
        for (const auto& [k, _] : held) have.insert(k);

        if (static_cast<int>(have.size()) != r) {
            rep.replication_ok = false;
            rep.violations.push_back("segment " + std::to_string(i) + " is held by " + std::to_string(have.size())
                                     + " nodes, expected " + std::to_string(r));
        }
        for (int k : want)
            if (!have.contains(k)) {
                rep.is_cyclic = false;
                rep.violations.push_back("segment " + std::to_string(i) + " is missing at " + node_str(k));
            }
        for (int k : have)
            if (!want.contains(k)) {
                rep.is_cyclic = false;
                rep.violations.push_back("segment " + std::to_string(i) + " is misplaced at " + node_str(k));
            }

        // Replicas must agree; report the copies that differ from the most common one.
        std::vector<std::pair<const Piece*, int>> variants;
        for (const auto& [k, piece] : held) {
            auto it = std::find_if(variants.begin(), variants.end(),
                                   [&](const auto& v) { return v.first->bits == piece->bits; });
            if (it == variants.end()) variants.emplace_back(piece, 1);
            else ++it->second;
        }
        if (variants.size() > 1) {
            rep.content_ok = false;
            const Piece* majority =
                std::max_element(variants.begin(), variants.end(),
                                 [](const auto& a, const auto& b) { return a.second < b.second; })
                    ->first;
            for (const auto& [k, piece] : held)
                if (!(piece->bits == majority->bits))
                    rep.violations.push_back("segment " + std::to_string(i) + " at " + node_str(k)
                                             + " differs from its other replicas");
        }
    }
    return rep;
}

VerificationReport verify_preservation(const Database& original, const Database& final_db,
                                       std::span<const MergeRecipe> recipes)
{
    VerificationReport rep;
    const std::int64_t atoms = original.segment_atoms;

    // Coverage: every original atom used by exactly one target segment.
    std::map<int, std::vector<int>> uses;
    for (int i = 1; i <= original.node_count; ++i) uses[i].assign(static_cast<std::size_t>(atoms), 0);
    std::map<int, std::pair<std::vector<AtomRun>, BitVec>> expected;
    for (const auto& recipe : recipes) {
        auto& [runs, bits] = expected[recipe.target.index];
        for (const auto& part : recipe.parts) {
            if (part.base.generation != Generation::original || !uses.contains(part.base.index)
                || part.range.first < 0 || part.range.end() > atoms) {
                rep.content_ok = false;
                rep.violations.push_back("target segment " + std::to_string(recipe.target.index)
                                         + " refers to data outside the original file: " + to_string(part));
                continue;
            }
            auto& count = uses[part.base.index];
            for (std::int64_t a = part.range.first; a < part.range.end(); ++a) {
                ++count[static_cast<std::size_t>(a)];
                bits.append(atom_content(original.seed, part.base.index, a, original.atom_bits));
            }
            append_runs(runs, {AtomRun{part.base.index, part.range.first, part.range.count}});
        }
    }
    for (const auto& [seg, count] : uses) {
        const auto missing = std::count(count.begin(), count.end(), 0);
        const auto repeated = std::count_if(count.begin(), count.end(), [](int c) { return c > 1; });
        if (missing || repeated) {
            rep.content_ok = false;
            rep.violations.push_back("original segment " + std::to_string(seg) + ": " + std::to_string(missing)
                                     + " atoms never placed, " + std::to_string(repeated)
                                     + " atoms placed in more than one target segment");
        }
    }

    // Content of every stored replica against the regenerated file.
    std::set<int> present;
    for (const auto& [k, store] : final_db.nodes) {
        for (const auto& [label, piece] : store) {
            auto it = expected.find(label.base.index);
            if (label.base.generation != Generation::target || it == expected.end()) {
                rep.content_ok = false;
                rep.violations.push_back("node " + std::to_string(k) + " stores " + to_string(label)
                                         + ", which no target segment accounts for");
                continue;
            }
            present.insert(label.base.index);
            const auto& [runs, bits] = it->second;
            if (!(piece.bits == bits)) {
                std::size_t first_bad = 0;
                const std::size_t n = std::min(piece.bits.size(), bits.size());
                while (first_bad < n && piece.bits.get(first_bad) == bits.get(first_bad)) ++first_bad;
                rep.content_ok = false;
                rep.violations.push_back("segment " + std::to_string(label.base.index) + " at node "
                                         + std::to_string(k) + " has wrong content from bit "
                                         + std::to_string(first_bad));
            } else if (piece.provenance != runs) {
                rep.content_ok = false;
                rep.violations.push_back("segment " + std::to_string(label.base.index) + " at node "
                                         + std::to_string(k) + " records a different provenance");
            }
        }
    }
    for (const auto& [t, _] : expected)
        if (!present.contains(t)) {
            rep.content_ok = false;
            rep.violations.push_back("target segment " + std::to_string(t) + " is stored nowhere");
        }
    return rep;
}

VerificationReport verify_removal(const Database& original, const RemovalResult& result)
{
    const int K = original.node_count;
    const SystemParams expected{K - 1, original.replication, original.segment_bits() * K / (K - 1)};
    VerificationReport rep = verify_cyclic_balanced(result.final_db, expected);
    rep.absorb(verify_preservation(original, result.final_db, result.recipes));
    return rep;
}

VerificationReport verify_addition(const Database& original, const AdditionResult& result)
{
    const int K = original.node_count;
    const SystemParams expected{K + 1, original.replication, original.segment_bits() * K / (K + 1)};
    VerificationReport rep = verify_cyclic_balanced(result.final_db, expected);
    rep.absorb(verify_preservation(original, result.final_db, result.recipes));
    return rep;
}

void flip_stored_bit(Database& db, int node, const SubsegmentLabel& label, std::size_t bit)
{
    auto n = db.nodes.find(node);
    if (n == db.nodes.end()) throw ParamError("flip_stored_bit: no such node");
    auto p = n->second.find(label);
    if (p == n->second.end() || bit >= p->second.bits.size()) throw ParamError("flip_stored_bit: no such data");
    p->second.bits.flip(bit);
}

}  // namespace rebal
