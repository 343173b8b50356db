#pragma once

#include <span>
#include <string>
#include <vector>

#include "rebal/addition.hpp"
#include "rebal/faults.hpp"
#include "rebal/merge.hpp"
#include "rebal/model.hpp"
#include "rebal/removal.hpp"

namespace rebal {

struct VerificationReport {
    bool is_balanced = true;
    bool is_cyclic = true;
    bool replication_ok = true;
    bool content_ok = true;
    std::vector<std::string> violations;

    bool ok() const { return is_balanced && is_cyclic && replication_ok && content_ok; }
    void absorb(const VerificationReport& other);
};

/// Checks that `db` is an r-balanced cyclic database on expected.K nodes with
/// segments of expected.T bits: every segment on exactly r nodes, on the
/// window {i ⊞ <r>}, r equal-sized segments per node, replicas bit-identical.
/// Placement is recomputed from (K, r) only.
VerificationReport verify_cyclic_balanced(const Database& db, const SystemParams& expected);

/// Checks every stored target segment of `final_db` against content
/// regenerated from the original seed along the provenance the recipes
/// describe, and that the recipes use every original atom exactly once.
VerificationReport verify_preservation(const Database& original, const Database& final_db,
                                       std::span<const MergeRecipe> recipes);

/// Both checks for a completed removal or addition.
VerificationReport verify_removal(const Database& original, const RemovalResult& result);
VerificationReport verify_addition(const Database& original, const AdditionResult& result);

/// Fault hook for finished databases.
void flip_stored_bit(Database& db, int node, const SubsegmentLabel& label, std::size_t bit);

}  // namespace rebal
