#pragma once

#include <cstddef>
#include <optional>

#include "rebal/model.hpp"

namespace rebal {

/// Deliberate corruption injected into a run, used to show the verifier
/// actually rejects broken executions. A run with any fault enabled merges
/// leniently: a holder missing a part skips that target segment instead of
/// aborting, so the damage surfaces in the verification report.
struct FaultPlan {
    struct BitFlip {
        int node = 0;
        SubsegmentLabel label;
        std::size_t bit = 0;
    };
    struct Reorder {
        int target = 0;  // canonical target segment index
        int holder = 0;  // actual node label
    };

    /// Index, in emission order, of a broadcast that is never sent.
    std::optional<std::size_t> drop_broadcast;
    /// Bit flipped in the surviving nodes' storage before any transmission.
    std::optional<BitFlip> flip_before;
    /// One holder concatenates the parts of one target segment in reverse.
    std::optional<Reorder> reorder_parts;

    bool empty() const { return !drop_broadcast && !flip_before && !reorder_parts; }
};

}  // namespace rebal
