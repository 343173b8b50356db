#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rebal/bitvec.hpp"
#include "rebal/errors.hpp"

namespace rebal {

/// Scenario universe: K nodes, replication factor r, segment size T bits.
///
/// Plain data. A freshly built cyclic database requires validate(); the
/// post-rebalancing layouts (K-1 or K+1 nodes with a larger segment) are
/// described with the same struct but need not satisfy the divisibility rule.
struct SystemParams {
    int K = 0;
    int r = 0;
    std::int64_t T = 0;

    /// T = 2(K^2-1) * t_mult, the smallest admissible size scaled.
    static SystemParams with_default_size(int K, int r, std::int64_t t_mult = 1);

    /// 2 <= r <= K-1 and 2(K^2-1) | T.
    void validate() const;
    /// validate() plus r >= 3.
    void validate_for_removal() const;

    /// Atoms per original segment: 2(K-1)(K+1).
    std::int64_t atoms_per_segment() const { return 2 * (std::int64_t{K} * K - 1); }
    std::int64_t atom_bits() const { return T / atoms_per_segment(); }

    friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

// Wrap-around index arithmetic on [1..n]. Offsets may be 0..n.
int box_plus(int i, int j, int n);
int box_minus(int i, int j, int n);

/// {start ⊞_n <count>} in cyclic order: start, start+1, ..., wrapping at n.
std::vector<int> cyclic_window(int start, int count, int n);
/// {start ⊟_n <count>} in cyclic order: start, start-1, ...
std::vector<int> cyclic_window_down(int start, int count, int n);

/// S_i: the nodes holding segment i of an r-balanced cyclic database on n nodes.
std::vector<int> storage_set(int i, int n, int r);

/// Maps a label written for "node K removed" onto the labels used when node
/// `removed` fails instead: j ⊟_K (K - removed).
int relabel_for_removed_node(int j, int removed, int K);
/// Inverse of relabel_for_removed_node.
int canonical_label(int actual, int removed, int K);

enum class Generation { original, target };

struct SegmentLabel {
    int index = 0;
    Generation generation = Generation::original;

    auto operator<=>(const SegmentLabel&) const = default;
};

/// Half-open atom interval [first, first + count) within a segment.
struct AtomRange {
    std::int64_t first = 0;
    std::int64_t count = 0;

    std::int64_t end() const { return first + count; }
    auto operator<=>(const AtomRange&) const = default;
};

/// A contiguous piece of a base segment, addressed to the nodes in
/// `superscript` (sorted ascending). An empty superscript denotes the whole
/// base segment as stored.
struct SubsegmentLabel {
    SegmentLabel base;
    std::vector<int> superscript;
    AtomRange range;

    std::int64_t size_atoms() const { return range.count; }
    bool is_whole() const { return superscript.empty(); }

    auto operator<=>(const SubsegmentLabel&) const = default;
};

SubsegmentLabel whole_segment(SegmentLabel base, std::int64_t atoms);

std::string to_string(const SegmentLabel& s);
/// W_5^{2} style; whole segments print without superscript.
std::string to_string(const SubsegmentLabel& s);

/// Run of consecutive atoms of one original segment.
struct AtomRun {
    int segment = 0;
    std::int64_t first = 0;
    std::int64_t count = 0;

    friend bool operator==(const AtomRun&, const AtomRun&) = default;
};

/// Stored data: bit content plus the original atoms it was built from.
struct Piece {
    std::vector<AtomRun> provenance;
    BitVec bits;

    std::int64_t atoms() const;
};

/// Runs covering atoms [first, first+count) of a concatenation of runs.
std::vector<AtomRun> slice_runs(const std::vector<AtomRun>& runs, std::int64_t first, std::int64_t count);
/// Appends, fusing with the last run when contiguous.
void append_runs(std::vector<AtomRun>& into, const std::vector<AtomRun>& tail);

/// Content of atom `offset` of original segment `segment`; a pure function of
/// (seed, segment, offset).
BitVec atom_content(std::uint64_t seed, int segment, std::int64_t offset, std::int64_t atom_bits);

/// Per-node storage snapshot.
struct Database {
    using NodeStore = std::map<SubsegmentLabel, Piece>;

    int node_count = 0;
    int replication = 0;
    std::int64_t segment_atoms = 0;
    std::int64_t atom_bits = 0;
    std::uint64_t seed = 0;
    std::map<int, NodeStore> nodes;

    std::int64_t segment_bits() const { return segment_atoms * atom_bits; }

    const Piece* find(int node, const SubsegmentLabel& label) const;
    /// The piece, either stored under exactly this label or cut from the whole
    /// base segment held by the node.
    std::optional<Piece> extract(int node, const SubsegmentLabel& label) const;
    bool holds_whole(int node, SegmentLabel base) const;
    void store(int node, SubsegmentLabel label, Piece piece);

    /// Nodes storing the whole segment, ascending.
    std::vector<int> holders(SegmentLabel s) const;
    std::int64_t total_bits() const;
};

/// N = K segments of T pseudo-random bits, segment i replicated on S_i.
Database build_cyclic_database(const SystemParams& params, std::uint64_t seed);

}  // namespace rebal
