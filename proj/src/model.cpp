#include "rebal/model.hpp"

#include <algorithm>
#include <sstream>

namespace rebal {

SystemParams SystemParams::with_default_size(int K, int r, std::int64_t t_mult)
{
    if (t_mult < 1) throw ParamError("t_mult must be positive");
    return SystemParams{K, r, 2 * (std::int64_t{K} * K - 1) * t_mult};
}

void SystemParams::validate() const
{
    std::ostringstream msg;
    if (K < 3) msg << "K must be at least 3 (got " << K << ")";
    else if (r < 2 || r > K - 1) msg << "r must satisfy 2 <= r <= K-1 (got K=" << K << ", r=" << r << ")";
    else if (T <= 0 || T % atoms_per_segment() != 0)
        msg << "T must be a positive multiple of 2(K^2-1) = " << atoms_per_segment() << " (got " << T << ")";
    if (!msg.str().empty()) throw ParamError(msg.str());
}

void SystemParams::validate_for_removal() const
{
    validate();
    if (r < 3)
        throw UnsupportedConfiguration("node removal requires r >= 3; no coded scheme exists for r = 2 (got r="
                                       + std::to_string(r) + ")");
}

int box_plus(int i, int j, int n)
{
    if (n < 1 || i < 1 || i > n || j < 0 || j > n)
        throw ParamError("box_plus: arguments out of range");
    return i + j <= n ? i + j : i + j - n;
}

int box_minus(int i, int j, int n)
{
    if (n < 1 || i < 1 || i > n || j < 0 || j > n)
        throw ParamError("box_minus: arguments out of range");
    return i - j > 0 ? i - j : i - j + n;
}

std::vector<int> cyclic_window(int start, int count, int n)
{
    std::vector<int> out;
    out.reserve(count);
    for (int a = 0; a < count; ++a) out.push_back(box_plus(start, a, n));
    return out;
}

std::vector<int> cyclic_window_down(int start, int count, int n)
{
    std::vector<int> out;
    out.reserve(count);
    for (int a = 0; a < count; ++a) out.push_back(box_minus(start, a, n));
    return out;
}

std::vector<int> storage_set(int i, int n, int r)
{
    if (r < 1 || r > n) throw ParamError("storage_set: r out of range");
    return cyclic_window(i, r, n);
}

int relabel_for_removed_node(int j, int removed, int K)
{
    if (removed < 1 || removed > K) throw ParamError("removed node out of range");
    return box_minus(j, K - removed, K);
}

int canonical_label(int actual, int removed, int K)
{
    if (removed < 1 || removed > K) throw ParamError("removed node out of range");
    return box_plus(actual, K - removed, K);
}

SubsegmentLabel whole_segment(SegmentLabel base, std::int64_t atoms)
{
    return SubsegmentLabel{base, {}, AtomRange{0, atoms}};
}

std::string to_string(const SegmentLabel& s)
{
    return (s.generation == Generation::original ? "W_" : "Wt_") + std::to_string(s.index);
}

std::string to_string(const SubsegmentLabel& s)
{
    std::string out = to_string(s.base);
    if (s.is_whole()) return out;
    out += "^{";
    for (std::size_t k = 0; k < s.superscript.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(s.superscript[k]);
    }
    return out + "}";
}

std::int64_t Piece::atoms() const
{
    std::int64_t n = 0;
    for (const auto& run : provenance) n += run.count;
    return n;
}

std::vector<AtomRun> slice_runs(const std::vector<AtomRun>& runs, std::int64_t first, std::int64_t count)
{
    std::vector<AtomRun> out;
    std::int64_t pos = 0;
    const std::int64_t end = first + count;
    for (const auto& run : runs) {
        const std::int64_t lo = std::max(first, pos);
        const std::int64_t hi = std::min(end, pos + run.count);
        if (lo < hi) out.push_back(AtomRun{run.segment, run.first + (lo - pos), hi - lo});
        pos += run.count;
        if (pos >= end) break;
    }
    return out;
}

void append_runs(std::vector<AtomRun>& into, const std::vector<AtomRun>& tail)
{
    for (const auto& run : tail) {
        if (!into.empty() && into.back().segment == run.segment && into.back().first + into.back().count == run.first)
            into.back().count += run.count;
        else
            into.push_back(run);
    }
}

namespace {

std::uint64_t mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t content_word(std::uint64_t seed, int segment, std::int64_t offset, std::int64_t word)
{
    std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL);
    h = mix64(h ^ static_cast<std::uint64_t>(segment));
    h = mix64(h ^ static_cast<std::uint64_t>(offset));
    return mix64(h ^ static_cast<std::uint64_t>(word));
}

}  // namespace

BitVec atom_content(std::uint64_t seed, int segment, std::int64_t offset, std::int64_t atom_bits)
{
    BitVec out;
    for (std::int64_t w = 0; w * 64 < atom_bits; ++w) {
        const auto nbits = static_cast<std::size_t>(std::min<std::int64_t>(64, atom_bits - w * 64));
        out.append_bits(content_word(seed, segment, offset, w), nbits);
    }
    return out;
}

const Piece* Database::find(int node, const SubsegmentLabel& label) const
{
    auto n = nodes.find(node);
    if (n == nodes.end()) return nullptr;
    auto p = n->second.find(label);
    return p == n->second.end() ? nullptr : &p->second;
}

std::optional<Piece> Database::extract(int node, const SubsegmentLabel& label) const
{
    if (const Piece* exact = find(node, label)) return *exact;
    const Piece* whole = nullptr;
    if (auto n = nodes.find(node); n != nodes.end()) {
        // The whole segment is keyed with an empty superscript and a range
        // starting at 0; its length is not known here, so scan that base.
        auto it = n->second.lower_bound(SubsegmentLabel{label.base, {}, AtomRange{0, 0}});
        if (it != n->second.end() && it->first.base == label.base && it->first.is_whole()) whole = &it->second;
    }
    if (!whole || label.range.end() > whole->atoms()) return std::nullopt;
    const auto bits = static_cast<std::size_t>(atom_bits);
    return Piece{slice_runs(whole->provenance, label.range.first, label.range.count),
                 whole->bits.slice(label.range.first * bits, label.range.count * bits)};
}

bool Database::holds_whole(int node, SegmentLabel base) const
{
    auto n = nodes.find(node);
    if (n == nodes.end()) return false;
    auto it = n->second.lower_bound(SubsegmentLabel{base, {}, AtomRange{0, 0}});
    return it != n->second.end() && it->first.base == base && it->first.is_whole();
}

void Database::store(int node, SubsegmentLabel label, Piece piece)
{
    nodes[node].insert_or_assign(std::move(label), std::move(piece));
}

std::vector<int> Database::holders(SegmentLabel s) const
{
    std::vector<int> out;
    for (const auto& [node, _] : nodes)
        if (holds_whole(node, s)) out.push_back(node);
    return out;
}

std::int64_t Database::total_bits() const
{
    std::int64_t bits = 0;
    for (const auto& [_, store] : nodes)
        for (const auto& [__, piece] : store) bits += static_cast<std::int64_t>(piece.bits.size());
    return bits;
}

Database build_cyclic_database(const SystemParams& params, std::uint64_t seed)
{
    params.validate();
    Database db;
    db.node_count = params.K;
    db.replication = params.r;
    db.segment_atoms = params.atoms_per_segment();
    db.atom_bits = params.atom_bits();
    db.seed = seed;
    for (int k = 1; k <= params.K; ++k) db.nodes[k];

    for (int i = 1; i <= params.K; ++i) {
        Piece piece;
        piece.provenance.push_back(AtomRun{i, 0, db.segment_atoms});
        for (std::int64_t a = 0; a < db.segment_atoms; ++a)
            piece.bits.append(atom_content(seed, i, a, db.atom_bits));
        const auto label = whole_segment(SegmentLabel{i, Generation::original}, db.segment_atoms);
        for (int k : storage_set(i, params.K, params.r)) db.store(k, label, piece);
    }
    return db;
}

}  // namespace rebal
