#include "rebal/bus.hpp"

#include <algorithm>

namespace rebal {

namespace {

Piece require_operand(const Database& db, int sender, const SubsegmentLabel& label)
{
    if (!db.nodes.contains(sender))
        throw ProtocolViolation("node " + std::to_string(sender) + " is not in the system");
    auto piece = db.extract(sender, label);
    if (!piece)
        throw ProtocolViolation("node " + std::to_string(sender) + " cannot broadcast " + to_string(label)
                                + ": it does not hold the data");
    return std::move(*piece);
}

bool addressed(const SubsegmentLabel& label, int node)
{
    return std::binary_search(label.superscript.begin(), label.superscript.end(), node);
}

}  // namespace

Broadcast broadcast_uncoded(const Database& db, int sender, const SubsegmentLabel& label)
{
    Piece piece = require_operand(db, sender, label);
    return Broadcast{sender, BroadcastKind::uncoded, {label}, std::move(piece.bits), label.size_atoms()};
}

Broadcast broadcast_xor(const Database& db, int sender, std::vector<SubsegmentLabel> labels)
{
    if (labels.size() < 2) throw ProtocolViolation("a coded broadcast needs at least two operands");
    std::int64_t atoms = 0;
    for (const auto& l : labels) atoms = std::max(atoms, l.size_atoms());

    BitVec payload(static_cast<std::size_t>(atoms * db.atom_bits));
    for (const auto& l : labels) payload.xor_padded(require_operand(db, sender, l).bits);
    return Broadcast{sender, BroadcastKind::coded, std::move(labels), std::move(payload), atoms};
}

std::optional<std::pair<SubsegmentLabel, Piece>> decode_at_node(const Database& db, int receiver, const Broadcast& b)
{
    const SubsegmentLabel* wanted = nullptr;
    for (const auto& op : b.operands) {
        if (!addressed(op, receiver)) continue;
        if (wanted) return std::nullopt;  // addressed twice: not decodable here
        wanted = &op;
    }
    if (!wanted) return std::nullopt;

    BitVec bits = b.payload;
    for (const auto& op : b.operands) {
        if (&op == wanted) continue;
        // Side information must come from a whole base segment the receiver stores.
        if (!db.holds_whole(receiver, op.base))
            throw DecodeFailure("node " + std::to_string(receiver) + " cannot cancel " + to_string(op)
                                + " from the broadcast of node " + std::to_string(b.sender));
        bits.xor_padded(db.extract(receiver, op)->bits);
    }
    bits.resize(static_cast<std::size_t>(wanted->size_atoms() * db.atom_bits));

    Piece piece{{AtomRun{wanted->base.index, wanted->range.first, wanted->range.count}}, std::move(bits)};
    // A delivery spanning the whole base segment is kept as the segment itself.
    if (wanted->range.first == 0 && wanted->range.count == db.segment_atoms)
        return std::make_pair(whole_segment(wanted->base, db.segment_atoms), std::move(piece));
    return std::make_pair(*wanted, std::move(piece));
}

void Bus::send_uncoded(int sender, const SubsegmentLabel& label)
{
    deliver(broadcast_uncoded(db_, sender, label));
}

void Bus::send_xor(int sender, std::vector<SubsegmentLabel> labels)
{
    deliver(broadcast_xor(db_, sender, std::move(labels)));
}

void Bus::deliver(Broadcast b)
{
    if (drop_ && *drop_ == attempted_++) return;
    std::vector<std::pair<int, std::pair<SubsegmentLabel, Piece>>> received;
    for (const auto& [node, _] : db_.nodes) {
        if (node == b.sender) continue;
        if (auto got = decode_at_node(db_, node, b)) received.emplace_back(node, std::move(*got));
    }
    for (auto& [node, got] : received) db_.store(node, std::move(got.first), std::move(got.second));
    log_.total_atoms += b.payload_atoms;
    log_.broadcasts.push_back(std::move(b));
}

}  // namespace rebal
