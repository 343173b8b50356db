#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rebal/faults.hpp"
#include "rebal/model.hpp"
#include "rebal/rational.hpp"

namespace rebal {

enum class BroadcastKind { uncoded, coded };

/// One transmission on the shared bus.
struct Broadcast {
    int sender = 0;
    BroadcastKind kind = BroadcastKind::uncoded;
    std::vector<SubsegmentLabel> operands;
    BitVec payload;               // payload_atoms * atom_bits bits
    std::int64_t payload_atoms = 0;  // largest operand
};

struct TransmissionLog {
    std::vector<Broadcast> broadcasts;
    std::int64_t total_atoms = 0;

    /// Total transmitted size in units of the segment size.
    Rational load(std::int64_t atoms_per_segment) const { return Rational(total_atoms, atoms_per_segment); }
};

/// Payload = the operand verbatim. Throws ProtocolViolation if the sender
/// cannot produce it.
Broadcast broadcast_uncoded(const Database& db, int sender, const SubsegmentLabel& label);

/// Payload = XOR of all operands, each zero-padded at the tail to the
/// largest operand. Requires at least two operands.
Broadcast broadcast_xor(const Database& db, int sender, std::vector<SubsegmentLabel> labels);

/// Recovers the operand addressed to `receiver`, if exactly one is. The other
/// operands are rebuilt from the receiver's own storage and cancelled; throws
/// DecodeFailure if one of them is unavailable there.
std::optional<std::pair<SubsegmentLabel, Piece>> decode_at_node(const Database& db, int receiver,
                                                                 const Broadcast& b);

/// Sequential broadcast channel over a working database: every sent broadcast
/// is logged and decoded by every other node.
class Bus {
public:
    explicit Bus(Database& db, std::optional<std::size_t> drop = std::nullopt) : db_(db), drop_(drop) {}

    void send_uncoded(int sender, const SubsegmentLabel& label);
    void send_xor(int sender, std::vector<SubsegmentLabel> labels);

    const TransmissionLog& log() const { return log_; }
    TransmissionLog take_log() { return std::move(log_); }

private:
    void deliver(Broadcast b);

    Database& db_;
    std::optional<std::size_t> drop_;
    std::size_t attempted_ = 0;
    TransmissionLog log_;
};

}  // namespace rebal
