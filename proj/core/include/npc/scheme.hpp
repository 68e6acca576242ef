#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "npc/linear_code.hpp"
#include "npc/rational.hpp"

namespace npc {

/// One transmitted data unit.  A symbol is a fixed-width bit block; the
/// encoding is plain XOR, so the width does not matter to any of the
/// algebra.  Tests use the low bit only.
using Symbol = std::uint64_t;

/// Per-round role assignment.  Connections are numbered 1..n.  The m
/// protection roles rotate one step per round: round j of a cycle assigns
/// the encoded role to connections j, j+1, ..., j+m-1 (wrapping), so over a
/// full cycle of n rounds every connection is encoded exactly m times.
struct RoundPlan {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t cycle = 0;                     // 1-based
    std::size_t round = 0;                     // 1-based index within the cycle
    std::vector<std::size_t> protection_set;   // m connection indices, rotation order
    std::vector<std::size_t> plain_set;        // the remaining k indices, ascending

    bool is_protection(std::size_t conn) const;
    /// Code coordinate (0-based) carried by connection `conn` this round:
    /// plain connections map to coordinates 0..k-1 in ascending order,
    /// protection connections to k..n-1 in rotation order.
    std::size_t coordinate_of(std::size_t conn) const;
    /// Inverse of coordinate_of.
    std::size_t connection_of(std::size_t coord) const;
};

/// Role plan for a global round counter (round >= 1; cycles have n rounds).
RoundPlan plan_round(std::size_t n, std::size_t m, std::size_t round);

struct Packet {
    std::size_t source_id = 0;  // connection index, 1-based
    Symbol payload = 0;
    std::size_t round = 0;      // global round counter (delta)
    bool encoded = false;
};

/// Builds the n packets of one round: plain senders emit their own symbol,
/// protection sender j emits sum_l P[l][j'] * x_l over the round's plain
/// symbols, where j' is the protection coordinate the rotation assigns to j.
/// `data` holds the k plain symbols in plain_set order.
std::vector<Packet> encode_round(const LinearCode& code, const RoundPlan& plan,
                                 const std::vector<Symbol>& data, std::size_t global_round);

/// Average normalized capacity (n - m) / n, exact.
Rational capacity(std::size_t n, std::size_t m);

/// One connection-round of the ledger.  For plain rows, stream_index says
/// which symbol of the source's data stream was sent; for encoded rows,
/// contributors lists the (connection, stream_index) pairs mixed into the
/// payload, so recovery can be checked against the exact symbol of each
/// source.
struct LedgerRow {
    std::size_t cycle = 0;
    std::size_t round = 0;  // global round
    std::size_t conn = 0;
    bool encoded = false;
    Symbol payload = 0;
    std::size_t stream_index = 0;  // plain rows only
    std::vector<std::pair<std::size_t, std::size_t>> contributors;  // encoded rows only
};

/// Drives `rounds` consecutive rounds of the scheme over per-connection data
/// streams.  Each connection consumes its next stream symbol when it holds a
/// plain role; streams must be long enough.
class RoundLedger {
public:
    RoundLedger(LinearCode code, std::vector<std::vector<Symbol>> streams);

    /// Runs the next round and returns its packets.
    std::vector<Packet> step();

    const std::vector<LedgerRow>& rows() const { return rows_; }
    const LinearCode& code() const { return code_; }
    std::size_t current_round() const { return round_; }
    RoundPlan last_plan() const { return plan_round(code_.n, code_.m(), round_); }

    /// Per-connection count of active (plain) rounds so far.
    std::vector<std::size_t> active_counts() const;
    /// Cycle-average normalized capacity over the rounds run so far.
    Rational measured_capacity() const;

    /// Line-oriented export: "cycle round conn role payload".
    void export_text(std::ostream& out) const;

private:
    LinearCode code_;
    std::vector<std::vector<Symbol>> streams_;
    std::vector<std::size_t> positions_;  // next stream index per connection
    std::vector<LedgerRow> rows_;
    std::size_t round_ = 0;  // last completed global round
};

}  // namespace npc
