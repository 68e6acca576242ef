#include "npc/scheme.hpp"

#include <algorithm>
#include <ostream>

namespace npc {

bool RoundPlan::is_protection(std::size_t conn) const {
    return std::find(protection_set.begin(), protection_set.end(), conn) !=
           protection_set.end();
}

std::size_t RoundPlan::coordinate_of(std::size_t conn) const {
    const std::size_t k = n - m;
    for (std::size_t i = 0; i < plain_set.size(); ++i)
        if (plain_set[i] == conn) return i;
    for (std::size_t i = 0; i < protection_set.size(); ++i)
        if (protection_set[i] == conn) return k + i;
    throw Error("connection index out of range");
}

std::size_t RoundPlan::connection_of(std::size_t coord) const {
    const std::size_t k = n - m;
    if (coord < k) return plain_set[coord];
    if (coord < n) return protection_set[coord - k];
    throw Error("coordinate out of range");
}

RoundPlan plan_round(std::size_t n, std::size_t m, std::size_t round) {
    if (n == 0) throw Error("plan_round needs n >= 1");
    if (m >= n) throw Error("plan_round needs m < n");
    if (round == 0) throw Error("rounds are numbered from 1");

    RoundPlan p;
    p.n = n;
    p.m = m;
    p.cycle = (round - 1) / n + 1;
    p.round = (round - 1) % n + 1;

    std::vector<bool> prot(n + 1, false);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t conn = (p.round - 1 + i) % n + 1;
        p.protection_set.push_back(conn);
        prot[conn] = true;
    }
    for (std::size_t c = 1; c <= n; ++c)
        if (!prot[c]) p.plain_set.push_back(c);
    return p;
}

std::vector<Packet> encode_round(const LinearCode& code, const RoundPlan& plan,
                                 const std::vector<Symbol>& data, std::size_t global_round) {
    const std::size_t n = code.n, k = code.k;
    if (plan.n != n || plan.m != code.m()) throw Error("plan does not match code dimensions");
    if (data.size() != k) throw Error("expected k plain symbols");

    std::vector<Packet> packets(n);
    for (std::size_t conn = 1; conn <= n; ++conn) {
        Packet& pkt = packets[conn - 1];
        pkt.source_id = conn;
        pkt.round = global_round;
        std::size_t coord = plan.coordinate_of(conn);
        if (coord < k) {
            pkt.encoded = false;
            pkt.payload = data[coord];
        } else {
            pkt.encoded = true;
            Symbol y = 0;
            for (std::size_t l = 0; l < k; ++l)
                if (code.generator.get(l, coord)) y ^= data[l];
            pkt.payload = y;
        }
    }
    return packets;
}

Rational capacity(std::size_t n, std::size_t m) {
    if (n == 0) throw Error("capacity needs n >= 1");
    if (m > n) throw Error("capacity needs m <= n");
    return Rational(static_cast<std::int64_t>(n - m), static_cast<std::int64_t>(n));
}

RoundLedger::RoundLedger(LinearCode code, std::vector<std::vector<Symbol>> streams)
    : code_(std::move(code)), streams_(std::move(streams)),
      positions_(code_.n, 0) {
    if (streams_.size() != code_.n) throw Error("one data stream per connection required");
}

std::vector<Packet> RoundLedger::step() {
    const std::size_t n = code_.n, k = code_.k;
    const std::size_t round = ++round_;
    RoundPlan plan = plan_round(n, code_.m(), round);

    // Plain senders consume their next stream symbol this round.
    std::vector<Symbol> data(k);
    std::vector<std::size_t> stream_idx(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t conn = plan.plain_set[i];
        std::size_t pos = positions_[conn - 1]++;
        if (pos >= streams_[conn - 1].size()) throw Error("data stream exhausted");
        data[i] = streams_[conn - 1][pos];
        stream_idx[i] = pos;
    }

    std::vector<Packet> packets = encode_round(code_, plan, data, round);
    for (std::size_t conn = 1; conn <= n; ++conn) {
        LedgerRow row;
        row.cycle = plan.cycle;
        row.round = round;
        row.conn = conn;
        row.encoded = packets[conn - 1].encoded;
        row.payload = packets[conn - 1].payload;
        std::size_t coord = plan.coordinate_of(conn);
        if (!row.encoded) {
            row.stream_index = stream_idx[coord];
        } else {
            for (std::size_t l = 0; l < k; ++l)
                if (code_.generator.get(l, coord))
                    row.contributors.emplace_back(plan.plain_set[l], stream_idx[l]);
        }
        rows_.push_back(std::move(row));
    }
    return packets;
}

std::vector<std::size_t> RoundLedger::active_counts() const {
    std::vector<std::size_t> counts(code_.n, 0);
    for (const LedgerRow& r : rows_)
        if (!r.encoded) ++counts[r.conn - 1];
    return counts;
}

Rational RoundLedger::measured_capacity() const {
    if (round_ == 0) throw Error("no rounds run yet");
    // Sum of per-round normalized capacities (active / n), divided by rounds.
    std::size_t active = 0;
    for (const LedgerRow& r : rows_)
        if (!r.encoded) ++active;
    return Rational(static_cast<std::int64_t>(active),
                    static_cast<std::int64_t>(code_.n * round_));
}

void RoundLedger::export_text(std::ostream& out) const {
    for (const LedgerRow& r : rows_)
        out << r.cycle << ' ' << ((r.round - 1) % code_.n + 1) << ' ' << r.conn << ' '
            << (r.encoded ? "encoded" : "plain") << ' ' << r.payload << '\n';
}

}  // namespace npc
