#include "npc/sim.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

namespace npc {

ReceivedRound inject(const std::vector<Packet>& packets, const FailureScenario& scenario) {
    ReceivedRound r;
    r.packets = packets;
    r.erased.assign(packets.size(), false);
    for (std::size_t conn : scenario.failed) {
        if (conn < 1 || conn > packets.size()) throw Error("failed connection index out of range");
        r.erased[conn - 1] = true;
    }
    return r;
}

std::string case_name(RecoveryCase c) {
    switch (c) {
        case RecoveryCase::EncodedOnly: return "encoded-only";
        case RecoveryCase::PlainOnly: return "plain-only";
        case RecoveryCase::Mixed: return "mixed";
    }
    return "?";
}

RecoveryResult recover(const ReceivedRound& received, const LinearCode& code,
                       const RoundPlan& plan) {
    const std::size_t n = code.n, k = code.k, m = code.m();
    if (received.packets.size() != n || received.erased.size() != n)
        throw Error("received round does not match code length");

    // Sort failures into code coordinates.
    std::vector<std::size_t> erased_coords;
    std::vector<std::size_t> failed_conns;
    std::size_t plain_failures = 0, encoded_failures = 0;
    for (std::size_t conn = 1; conn <= n; ++conn) {
        if (!received.erased[conn - 1]) continue;
        std::size_t coord = plan.coordinate_of(conn);
        erased_coords.push_back(coord);
        failed_conns.push_back(conn);
        if (coord < k)
            ++plain_failures;
        else
            ++encoded_failures;
    }
    std::sort(erased_coords.begin(), erased_coords.end());
    const std::size_t t = erased_coords.size();

    RecoveryResult res;
    res.plain.assign(k, 0);
    RecoveryStats& st = res.stats;

    // Payloads by code coordinate.
    std::vector<Symbol> symbol(n, 0);
    std::vector<bool> known(n, false);
    for (std::size_t conn = 1; conn <= n; ++conn) {
        std::size_t coord = plan.coordinate_of(conn);
        if (!received.erased[conn - 1]) {
            symbol[coord] = received.packets[conn - 1].payload;
            known[coord] = true;
        }
    }

    if (plain_failures == 0) {
        // Failures only on protection paths (or none): every working symbol
        // arrived, no queries, no additions.
        st.case_label = RecoveryCase::EncodedOnly;
        st.recovered = true;
        for (std::size_t i = 0; i < k; ++i) res.plain[i] = symbol[i];
        return res;
    }

    st.case_label = encoded_failures == 0 ? RecoveryCase::PlainOnly : RecoveryCase::Mixed;

    if (t > m) throw UnrecoverableErasure(failed_conns);

    // Query accounting per the protocol: the single-failure scheme has the
    // affected receiver ask everyone else; otherwise a designated decoder on
    // a surviving encoded path collects what it is missing.
    if (m == 1) {
        st.queries = n - 1;
    } else if (st.case_label == RecoveryCase::PlainOnly) {
        st.queries = n - m - 1;
    } else {
        st.queries = n - t - 1;
    }

    // Solve H restricted to the erased columns.  Rows of H are brought in
    // lazily: each row joins the system only if it raises the rank, and its
    // syndrome (the XOR of its known symbols) is formed at that point.
    const BitMatrix& h = code.parity;
    std::vector<std::uint64_t> rowbits;   // erased-column bits per adopted row
    std::vector<Symbol> rhs;              // syndrome symbols per adopted row
    if (t > 64) throw UnrecoverableErasure(failed_conns);  // beyond any catalog code

    std::size_t rank = 0;
    std::vector<std::uint64_t> reduced;  // row-echelon accumulator
    std::vector<std::size_t> pivot_of;   // pivot column of reduced[i]
    for (std::size_t r = 0; r < m && rank < t; ++r) {
        std::uint64_t bits = 0;
        for (std::size_t j = 0; j < t; ++j)
            if (h.get(r, erased_coords[j])) bits |= std::uint64_t{1} << j;
        if (bits == 0) continue;

        // Reduce against the rows adopted so far (bit work only).
        std::uint64_t red = bits;
        std::vector<std::size_t> used;
        for (std::size_t i = 0; i < reduced.size(); ++i)
            if (red & (std::uint64_t{1} << pivot_of[i])) {
                red ^= reduced[i];
                used.push_back(i);
            }
        if (red == 0) continue;  // dependent, skip without forming its syndrome

        // Adopt the row: form its syndrome from the known symbols.
        Symbol s = 0;
        std::size_t terms = 0;
        for (std::size_t c = 0; c < n; ++c)
            if (known[c] && h.get(r, c)) {
                s ^= symbol[c];
                ++terms;
            }
        if (terms > 1) st.xor_ops += terms - 1;

        // Replay the bit reduction on the symbol side.
        for (std::size_t i : used) {
            s ^= rhs[i];
            ++st.xor_ops;
        }

        std::size_t pivot = static_cast<std::size_t>(std::countr_zero(red));
        reduced.push_back(red);
        pivot_of.push_back(pivot);
        rhs.push_back(s);
        ++rank;
    }
    if (rank < t) throw UnrecoverableErasure(failed_conns);

    // Back-substitute to a diagonal system.
    for (std::size_t i = reduced.size(); i-- > 0;) {
        for (std::size_t jj = 0; jj < reduced.size(); ++jj) {
            if (jj == i) continue;
            if (reduced[jj] & (std::uint64_t{1} << pivot_of[i])) {
                reduced[jj] ^= reduced[i];
                rhs[jj] ^= rhs[i];
                ++st.xor_ops;
            }
        }
    }

    for (std::size_t i = 0; i < reduced.size(); ++i) {
        symbol[erased_coords[pivot_of[i]]] = rhs[i];
        known[erased_coords[pivot_of[i]]] = true;
    }

    for (std::size_t i = 0; i < k; ++i) res.plain[i] = symbol[i];
    st.recovered = true;
    return res;
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t w = idx.size();
    std::size_t i = w;
    while (i-- > 0) {
        if (idx[i] < n - (w - i)) {
            ++idx[i];
            for (std::size_t j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::uint64_t pattern_count(std::size_t n, std::size_t t, std::uint64_t cap) {
    // C(n, t), saturating at cap + 1.
    std::uint64_t c = 1;
    for (std::size_t i = 1; i <= t; ++i) {
        c = c * (n - t + i) / i;
        if (c > cap) return cap + 1;
    }
    return c;
}

}  // namespace

ValidationReport exhaustive_validate(const LinearCode& code, std::size_t t,
                                     const ValidateOptions& options) {
    ValidationReport rep;
    const std::size_t n = code.n, k = code.k;
    if (t == 0 || t > n) throw Error("failure budget must satisfy 1 <= t <= n");

    // Canonical round: protection on the last m connections, so connection
    // c carries code coordinate c-1.  Rotation is a relabeling, so pattern
    // sweeps need only this round.
    RoundPlan plan = plan_round(n, code.m(), k + 1);

    rep.patterns_exhaustive = pattern_count(n, t, options.max_patterns) <= options.max_patterns;
    rep.codewords_exhaustive = k <= options.max_exhaustive_k;

    std::mt19937_64 rng(options.seed);

    std::vector<std::vector<Symbol>> messages;
    if (rep.codewords_exhaustive) {
        messages.reserve(std::size_t{1} << k);
        for (std::uint64_t u = 0; u < (std::uint64_t{1} << k); ++u) {
            std::vector<Symbol> msg(k);
            for (std::size_t i = 0; i < k; ++i) msg[i] = (u >> i) & 1;
            messages.push_back(std::move(msg));
        }
    } else {
        for (std::size_t s = 0; s < options.codeword_samples; ++s) {
            std::vector<Symbol> msg(k);
            for (std::size_t i = 0; i < k; ++i) msg[i] = rng() & 1;
            messages.push_back(std::move(msg));
        }
    }

    auto run_pattern = [&](const std::vector<std::size_t>& conns) -> bool {
        FailureScenario scenario{conns, 1};
        for (const std::vector<Symbol>& msg : messages) {
            std::vector<Packet> packets = encode_round(code, plan, msg, 1);
            ReceivedRound received = inject(packets, scenario);
            ++rep.trials;
            try {
                RecoveryResult r = recover(received, code, plan);
                rep.cases[static_cast<int>(r.stats.case_label)].count++;
                rep.cases[static_cast<int>(r.stats.case_label)].xor_ops += r.stats.xor_ops;
                rep.cases[static_cast<int>(r.stats.case_label)].queries += r.stats.queries;
                if (r.plain != msg) return false;
            } catch (const UnrecoverableErasure&) {
                return false;
            }
        }
        return true;
    };

    if (rep.patterns_exhaustive) {
        std::vector<std::size_t> idx(t);
        for (std::size_t i = 0; i < t; ++i) idx[i] = i;
        do {
            std::vector<std::size_t> conns(t);
            for (std::size_t i = 0; i < t; ++i) conns[i] = idx[i] + 1;
            ++rep.patterns_tested;
            if (!run_pattern(conns)) {
                rep.pass = false;
                rep.witness = conns;
                return rep;
            }
        } while (next_combination(idx, n));
    } else {
        for (std::uint64_t s = 0; s < options.max_patterns; ++s) {
            // Sample a t-subset of {1..n}.
            std::vector<std::size_t> all(n);
            for (std::size_t i = 0; i < n; ++i) all[i] = i + 1;
            for (std::size_t i = 0; i < t; ++i) {
                std::uniform_int_distribution<std::size_t> pick(i, n - 1);
                std::swap(all[i], all[pick(rng)]);
            }
            std::vector<std::size_t> conns(all.begin(), all.begin() + t);
            std::sort(conns.begin(), conns.end());
            ++rep.patterns_tested;
            if (!run_pattern(conns)) {
                rep.pass = false;
                rep.witness = conns;
                return rep;
            }
        }
    }
    return rep;
}

std::string report_line(const LinearCode& code, std::size_t t, const ValidationReport& report) {
    std::ostringstream os;
    os << code.params() << ' ' << code.n << ' ' << code.k << ' ' << code.d_min << ' ' << t << ' '
       << report.patterns_tested << ' ' << (report.pass ? "pass" : "fail");
    if (report.witness) {
        os << " {";
        for (std::size_t i = 0; i < report.witness->size(); ++i) {
            if (i) os << ',';
            os << (*report.witness)[i];
        }
        os << '}';
    }
    return os.str();
}

}  // namespace npc
