#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "npc/scheme.hpp"

namespace npc {

/// Failures are erasures at known positions: the affected connections of one
/// round.  Indices are 1-based.
struct FailureScenario {
    std::vector<std::size_t> failed;
    std::size_t round = 0;
};

/// A round as seen by the receivers: payloads with an erasure mask.
struct ReceivedRound {
    std::vector<Packet> packets;
    std::vector<bool> erased;  // by connection index - 1
};

/// Marks the payloads of the failed connections as erased.
ReceivedRound inject(const std::vector<Packet>& packets, const FailureScenario& scenario);

enum class RecoveryCase { EncodedOnly, PlainOnly, Mixed };

std::string case_name(RecoveryCase c);

struct RecoveryStats {
    std::size_t xor_ops = 0;   // symbol additions performed
    std::size_t queries = 0;   // receiver-to-receiver queries
    RecoveryCase case_label = RecoveryCase::EncodedOnly;
    bool recovered = false;
};

struct RecoveryResult {
    std::vector<Symbol> plain;  // k symbols, in plain-coordinate order
    RecoveryStats stats;
};

/// Runs the three-case recovery procedure:
///  - all failures on encoded paths: nothing to do (0 XORs, 0 queries);
///  - all failures on plain paths: for the single-failure scheme the one
///    affected receiver queries the other n-1 nodes and XORs the n-1
///    answers (n-2 additions); for m > 1 the lowest-indexed encoded-path
///    receiver sends n-m-1 queries and decodes for everyone;
///  - mixed failures: handled like the plain case restricted to surviving
///    paths, so the designated decoder queries the n-t-1 receivers it has
///    not heard from.
/// XOR counts are the symbol additions actually performed (syndrome
/// formation plus elimination).  Throws UnrecoverableErasure when the erased
/// parity-check columns are dependent.
RecoveryResult recover(const ReceivedRound& received, const LinearCode& code,
                       const RoundPlan& plan);

struct CaseStats {
    std::uint64_t count = 0;
    std::uint64_t xor_ops = 0;
    std::uint64_t queries = 0;
};

struct ValidationReport {
    bool pass = true;
    std::uint64_t patterns_tested = 0;
    std::uint64_t trials = 0;  // pattern x codeword recoveries attempted
    bool patterns_exhaustive = true;
    bool codewords_exhaustive = true;
    std::optional<std::vector<std::size_t>> witness;  // first failing pattern
    CaseStats cases[3];  // indexed by RecoveryCase
};

struct ValidateOptions {
    std::uint64_t max_patterns = 100000;   // exhaustive below, sampled above
    std::size_t max_exhaustive_k = 12;     // all 2^k codewords below
    std::size_t codeword_samples = 100;
    std::uint64_t seed = 0;
};

/// Sweeps failure patterns of exactly `t` connections against the code,
/// checking that every erased working symbol is recovered bit-exactly.
/// Failures to recover are reported (with the first witness pattern), not
/// thrown.
ValidationReport exhaustive_validate(const LinearCode& code, std::size_t t,
                                     const ValidateOptions& options = {});

/// One-line report: "code n k d t patterns_tested pass|fail [witness]".
std::string report_line(const LinearCode& code, std::size_t t, const ValidationReport& report);

}  // namespace npc
