#pragma once

#include <cstddef>
#include <string>

#include "npc/bitmatrix.hpp"

namespace npc {

/// A binary [n, k, d_min] protection code: n connections, k working paths,
/// m = n - k protection paths, recovering up to t = d_min - 1 failures.
/// Stored with a systematic generator [I_k | P] and its parity check
/// H = [P^T | I_m].
struct LinearCode {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d_min = 0;
    bool d_exact = false;  // true when d_min was computed, false when designed/claimed
    BitMatrix generator;   // k x n systematic
    BitMatrix parity;      // (n - k) x n
    std::string provenance;

    std::size_t m() const { return n - k; }
    std::size_t t_max() const { return d_min - 1; }

    std::string params() const {
        return "[" + std::to_string(n) + "," + std::to_string(k) + "," +
               std::to_string(d_min) + "]";
    }
};

/// Builds a LinearCode from a systematic generator.  When compute_distance
/// is true and k <= 24, d_min is computed exactly by codeword enumeration;
/// otherwise claimed_d is carried as the distance.
LinearCode code_from_systematic(const BitMatrix& gsys, std::size_t claimed_d,
                                std::string provenance, bool compute_distance = true);

/// The [n, n-1, 2] single-failure code: one protection path carrying the XOR
/// of all working paths (P is the all-ones column).
LinearCode single_failure_code(std::size_t n);

struct BoundReport {
    bool singleton_ok = false;
    bool hamming_ok = false;
    std::size_t min_m_required = 0;
};

/// Singleton and binary Hamming checks on [n, k, d] parameters, plus the
/// smallest admissible number of protection paths
/// max{d-1, ceil(log2(sum_{i<=floor(t/2)} C(n,i)))} with t = d - 1.
BoundReport check_bounds(std::size_t n, std::size_t k, std::size_t d);
BoundReport check_bounds(const LinearCode& c);

enum class DeriveRule { Shorten, Puncture, Append, Extend };

DeriveRule parse_rule(const std::string& name);
std::string rule_name(DeriveRule rule);

/// Standard single-coordinate derivations:
///   shorten  -> [n-1, k-1, >= d]   (keep codewords that are zero at pos, drop pos)
///   puncture -> [n-1, k,   >= d-1] (drop pos)
///   append   -> [n+1, k,   d or d+1] (overall parity bit)
///   extend   -> [n+1, k+1] (new all-ones information row; distance recomputed)
/// `pos` defaults to the last coordinate, which in systematic form is a
/// protection column.  The result's d_min is recomputed exactly when k <= 24,
/// otherwise carried as the rule's bound.
LinearCode derive(const LinearCode& c, DeriveRule rule, std::size_t pos);
LinearCode derive(const LinearCode& c, DeriveRule rule);

}  // namespace npc
