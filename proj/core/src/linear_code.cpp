#include "npc/linear_code.hpp"

#include <bit>

namespace npc {

LinearCode code_from_systematic(const BitMatrix& gsys, std::size_t claimed_d,
                                std::string provenance, bool compute_distance) {
    LinearCode c;
    c.n = gsys.cols();
    c.k = gsys.rows();
    c.generator = gsys;
    c.parity = parity_check_from_generator(gsys);
    if (compute_distance && c.k <= 24) {
        c.d_min = min_distance_exact(gsys);
        c.d_exact = true;
    } else {
        c.d_min = claimed_d;
        c.d_exact = false;
    }
    c.provenance = std::move(provenance);
    return c;
}

LinearCode single_failure_code(std::size_t n) {
    if (n < 2) throw Error("single-failure code needs n >= 2");
    const std::size_t k = n - 1;
    BitMatrix g(k, n);
    for (std::size_t i = 0; i < k; ++i) {
        g.set(i, i, true);
        g.set(i, n - 1, true);
    }
    LinearCode c;
    c.n = n;
    c.k = k;
    c.d_min = 2;
    c.d_exact = true;
    c.generator = g;
    c.parity = parity_check_from_generator(g);  // the all-ones row
    c.provenance = "parity";
    return c;
}

namespace {

// C(n, k) without overflow worries at the catalog's scale (n <= 135, k <= 13).
std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::size_t ceil_log2(std::uint64_t v) {
    if (v <= 1) return 0;
    return static_cast<std::size_t>(std::bit_width(v - 1));
}

}  // namespace

BoundReport check_bounds(std::size_t n, std::size_t k, std::size_t d) {
    BoundReport r;
    const std::size_t m = n - k;
    const std::size_t t = d - 1;
    r.singleton_ok = t <= m;

    std::uint64_t sphere = 0;
    for (std::size_t i = 0; i <= t / 2; ++i) sphere += binomial(n, i);
    // sum_{i<=floor((d-1)/2)} C(n,i) <= 2^m; the sum fits in 64 bits for all
    // catalog parameters, so m >= 64 passes outright.
    r.hamming_ok = m >= 64 || sphere <= (std::uint64_t{1} << m);

    r.min_m_required = std::max(t, ceil_log2(sphere));
    return r;
}

BoundReport check_bounds(const LinearCode& c) { return check_bounds(c.n, c.k, c.d_min); }

DeriveRule parse_rule(const std::string& name) {
    if (name == "shorten") return DeriveRule::Shorten;
    if (name == "puncture") return DeriveRule::Puncture;
    if (name == "append") return DeriveRule::Append;
    if (name == "extend") return DeriveRule::Extend;
    throw Error("unknown derivation rule '" + name + "'");
}

std::string rule_name(DeriveRule rule) {
    switch (rule) {
        case DeriveRule::Shorten: return "shorten";
        case DeriveRule::Puncture: return "puncture";
        case DeriveRule::Append: return "append";
        case DeriveRule::Extend: return "extend";
    }
    return "?";
}

namespace {

BitMatrix drop_column(const BitMatrix& g, std::size_t pos) {
    BitMatrix out(g.rows(), g.cols() - 1);
    for (std::size_t r = 0; r < g.rows(); ++r) {
        std::size_t oc = 0;
        for (std::size_t c = 0; c < g.cols(); ++c) {
            if (c == pos) continue;
            if (g.get(r, c)) out.set(r, oc, true);
            ++oc;
        }
    }
    return out;
}

LinearCode finish(const BitMatrix& rows, std::size_t claimed_d, const LinearCode& parent,
                  DeriveRule rule) {
    SystematicForm sf = systematic_form(rows);
    std::string prov = "derived(" + rule_name(rule) + ", " + parent.params() + ")";
    return code_from_systematic(sf.gsys, claimed_d, std::move(prov));
}

}  // namespace

LinearCode derive(const LinearCode& c, DeriveRule rule, std::size_t pos) {
    switch (rule) {
        case DeriveRule::Shorten: {
            if (c.k < 2) throw Error("shorten needs k >= 2");
            if (pos >= c.n) throw Error("coordinate out of range");
            // Basis of the subcode that is zero at pos, with pos removed.
            BitMatrix g = c.generator;
            std::size_t with_one = g.rows();
            for (std::size_t r = 0; r < g.rows(); ++r)
                if (g.get(r, pos)) {
                    with_one = r;
                    break;
                }
            std::vector<BitVector> basis;
            for (std::size_t r = 0; r < g.rows(); ++r) {
                if (r == with_one) continue;
                BitVector row = g.row(r);
                if (row.get(pos)) row.xor_assign(g.row(with_one));
                basis.push_back(row);
            }
            if (with_one == g.rows()) {
                // No row touches pos: the coordinate is identically zero and
                // shortening would not drop the dimension.
                throw Error("shorten: coordinate is identically zero");
            }
            BitMatrix rows(basis.size(), c.n);
            for (std::size_t r = 0; r < basis.size(); ++r) rows.set_row(r, basis[r]);
            return finish(drop_column(rows, pos), c.d_min, c, rule);
        }
        case DeriveRule::Puncture: {
            if (c.n < 2) throw Error("puncture needs n >= 2");
            if (pos >= c.n) throw Error("coordinate out of range");
            if (c.d_min < 2) throw Error("puncture needs d_min >= 2");
            return finish(drop_column(c.generator, pos), c.d_min - 1, c, rule);
        }
        case DeriveRule::Append: {
            // Overall parity column; pos is ignored (the new coordinate is last).
            BitMatrix g(c.k, c.n + 1);
            for (std::size_t r = 0; r < c.k; ++r) {
                bool parity = false;
                for (std::size_t col = 0; col < c.n; ++col)
                    if (c.generator.get(r, col)) {
                        g.set(r, col, true);
                        parity = !parity;
                    }
                g.set(r, c.n, parity);
            }
            const std::size_t claimed = (c.d_min % 2) ? c.d_min + 1 : c.d_min;
            return finish(g, claimed, c, rule);
        }
        case DeriveRule::Extend: {
            // One extra coordinate and one extra information row (all ones on
            // the new length); the distance gives no useful a priori bound
            // and is recomputed.
            BitMatrix g(c.k + 1, c.n + 1);
            for (std::size_t r = 0; r < c.k; ++r)
                for (std::size_t col = 0; col < c.n; ++col)
                    if (c.generator.get(r, col)) g.set(r, col, true);
            for (std::size_t col = 0; col <= c.n; ++col) g.set(c.k, col, true);
            return finish(g, 1, c, rule);
        }
    }
    throw Error("unknown derivation rule");
}

LinearCode derive(const LinearCode& c, DeriveRule rule) {
    std::size_t pos = c.n - 1;
    return derive(c, rule, pos);
}

}  // namespace npc
