#include "npc/bch.hpp"

#include <algorithm>
#include <set>

#include "npc/gf2m.hpp"

namespace npc {

std::vector<std::vector<std::size_t>> cyclotomic_cosets(std::size_t n) {
    if (n == 0) throw Error("cyclotomic cosets need n >= 1");
    if (n % 2 == 0) throw Error("cyclotomic cosets need gcd(n, 2) = 1");
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::size_t>> cosets;
    for (std::size_t lead = 0; lead < n; ++lead) {
        if (seen[lead]) continue;
        std::vector<std::size_t> coset;
        std::size_t x = lead;
        do {
            seen[x] = true;
            coset.push_back(x);
            x = (x * 2) % n;
        } while (x != lead);
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

std::size_t ord2(std::size_t n) {
    if (n % 2 == 0) throw Error("ord2 needs odd n");
    if (n == 1) return 1;
    std::size_t mu = 1;
    std::size_t v = 2 % n;
    while (v != 1) {
        v = (v * 2) % n;
        ++mu;
        if (mu > 64) throw Error("ord2 runaway");
    }
    return mu;
}

std::size_t bch_dmax(std::size_t n, std::size_t mu) {
    const std::uint64_t qm = (std::uint64_t{1} << mu) - 1;
    const std::uint64_t up = std::uint64_t{1} << ((mu + 1) / 2);
    return static_cast<std::size_t>(std::min<std::uint64_t>(n * up / qm, n));
}

std::size_t bch_dimension(std::size_t n, std::size_t d, std::size_t mu) {
    if (n % 2 == 0) throw Error("bch_dimension needs gcd(n, 2) = 1");
    if (ord2(n) != mu) throw Error("mu must be the multiplicative order of 2 mod n");
    const std::uint64_t lower = std::uint64_t{1} << (mu / 2);
    const std::uint64_t upper = (std::uint64_t{1} << mu) - 1;
    if (!(lower < n && n <= upper)) throw Error("length outside 2^floor(mu/2) < n <= 2^mu - 1");
    if (d < 2 || d > bch_dmax(n, mu))
        throw Error("designed distance out of closed-form range");
    // k = n - mu * ceil((d-1)(1 - 1/q)) with q = 2.
    return n - mu * ((d - 1 + 1) / 2);
}

std::size_t bch_generator_degree(std::size_t n, std::size_t d) {
    auto cosets = cyclotomic_cosets(n);
    std::size_t deg = 0;
    for (const auto& coset : cosets) {
        bool used = false;
        for (std::size_t s : coset)
            if (s >= 1 && s <= d - 1) used = true;
        if (used) deg += coset.size();
    }
    return deg;
}

namespace {

// Polynomial over GF(2^mu), coefficient i of x^i.
using FPoly = std::vector<FieldElement>;

FPoly poly_mul(const Gf2mField& f, const FPoly& a, const FPoly& b) {
    FPoly c(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].bits == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].bits == 0) continue;
            c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
        }
    }
    return c;
}

// Minimal polynomial over GF(2) of alpha^s: product of (x - alpha^e) over the
// coset of s.  All coefficients must land in {0, 1}.
std::vector<std::uint8_t> minimal_polynomial(const Gf2mField& f, const FieldElement& alpha,
                                             const std::vector<std::size_t>& coset) {
    FPoly p{f.one()};
    for (std::size_t s : coset) {
        FieldElement root = f.pow(alpha, s);
        FPoly factor{root, f.one()};  // x + alpha^s (== x - alpha^s over GF(2^mu))
        p = poly_mul(f, p, factor);
    }
    std::vector<std::uint8_t> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].bits > 1) throw Error("minimal polynomial coefficient not binary");
        out[i] = static_cast<std::uint8_t>(p[i].bits);
    }
    return out;
}

std::vector<std::uint8_t> poly_mul_gf2(const std::vector<std::uint8_t>& a,
                                       const std::vector<std::uint8_t>& b) {
    std::vector<std::uint8_t> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (std::size_t j = 0; j < b.size(); ++j)
                if (b[j]) c[i + j] ^= 1;
    return c;
}

}  // namespace

LinearCode construct_bch(std::size_t n, std::size_t d) {
    if (n % 2 == 0) throw Error("BCH construction needs gcd(n, 2) = 1 (odd length)");
    if (n < 3) throw Error("BCH construction needs n >= 3");
    if (d < 2 || d > n) throw Error("designed distance must satisfy 2 <= d <= n");
    const std::size_t mu = ord2(n);
    if (mu < 2 || mu > 10) throw Error("unsupported extension degree for length " + std::to_string(n));

    const Gf2mField& f = Gf2mField::get(static_cast<unsigned>(mu));
    // Nonprimitive lengths: alpha = beta^((2^mu - 1) / n) has order n.
    const std::uint64_t step = f.order() / n;
    const FieldElement alpha = f.alpha_pow(step);

    // g(x) = product over the distinct cosets meeting {1..d-1} of the
    // minimal polynomial of alpha^s (shared cosets deduplicated, which is
    // the lcm of the minimal polynomials).
    auto cosets = cyclotomic_cosets(n);
    std::vector<std::uint8_t> g{1};
    for (const auto& coset : cosets) {
        bool used = false;
        for (std::size_t s : coset)
            if (s >= 1 && s <= d - 1) used = true;
        if (used) g = poly_mul_gf2(g, minimal_polynomial(f, alpha, coset));
    }
    const std::size_t deg = g.size() - 1;
    if (deg >= n) throw Error("designed distance leaves no information symbols");
    const std::size_t k = n - deg;

    // Cross-check against the closed form when d is in its range.
    if (d <= bch_dmax(n, mu)) {
        if (bch_dimension(n, d, mu) != k)
            throw Error("BCH dimension mismatch between coset count and closed form");
    }

    // Rows are the cyclic shifts x^i * g(x); coordinate j carries x^j.
    BitMatrix shifts(k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j <= deg; ++j)
            if (g[j]) shifts.set(i, i + j, true);

    SystematicForm sf = systematic_form(shifts);
    for (std::size_t j = 0; j < n; ++j)
        if (sf.perm[j] != j) throw Error("cyclic shift matrix unexpectedly non-systematic");

    // Report the primitive polynomial as a binary coefficient string so the
    // construction is reproducible bit for bit.
    std::uint32_t poly = Gf2mField::primitive_polynomial(static_cast<unsigned>(mu));
    std::string poly_bits;
    for (std::size_t b = mu + 1; b-- > 0;) poly_bits += ((poly >> b) & 1) ? '1' : '0';
    std::string prov = "bch(n=" + std::to_string(n) + ",d=" + std::to_string(d) +
                       ",poly=" + poly_bits + ")";
    LinearCode c = code_from_systematic(sf.gsys, d, prov);

    // BCH bound: the real distance is at least the designed distance.
    if (c.d_exact) {
        if (c.d_min < d) throw Error("constructed code violates the BCH bound");
    } else {
        DistanceReport rep = min_distance_bounded(c.parity, d - 1);
        if (rep.exact && rep.value < d) throw Error("constructed code violates the BCH bound");
    }
    return c;
}

}  // namespace npc
