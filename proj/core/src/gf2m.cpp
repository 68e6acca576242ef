#include "npc/gf2m.hpp"

#include <array>

namespace npc {

namespace {

// Minimal-weight primitive polynomials over GF(2), indexed by degree.
// Bit i = coefficient of x^i.
constexpr std::array<std::uint32_t, 11> kPrimitivePoly = {
    0,      // unused
    0,      // unused
    0b111,          // x^2 + x + 1
    0b1011,         // x^3 + x + 1
    0b10011,        // x^4 + x + 1
    0b100101,       // x^5 + x^2 + 1
    0b1000011,      // x^6 + x + 1
    0b10001001,     // x^7 + x^3 + 1
    0b100011101,    // x^8 + x^4 + x^3 + x^2 + 1
    0b1000010001,   // x^9 + x^4 + 1
    0b10000001001,  // x^10 + x^3 + 1
};

}  // namespace

std::uint32_t Gf2mField::primitive_polynomial(unsigned mu) {
    if (mu < 2 || mu > 10) throw Error("unsupported extension degree " + std::to_string(mu));
    return kPrimitivePoly[mu];
}

const Gf2mField& Gf2mField::get(unsigned mu) {
    if (mu < 2 || mu > 10) throw Error("unsupported extension degree " + std::to_string(mu));
    static const std::array<Gf2mField, 11> fields = {
        Gf2mField(2), Gf2mField(2), Gf2mField(2), Gf2mField(3), Gf2mField(4),
        Gf2mField(5), Gf2mField(6), Gf2mField(7), Gf2mField(8), Gf2mField(9),
        Gf2mField(10)};
    return fields[mu];
}

Gf2mField::Gf2mField(unsigned mu)
    : mu_(mu), order_((std::uint32_t{1} << mu) - 1) {
    const std::uint32_t poly = kPrimitivePoly[mu];
    const std::uint32_t card = std::uint32_t{1} << mu;
    antilog_.assign(order_, 0);
    log_.assign(card, 0);
    std::uint32_t v = 1;
    for (std::uint32_t e = 0; e < order_; ++e) {
        antilog_[e] = static_cast<std::uint16_t>(v);
        log_[v] = e;
        v <<= 1;
        if (v & card) v ^= poly;
    }
    if (v != 1) throw Error("polynomial table entry is not primitive");  // internal check
}

void Gf2mField::check(FieldElement a) const {
    if (a.mu != mu_) throw Error("field element from a different extension degree");
}

FieldElement Gf2mField::element(std::uint16_t bits) const {
    if (bits >= (std::uint32_t{1} << mu_)) throw Error("element bits out of field range");
    return {bits, static_cast<std::uint8_t>(mu_)};
}

FieldElement Gf2mField::add(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    return {static_cast<std::uint16_t>(a.bits ^ b.bits), a.mu};
}

FieldElement Gf2mField::mul(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    if (a.bits == 0 || b.bits == 0) return zero();
    std::uint32_t e = log_[a.bits] + log_[b.bits];
    if (e >= order_) e -= order_;
    return {antilog_[e], a.mu};
}

FieldElement Gf2mField::inv(FieldElement a) const {
    check(a);
    if (a.bits == 0) throw Error("inverse of zero");
    std::uint32_t e = (order_ - log_[a.bits]) % order_;
    return {antilog_[e], a.mu};
}

FieldElement Gf2mField::pow(FieldElement a, std::uint64_t e) const {
    check(a);
    if (a.bits == 0) return e == 0 ? one() : zero();
    std::uint64_t le = (static_cast<std::uint64_t>(log_[a.bits]) * (e % order_)) % order_;
    return {antilog_[le], a.mu};
}

FieldElement Gf2mField::alpha_pow(std::uint64_t e) const {
    return {antilog_[e % order_], static_cast<std::uint8_t>(mu_)};
}

std::uint32_t Gf2mField::log(FieldElement a) const {
    check(a);
    if (a.bits == 0) throw Error("log of zero");
    return log_[a.bits];
}

}  // namespace npc
