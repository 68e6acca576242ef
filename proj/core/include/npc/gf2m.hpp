#pragma once

#include <cstdint>
#include <vector>

#include "npc/errors.hpp"

namespace npc {

/// Element of GF(2^mu) in polynomial basis over GF(2); `bits` holds the
/// coefficients, bit i = coefficient of x^i.
struct FieldElement {
    std::uint16_t bits = 0;
    std::uint8_t mu = 0;
};

/// Arithmetic context for GF(2^mu), 2 <= mu <= 10, built on log/antilog
/// tables over a fixed primitive polynomial per degree.  The polynomial
/// choice is part of the reproducibility contract and is reported alongside
/// constructed codes.
class Gf2mField {
public:
    /// Shared immutable instance per extension degree.
    static const Gf2mField& get(unsigned mu);

    /// Coefficient mask of the primitive polynomial for degree mu
    /// (bit i = coefficient of x^i, including the leading x^mu term).
    static std::uint32_t primitive_polynomial(unsigned mu);

    unsigned mu() const { return mu_; }
    std::uint32_t order() const { return order_; }  // 2^mu - 1

    FieldElement zero() const { return {0, static_cast<std::uint8_t>(mu_)}; }
    FieldElement one() const { return {1, static_cast<std::uint8_t>(mu_)}; }
    FieldElement alpha() const { return {2, static_cast<std::uint8_t>(mu_)}; }

    FieldElement element(std::uint16_t bits) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, std::uint64_t e) const;

    /// alpha^e for e >= 0 (exponent reduced mod 2^mu - 1).
    FieldElement alpha_pow(std::uint64_t e) const;

    /// Discrete log base alpha; error on zero.
    std::uint32_t log(FieldElement a) const;

private:
    explicit Gf2mField(unsigned mu);

    void check(FieldElement a) const;

    unsigned mu_;
    std::uint32_t order_;
    std::vector<std::uint16_t> antilog_;  // antilog_[e] = alpha^e, e in [0, order)
    std::vector<std::uint32_t> log_;      // log_[bits] for bits in [1, 2^mu)
};

}  // namespace npc
