#pragma once

#include <cstddef>
#include <vector>

#include "npc/linear_code.hpp"

namespace npc {

/// Partition of {0, ..., n-1} into orbits under multiplication by 2 mod n.
/// Each coset is listed in doubling order from its smallest member; cosets
/// are ordered by smallest member.  Requires odd n.
std::vector<std::vector<std::size_t>> cyclotomic_cosets(std::size_t n);

/// Multiplicative order of 2 modulo odd n (the extension degree mu with
/// 2^mu = 1 mod n, mu minimal).
std::size_t ord2(std::size_t n);

/// Largest designed distance covered by the closed-form dimension:
/// min{ floor(n * 2^ceil(mu/2) / (2^mu - 1)), n }.
std::size_t bch_dmax(std::size_t n, std::size_t mu);

/// Closed-form dimension k = n - mu * ceil((d-1)/2) of a binary narrow-sense
/// BCH code of length 2^floor(mu/2) < n <= 2^mu - 1 and designed distance
/// 2 <= d <= bch_dmax(n, mu).  Throws "designed distance out of closed-form
/// range" when d falls outside; callers may fall back to coset counting
/// (construct_bch does).
std::size_t bch_dimension(std::size_t n, std::size_t d, std::size_t mu);

/// Narrow-sense binary BCH code of length n (odd) and designed distance d:
/// g(x) is the product of the minimal polynomials of alpha^1..alpha^{d-1}
/// (one per cyclotomic coset), the generator matrix comes from the cyclic
/// shifts of g brought to systematic form, and the distance is verified
/// against the designed distance (exactly by enumeration for k <= 24, by
/// bounded-weight search otherwise).  For nonprimitive lengths alpha is
/// beta^{(2^mu-1)/n} with beta the primitive element of GF(2^mu).
LinearCode construct_bch(std::size_t n, std::size_t d);

/// Degree of the narrow-sense generator polynomial counted via cyclotomic
/// cosets (the union of the cosets meeting {1..d-1}).
std::size_t bch_generator_degree(std::size_t n, std::size_t d);

}  // namespace npc
