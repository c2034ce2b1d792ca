#pragma once

#include <cstdint>

#include "slisim/format.hpp"
#include "slisim/number.hpp"

namespace slisim {

// Generalized exponential: phi(z) = z for z < 1, else exp(phi(z - 1)).
// Evaluated in binary64; overflows to +inf once the magnitude leaves binary64.
// Throws std::domain_error for negative or non-finite input.
double phi(double zeta);

// log10(phi(zeta)), finite well past the point where phi itself overflows
// (all of level <= 5 and most of level 6). Returns -inf at zeta = 0 and +inf
// when even the peeled magnitude leaves binary64.
double log_phi10(double zeta);

// Generalized logarithm, the inverse of phi: psi(x) = x for x < 1, else
// 1 + psi(ln x). Throws std::domain_error for negative or non-finite input.
double psi(double x);

// zeta of 1/x for 0 < x < 1, computed as 1 + psi(-ln x) so that tiny x does
// not overflow through 1/x.
double psi_reciprocal(double x);

struct RoundedIndex {
    int level = 1;
    std::uint64_t index_units = 0;
    bool saturated = false;
};

// Quantizes zeta >= 1 to the index grid of `fmt` with round-half-away-from-zero
// on index * 2^p_i. An index that rounds up to 1 carries into the next level;
// a level past max_level saturates to the largest representable zeta.
// Throws std::invalid_argument for zeta < 1 or NaN.
RoundedIndex round_index(double zeta, const SliFormat& fmt);

// Materializes an unrounded (reciprocal, zeta) pair as a canonical SliNumber.
// Inverted results that round to one come back direct.
SliNumber quantize(const SliFormat& fmt, Sign sign, Reciprocal reciprocal, double zeta);

// Nearest SLI number to a binary64 value. Magnitudes within 2^(-p_i-2) of 1
// encode as one. Throws std::domain_error for non-finite x and for negative x
// in an unsigned format.
SliNumber encode(double x, const SliFormat& fmt);

// s * phi(zeta)^r in binary64. Values beyond binary64 come back as +-inf (or
// +-0 for inverted ones); use log10_magnitude for those.
double decode(const SliNumber& n);

// log10 |decode(n)| without overflow; -inf for zero.
double log10_magnitude(const SliNumber& n);

}  // namespace slisim
