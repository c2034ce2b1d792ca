#pragma once

#include <cstdint>
#include <vector>

#include "slisim/format.hpp"
#include "slisim/number.hpp"

namespace slisim {

// Field order MSB -> LSB: sign (signed formats only, 1 = negative),
// reciprocal (1 = direct), level - 1, index * 2^p_i. Zero packs to all zeros.
BitWord pack(const SliNumber& n);

// Inverse of pack. The all-zeros word and, in signed formats, the word with
// only the sign bit set unpack to zero. Throws std::invalid_argument if the
// width does not match the format.
SliNumber unpack(const BitWord& w, const SliFormat& fmt);

// Field view of a word without the zero convention.
struct RawFields {
    Sign sign = Sign::positive;
    Reciprocal reciprocal = Reciprocal::direct;
    int level = 1;
    std::uint64_t index_units = 0;

    double zeta(const SliFormat& fmt) const;
};

RawFields raw_fields(const BitWord& w, const SliFormat& fmt);

struct EnumEntry {
    BitWord word;
    double value = 0.0;           // binary64 image, may be +-inf or 0 outside range
    double log10_magnitude = 0.0; // log10 |value|, finite for every nonzero pattern
    bool is_zero = false;
};

inline constexpr int kMaxEnumerationWidth = 24;

// All 2^width patterns in ascending unsigned order. `raw` decodes every word
// by its fields (the all-zeros word shows 1); otherwise the zero convention
// applies. Throws std::length_error above kMaxEnumerationWidth bits.
std::vector<EnumEntry> enumerate(const SliFormat& fmt, bool raw);

// Position of n in the value order of its format: 0 for zero, 1 for the
// smallest positive magnitude, negated for negative numbers.
std::int64_t ordinal(const SliNumber& n);

// Largest ordinal of the format (the maximum representable magnitude).
std::int64_t max_ordinal(const SliFormat& fmt);

// Inverse of ordinal. Throws std::out_of_range outside the format's range.
SliNumber from_ordinal(const SliFormat& fmt, std::int64_t ord);

// Value-adjacent neighbours. Throws std::range_error at the ends of the range.
SliNumber next_up(const SliNumber& n);
SliNumber next_down(const SliNumber& n);

// decode(next_up(n)) - decode(n). +inf when the upper neighbour overflows
// binary64; may underflow to 0 for magnitudes below binary64's range.
double spacing(const SliNumber& n);

}  // namespace slisim
