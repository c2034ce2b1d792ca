#include "slisim/codec.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "slisim/level_index.hpp"

namespace slisim {

namespace {

struct FieldLayout {
    int index_shift = 0;
    int level_shift = 0;
    int recip_shift = 0;
    int sign_shift = -1;  // -1: unsigned format
};

FieldLayout layout(const SliFormat& fmt) {
    FieldLayout l;
    l.level_shift = fmt.index_bits();
    l.recip_shift = fmt.index_bits() + fmt.level_bits();
    if (fmt.is_signed()) {
        l.sign_shift = l.recip_shift + 1;
    }
    return l;
}

void require_width(const BitWord& w, const SliFormat& fmt) {
    if (w.width != fmt.width()) {
        throw std::invalid_argument("word of width " + std::to_string(w.width) + " does not match " + fmt.name() +
                                    " (width " + std::to_string(fmt.width()) + ")");
    }
    if (w.width < 64 && (w.bits >> w.width) != 0) {
        throw std::invalid_argument("word has bits set above its width");
    }
}

// Largest magnitude code (level - 1) * 2^p_i + index_units.
std::int64_t max_magnitude_code(const SliFormat& fmt) {
    return (std::int64_t{1} << (fmt.level_bits() + fmt.index_bits())) - 1;
}

std::int64_t magnitude_code(const SliNumber& n) {
    return (static_cast<std::int64_t>(n.level() - 1) << n.format().index_bits()) +
           static_cast<std::int64_t>(n.index_units());
}

}  // namespace

BitWord pack(const SliNumber& n) {
    const SliFormat& fmt = n.format();
    BitWord w{fmt.width(), 0};
    if (n.is_zero()) {
        return w;
    }
    const FieldLayout l = layout(fmt);
    if (l.sign_shift >= 0 && n.sign() == Sign::negative) {
        w.bits |= std::uint64_t{1} << l.sign_shift;
    }
    if (n.reciprocal() == Reciprocal::direct) {
        w.bits |= std::uint64_t{1} << l.recip_shift;
    }
    w.bits |= static_cast<std::uint64_t>(n.level() - 1) << l.level_shift;
    w.bits |= n.index_units();
    return w;
}

RawFields raw_fields(const BitWord& w, const SliFormat& fmt) {
    require_width(w, fmt);
    const FieldLayout l = layout(fmt);
    RawFields f;
    if (l.sign_shift >= 0 && ((w.bits >> l.sign_shift) & 1U)) {
        f.sign = Sign::negative;
    }
    f.reciprocal = ((w.bits >> l.recip_shift) & 1U) ? Reciprocal::direct : Reciprocal::inverted;
    const std::uint64_t level_mask = (std::uint64_t{1} << fmt.level_bits()) - 1;
    f.level = static_cast<int>((w.bits >> l.level_shift) & level_mask) + 1;
    f.index_units = w.bits & fmt.max_index_units();
    return f;
}

double RawFields::zeta(const SliFormat& fmt) const {
    return static_cast<double>(level) + std::ldexp(static_cast<double>(index_units), -fmt.index_bits());
}

SliNumber unpack(const BitWord& w, const SliFormat& fmt) {
    const RawFields f = raw_fields(w, fmt);
    if (f.reciprocal == Reciprocal::inverted && f.level == 1 && f.index_units == 0) {
        return SliNumber::zero(fmt);
    }
    return SliNumber::from_fields(fmt, f.sign, f.reciprocal, f.level, f.index_units);
}

std::vector<EnumEntry> enumerate(const SliFormat& fmt, bool raw) {
    if (fmt.width() > kMaxEnumerationWidth) {
        throw std::length_error(fmt.name() + " has " + std::to_string(fmt.width()) +
                                " bits; exhaustive enumeration is capped at " +
                                std::to_string(kMaxEnumerationWidth));
    }
    const std::uint64_t count = std::uint64_t{1} << fmt.width();
    std::vector<EnumEntry> out;
    out.reserve(count);
    for (std::uint64_t bits = 0; bits < count; ++bits) {
        EnumEntry e;
        e.word = BitWord{fmt.width(), bits};
        const RawFields f = raw_fields(e.word, fmt);
        const bool zero_word = f.reciprocal == Reciprocal::inverted && f.level == 1 && f.index_units == 0;
        if (!raw && zero_word) {
            e.is_zero = true;
            e.value = 0.0;
            e.log10_magnitude = -std::numeric_limits<double>::infinity();
        } else {
            const double z = f.zeta(fmt);
            double v = phi(z);
            double lg = log_phi10(z);
            if (f.reciprocal == Reciprocal::inverted) {
                v = 1.0 / v;
                lg = -lg;
            }
            e.value = f.sign == Sign::negative ? -v : v;
            e.log10_magnitude = lg;
        }
        out.push_back(e);
    }
    return out;
}

std::int64_t max_ordinal(const SliFormat& fmt) { return 2 * max_magnitude_code(fmt) + 1; }

std::int64_t ordinal(const SliNumber& n) {
    if (n.is_zero()) {
        return 0;
    }
    const std::int64_t top = max_magnitude_code(n.format());
    const std::int64_t m = magnitude_code(n);
    // Inverted magnitudes shrink as their code grows.
    const std::int64_t mag = n.reciprocal() == Reciprocal::inverted ? top - m + 1 : top + 1 + m;
    return n.sign() == Sign::negative ? -mag : mag;
}

SliNumber from_ordinal(const SliFormat& fmt, std::int64_t ord) {
    const std::int64_t limit = max_ordinal(fmt);
    if (ord > limit || ord < (fmt.is_signed() ? -limit : 0)) {
        throw std::out_of_range("ordinal " + std::to_string(ord) + " outside " + fmt.name());
    }
    if (ord == 0) {
        return SliNumber::zero(fmt);
    }
    const Sign sign = ord < 0 ? Sign::negative : Sign::positive;
    const std::int64_t mag = ord < 0 ? -ord : ord;
    const std::int64_t top = max_magnitude_code(fmt);
    Reciprocal r = Reciprocal::direct;
    std::int64_t m = 0;
    if (mag <= top) {
        r = Reciprocal::inverted;
        m = top - mag + 1;
    } else {
        m = mag - top - 1;
    }
    const int level = static_cast<int>(m >> fmt.index_bits()) + 1;
    const auto units = static_cast<std::uint64_t>(m) & fmt.max_index_units();
    return SliNumber::from_fields(fmt, sign, r, level, units);
}

SliNumber next_up(const SliNumber& n) {
    const std::int64_t ord = ordinal(n);
    if (ord == max_ordinal(n.format())) {
        throw std::range_error("next_up of the largest representable value in " + n.format().name());
    }
    return from_ordinal(n.format(), ord + 1);
}

SliNumber next_down(const SliNumber& n) {
    const std::int64_t ord = ordinal(n);
    const std::int64_t lowest = n.format().is_signed() ? -max_ordinal(n.format()) : 0;
    if (ord == lowest) {
        throw std::range_error("next_down of the smallest representable value in " + n.format().name());
    }
    return from_ordinal(n.format(), ord - 1);
}

double spacing(const SliNumber& n) {
    const double up = decode(next_up(n));
    if (!std::isfinite(up)) {
        return std::numeric_limits<double>::infinity();
    }
    return up - decode(n);
}

}  // namespace slisim
