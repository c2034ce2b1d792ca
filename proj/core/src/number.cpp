#include "slisim/number.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace slisim {

SliNumber SliNumber::zero(const SliFormat& fmt) noexcept {
    SliNumber n;
    n.format_ = fmt;
    return n;
}

SliNumber SliNumber::one(const SliFormat& fmt) noexcept {
    SliNumber n;
    n.format_ = fmt;
    n.zero_ = false;
    return n;
}

SliNumber SliNumber::from_fields(const SliFormat& fmt, Sign sign, Reciprocal reciprocal, int level,
                                 std::uint64_t index_units) {
    if (level < 1 || level > fmt.max_level()) {
        throw std::invalid_argument("level " + std::to_string(level) + " outside [1, " +
                                    std::to_string(fmt.max_level()) + "]");
    }
    if (index_units > fmt.max_index_units()) {
        throw std::invalid_argument("index units " + std::to_string(index_units) + " exceed 2^p_i - 1");
    }
    if (sign == Sign::negative && !fmt.is_signed()) {
        throw std::invalid_argument("negative sign in unsigned format " + fmt.name());
    }
    if (reciprocal == Reciprocal::inverted && level == 1 && index_units == 0) {
        throw std::invalid_argument("inverted one is not canonical; its word encodes zero");
    }
    SliNumber n;
    n.format_ = fmt;
    n.zero_ = false;
    n.sign_ = sign;
    n.reciprocal_ = reciprocal;
    n.level_ = level;
    n.index_units_ = index_units;
    return n;
}

double SliNumber::index() const noexcept {
    return std::ldexp(static_cast<double>(index_units_), -format_.index_bits());
}

double SliNumber::zeta() const noexcept { return static_cast<double>(level_) + index(); }

std::string BitWord::to_string() const {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i) {
        if ((bits >> (width - 1 - i)) & 1U) {
            s[static_cast<std::size_t>(i)] = '1';
        }
    }
    return s;
}

BitWord BitWord::from_string(std::string_view text) {
    if (text.empty() || text.size() > 64) {
        throw std::invalid_argument("bit string must have 1..64 digits");
    }
    BitWord w{static_cast<int>(text.size()), 0};
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bit string contains '" + std::string(1, c) + "'");
        }
        w.bits = (w.bits << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return w;
}

}  // namespace slisim
