#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "slisim/format.hpp"

namespace slisim {

enum class Sign : int { negative = -1, positive = 1 };

// r(x): direct means |x| = phi(zeta), inverted means |x| = 1 / phi(zeta).
enum class Reciprocal : int { inverted = -1, direct = 1 };

constexpr Sign flip(Sign s) noexcept { return s == Sign::positive ? Sign::negative : Sign::positive; }
constexpr Reciprocal flip(Reciprocal r) noexcept {
    return r == Reciprocal::direct ? Reciprocal::inverted : Reciprocal::direct;
}

// A quantized SLI value. Instances are always canonical:
//  - zero carries positive sign, direct reciprocal, level 1, index 0;
//  - the value one is always stored with a direct reciprocal.
class SliNumber {
public:
    // Zero of the default format.
    SliNumber() = default;

    static SliNumber zero(const SliFormat& fmt) noexcept;
    static SliNumber one(const SliFormat& fmt) noexcept;

    // Builds a nonzero number from its fields. `index_units` is index * 2^p_i.
    // Throws std::invalid_argument on out-of-range fields, a negative sign in an
    // unsigned format, or the inverted duplicate of one (that word is zero).
    static SliNumber from_fields(const SliFormat& fmt, Sign sign, Reciprocal reciprocal, int level,
                                 std::uint64_t index_units);

    const SliFormat& format() const noexcept { return format_; }
    bool is_zero() const noexcept { return zero_; }
    Sign sign() const noexcept { return sign_; }
    Reciprocal reciprocal() const noexcept { return reciprocal_; }
    int level() const noexcept { return level_; }
    std::uint64_t index_units() const noexcept { return index_units_; }

    // f = index_units / 2^p_i, exact in binary64.
    double index() const noexcept;
    // zeta = level + index.
    double zeta() const noexcept;

    bool is_negative() const noexcept { return !zero_ && sign_ == Sign::negative; }

    friend bool operator==(const SliNumber&, const SliNumber&) = default;

private:
    SliFormat format_{};
    bool zero_ = true;
    Sign sign_ = Sign::positive;
    Reciprocal reciprocal_ = Reciprocal::direct;
    int level_ = 1;
    std::uint64_t index_units_ = 0;
};

// Packed encoding, bit (width-1) is the most significant.
struct BitWord {
    int width = 0;
    std::uint64_t bits = 0;

    // MSB-first binary string, e.g. "11010".
    std::string to_string() const;
    // Inverse of to_string; throws std::invalid_argument on non-binary input.
    static BitWord from_string(std::string_view text);

    friend bool operator==(const BitWord&, const BitWord&) = default;
};

}  // namespace slisim
