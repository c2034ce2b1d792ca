#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace slisim {

// One symmetric level-index system: a level field of `level_bits` bits and a
// fixed-point index field of `index_bits` bits, optionally preceded by a sign
// bit. Every word also carries one reciprocal bit.
//
// Level encodings start at 1 (the all-zero level field means level 1), so a
// format has levels 1 .. 2^level_bits.
class SliFormat {
public:
    static constexpr int kMaxLevelBits = 6;
    static constexpr int kMaxIndexBits = 52;

    // Defaults match the 16-bit system used throughout: 2 level bits, 12 index
    // bits, signed.
    constexpr SliFormat() = default;

    // Throws std::invalid_argument when a width is outside
    // [1, kMaxLevelBits] / [1, kMaxIndexBits].
    SliFormat(int level_bits, int index_bits, bool is_signed = true);

    // Accepts "sli<p_l>.<p_i>" (signed) and "sli<p_l>.<p_i>u" (unsigned).
    static SliFormat parse(std::string_view text);

    constexpr int level_bits() const noexcept { return level_bits_; }
    constexpr int index_bits() const noexcept { return index_bits_; }
    constexpr bool is_signed() const noexcept { return signed_; }

    constexpr int max_level() const noexcept { return 1 << level_bits_; }
    constexpr int width() const noexcept { return (signed_ ? 1 : 0) + 1 + level_bits_ + index_bits_; }

    // Number of index steps per level, 2^p_i.
    constexpr std::uint64_t index_scale() const noexcept { return std::uint64_t{1} << index_bits_; }
    constexpr std::uint64_t max_index_units() const noexcept { return index_scale() - 1; }

    // Index machine epsilon 2^-p_i.
    double epsilon() const noexcept;

    // Largest representable zeta, max_level + (2^p_i - 1) / 2^p_i.
    double max_zeta() const noexcept;

    std::string name() const;

    friend constexpr bool operator==(const SliFormat&, const SliFormat&) = default;

private:
    int level_bits_ = 2;
    int index_bits_ = 12;
    bool signed_ = true;
};

}  // namespace slisim
