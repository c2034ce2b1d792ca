#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace slisim::minifloat {

// Binary floating-point system with precision p (significand bits including
// the implicit bit) and exponents in [1 - e_max, e_max]. `is_signed` only
// affects the bit encoding used by enumerate_floats; rounding is symmetric.
class FloatFormat {
public:
    FloatFormat(int precision, int emax, bool is_signed = true);

    static FloatFormat binary16() { return {11, 15}; }
    static FloatFormat bfloat16() { return {8, 127}; }
    // Unsigned 5-bit toy system: 3 exponent bits, 2 stored significand bits.
    static FloatFormat toy5() { return {3, 3, false}; }

    // "binary16", "bfloat16", "toy5" or "b<p>e<e_max>".
    static FloatFormat parse(std::string_view text);
    static bool is_float_name(std::string_view text);

    int precision() const noexcept { return precision_; }
    int emax() const noexcept { return emax_; }
    int emin() const noexcept { return 1 - emax_; }
    bool is_signed() const noexcept { return signed_; }

    double max_finite() const noexcept;
    double min_normal() const noexcept;
    double min_subnormal() const noexcept;
    // Smallest magnitude that rounds to infinity, 2^emax (2 - 2^-p).
    double overflow_threshold() const noexcept;

    // Exponent field width for IEEE-style encoding; 0 if emax + 1 is not a
    // power of two (no standard encoding exists).
    int exponent_bits() const noexcept;
    // Total width of the encoding, 0 when exponent_bits() is 0.
    int width() const noexcept;

    std::string name() const;

    friend bool operator==(const FloatFormat&, const FloatFormat&) = default;

private:
    int precision_;
    int emax_;
    bool signed_;
};

// Round to nearest, ties to even, with gradual underflow. Magnitudes at or
// above overflow_threshold() become +-inf; NaN passes through. The result is
// the target-format value held exactly in binary64.
double fl(double x, const FloatFormat& fmt);

enum class Op { add, sub, mul };

// One rounding per operation: fl(x op y). For p <= 25 the binary64 result of
// op is either exact or rounded with enough guard bits that the second
// rounding is innocuous.
double fl_op(double x, double y, Op op, const FloatFormat& fmt);

struct FloatPattern {
    std::uint64_t bits = 0;
    int width = 0;
    double value = 0.0;
    bool is_nan = false;

    std::string bit_string() const;
};

// Every pattern of the IEEE-style encoding (sign if signed, biased exponent,
// trailing significand) in ascending unsigned order. Throws std::length_error
// for widths above 24 bits and std::invalid_argument if the format has no
// encoding.
std::vector<FloatPattern> enumerate_floats(const FloatFormat& fmt);

}  // namespace slisim::minifloat
