#include "slisim/minifloat.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace slisim::minifloat {

FloatFormat::FloatFormat(int precision, int emax, bool is_signed)
    : precision_(precision), emax_(emax), signed_(is_signed) {
    if (precision < 2 || precision > 53) {
        throw std::invalid_argument("float precision must be in [2, 53], got " + std::to_string(precision));
    }
    if (emax < 1 || emax > 1023) {
        throw std::invalid_argument("float emax must be in [1, 1023], got " + std::to_string(emax));
    }
}

namespace {

bool parse_int(std::string_view text, int& out) {
    if (text.empty()) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

bool parse_generic(std::string_view text, int& p, int& emax) {
    if (!text.starts_with('b')) {
        return false;
    }
    text.remove_prefix(1);
    const auto e = text.find('e');
    return e != std::string_view::npos && parse_int(text.substr(0, e), p) && parse_int(text.substr(e + 1), emax);
}

}  // namespace

bool FloatFormat::is_float_name(std::string_view text) {
    int p = 0;
    int emax = 0;
    return text == "binary16" || text == "bfloat16" || text == "toy5" || parse_generic(text, p, emax);
}

FloatFormat FloatFormat::parse(std::string_view text) {
    if (text == "binary16") {
        return binary16();
    }
    if (text == "bfloat16") {
        return bfloat16();
    }
    if (text == "toy5") {
        return toy5();
    }
    int p = 0;
    int emax = 0;
    if (!parse_generic(text, p, emax)) {
        throw std::invalid_argument("unknown float format '" + std::string(text) +
                                    "', expected binary16, bfloat16, toy5 or b<p>e<emax>");
    }
    return {p, emax};
}

double FloatFormat::max_finite() const noexcept { return std::ldexp(2.0 - std::ldexp(1.0, 1 - precision_), emax_); }
double FloatFormat::min_normal() const noexcept { return std::ldexp(1.0, emin()); }
double FloatFormat::min_subnormal() const noexcept { return std::ldexp(1.0, emin() - precision_ + 1); }
double FloatFormat::overflow_threshold() const noexcept {
    return std::ldexp(2.0 - std::ldexp(1.0, -precision_), emax_);
}

int FloatFormat::exponent_bits() const noexcept {
    const auto biased = static_cast<unsigned>(emax_) + 1U;
    if (!std::has_single_bit(biased)) {
        return 0;
    }
    return std::countr_zero(biased) + 1;
}

int FloatFormat::width() const noexcept {
    const int e = exponent_bits();
    return e == 0 ? 0 : (signed_ ? 1 : 0) + e + precision_ - 1;
}

std::string FloatFormat::name() const {
    if (*this == binary16()) {
        return "binary16";
    }
    if (*this == bfloat16()) {
        return "bfloat16";
    }
    if (*this == toy5()) {
        return "toy5";
    }
    return "b" + std::to_string(precision_) + "e" + std::to_string(emax_);
}

double fl(double x, const FloatFormat& fmt) {
    if (std::isnan(x) || x == 0.0) {
        return x;
    }
    const double mag = std::fabs(x);
    if (mag >= fmt.overflow_threshold()) {
        return std::copysign(std::numeric_limits<double>::infinity(), x);
    }
    int e = std::ilogb(mag);
    if (e < fmt.emin()) {
        e = fmt.emin();
    }
    // Scale so the quantum of this binade is 1, round, scale back; both
    // scalings are exact powers of two.
    const int quantum_exp = e - fmt.precision() + 1;
    const double scaled = std::ldexp(mag, -quantum_exp);
    const double rounded = std::nearbyint(scaled);  // default mode: ties to even
    return std::copysign(std::ldexp(rounded, quantum_exp), x);
}

double fl_op(double x, double y, Op op, const FloatFormat& fmt) {
    switch (op) {
        case Op::add:
            return fl(x + y, fmt);
        case Op::sub:
            return fl(x - y, fmt);
        case Op::mul:
            return fl(x * y, fmt);
    }
    throw std::invalid_argument("unknown float op");
}

std::string FloatPattern::bit_string() const {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i) {
        if ((bits >> (width - 1 - i)) & 1U) {
            s[static_cast<std::size_t>(i)] = '1';
        }
    }
    return s;
}

std::vector<FloatPattern> enumerate_floats(const FloatFormat& fmt) {
    const int width = fmt.width();
    if (width == 0) {
        throw std::invalid_argument(fmt.name() + " has no IEEE-style encoding (emax + 1 is not a power of two)");
    }
    if (width > 24) {
        throw std::length_error(fmt.name() + " has " + std::to_string(width) +
                                " bits; exhaustive enumeration is capped at 24");
    }
    const int mbits = fmt.precision() - 1;
    const int ebits = fmt.exponent_bits();
    const std::uint64_t mmask = (std::uint64_t{1} << mbits) - 1;
    const std::uint64_t emask = (std::uint64_t{1} << ebits) - 1;
    const int bias = fmt.emax();

    std::vector<FloatPattern> out;
    out.reserve(std::size_t{1} << width);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << width); ++bits) {
        FloatPattern p{bits, width, 0.0, false};
        const std::uint64_t m = bits & mmask;
        const std::uint64_t be = (bits >> mbits) & emask;
        const bool negative = fmt.is_signed() && ((bits >> (mbits + ebits)) & 1U);
        double v = 0.0;
        if (be == emask) {
            if (m == 0) {
                v = std::numeric_limits<double>::infinity();
            } else {
                v = std::numeric_limits<double>::quiet_NaN();
                p.is_nan = true;
            }
        } else if (be == 0) {
            v = std::ldexp(static_cast<double>(m), fmt.emin() - mbits);
        } else {
            const int e = static_cast<int>(be) - bias;
            v = std::ldexp(static_cast<double>(m | (std::uint64_t{1} << mbits)), e - mbits);
        }
        p.value = negative ? -v : v;
        out.push_back(p);
    }
    return out;
}

}  // namespace slisim::minifloat
