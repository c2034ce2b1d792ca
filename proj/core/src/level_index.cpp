#include "slisim/level_index.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace slisim {

namespace {

void require_nonnegative_finite(double v, const char* what) {
    if (!std::isfinite(v) || v < 0.0) {
        throw std::domain_error(std::string(what) + " requires a nonnegative finite argument, got " +
                                std::to_string(v));
    }
}

}  // namespace

double phi(double zeta) {
    require_nonnegative_finite(zeta, "phi");
    const double level = std::floor(zeta);
    double v = zeta - level;
    for (double l = 0; l < level; l += 1.0) {
        v = std::exp(v);
        if (std::isinf(v)) {
            break;
        }
    }
    return v;
}

double log_phi10(double zeta) {
    require_nonnegative_finite(zeta, "log_phi10");
    if (zeta < 1.0) {
        return std::log10(zeta);
    }
    // ln phi(zeta) = phi(zeta - 1); one peeled level covers everything whose
    // logarithm still fits in binary64.
    return phi(zeta - 1.0) / std::numbers::ln10;
}

double psi(double x) {
    require_nonnegative_finite(x, "psi");
    double levels = 0.0;
    while (x >= 1.0) {
        x = std::log(x);
        levels += 1.0;
    }
    return levels + x;
}

double psi_reciprocal(double x) {
    if (!(x > 0.0 && x < 1.0)) {
        throw std::domain_error("psi_reciprocal requires 0 < x < 1, got " + std::to_string(x));
    }
    return 1.0 + psi(-std::log(x));
}

RoundedIndex round_index(double zeta, const SliFormat& fmt) {
    if (!(zeta >= 1.0)) {
        throw std::invalid_argument("round_index requires zeta >= 1, got " + std::to_string(zeta));
    }
    const RoundedIndex saturated{fmt.max_level(), fmt.max_index_units(), true};
    if (!(zeta < static_cast<double>(fmt.max_level() + 1))) {
        return saturated;
    }
    const double level = std::floor(zeta);
    const double scaled = std::ldexp(zeta - level, fmt.index_bits());
    auto units = static_cast<std::uint64_t>(std::round(scaled));  // ties away from zero
    auto lvl = static_cast<int>(level);
    if (units == fmt.index_scale()) {
        units = 0;
        ++lvl;
    }
    if (lvl > fmt.max_level()) {
        return saturated;
    }
    return {lvl, units, false};
}

SliNumber quantize(const SliFormat& fmt, Sign sign, Reciprocal reciprocal, double zeta) {
    if (sign == Sign::negative && !fmt.is_signed()) {
        throw std::domain_error("negative result in unsigned format " + fmt.name());
    }
    const RoundedIndex r = round_index(zeta, fmt);
    if (r.level == 1 && r.index_units == 0) {
        reciprocal = Reciprocal::direct;
    }
    return SliNumber::from_fields(fmt, sign, reciprocal, r.level, r.index_units);
}

SliNumber encode(double x, const SliFormat& fmt) {
    if (!std::isfinite(x)) {
        throw std::domain_error("cannot encode non-finite value");
    }
    if (x == 0.0) {
        return SliNumber::zero(fmt);
    }
    if (x < 0.0 && !fmt.is_signed()) {
        throw std::domain_error("cannot encode negative value " + std::to_string(x) + " in unsigned format " +
                                fmt.name());
    }
    const Sign sign = x < 0.0 ? Sign::negative : Sign::positive;
    const double mag = std::fabs(x);

    const double band = std::ldexp(1.0, -fmt.index_bits() - 2);
    if (mag < 1.0 + band && mag > 1.0 / (1.0 + band)) {
        return quantize(fmt, sign, Reciprocal::direct, 1.0);
    }
    if (mag >= 1.0) {
        return quantize(fmt, sign, Reciprocal::direct, psi(mag));
    }
    return quantize(fmt, sign, Reciprocal::inverted, psi_reciprocal(mag));
}

double decode(const SliNumber& n) {
    if (n.is_zero()) {
        return 0.0;
    }
    double v = phi(n.zeta());
    if (n.reciprocal() == Reciprocal::inverted) {
        v = 1.0 / v;
    }
    return n.sign() == Sign::negative ? -v : v;
}

double log10_magnitude(const SliNumber& n) {
    if (n.is_zero()) {
        return -std::numeric_limits<double>::infinity();
    }
    const double l = log_phi10(n.zeta());
    return n.reciprocal() == Reciprocal::inverted ? -l : l;
}

}  // namespace slisim
