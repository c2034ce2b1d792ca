#include "slisim/arith.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "slisim/codec.hpp"
#include "slisim/kernel.hpp"
#include "slisim/level_index.hpp"

namespace slisim {

namespace {

using kernel::li_add_sub;
using kernel::li_mul_div;

// Unrounded magnitude phi(zeta)^r with zeta >= 1, or zero.
struct Magnitude {
    bool zero = false;
    Reciprocal r = Reciprocal::direct;
    double zeta = 1.0;
};

Magnitude magnitude_of(const SliNumber& n) { return {n.is_zero(), n.reciprocal(), n.zeta()}; }

// Order-preserving key: inverted magnitudes map below 1.
double order_key(const Magnitude& m) { return m.r == Reciprocal::direct ? m.zeta : 2.0 - m.zeta; }

// Lifts a kernel result (level 0 allowed) back to SLI form.
Magnitude from_level_index(double z) {
    if (z >= 1.0) {
        return {false, Reciprocal::direct, z};
    }
    if (z <= 0.0) {
        return {true};
    }
    return {false, Reciprocal::inverted, psi_reciprocal(z)};
}

// 1 / phi(zeta) as a level-0 value; underflows harmlessly to 0.
double inverse_value(double zeta) { return std::exp(-phi(zeta - 1.0)); }

Magnitude mul_magnitudes(Magnitude x, Magnitude y) {
    if (x.zero || y.zero) {
        return {true};
    }
    if (x.r == y.r) {
        return {false, x.r, li_mul_div(x.zeta, y.zeta, false).zeta};
    }
    if (x.r == Reciprocal::inverted) {
        std::swap(x, y);
    }
    // phi(X) / phi(Y)
    const auto q = li_mul_div(x.zeta, y.zeta, true);
    return {false, q.reciprocal_flip ? Reciprocal::inverted : Reciprocal::direct, q.zeta};
}

Magnitude div_magnitudes(const Magnitude& x, Magnitude y) {
    y.r = flip(y.r);
    return mul_magnitudes(x, y);
}

Magnitude add_magnitudes(Magnitude x, Magnitude y) {
    if (order_key(x) < order_key(y)) {
        std::swap(x, y);
    }
    if (x.r == Reciprocal::direct && y.r == Reciprocal::direct) {
        return {false, Reciprocal::direct, li_add_sub(x.zeta, y.zeta, false)};
    }
    if (x.r == Reciprocal::direct) {
        // phi(X) + 1/phi(Y): the small side enters the kernel as a level-0 value.
        return {false, Reciprocal::direct, li_add_sub(x.zeta, inverse_value(y.zeta), false)};
    }
    // 1/phi(X) + 1/phi(Y) = (phi(X) + phi(Y)) / (phi(X) phi(Y)), here X <= Y.
    const double sum = li_add_sub(y.zeta, x.zeta, false);
    const double product = li_mul_div(x.zeta, y.zeta, false).zeta;
    return div_magnitudes({false, Reciprocal::direct, sum}, {false, Reciprocal::direct, product});
}

// x - y for x > y.
Magnitude sub_magnitudes(const Magnitude& x, const Magnitude& y) {
    if (x.r == Reciprocal::direct && y.r == Reciprocal::direct) {
        return from_level_index(li_add_sub(x.zeta, y.zeta, true));
    }
    if (x.r == Reciprocal::direct) {
        return from_level_index(li_add_sub(x.zeta, inverse_value(y.zeta), true));
    }
    if (y.r == Reciprocal::direct) {
        throw std::logic_error("sub_magnitudes: an inverted magnitude cannot exceed a direct one");
    }
    // 1/phi(X) - 1/phi(Y) = (phi(Y) - phi(X)) / (phi(X) phi(Y)), here X < Y.
    const Magnitude diff = from_level_index(li_add_sub(y.zeta, x.zeta, true));
    const double product = li_mul_div(x.zeta, y.zeta, false).zeta;
    return div_magnitudes(diff, {false, Reciprocal::direct, product});
}

SliNumber materialize(const SliFormat& fmt, Sign sign, const Magnitude& m) {
    if (m.zero) {
        return SliNumber::zero(fmt);
    }
    if (!(m.zeta >= 1.0)) {
        throw std::logic_error("arithmetic produced an invalid zeta");
    }
    return quantize(fmt, sign, m.r, m.zeta);
}

void require_same_format(const SliNumber& x, const SliNumber& y) {
    if (!(x.format() == y.format())) {
        throw std::invalid_argument("operands use different formats: " + x.format().name() + " and " +
                                    y.format().name());
    }
}

Sign sign_of(const SliNumber& n) { return n.is_zero() ? Sign::positive : n.sign(); }

SliNumber add_signed(const SliNumber& x, Sign xs, const SliNumber& y, Sign ys) {
    const SliFormat& fmt = x.format();
    if (y.is_zero()) {
        return x.is_zero() ? SliNumber::zero(fmt) : materialize(fmt, xs, magnitude_of(x));
    }
    if (x.is_zero()) {
        return materialize(fmt, ys, magnitude_of(y));
    }
    if (xs == ys) {
        return materialize(fmt, xs, add_magnitudes(magnitude_of(x), magnitude_of(y)));
    }
    const auto ox = ordinal(abs(x));
    const auto oy = ordinal(abs(y));
    if (ox == oy) {
        return SliNumber::zero(fmt);
    }
    if (ox > oy) {
        return materialize(fmt, xs, sub_magnitudes(magnitude_of(x), magnitude_of(y)));
    }
    return materialize(fmt, ys, sub_magnitudes(magnitude_of(y), magnitude_of(x)));
}

Sign product_sign(const SliNumber& x, const SliNumber& y) {
    return sign_of(x) == sign_of(y) ? Sign::positive : Sign::negative;
}

}  // namespace

SliNumber add(const SliNumber& x, const SliNumber& y) {
    require_same_format(x, y);
    return add_signed(x, sign_of(x), y, sign_of(y));
}

SliNumber sub(const SliNumber& x, const SliNumber& y) {
    require_same_format(x, y);
    return add_signed(x, sign_of(x), y, flip(sign_of(y)));
}

SliNumber mul(const SliNumber& x, const SliNumber& y) {
    require_same_format(x, y);
    if (x.is_zero() || y.is_zero()) {
        return SliNumber::zero(x.format());
    }
    return materialize(x.format(), product_sign(x, y), mul_magnitudes(magnitude_of(x), magnitude_of(y)));
}

SliNumber div(const SliNumber& x, const SliNumber& y) {
    require_same_format(x, y);
    if (y.is_zero()) {
        throw DivisionByZero("division by zero");
    }
    if (x.is_zero()) {
        return SliNumber::zero(x.format());
    }
    return materialize(x.format(), product_sign(x, y), div_magnitudes(magnitude_of(x), magnitude_of(y)));
}

SliNumber neg(const SliNumber& x) {
    if (x.is_zero()) {
        return x;
    }
    if (!x.format().is_signed()) {
        throw std::domain_error("cannot negate a nonzero value in unsigned format " + x.format().name());
    }
    return SliNumber::from_fields(x.format(), flip(x.sign()), x.reciprocal(), x.level(), x.index_units());
}

SliNumber abs(const SliNumber& x) {
    if (x.is_zero() || x.sign() == Sign::positive) {
        return x;
    }
    return SliNumber::from_fields(x.format(), Sign::positive, x.reciprocal(), x.level(), x.index_units());
}

std::strong_ordering compare(const SliNumber& x, const SliNumber& y) {
    require_same_format(x, y);
    return ordinal(x) <=> ordinal(y);
}

}  // namespace slisim
