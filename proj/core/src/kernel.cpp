#include "slisim/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "slisim/level_index.hpp"

namespace slisim::kernel {

namespace {

// Levels above this cannot come from any SliFormat; zeta past it is garbage.
constexpr int kMaxKernelLevel = 1 << 10;

constexpr double kTiny = std::numeric_limits<double>::min();

void require_ordered(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y) || y < 0.0 || x < y) {
        throw std::invalid_argument("li_add_sub requires finite X >= Y >= 0, got X=" + std::to_string(x) +
                                    " Y=" + std::to_string(y));
    }
    if (x >= kMaxKernelLevel) {
        throw std::invalid_argument("li_add_sub operand level too large: " + std::to_string(x));
    }
}

}  // namespace

double li_add_sub(double x, double y, bool subtract, SequenceState* trace) {
    require_ordered(x, y);

    const int l = static_cast<int>(std::floor(x));
    const double f = x - l;
    const int m = static_cast<int>(std::floor(y));
    const double g = y - m;
    if (trace != nullptr) {
        *trace = SequenceState{};
        trace->level = l;
    }

    // Level-0 operands are plain fixed-point values.
    if (l == 0) {
        const double v = subtract ? x - y : x + y;
        return v < 1.0 ? v : psi(v);
    }

    std::vector<double> a(static_cast<std::size_t>(l));
    a[l - 1] = std::exp(-f);
    for (int j = l - 1; j >= 1; --j) {
        a[j - 1] = std::max(std::exp(-1.0 / a[j]), kTiny);
    }

    double b0 = 0.0;
    if (m == 0) {
        b0 = a[0] * g;
        if (trace != nullptr) {
            trace->b = {b0};
        }
    } else {
        std::vector<double> b(static_cast<std::size_t>(m));
        // With l == m, a_{m-1} e^g is exactly e^(g - f); that form stays at 1 for X == Y.
        b[m - 1] = l == m ? std::exp(g - f) : a[m - 1] * std::exp(g);
        b[m - 1] = std::min(b[m - 1], 1.0);
        for (int j = m - 1; j >= 1; --j) {
            const double gap = 1.0 - b[j];
            b[j - 1] = gap == 0.0 ? 1.0 : std::exp(-gap / a[j]);
        }
        b0 = b[0];
        if (trace != nullptr) {
            trace->b = std::move(b);
        }
    }

    // Track d_j = c_j - 1 so that log1p keeps the small corrections exact.
    double d = subtract ? -b0 : b0;
    for (int j = 0; j < l; ++j) {
        if (j > 0) {
            d = a[j] * std::log1p(d);
        }
        const double c = 1.0 + d;
        if (trace != nullptr) {
            trace->c.push_back(c);
        }
        if (c < a[j]) {
            const double z = j + std::max(c, 0.0) / a[j];
            if (trace != nullptr) {
                trace->terminated_at = j;
                trace->a = std::move(a);
            }
            return z;
        }
    }
    const double h = std::max(f + std::log1p(d), 0.0);
    if (trace != nullptr) {
        trace->a = std::move(a);
    }
    // h >= 1 only for sums that climb a level; psi carries it.
    return l + psi(h);
}

MulDivResult li_mul_div(double x, double y, bool divide) {
    if (!(x >= 1.0) || !(y >= 1.0) || !std::isfinite(x) || !std::isfinite(y)) {
        throw std::invalid_argument("li_mul_div requires finite X, Y >= 1, got X=" + std::to_string(x) +
                                    " Y=" + std::to_string(y));
    }
    // phi(X) phi(Y) = exp(phi(X - 1) + phi(Y - 1)); X - 1 is exact for X < 2^53.
    const double xm = x - 1.0;
    const double ym = y - 1.0;
    if (!divide) {
        return {1.0 + li_add_sub(std::max(xm, ym), std::min(xm, ym), false), false};
    }
    if (x == y) {
        return {1.0, false};
    }
    if (x > y) {
        return {1.0 + li_add_sub(xm, ym, true), false};
    }
    return {1.0 + li_add_sub(ym, xm, true), true};
}

}  // namespace slisim::kernel
