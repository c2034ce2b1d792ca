#pragma once

#include <compare>
#include <stdexcept>

#include "slisim/number.hpp"

namespace slisim {

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The four operations run entirely on the level-index sequence kernels, with
// intermediates held as unrounded zeta and a single rounding at the end.
// Operands must share a format (std::invalid_argument otherwise). Results
// saturate at the largest/smallest representable magnitudes; a negative result
// in an unsigned format is a std::domain_error.
SliNumber add(const SliNumber& x, const SliNumber& y);
SliNumber sub(const SliNumber& x, const SliNumber& y);
SliNumber mul(const SliNumber& x, const SliNumber& y);
// Throws DivisionByZero when y is zero (0/0 included).
SliNumber div(const SliNumber& x, const SliNumber& y);

// Throws std::domain_error for a nonzero number in an unsigned format.
SliNumber neg(const SliNumber& x);
SliNumber abs(const SliNumber& x);

// Total order consistent with decode(): negatives < zero < positives.
std::strong_ordering compare(const SliNumber& x, const SliNumber& y);

inline SliNumber operator+(const SliNumber& x, const SliNumber& y) { return add(x, y); }
inline SliNumber operator-(const SliNumber& x, const SliNumber& y) { return sub(x, y); }
inline SliNumber operator*(const SliNumber& x, const SliNumber& y) { return mul(x, y); }
inline SliNumber operator/(const SliNumber& x, const SliNumber& y) { return div(x, y); }
inline SliNumber operator-(const SliNumber& x) { return neg(x); }
inline std::strong_ordering operator<=>(const SliNumber& x, const SliNumber& y) { return compare(x, y); }

}  // namespace slisim
