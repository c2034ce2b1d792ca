#pragma once

#include <vector>

namespace slisim::kernel {

// The a/b/c sequences of one add/sub run. Indices follow the level: a[j] is
// a_j = 1 / phi(X - j), b[j] = phi(Y - j) / phi(X - j) and
// c[j] = phi(Z - j) / phi(X - j).
struct SequenceState {
    int level = 0;           // l, the level of X
    std::vector<double> a;   // a_0 .. a_{l-1}
    std::vector<double> b;   // b_0 .. b_{m-1}, or just b_0 when m = 0
    std::vector<double> c;   // c_0 .. c_j up to termination
    int terminated_at = -1;  // j where c_j < a_j, or -1 if the run reached level l
};

// phi(Z) = phi(X) +- phi(Y) for level-index values X >= Y >= 0 (level 0 allowed:
// phi(X) = X for X < 1). Returns the unrounded Z; Z < 1 means the result's
// magnitude is Z itself. Exact cancellation returns 0.
//
// a_j underflows for phi(X - j) beyond binary64; it is clamped to the smallest
// normal double, which leaves every downstream term negligible.
//
// Throws std::invalid_argument unless X >= Y >= 0 and both are finite.
double li_add_sub(double x, double y, bool subtract, SequenceState* trace = nullptr);

struct MulDivResult {
    double zeta = 1.0;             // >= 1
    bool reciprocal_flip = false;  // true: the product/quotient is 1 / phi(zeta)
};

// phi(X) * phi(Y) or phi(X) / phi(Y) for X, Y >= 1, reduced to an add/sub of
// X - 1 and Y - 1 one level down. Throws std::invalid_argument for X or Y < 1.
MulDivResult li_mul_div(double x, double y, bool divide);

}  // namespace slisim::kernel
