#pragma once

#include "qcontrol/dense_operator.hpp"

namespace qcontrol {

/// Hermitian spin matrices for a site of local dimension d (spin s = (d-1)/2),
/// satisfying [Sx, Sy] = i Sz and cyclic permutations.
struct SpinOperators {
    int d = 0;
    Matrix sx, sy, sz;

    double spin() const { return 0.5 * (d - 1); }
};

/// Builds the spin matrices via the ladder-operator construction in the
/// basis |s>, |s-1>, ..., |-s>.
SpinOperators spin_operators(int d);

}  // namespace qcontrol
