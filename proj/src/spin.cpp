#include "qcontrol/spin.hpp"

#include <cmath>
#include <stdexcept>

namespace qcontrol {

SpinOperators spin_operators(int d) {
    if (d < 1) throw std::invalid_argument("spin_operators: dimension must be positive");
    const double s = 0.5 * (d - 1);
    Matrix sp = Matrix::Zero(d, d);  // raising operator S+
    Matrix sz = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        const double m = s - i;  // index 0 is the highest weight |s>
        sz(i, i) = m;
        if (i > 0) {
            // <m+1| S+ |m> = sqrt(s(s+1) - m(m+1))
            sp(i - 1, i) = std::sqrt(s * (s + 1) - m * (m + 1));
        }
    }
    SpinOperators ops;
    ops.d = d;
    ops.sx = 0.5 * (sp + Matrix(sp.adjoint()));
    ops.sy = Complex(0.0, -0.5) * (sp - Matrix(sp.adjoint()));
    ops.sz = sz;
    return ops;
}

}  // namespace qcontrol
