#pragma once

#include "qcontrol/network.hpp"

namespace qcontrol {

/// Which endpoint's local algebra seeds the propagation test.
enum class PropagationSide { First, Second };

struct PropagationReport {
    bool propagating = false;
    int closure_dim = 0;
    int target_dim = 0;  // (d_n * d_m)^2 - 1
    /// Largest deviation of the final basis from orthonormality.
    double basis_norm_residual = 0.0;

    friend bool operator==(const PropagationReport&, const PropagationReport&) = default;
};

/// Decides whether a two-site coupling spreads the full local algebra of one
/// endpoint across the pair: seeds the closure with the endpoint's su(d)
/// basis together with its brackets against the coupling, and compares the
/// resulting algebra dimension with the full two-site value. Throws
/// IndeterminateError instead of returning an unreliable verdict when a rank
/// decision is ambiguous.
PropagationReport propagation_check(const CouplingModel& model, int d_n, int d_m,
                                    double tol = 1e-9,
                                    PropagationSide side = PropagationSide::First);

}  // namespace qcontrol
