#pragma once

#include "qcontrol/dense_operator.hpp"
#include "qcontrol/errors.hpp"
#include "qcontrol/pauli.hpp"

#include <variant>
#include <vector>

namespace qcontrol {

struct ClosureOptions {
    /// Relative rank-decision threshold: a candidate direction is new iff its
    /// residual after orthogonalization exceeds tol times its pre-projection
    /// norm; below tol/10 it is discarded; in between the computation aborts
    /// with IndeterminateError.
    double tol = 1e-9;
    /// Worker threads for bracket evaluation; 0 picks a hardware default.
    /// The result is independent of this value.
    int max_threads = 0;
};

struct ClosureResult {
    int dim = 0;
    std::variant<std::vector<DenseOperator>, std::vector<PauliPolynomial>> basis;
    int rounds = 0;           // bracket generations performed
    bool saturated = false;   // stopped because the target dimension was reached
    double max_residual = 0;  // largest relative residual among discarded candidates

    const std::vector<DenseOperator>& dense_basis() const {
        return std::get<std::vector<DenseOperator>>(basis);
    }
    const std::vector<PauliPolynomial>& pauli_basis() const {
        return std::get<std::vector<PauliPolynomial>>(basis);
    }
};

/// Orthonormal basis (Hilbert-Schmidt) of the smallest real Lie algebra
/// containing the generators.
///
/// The loop keeps an orthonormal basis and a frontier of newly accepted
/// elements; each round brackets the frontier against the full basis,
/// orthogonalizes every candidate (modified Gram-Schmidt with one
/// re-orthogonalization pass) and appends the independent survivors.
/// Terminates when a round adds nothing or the basis reaches `target_dim`
/// (pass 0 to run to natural closure). Candidate generation and acceptance
/// follow basis index order, so results are reproducible regardless of the
/// thread count.
///
/// Generators must be nonzero, traceless, skew-Hermitian and of equal
/// dimension; throws std::invalid_argument otherwise and IndeterminateError
/// on an ambiguous rank decision.
ClosureResult lie_closure(const std::vector<DenseOperator>& generators, int target_dim,
                          const ClosureOptions& opts = {});

/// Same computation in the sparse Pauli-string representation for all-qubit
/// networks.
ClosureResult lie_closure(const std::vector<PauliPolynomial>& generators, int target_dim,
                          const ClosureOptions& opts = {});

}  // namespace qcontrol
