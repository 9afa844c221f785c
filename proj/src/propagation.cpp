#include "qcontrol/propagation.hpp"

#include "qcontrol/closure.hpp"

#include <cmath>
#include <vector>

namespace qcontrol {

PropagationReport propagation_check(const CouplingModel& model, int d_n, int d_m, double tol,
                                    PropagationSide side) {
    const Matrix h = coupling_operator(model, d_n, d_m);
    const DenseOperator drift(Complex(0.0, 1.0) * h);

    const std::vector<int> dims{d_n, d_m};
    const int pos = side == PropagationSide::First ? 0 : 1;

    std::vector<DenseOperator> generators;
    for (const DenseOperator& g : su_basis(dims[pos])) {
        generators.push_back(embed_local(g, {pos}, dims));
    }
    const std::size_t local_count = generators.size();
    for (std::size_t i = 0; i < local_count; ++i) {
        DenseOperator c = commutator(drift, generators[i]);
        if (c.hs_norm() > 1e-13) generators.push_back(std::move(c));
    }

    const int pair_dim = d_n * d_m;
    const int target = pair_dim * pair_dim - 1;

    ClosureOptions opts;
    opts.tol = tol;
    opts.max_threads = 1;  // pair spaces are tiny
    const ClosureResult res = lie_closure(generators, target, opts);

    PropagationReport report;
    report.propagating = res.dim == target;
    report.closure_dim = res.dim;
    report.target_dim = target;

    const auto& basis = res.dense_basis();
    double residual = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            const double want = i == j ? 1.0 : 0.0;
            residual = std::max(residual, std::abs(hs_inner(basis[i], basis[j]) - want));
        }
    }
    report.basis_norm_residual = residual;
    return report;
}

}  // namespace qcontrol
