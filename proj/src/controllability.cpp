#include "qcontrol/controllability.hpp"

#include "qcontrol/closure.hpp"
#include "qcontrol/errors.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace qcontrol {

namespace {

ClosureOptions closure_options(const CheckOptions& opts) {
    ClosureOptions c;
    c.tol = opts.tol;
    c.max_threads = opts.max_threads;
    return c;
}

// Cache key for per-edge propagation runs; identical couplings (the common
// case) are checked once per side.
std::string model_key(const CouplingModel& m, int d_a, int d_b, PropagationSide side) {
    std::ostringstream key;
    key.precision(17);
    key << static_cast<int>(m.kind) << '|' << d_a << 'x' << d_b << '|'
        << (side == PropagationSide::First ? 'f' : 's') << '|' << m.c << '|' << m.delta << '|'
        << m.biquadratic << '|' << m.bilinear;
    if (m.kind == CouplingKind::Custom) {
        for (long long i = 0; i < m.custom.size(); ++i) {
            key << '|' << m.custom.data()[i].real() << ',' << m.custom.data()[i].imag();
        }
    }
    return key.str();
}

}  // namespace

DirectCheck controllability_check(const Network& net, const CheckOptions& opts) {
    if (net.control().empty()) {
        throw std::invalid_argument("controllability_check: control set is empty");
    }
    const long long total = net.total_dim();
    if (total > opts.dim_cap) throw CapacityError(total, opts.dim_cap);

    DirectCheck out;
    out.target_dim = total * total - 1;

    try {
        ClosureResult res;
        if (net.all_qubits()) {
            out.representation = Representation::Pauli;
            const int n = static_cast<int>(net.nodes().size());
            std::vector<PauliPolynomial> gens;
            for (int c : net.control()) {
                const int p = net.node_position(c);
                for (PauliAxis axis : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
                    PauliPolynomial g(n);
                    g.add(1.0, PauliString::single(p, axis));
                    gens.push_back(std::move(g));
                }
            }
            const AssembledHamiltonian h = assemble_hamiltonian(net);
            if (h.drift_pauli && !h.drift_pauli->empty()) gens.push_back(*h.drift_pauli);
            res = lie_closure(gens, static_cast<int>(out.target_dim), closure_options(opts));
        } else {
            out.representation = Representation::Dense;
            const std::vector<int> dims = net.dims();
            std::vector<DenseOperator> gens;
            for (int c : net.control()) {
                const int p = net.node_position(c);
                for (const DenseOperator& g : su_basis(net.node_dim(c))) {
                    gens.push_back(embed_local(g, {p}, dims));
                }
            }
            const AssembledHamiltonian h = assemble_hamiltonian(net);
            DenseOperator drift = Complex(0.0, 1.0) * h.dense.traceless_part();
            if (drift.hs_norm() > 1e-13) gens.push_back(std::move(drift));
            res = lie_closure(gens, static_cast<int>(out.target_dim), closure_options(opts));
        }
        out.closure_dim = res.dim;
        out.rounds = res.rounds;
        out.saturated = res.saturated;
        out.max_residual = res.max_residual;
        out.verdict = res.dim == out.target_dim ? DirectVerdict::Controllable
                                                : DirectVerdict::NotControllable;
    } catch (const IndeterminateError& err) {
        out.verdict = DirectVerdict::Indeterminate;
        out.closure_dim = err.dim_reached();
        out.max_residual = err.residual();
    }
    return out;
}

SufficientCheck sufficient_criterion(const Network& net, const CheckOptions& opts) {
    if (net.control().empty()) {
        throw std::invalid_argument("sufficient_criterion: control set is empty");
    }

    SufficientCheck out;
    const Graph graph = graph_of(net);
    out.infection = infect(graph, net.control());

    std::map<std::string, PropagationReport> cache;
    auto check_edge = [&](int a, int b, int from) -> const PropagationReport& {
        const EdgeSpec* edge = nullptr;
        for (const auto& e : net.edges()) {
            if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) {
                edge = &e;
                break;
            }
        }
        if (edge == nullptr) throw std::logic_error("sufficient_criterion: missing edge");
        const PropagationSide side =
            from == edge->a ? PropagationSide::First : PropagationSide::Second;
        const int d_a = net.node_dim(edge->a);
        const int d_b = net.node_dim(edge->b);
        const std::string key = model_key(edge->coupling, d_a, d_b, side);
        auto it = cache.find(key);
        if (it == cache.end()) {
            it = cache.emplace(key, propagation_check(edge->coupling, d_a, d_b, opts.tol, side))
                     .first;
        }
        return it->second;
    };

    for (const auto& e : net.edges()) {
        out.edge_propagation.push_back({e.a, e.b, e.a, check_edge(e.a, e.b, e.a)});
        out.edge_propagation.push_back({e.a, e.b, e.b, check_edge(e.a, e.b, e.b)});
    }

    if (!net.fields().empty()) {
        // Onsite terms fall outside the two-body hypotheses of the criterion.
        out.verdict = SufficientVerdict::NotApplicable;
        return out;
    }

    bool steps_propagate = true;
    for (const auto& step : out.infection.certificate.steps) {
        if (!check_edge(step.forcer, step.forced, step.forcer).propagating) {
            steps_propagate = false;
            break;
        }
    }
    out.verdict = (out.infection.infecting && steps_propagate)
                      ? SufficientVerdict::GuaranteedControllable
                      : SufficientVerdict::Inconclusive;
    return out;
}

ControllabilityReport full_check(const Network& net, const CheckOptions& opts) {
    ControllabilityReport report;
    report.sufficient = sufficient_criterion(net, opts);
    report.direct = controllability_check(net, opts);
    if (report.sufficient.verdict == SufficientVerdict::GuaranteedControllable &&
        report.direct.verdict == DirectVerdict::NotControllable) {
        throw std::logic_error(
            "full_check: sufficient criterion and direct test disagree; "
            "this indicates a numerical rank bug");
    }
    return report;
}

}  // namespace qcontrol
