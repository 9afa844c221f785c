// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria with a stated runtime budget enforce it.
//
// An optional larger run (5-site chain, closure dimension 1023) is enabled
// with --stretch.

#include "qcontrol/closure.hpp"
#include "qcontrol/controllability.hpp"
#include "qcontrol/figure3.hpp"
#include "qcontrol/infection.hpp"
#include "qcontrol/networks.hpp"

#include "../oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace qcontrol;

namespace {

struct Criterion {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            note(what);
        }
    }

    void note(const std::string& what) {
        detail << (detail.str().empty() ? "" : "; ") << what;
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<int> mask_to_seed(std::uint32_t mask, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        if ((mask >> i) & 1u) out.push_back(i);
    }
    return out;
}

// --- criterion 1: end-controlled anisotropic chains saturate the full algebra

void chain_end_control(Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(2001);
    std::uniform_real_distribution<double> cdist(0.5, 1.5);
    for (int n : {2, 3, 4}) {
        for (double delta : {0.5, 1.0, 2.0}) {
            for (int draw = 0; draw < 3; ++draw) {
                std::vector<CouplingModel> couplings;
                for (int e = 0; e < n - 1; ++e) {
                    couplings.push_back(CouplingModel::heisenberg(cdist(rng), delta));
                }
                const DirectCheck res = controllability_check(make_chain(n, couplings, {1}));
                const long long want = (1LL << (2 * n)) - 1;
                c.require(res.verdict == DirectVerdict::Controllable &&
                              res.closure_dim == want,
                          "chain n=" + std::to_string(n) + " delta=" + std::to_string(delta) +
                              " gave dim " + std::to_string(res.closure_dim) + "/" +
                              std::to_string(want));
            }
        }
    }
    const double elapsed = seconds_since(start);
    c.detail << "27 closures in " << elapsed << " s";
    c.require(elapsed < 10.0, "runtime budget of 10 s exceeded");
}

void chain_end_control_stretch(Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    const DirectCheck res =
        controllability_check(make_chain(5, CouplingModel::heisenberg(1.0, 1.0), {1}));
    const double elapsed = seconds_since(start);
    c.detail << "n=5 closure dim " << res.closure_dim << "/1023 in " << elapsed << " s";
    c.require(res.verdict == DirectVerdict::Controllable && res.closure_dim == 1023,
              "n=5 chain did not saturate");
    c.require(elapsed < 300.0, "runtime budget of 300 s exceeded");
}

// --- criterion 2: the isotropic-exchange-only pair is not end-controllable

void xx_failure(Criterion& c) {
    long long reference_dim = -1;
    for (double tol : {1e-8, 1e-9, 1e-10}) {
        CheckOptions opts;
        opts.tol = tol;
        const DirectCheck res =
            controllability_check(make_chain(2, CouplingModel::xx(1.0), {1}), opts);
        c.require(res.verdict == DirectVerdict::NotControllable, "verdict flipped at tol");
        c.require(res.closure_dim < 15, "dimension not strictly below 15");
        if (reference_dim < 0) reference_dim = res.closure_dim;
        c.require(res.closure_dim == reference_dim, "dimension unstable across tolerances");
    }
    c.detail << "closure dim " << reference_dim << " < 15 for tol 1e-8..1e-10";
}

// --- criterion 3: the star shows infection is not implied by propagation

void star_counterexample(Criterion& c) {
    const Network star = make_star(3, CouplingModel::heisenberg(1.0, 1.0), {1});
    const ControllabilityReport report = full_check(star);
    c.require(!report.sufficient.infection.infecting, "star infection unexpectedly succeeded");
    c.require(report.direct.verdict == DirectVerdict::NotControllable,
              "star direct test unexpectedly controllable");
    for (const auto& e : report.sufficient.edge_propagation) {
        c.require(e.report.propagating, "star edge propagation failed");
    }
    c.detail << "infection no, direct dim " << report.direct.closure_dim << "/"
             << report.direct.target_dim << ", propagation yes on all edges";
}

// --- criterion 4: propagation verdict table

void propagation_table(Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    for (double delta : {0.5, 1.0, 2.0}) {
        const PropagationReport rep =
            propagation_check(CouplingModel::heisenberg(1.0, delta), 2, 2);
        c.require(rep.propagating && rep.closure_dim == 15,
                  "heisenberg delta=" + std::to_string(delta) + " not propagating with dim 15");
    }
    c.require(!propagation_check(CouplingModel::heisenberg(1.0, 0.0), 2, 2).propagating,
              "delta=0 unexpectedly propagating");
    for (double a : {1.0, 1.0 / 3.0}) {
        const PropagationReport rep = propagation_check(CouplingModel::aklt(1.0, a, 1.0), 3, 3);
        c.require(rep.propagating && rep.closure_dim == 80,
                  "aklt A=" + std::to_string(a) + " not propagating with dim 80");
    }
    c.require(!propagation_check(CouplingModel::ising(1.0), 2, 2).propagating,
              "ising unexpectedly propagating");
    const double elapsed = seconds_since(start);
    c.detail << "table reproduced in " << elapsed << " s";
    c.require(elapsed < 5.0, "runtime budget of 5 s exceeded");
}

// --- criterion 5: generic-field Ising chains, reference verdicts
//
// The stated expectation is Controllable at n=2,3 and NotControllable at n=4.
// The n=4 clause is implemented as stated even though the closure provably
// saturates at these parameters (dimension 255 of 255, confirmed in exact
// rational arithmetic and by an independent QR-rank oracle); it is expected
// to fail and is documented in the README under "Known discrepancy".

void ising_field_chain(Criterion& c) {
    const std::array<double, 3> field{1.0, 0.7, 0.3};
    for (int n : {2, 3}) {
        const DirectCheck res =
            controllability_check(make_ising_field_chain(n, 1.0, field, {1}));
        c.require(res.verdict == DirectVerdict::Controllable,
                  "n=" + std::to_string(n) + " not controllable");
    }
    const DirectCheck res4 = controllability_check(make_ising_field_chain(4, 1.0, field, {1}));
    c.require(res4.verdict == DirectVerdict::NotControllable,
              "n=4 computed Controllable (dim " + std::to_string(res4.closure_dim) + "/" +
                  std::to_string(res4.target_dim) +
                  "); the stated NotControllable expectation is refuted by an "
                  "exact-arithmetic closure (see README, Known discrepancy)");
    std::ostringstream summary;
    summary << "controllable at n=2,3; dim " << res4.closure_dim << "/" << res4.target_dim
            << " at n=4";
    c.note(summary.str());
}

// --- criterion 6: infecting seeds on propagating trees are always controllable

void tree_consistency(Criterion& c) {
    std::mt19937 rng(2006);
    std::uniform_real_distribution<double> cdist(0.5, 1.5);
    const double deltas[] = {0.7, 1.0, 1.3};
    int checked = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const double delta = deltas[rng() % 3];
        std::vector<NodeSpec> nodes;
        std::vector<EdgeSpec> edges;
        for (int k = 1; k <= n; ++k) nodes.push_back({k, 2});
        for (int k = 2; k <= n; ++k) {
            const int parent = 1 + static_cast<int>(rng() % (k - 1));
            edges.push_back({parent, k, CouplingModel::heisenberg(cdist(rng), delta)});
        }
        Network net(nodes, edges, {}, {1});
        const auto seeds = min_infecting_sets(graph_of(net), n);
        const std::vector<int> seed = seeds[rng() % seeds.size()];
        net = Network(nodes, edges, {}, seed);

        const ControllabilityReport report = full_check(net);
        c.require(report.sufficient.verdict == SufficientVerdict::GuaranteedControllable,
                  "tree trial " + std::to_string(trial) + ": criterion not conclusive");
        c.require(report.direct.verdict == DirectVerdict::Controllable,
                  "tree trial " + std::to_string(trial) + ": direct test disagrees");
        ++checked;
    }
    c.detail << checked << " infecting trees all directly controllable";
}

// --- criterion 7: infection properties

void infection_properties(Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(2007);

    // order independence: 30 random graphs x 20 random application orders
    for (int g = 0; g < 30; ++g) {
        const int n = 4 + static_cast<int>(rng() % 7);
        std::vector<int> nodes;
        std::vector<std::pair<int, int>> edge_list;
        for (int i = 0; i < n; ++i) nodes.push_back(i);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (rng() % 100 < 30) edge_list.emplace_back(i, j);
            }
        }
        const Graph graph(nodes, edge_list);
        const std::vector<int> seed = mask_to_seed(rng() & ((1u << n) - 1), n);
        const InfectionOutcome reference = infect(graph, seed);
        for (int order = 0; order < 20; ++order) {
            std::mt19937 pick(10000 + 100 * g + order);
            const InfectionOutcome shuffled = infect_with_policy(
                graph, seed, [&](const std::vector<InfectionStep>& forces) {
                    return std::uniform_int_distribution<std::size_t>(0, forces.size() - 1)(pick);
                });
            c.require(shuffled.stuck_set == reference.stuck_set,
                      "application order changed the final set");
        }
    }

    // monotonicity under seed supersets
    int monotone_checked = 0;
    for (int trial = 0; trial < 200 && monotone_checked < 40; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 6);
        std::vector<int> nodes;
        std::vector<std::pair<int, int>> edge_list;
        for (int i = 0; i < n; ++i) nodes.push_back(i);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (rng() % 100 < 40) edge_list.emplace_back(i, j);
            }
        }
        const Graph graph(nodes, edge_list);
        const std::vector<int> seed = mask_to_seed(rng() & ((1u << n) - 1), n);
        if (!infect(graph, seed).infecting) continue;
        std::vector<int> super = seed;
        super.push_back(static_cast<int>(rng() % n));
        c.require(infect(graph, super).infecting, "superset of an infecting seed got stuck");
        ++monotone_checked;
    }
    c.require(monotone_checked > 0, "no infecting seeds sampled");

    // exhaustive agreement with the naive fixpoint on all graphs with up to
    // six nodes, over every seed
    long long runs = 0;
    for (int n = 1; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        std::vector<int> nodes(n);
        for (int i = 0; i < n; ++i) nodes[i] = i;
        for (std::uint32_t gmask = 0; gmask < (1u << pairs); ++gmask) {
            std::vector<std::uint32_t> adj(n, 0);
            std::vector<std::pair<int, int>> edge_list;
            int bit = 0;
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j, ++bit) {
                    if ((gmask >> bit) & 1u) {
                        edge_list.emplace_back(i, j);
                        adj[i] |= 1u << j;
                        adj[j] |= 1u << i;
                    }
                }
            }
            const Graph graph(nodes, edge_list);
            for (std::uint32_t seed_mask = 0; seed_mask < (1u << n); ++seed_mask) {
                const std::uint32_t want = oracles::naive_infect(adj, seed_mask);
                const InfectionOutcome got = infect(graph, mask_to_seed(seed_mask, n));
                std::uint32_t got_mask = 0;
                for (int id : got.stuck_set) got_mask |= 1u << id;
                if (got_mask != want) {
                    c.require(false, "fixpoint mismatch on graph mask " + std::to_string(gmask) +
                                         " seed " + std::to_string(seed_mask));
                    return;
                }
                ++runs;
            }
        }
    }
    const double elapsed = seconds_since(start);
    c.detail << runs << " exhaustive fixpoint comparisons in " << elapsed << " s";
    c.require(elapsed < 30.0, "runtime budget of 30 s exceeded");
}

// --- criterion 8: example-table regression (the figure cells; the
// prose-derived Ising rows are covered by criterion 5)

void example_regression(Criterion& c) {
    int figure_rows = 0;
    for (const ExampleOutcome& row : run_example_table()) {
        c.require(row.matches_verified(),
                  "'" + row.name + "' regressed against its verified baseline");
        if (row.part_of_figure) {
            ++figure_rows;
            c.require(row.matches_reference(),
                      "'" + row.name + "' computed (" +
                          (row.computed_controllable ? "yes" : "no") + "," +
                          (row.computed_infecting ? "yes" : "no") + ") vs reference (" +
                          (row.reference_controllable ? "yes" : "no") + "," +
                          (row.expected_infecting ? "yes" : "no") + ")");
        }
    }
    c.detail << figure_rows << " figure cells reproduced";
}

// --- criterion 9: numerical kernels

void numerical_kernels(Criterion& c) {
    std::mt19937 rng(2009);

    for (int trial = 0; trial < 100; ++trial) {
        const int d = 2 + trial % 3;
        const DenseOperator a(oracles::random_skew_hermitian_traceless(rng, d));
        const DenseOperator b(oracles::random_skew_hermitian_traceless(rng, d));
        const DenseOperator cc(oracles::random_skew_hermitian_traceless(rng, d));
        const DenseOperator res = commutator(a, commutator(b, cc)) +
                                  commutator(b, commutator(cc, a)) +
                                  commutator(cc, commutator(a, b));
        c.require(res.hs_norm() <= 1e-10 * a.hs_norm() * b.hs_norm() * cc.hs_norm(),
                  "Jacobi residual above 1e-10");
    }

    // sparse bracket vs dense commutator, all 15 x 15 two-qubit string pairs
    const Complex I(0, 1);
    std::vector<PauliString> strings;
    std::vector<Matrix> dense;
    const Matrix pauli[4] = {Matrix::Identity(2, 2), pauli_x(), pauli_y(), pauli_z()};
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            if (a == 0 && b == 0) continue;
            std::map<int, PauliAxis> sites;
            if (a) sites[0] = static_cast<PauliAxis>(a - 1);
            if (b) sites[1] = static_cast<PauliAxis>(b - 1);
            strings.push_back(PauliString::from_sites(sites));
            dense.push_back(oracles::kron(pauli[a], pauli[b]));
        }
    }
    for (std::size_t i = 0; i < strings.size(); ++i) {
        for (std::size_t j = 0; j < strings.size(); ++j) {
            const auto r = pauli_bracket({1.0, strings[i]}, {1.0, strings[j]});
            const Matrix expected =
                (I * dense[i]) * (I * dense[j]) - (I * dense[j]) * (I * dense[i]);
            if (!r) {
                c.require(expected.norm() < 1e-14, "sparse bracket missed a nonzero commutator");
            } else {
                PauliPolynomial poly(2);
                poly.add(*r);
                c.require((poly.to_dense().entries() - expected).norm() < 1e-13,
                          "sparse bracket disagrees with the dense commutator");
            }
        }
    }

    // closure dimension invariance under generator re-mixing and conjugation
    std::vector<DenseOperator> gens;
    const std::vector<int> dims{2, 2};
    for (const DenseOperator& g : su_basis(2)) gens.push_back(embed_local(g, {0}, dims));
    gens.emplace_back(Matrix(I * coupling_operator(CouplingModel::heisenberg(1.0, 0.7), 2, 2)));
    const int reference = lie_closure(gens, 0).dim;

    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::MatrixXd mix = oracles::random_orthogonal(rng, static_cast<int>(gens.size()));
        std::vector<DenseOperator> remixed;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            DenseOperator acc = DenseOperator::zero(4);
            for (std::size_t j = 0; j < gens.size(); ++j) {
                acc += Complex(mix(i, j), 0.0) * gens[j];
            }
            remixed.push_back(std::move(acc));
        }
        c.require(lie_closure(remixed, 0).dim == reference,
                  "closure dim changed under generator re-mixing");

        const Matrix u = oracles::random_unitary(rng, 4);
        std::vector<DenseOperator> conjugated;
        for (const auto& g : gens) {
            conjugated.emplace_back(Matrix(u * g.entries() * u.adjoint()));
        }
        c.require(lie_closure(conjugated, 0).dim == reference,
                  "closure dim changed under unitary conjugation");
    }
    c.detail << "Jacobi, exhaustive sparse-vs-dense brackets, 10+10 invariance trials";
}

}  // namespace

int main(int argc, char** argv) {
    bool stretch = false;
    bool stretch_only = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--stretch") == 0) stretch = true;
        if (std::strcmp(argv[i], "--stretch-only") == 0) stretch_only = true;
    }

    struct Entry {
        const char* name;
        std::function<void(Criterion&)> run;
    };
    std::vector<Entry> entries{
        {"1 chain end-control saturates 4^n-1", chain_end_control},
        {"2 xx pair not controllable from one end", xx_failure},
        {"3 star-4: propagation without infection fails", star_counterexample},
        {"4 propagation verdict table", propagation_table},
        {"5 ising+field chains flip at length 4", ising_field_chain},
        {"6 infecting trees are directly controllable", tree_consistency},
        {"7 infection order/monotonicity/fixpoint properties", infection_properties},
        {"8 example-table regression", example_regression},
        {"9 numerical kernel checks", numerical_kernels},
    };
    if (stretch_only) entries.clear();
    if (stretch || stretch_only) {
        entries.push_back({"S chain n=5 end-control (stretch)", chain_end_control_stretch});
    }

    int failures = 0;
    for (auto& e : entries) {
        Criterion c;
        try {
            e.run(c);
        } catch (const std::exception& ex) {
            c.pass = false;
            c.detail << "exception: " << ex.what();
        }
        std::printf("[%s] %s%s%s\n", c.pass ? "PASS" : "FAIL", e.name,
                    c.detail.str().empty() ? "" : " -- ", c.detail.str().c_str());
        if (!c.pass) ++failures;
    }
    return failures;
}
