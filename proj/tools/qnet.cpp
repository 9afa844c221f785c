// qnet: controllability analysis of coupled spin networks.
//
// Subcommands: check | infect | propagate | closure | figure3.
// Exit codes: 0 success, 1 example-table mismatch, 2 input error,
// 3 capacity exceeded, 4 indeterminate rank decision.

#include "qcontrol/controllability.hpp"
#include "qcontrol/errors.hpp"
#include "qcontrol/figure3.hpp"
#include "qcontrol/json_io.hpp"
#include "qcontrol/networks.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace qcontrol;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitIndeterminate = 4;

constexpr int kSchemaVersion = 1;

struct CommonArgs {
    std::string input_path;
    double tol = 1e-9;
    long long cap = 64;
    int threads = 0;
    std::string format = "text";
    std::vector<int> seed_set;
};

Network load_network(const CommonArgs& args) {
    std::ifstream in(args.input_path);
    if (!in) {
        throw std::invalid_argument("cannot open network file: " + args.input_path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    Network net = parse_network(buf.str());
    if (args.seed_set.empty()) return net;
    // --seed-set overrides the file's control set
    return Network(net.nodes(), net.edges(), net.fields(), args.seed_set);
}

CheckOptions check_options(const CommonArgs& args) {
    CheckOptions opts;
    opts.tol = args.tol;
    opts.dim_cap = args.cap;
    opts.max_threads = args.threads;
    return opts;
}

void emit_json(const CommonArgs& args, const std::string& command, json report) {
    json out{{"schema_version", kSchemaVersion},
             {"command", command},
             {"tol", args.tol},
             {"cap", args.cap},
             {"report", std::move(report)}};
    std::cout << out.dump(2) << "\n";
}

std::string yesno(bool v) { return v ? "yes" : "no"; }

void print_infection(const InfectionOutcome& outcome) {
    std::cout << "infection: " << (outcome.infecting ? "infecting" : "not infecting") << "\n";
    std::cout << "  seed:";
    for (int id : outcome.certificate.seed) std::cout << " " << id;
    std::cout << "\n";
    if (!outcome.certificate.steps.empty()) {
        std::cout << "  steps:";
        for (const auto& s : outcome.certificate.steps) {
            std::cout << " " << s.forcer << ">" << s.forced;
        }
        std::cout << "\n";
    }
    if (!outcome.infecting) {
        std::cout << "  stuck set:";
        for (int id : outcome.stuck_set) std::cout << " " << id;
        std::cout << "\n";
    }
}

void print_direct(const DirectCheck& direct) {
    std::cout << "direct test: " << to_string(direct.verdict) << " (closure dim "
              << direct.closure_dim << " / " << direct.target_dim << ", rounds "
              << direct.rounds << ", representation " << to_string(direct.representation)
              << ")\n";
}

void print_edge_propagation(const std::vector<EdgePropagation>& edges) {
    for (const auto& e : edges) {
        std::cout << "  edge (" << e.a << "," << e.b << ") from " << e.from << ": "
                  << yesno(e.report.propagating) << " (" << e.report.closure_dim << "/"
                  << e.report.target_dim << ")\n";
    }
}

int exit_code_for(const DirectCheck& direct) {
    return direct.verdict == DirectVerdict::Indeterminate ? kExitIndeterminate : kExitOk;
}

int run_check(const CommonArgs& args) {
    const Network net = load_network(args);
    const ControllabilityReport report = full_check(net, check_options(args));
    if (args.format == "json") {
        emit_json(args, "check", to_json(report));
    } else {
        std::cout << "network: " << net.nodes().size() << " nodes, " << net.edges().size()
                  << " edges, control {";
        for (std::size_t i = 0; i < net.control().size(); ++i) {
            std::cout << (i ? "," : "") << net.control()[i];
        }
        std::cout << "}\n";
        std::cout << "sufficient criterion: " << to_string(report.sufficient.verdict) << "\n";
        print_infection(report.sufficient.infection);
        std::cout << "propagation:\n";
        print_edge_propagation(report.sufficient.edge_propagation);
        print_direct(report.direct);
        std::cout << "tol " << args.tol << ", cap " << args.cap << "\n";
    }
    return exit_code_for(report.direct);
}

int run_infect(const CommonArgs& args) {
    const Network net = load_network(args);
    if (net.control().empty()) {
        throw std::invalid_argument("no seed: the network has an empty control set "
                                    "and no --seed-set was given");
    }
    const InfectionOutcome outcome = infect(graph_of(net), net.control());
    if (args.format == "json") {
        emit_json(args, "infect", to_json(outcome));
    } else {
        print_infection(outcome);
    }
    return kExitOk;
}

CouplingModel with_sweep_value(const CouplingModel& model, double value) {
    CouplingModel out = model;
    switch (model.kind) {
        case CouplingKind::Heisenberg: out.delta = value; break;  // anisotropy
        case CouplingKind::Aklt: out.biquadratic = value; break;
        case CouplingKind::XX:
        case CouplingKind::Ising: out.c = value; break;
        case CouplingKind::Custom:
            throw std::invalid_argument("--sweep is not defined for custom couplings");
    }
    return out;
}

int run_propagate(const CommonArgs& args, const std::vector<double>& sweep) {
    const Network net = load_network(args);
    if (net.edges().empty()) throw std::invalid_argument("network has no edges to check");

    json jedges = json::array();
    for (const auto& e : net.edges()) {
        const int d_a = net.node_dim(e.a);
        const int d_b = net.node_dim(e.b);
        auto run_sides = [&](const CouplingModel& model, std::optional<double> value) {
            for (PropagationSide side : {PropagationSide::First, PropagationSide::Second}) {
                const int from = side == PropagationSide::First ? e.a : e.b;
                const PropagationReport rep = propagation_check(model, d_a, d_b, args.tol, side);
                if (args.format == "json") {
                    json cell = to_json(EdgePropagation{e.a, e.b, from, rep});
                    if (value) cell["sweep_value"] = *value;
                    jedges.push_back(std::move(cell));
                } else {
                    std::cout << "edge (" << e.a << "," << e.b << ") from " << from;
                    if (value) std::cout << " @ " << *value;
                    std::cout << ": " << yesno(rep.propagating) << " (" << rep.closure_dim << "/"
                              << rep.target_dim << ")\n";
                }
            }
        };
        if (sweep.empty()) {
            run_sides(e.coupling, std::nullopt);
        } else {
            for (double v : sweep) run_sides(with_sweep_value(e.coupling, v), v);
        }
    }
    if (args.format == "json") {
        emit_json(args, "propagate", std::move(jedges));
    } else {
        std::cout << "tol " << args.tol << ", cap " << args.cap << "\n";
    }
    return kExitOk;
}

int run_closure(const CommonArgs& args) {
    const Network net = load_network(args);
    const DirectCheck direct = controllability_check(net, check_options(args));
    if (args.format == "json") {
        emit_json(args, "closure", to_json(direct));
    } else {
        std::cout << "closure dim " << direct.closure_dim << " / " << direct.target_dim
                  << " (rounds " << direct.rounds << ", saturated " << yesno(direct.saturated)
                  << ", max residual " << direct.max_residual << ", representation "
                  << to_string(direct.representation) << ")\n";
        std::cout << "tol " << args.tol << ", cap " << args.cap << "\n";
    }
    return exit_code_for(direct);
}

int run_figure3(const CommonArgs& args) {
    const std::vector<ExampleOutcome> rows = run_example_table(check_options(args));
    bool regression = false;
    int reference_disagreements = 0;
    auto note_for = [&](const ExampleOutcome& r) -> std::string {
        if (!r.matches_verified()) return "REGRESSION";
        if (!r.matches_reference()) return "differs from reference";
        return "ok";
    };
    for (const auto& r : rows) {
        if (!r.matches_verified()) regression = true;
        if (r.matches_verified() && !r.matches_reference()) ++reference_disagreements;
    }
    if (args.format == "json") {
        json jrows = json::array();
        for (const auto& r : rows) {
            jrows.push_back({{"name", r.name},
                             {"reference", {{"controllable", r.reference_controllable},
                                            {"infecting", r.expected_infecting}}},
                             {"verified", {{"controllable", r.verified_controllable}}},
                             {"computed", {{"controllable", r.computed_controllable},
                                           {"infecting", r.computed_infecting},
                                           {"closure_dim", r.closure_dim},
                                           {"target_dim", r.target_dim}}},
                             {"relaxation", "out of scope"},
                             {"note", note_for(r)}});
        }
        emit_json(args, "figure3", std::move(jrows));
    } else {
        std::printf("%-42s %-8s %-8s %-12s %-12s %-13s %s\n", "example", "AC(ref)", "AC(run)",
                    "infect(ref)", "infect(run)", "RC", "note");
        for (const auto& r : rows) {
            std::printf("%-42s %-8s %-8s %-12s %-12s %-13s %s\n", r.name.c_str(),
                        yesno(r.reference_controllable).c_str(),
                        yesno(r.computed_controllable).c_str(),
                        yesno(r.expected_infecting).c_str(), yesno(r.computed_infecting).c_str(),
                        "out of scope", note_for(r).c_str());
        }
        if (reference_disagreements > 0) {
            std::printf("%d row(s) disagree with the published reference; "
                        "see README (Known discrepancy).\n",
                        reference_disagreements);
        }
        std::cout << "tol " << args.tol << ", cap " << args.cap << "\n";
    }
    return regression ? kExitMismatch : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Controllability analysis of coupled spin networks"};
    app.require_subcommand(1);

    CommonArgs args;
    std::vector<double> sweep;

    auto add_common = [&](CLI::App* sub, bool needs_file) {
        if (needs_file) {
            sub->add_option("file", args.input_path, "network document (JSON)")->required();
            sub->add_option("--seed-set", args.seed_set,
                            "node ids overriding the file's control set")
                ->delimiter(',');
        }
        sub->add_option("--tol", args.tol, "rank-decision tolerance")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--cap", args.cap, "largest admissible Hilbert dimension")
            ->check(CLI::Range(4LL, 1LL << 20))
            ->capture_default_str();
        sub->add_option("--threads", args.threads, "bracket worker threads (0 = auto)")
            ->capture_default_str();
        sub->add_option("--format", args.format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    CLI::App* check = app.add_subcommand("check", "run the sufficient criterion and the direct test");
    add_common(check, true);
    CLI::App* infect_cmd = app.add_subcommand("infect", "run the graph-infection check");
    add_common(infect_cmd, true);
    CLI::App* propagate = app.add_subcommand("propagate", "per-edge propagation check");
    add_common(propagate, true);
    propagate->add_option("--sweep", sweep,
                          "parameter values to sweep (heisenberg: delta, aklt: A, xx/ising: c)")
        ->delimiter(',');
    CLI::App* closure = app.add_subcommand("closure", "closure dimensions of the direct test");
    add_common(closure, true);
    CLI::App* figure3 = app.add_subcommand("figure3", "built-in example table");
    add_common(figure3, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(args);
        if (infect_cmd->parsed()) return run_infect(args);
        if (propagate->parsed()) return run_propagate(args, sweep);
        if (closure->parsed()) return run_closure(args);
        if (figure3->parsed()) return run_figure3(args);
    } catch (const qcontrol::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const qcontrol::IndeterminateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIndeterminate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
