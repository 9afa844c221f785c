#include "qcontrol/json_io.hpp"

#include <set>
#include <stdexcept>

namespace qcontrol {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::invalid_argument(path + ": " + what);
}

void expect_keys(const json& j, const std::string& path, const std::set<std::string>& allowed) {
    if (!j.is_object()) fail(path, "expected an object");
    for (const auto& [key, value] : j.items()) {
        if (!allowed.count(key)) fail(path + "." + key, "unknown field");
    }
}

const json& require(const json& j, const std::string& path, const std::string& key) {
    if (!j.contains(key)) fail(path + "." + key, "missing required field");
    return j.at(key);
}

int get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
}

double get_double(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

std::vector<int> get_int_array(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(get_int(j[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

Matrix matrix_from_json(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of rows");
    const std::size_t n = j.size();
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const json& row = j[r];
        const std::string rpath = path + "[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != n) fail(rpath, "expected a row of length " + std::to_string(n));
        for (std::size_t c = 0; c < n; ++c) {
            const json& cell = row[c];
            const std::string cpath = rpath + "[" + std::to_string(c) + "]";
            if (!cell.is_array() || cell.size() != 2) fail(cpath, "expected an [re, im] pair");
            m(r, c) = Complex(get_double(cell[0], cpath + "[0]"), get_double(cell[1], cpath + "[1]"));
        }
    }
    return m;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (long long r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (long long c = 0; c < m.cols(); ++c) {
            row.push_back({m(r, c).real(), m(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CouplingModel coupling_from_json(const json& j, const std::string& path) {
    const std::string kind = [&] {
        const json& k = require(j, path, "kind");
        if (!k.is_string()) fail(path + ".kind", "expected a string");
        return k.get<std::string>();
    }();
    if (kind == "heisenberg") {
        expect_keys(j, path, {"kind", "c", "delta"});
        return CouplingModel::heisenberg(get_double(require(j, path, "c"), path + ".c"),
                                         get_double(require(j, path, "delta"), path + ".delta"));
    }
    if (kind == "xx") {
        expect_keys(j, path, {"kind", "c"});
        return CouplingModel::xx(get_double(require(j, path, "c"), path + ".c"));
    }
    if (kind == "ising") {
        expect_keys(j, path, {"kind", "c"});
        return CouplingModel::ising(get_double(require(j, path, "c"), path + ".c"));
    }
    if (kind == "aklt") {
        expect_keys(j, path, {"kind", "c", "A", "B"});
        return CouplingModel::aklt(get_double(require(j, path, "c"), path + ".c"),
                                   get_double(require(j, path, "A"), path + ".A"),
                                   get_double(require(j, path, "B"), path + ".B"));
    }
    if (kind == "custom") {
        expect_keys(j, path, {"kind", "matrix"});
        return CouplingModel::make_custom(
            matrix_from_json(require(j, path, "matrix"), path + ".matrix"));
    }
    fail(path + ".kind", "unknown coupling kind '" + kind + "'");
}

json coupling_to_json(const CouplingModel& m) {
    switch (m.kind) {
        case CouplingKind::Heisenberg:
            return {{"kind", "heisenberg"}, {"c", m.c}, {"delta", m.delta}};
        case CouplingKind::XX:
            return {{"kind", "xx"}, {"c", m.c}};
        case CouplingKind::Ising:
            return {{"kind", "ising"}, {"c", m.c}};
        case CouplingKind::Aklt:
            return {{"kind", "aklt"}, {"c", m.c}, {"A", m.biquadratic}, {"B", m.bilinear}};
        case CouplingKind::Custom:
            return {{"kind", "custom"}, {"matrix", matrix_to_json(m.custom)}};
    }
    throw std::logic_error("unreachable coupling kind");
}

DirectVerdict direct_verdict_from_string(const std::string& s, const std::string& path) {
    if (s == "Controllable") return DirectVerdict::Controllable;
    if (s == "NotControllable") return DirectVerdict::NotControllable;
    if (s == "Indeterminate") return DirectVerdict::Indeterminate;
    fail(path, "unknown direct verdict '" + s + "'");
}

SufficientVerdict sufficient_verdict_from_string(const std::string& s, const std::string& path) {
    if (s == "GuaranteedControllable") return SufficientVerdict::GuaranteedControllable;
    if (s == "Inconclusive") return SufficientVerdict::Inconclusive;
    if (s == "NotApplicable") return SufficientVerdict::NotApplicable;
    fail(path, "unknown sufficient verdict '" + s + "'");
}

Representation representation_from_string(const std::string& s, const std::string& path) {
    if (s == "dense") return Representation::Dense;
    if (s == "pauli") return Representation::Pauli;
    fail(path, "unknown representation '" + s + "'");
}

}  // namespace

std::string to_string(DirectVerdict v) {
    switch (v) {
        case DirectVerdict::Controllable: return "Controllable";
        case DirectVerdict::NotControllable: return "NotControllable";
        case DirectVerdict::Indeterminate: return "Indeterminate";
    }
    return "?";
}

std::string to_string(SufficientVerdict v) {
    switch (v) {
        case SufficientVerdict::GuaranteedControllable: return "GuaranteedControllable";
        case SufficientVerdict::Inconclusive: return "Inconclusive";
        case SufficientVerdict::NotApplicable: return "NotApplicable";
    }
    return "?";
}

std::string to_string(Representation r) {
    return r == Representation::Dense ? "dense" : "pauli";
}

Network network_from_json(const json& j) {
    expect_keys(j, "network", {"nodes", "edges", "fields", "control"});

    std::vector<NodeSpec> nodes;
    const json& jnodes = require(j, "network", "nodes");
    if (!jnodes.is_array()) fail("network.nodes", "expected an array");
    for (std::size_t i = 0; i < jnodes.size(); ++i) {
        const std::string path = "nodes[" + std::to_string(i) + "]";
        expect_keys(jnodes[i], path, {"id", "dim"});
        nodes.push_back({get_int(require(jnodes[i], path, "id"), path + ".id"),
                         get_int(require(jnodes[i], path, "dim"), path + ".dim")});
    }

    std::vector<EdgeSpec> edges;
    if (j.contains("edges")) {
        const json& jedges = j.at("edges");
        if (!jedges.is_array()) fail("network.edges", "expected an array");
        for (std::size_t i = 0; i < jedges.size(); ++i) {
            const std::string path = "edges[" + std::to_string(i) + "]";
            expect_keys(jedges[i], path, {"a", "b", "coupling"});
            edges.push_back({get_int(require(jedges[i], path, "a"), path + ".a"),
                             get_int(require(jedges[i], path, "b"), path + ".b"),
                             coupling_from_json(require(jedges[i], path, "coupling"),
                                                path + ".coupling")});
        }
    }

    std::vector<FieldSpec> fields;
    if (j.contains("fields")) {
        const json& jfields = j.at("fields");
        if (!jfields.is_array()) fail("network.fields", "expected an array");
        for (std::size_t i = 0; i < jfields.size(); ++i) {
            const std::string path = "fields[" + std::to_string(i) + "]";
            expect_keys(jfields[i], path, {"node", "b"});
            const json& b = require(jfields[i], path, "b");
            if (!b.is_array() || b.size() != 3) fail(path + ".b", "expected [bx, by, bz]");
            fields.push_back({get_int(require(jfields[i], path, "node"), path + ".node"),
                              {get_double(b[0], path + ".b[0]"), get_double(b[1], path + ".b[1]"),
                               get_double(b[2], path + ".b[2]")}});
        }
    }

    std::vector<int> control;
    if (j.contains("control")) control = get_int_array(j.at("control"), "network.control");

    return Network(std::move(nodes), std::move(edges), std::move(fields), std::move(control));
}

Network parse_network(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("network document: ") + e.what());
    }
    return network_from_json(j);
}

json network_to_json(const Network& net) {
    json out;
    out["nodes"] = json::array();
    for (const auto& n : net.nodes()) out["nodes"].push_back({{"id", n.id}, {"dim", n.dim}});
    out["edges"] = json::array();
    for (const auto& e : net.edges()) {
        out["edges"].push_back({{"a", e.a}, {"b", e.b}, {"coupling", coupling_to_json(e.coupling)}});
    }
    if (!net.fields().empty()) {
        out["fields"] = json::array();
        for (const auto& f : net.fields()) {
            out["fields"].push_back({{"node", f.node}, {"b", {f.b[0], f.b[1], f.b[2]}}});
        }
    }
    out["control"] = net.control();
    return out;
}

json to_json(const InfectionOutcome& outcome) {
    json steps = json::array();
    for (const auto& s : outcome.certificate.steps) {
        steps.push_back({{"forcer", s.forcer}, {"forced", s.forced}});
    }
    return {{"infecting", outcome.infecting},
            {"seed", outcome.certificate.seed},
            {"steps", std::move(steps)},
            {"stuck_set", outcome.stuck_set}};
}

InfectionOutcome infection_from_json(const json& j) {
    InfectionOutcome out;
    out.infecting = j.at("infecting").get<bool>();
    out.certificate.seed = j.at("seed").get<std::vector<int>>();
    for (const auto& s : j.at("steps")) {
        out.certificate.steps.push_back({s.at("forcer").get<int>(), s.at("forced").get<int>()});
    }
    out.stuck_set = j.at("stuck_set").get<std::vector<int>>();
    return out;
}

json to_json(const PropagationReport& report) {
    return {{"propagating", report.propagating},
            {"closure_dim", report.closure_dim},
            {"target_dim", report.target_dim},
            {"basis_norm_residual", report.basis_norm_residual}};
}

PropagationReport propagation_from_json(const json& j) {
    PropagationReport out;
    out.propagating = j.at("propagating").get<bool>();
    out.closure_dim = j.at("closure_dim").get<int>();
    out.target_dim = j.at("target_dim").get<int>();
    out.basis_norm_residual = j.at("basis_norm_residual").get<double>();
    return out;
}

json to_json(const EdgePropagation& report) {
    json out = to_json(report.report);
    out["a"] = report.a;
    out["b"] = report.b;
    out["from"] = report.from;
    return out;
}

EdgePropagation edge_propagation_from_json(const json& j) {
    EdgePropagation out;
    out.a = j.at("a").get<int>();
    out.b = j.at("b").get<int>();
    out.from = j.at("from").get<int>();
    out.report = propagation_from_json(j);
    return out;
}

json to_json(const DirectCheck& report) {
    return {{"verdict", to_string(report.verdict)},
            {"closure_dim", report.closure_dim},
            {"target_dim", report.target_dim},
            {"representation", to_string(report.representation)},
            {"rounds", report.rounds},
            {"saturated", report.saturated},
            {"max_residual", report.max_residual}};
}

DirectCheck direct_from_json(const json& j) {
    DirectCheck out;
    out.verdict = direct_verdict_from_string(j.at("verdict").get<std::string>(), "direct.verdict");
    out.closure_dim = j.at("closure_dim").get<long long>();
    out.target_dim = j.at("target_dim").get<long long>();
    out.representation = representation_from_string(
        j.at("representation").get<std::string>(), "direct.representation");
    out.rounds = j.at("rounds").get<int>();
    out.saturated = j.at("saturated").get<bool>();
    out.max_residual = j.at("max_residual").get<double>();
    return out;
}

json to_json(const SufficientCheck& report) {
    json edges = json::array();
    for (const auto& e : report.edge_propagation) edges.push_back(to_json(e));
    return {{"verdict", to_string(report.verdict)},
            {"infection", to_json(report.infection)},
            {"edge_propagation", std::move(edges)}};
}

SufficientCheck sufficient_from_json(const json& j) {
    SufficientCheck out;
    out.verdict = sufficient_verdict_from_string(j.at("verdict").get<std::string>(),
                                                 "sufficient.verdict");
    out.infection = infection_from_json(j.at("infection"));
    for (const auto& e : j.at("edge_propagation")) {
        out.edge_propagation.push_back(edge_propagation_from_json(e));
    }
    return out;
}

json to_json(const ControllabilityReport& report) {
    return {{"direct", to_json(report.direct)}, {"sufficient", to_json(report.sufficient)}};
}

ControllabilityReport report_from_json(const json& j) {
    return {direct_from_json(j.at("direct")), sufficient_from_json(j.at("sufficient"))};
}

}  // namespace qcontrol
