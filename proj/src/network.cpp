#include "qcontrol/network.hpp"

#include "qcontrol/errors.hpp"
#include "qcontrol/spin.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qcontrol {

namespace {

Matrix kron2(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (long long i = 0; i < a.rows(); ++i) {
        for (long long j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

std::string kind_name(CouplingKind kind) {
    switch (kind) {
        case CouplingKind::Heisenberg: return "heisenberg";
        case CouplingKind::XX: return "xx";
        case CouplingKind::Ising: return "ising";
        case CouplingKind::Aklt: return "aklt";
        case CouplingKind::Custom: return "custom";
    }
    return "?";
}

}  // namespace

CouplingModel CouplingModel::heisenberg(double c, double delta) {
    CouplingModel m;
    m.kind = CouplingKind::Heisenberg;
    m.c = c;
    m.delta = delta;
    return m;
}

CouplingModel CouplingModel::xx(double c) {
    CouplingModel m;
    m.kind = CouplingKind::XX;
    m.c = c;
    return m;
}

CouplingModel CouplingModel::ising(double c) {
    CouplingModel m;
    m.kind = CouplingKind::Ising;
    m.c = c;
    return m;
}

CouplingModel CouplingModel::aklt(double c, double biquadratic, double bilinear) {
    CouplingModel m;
    m.kind = CouplingKind::Aklt;
    m.c = c;
    m.biquadratic = biquadratic;
    m.bilinear = bilinear;
    return m;
}

CouplingModel CouplingModel::make_custom(Matrix mat) {
    CouplingModel m;
    m.kind = CouplingKind::Custom;
    m.custom = std::move(mat);
    return m;
}

void validate_coupling(const CouplingModel& model, int d_a, int d_b) {
    switch (model.kind) {
        case CouplingKind::Heisenberg:
        case CouplingKind::XX:
        case CouplingKind::Ising:
            if (d_a != 2 || d_b != 2) {
                throw std::invalid_argument(kind_name(model.kind) +
                                            " coupling requires qubit endpoints (dims 2x2)");
            }
            if (model.c == 0.0) {
                throw std::invalid_argument("coupling constant c must be nonzero on edges");
            }
            break;
        case CouplingKind::Aklt:
            if (d_a != 3 || d_b != 3) {
                throw std::invalid_argument("aklt coupling requires spin-1 endpoints (dims 3x3)");
            }
            if (model.c == 0.0) {
                throw std::invalid_argument("coupling constant c must be nonzero on edges");
            }
            break;
        case CouplingKind::Custom: {
            const long long want = static_cast<long long>(d_a) * d_b;
            if (model.custom.rows() != want || model.custom.cols() != want) {
                throw std::invalid_argument("custom coupling matrix must be " +
                                            std::to_string(want) + "x" + std::to_string(want));
            }
            const double norm = model.custom.norm();
            if (norm == 0.0) {
                throw std::invalid_argument(
                    "custom coupling matrix is zero; drop the edge instead");
            }
            if ((model.custom - model.custom.adjoint()).norm() > 1e-12 * norm) {
                throw std::invalid_argument("custom coupling matrix is not Hermitian");
            }
            break;
        }
    }
}

Matrix coupling_operator(const CouplingModel& model, int d_a, int d_b) {
    validate_coupling(model, d_a, d_b);
    switch (model.kind) {
        case CouplingKind::Heisenberg:
            return model.c * (kron2(pauli_x(), pauli_x()) + kron2(pauli_y(), pauli_y()) +
                              model.delta * kron2(pauli_z(), pauli_z()));
        case CouplingKind::XX:
            return model.c * (kron2(pauli_x(), pauli_x()) + kron2(pauli_y(), pauli_y()));
        case CouplingKind::Ising:
            return model.c * kron2(pauli_z(), pauli_z());
        case CouplingKind::Aklt: {
            const SpinOperators s = spin_operators(3);
            const Matrix dot =
                kron2(s.sx, s.sx) + kron2(s.sy, s.sy) + kron2(s.sz, s.sz);
            return model.c * (model.biquadratic * Matrix(dot * dot) + model.bilinear * dot);
        }
        case CouplingKind::Custom:
            return model.custom;
    }
    throw std::logic_error("unreachable coupling kind");
}

Graph::Graph(std::vector<int> nodes, const std::vector<std::pair<int, int>>& edges)
    : nodes_(std::move(nodes)) {
    std::sort(nodes_.begin(), nodes_.end());
    if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
        throw std::invalid_argument("graph: duplicate node ids");
    }
    for (int id : nodes_) adj_[id] = {};
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
        if (!has_node(a) || !has_node(b)) {
            throw std::invalid_argument("graph: edge references unknown node");
        }
        if (a == b) throw std::invalid_argument("graph: self-loop on node " + std::to_string(a));
        const auto canon = std::minmax(a, b);
        if (!seen.insert({canon.first, canon.second}).second) {
            throw std::invalid_argument("graph: duplicate edge (" + std::to_string(a) + "," +
                                        std::to_string(b) + ")");
        }
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto& [id, nbrs] : adj_) std::sort(nbrs.begin(), nbrs.end());
    edges_.assign(seen.begin(), seen.end());
}

const std::vector<int>& Graph::neighbors(int id) const {
    const auto it = adj_.find(id);
    if (it == adj_.end()) {
        throw std::invalid_argument("graph: unknown node id " + std::to_string(id));
    }
    return it->second;
}

bool Graph::has_edge(int a, int b) const {
    const auto it = adj_.find(a);
    if (it == adj_.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), b);
}

Network::Network(std::vector<NodeSpec> nodes, std::vector<EdgeSpec> edges,
                 std::vector<FieldSpec> fields, std::vector<int> control)
    : nodes_(std::move(nodes)),
      edges_(std::move(edges)),
      fields_(std::move(fields)),
      control_(std::move(control)) {
    if (nodes_.empty()) throw std::invalid_argument("network: no nodes");
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].dim < 2) {
            throw std::invalid_argument("nodes[" + std::to_string(i) +
                                        "]: local dimension must be at least 2");
        }
        if (!position_.emplace(nodes_[i].id, static_cast<int>(i)).second) {
            throw std::invalid_argument("nodes[" + std::to_string(i) + "]: duplicate id " +
                                        std::to_string(nodes_[i].id));
        }
    }
    std::set<std::pair<int, int>> seen_edges;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        const std::string where = "edges[" + std::to_string(i) + "]";
        if (!position_.count(e.a) || !position_.count(e.b)) {
            throw std::invalid_argument(where + ": unknown node id");
        }
        if (e.a == e.b) {
            throw std::invalid_argument(where + ": self-loop on node " + std::to_string(e.a));
        }
        const auto canon = std::minmax(e.a, e.b);
        if (!seen_edges.insert({canon.first, canon.second}).second) {
            throw std::invalid_argument(where + ": duplicate edge (" + std::to_string(e.a) +
                                        "," + std::to_string(e.b) + ")");
        }
        try {
            validate_coupling(e.coupling, node_dim(e.a), node_dim(e.b));
        } catch (const std::invalid_argument& err) {
            throw std::invalid_argument(where + ": " + err.what());
        }
    }
    std::set<int> seen_fields;
    for (std::size_t i = 0; i < fields_.size(); ++i) {
        const auto& f = fields_[i];
        const std::string where = "fields[" + std::to_string(i) + "]";
        if (!position_.count(f.node)) {
            throw std::invalid_argument(where + ": unknown node id " + std::to_string(f.node));
        }
        if (node_dim(f.node) != 2) {
            throw std::invalid_argument(where + ": onsite fields are only supported on qubit sites");
        }
        if (!seen_fields.insert(f.node).second) {
            throw std::invalid_argument(where + ": duplicate field on node " +
                                        std::to_string(f.node));
        }
        if (f.b[0] == 0.0 && f.b[1] == 0.0 && f.b[2] == 0.0) {
            throw std::invalid_argument(where + ": zero field vector; omit the entry instead");
        }
    }
    std::sort(control_.begin(), control_.end());
    control_.erase(std::unique(control_.begin(), control_.end()), control_.end());
    for (int c : control_) {
        if (!position_.count(c)) {
            throw std::invalid_argument("control: unknown node id " + std::to_string(c));
        }
    }
}

int Network::node_position(int id) const {
    const auto it = position_.find(id);
    if (it == position_.end()) {
        throw std::invalid_argument("network: unknown node id " + std::to_string(id));
    }
    return it->second;
}

int Network::node_dim(int id) const { return nodes_[node_position(id)].dim; }

std::vector<int> Network::dims() const {
    std::vector<int> out;
    out.reserve(nodes_.size());
    for (const auto& n : nodes_) out.push_back(n.dim);
    return out;
}

long long Network::total_dim() const {
    long long total = 1;
    for (const auto& n : nodes_) {
        total *= n.dim;
        if (total > (1LL << 40)) return 1LL << 40;  // saturate; caps reject long before this
    }
    return total;
}

bool Network::all_qubits() const {
    return std::all_of(nodes_.begin(), nodes_.end(),
                       [](const NodeSpec& n) { return n.dim == 2; });
}

Graph graph_of(const Network& net) {
    std::vector<int> ids;
    ids.reserve(net.nodes().size());
    for (const auto& n : net.nodes()) ids.push_back(n.id);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(net.edges().size());
    for (const auto& e : net.edges()) edges.emplace_back(e.a, e.b);
    return Graph(std::move(ids), edges);
}

AssembledHamiltonian assemble_hamiltonian(const Network& net) {
    const long long total = net.total_dim();
    if (total > 4096) {
        throw CapacityError(total, 4096);
    }
    const std::vector<int> dims = net.dims();

    DenseOperator h = DenseOperator::zero(static_cast<int>(total));
    for (const auto& e : net.edges()) {
        const Matrix pair_op = coupling_operator(e.coupling, net.node_dim(e.a), net.node_dim(e.b));
        h += embed_local(DenseOperator(pair_op),
                         {net.node_position(e.a), net.node_position(e.b)}, dims);
    }
    for (const auto& f : net.fields()) {
        const Matrix local = f.b[0] * pauli_x() + f.b[1] * pauli_y() + f.b[2] * pauli_z();
        h += embed_local(DenseOperator(local), {net.node_position(f.node)}, dims);
    }

    AssembledHamiltonian out{std::move(h), std::nullopt};
    if (!net.all_qubits()) return out;

    const int n = static_cast<int>(net.nodes().size());
    PauliPolynomial drift(n);
    for (const auto& e : net.edges()) {
        const int pa = net.node_position(e.a);
        const int pb = net.node_position(e.b);
        const auto& m = e.coupling;
        auto add_pair = [&](PauliAxis axis, double coeff) {
            if (coeff == 0.0) return;
            drift.add(coeff, PauliString::from_sites({{pa, axis}, {pb, axis}}));
        };
        switch (m.kind) {
            case CouplingKind::Heisenberg:
                add_pair(PauliAxis::X, m.c);
                add_pair(PauliAxis::Y, m.c);
                add_pair(PauliAxis::Z, m.c * m.delta);
                break;
            case CouplingKind::XX:
                add_pair(PauliAxis::X, m.c);
                add_pair(PauliAxis::Y, m.c);
                break;
            case CouplingKind::Ising:
                add_pair(PauliAxis::Z, m.c);
                break;
            case CouplingKind::Custom: {
                const PauliPolynomial local = pauli_drift_from_hermitian(m.custom, 2);
                for (const auto& t : local.terms()) {
                    // remap pair sites {0, 1} onto the global positions
                    std::map<int, PauliAxis> remapped;
                    for (const auto& [site, axis] : t.string.sites()) {
                        remapped[site == 0 ? pa : pb] = axis;
                    }
                    drift.add(t.coefficient, PauliString::from_sites(remapped));
                }
                break;
            }
            case CouplingKind::Aklt:
                throw std::logic_error("aklt coupling on a qubit network");
        }
    }
    for (const auto& f : net.fields()) {
        const int p = net.node_position(f.node);
        if (f.b[0] != 0.0) drift.add(f.b[0], PauliString::single(p, PauliAxis::X));
        if (f.b[1] != 0.0) drift.add(f.b[1], PauliString::single(p, PauliAxis::Y));
        if (f.b[2] != 0.0) drift.add(f.b[2], PauliString::single(p, PauliAxis::Z));
    }
    out.drift_pauli = std::move(drift);
    return out;
}

}  // namespace qcontrol
