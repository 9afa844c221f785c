#pragma once

#include "qcontrol/dense_operator.hpp"
#include "qcontrol/pauli.hpp"

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qcontrol {

enum class CouplingKind { Heisenberg, XX, Ising, Aklt, Custom };

/// Two-site coupling attached to a network edge.
///
/// Heisenberg: c (XX + YY + delta ZZ), qubit pairs only.
/// XX:         c (XX + YY).
/// Ising:      c ZZ.
/// Aklt:       c (A (S.S)^2 + B S.S) on spin-1 pairs.
/// Custom:     an explicit Hermitian matrix on the pair space.
struct CouplingModel {
    CouplingKind kind = CouplingKind::Heisenberg;
    double c = 1.0;
    double delta = 1.0;        // Heisenberg anisotropy
    double biquadratic = 0.0;  // Aklt A
    double bilinear = 0.0;     // Aklt B
    Matrix custom;

    static CouplingModel heisenberg(double c, double delta);
    static CouplingModel xx(double c);
    static CouplingModel ising(double c);
    static CouplingModel aklt(double c, double biquadratic, double bilinear);
    static CouplingModel make_custom(Matrix m);
};

/// Hermitian coupling operator on the two-site space H_a (x) H_b.
/// Throws when the kind does not support the given local dimensions or the
/// custom matrix is invalid.
Matrix coupling_operator(const CouplingModel& model, int d_a, int d_b);

/// Checks a model against the local dimensions of its edge; throws
/// std::invalid_argument with a description on failure. Degenerate couplings
/// (c = 0, or an all-zero custom matrix) are rejected so that stored edges
/// always carry actual interactions.
void validate_coupling(const CouplingModel& model, int d_a, int d_b);

struct NodeSpec {
    int id = 0;
    int dim = 2;
};

struct FieldSpec {
    int node = 0;
    std::array<double, 3> b{0.0, 0.0, 0.0};  // (bx, by, bz)
};

struct EdgeSpec {
    int a = 0;
    int b = 0;
    CouplingModel coupling;
};

/// Undirected interaction graph: node ids plus sorted adjacency.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<int> nodes, const std::vector<std::pair<int, int>>& edges);

    const std::vector<int>& nodes() const { return nodes_; }
    std::size_t node_count() const { return nodes_.size(); }
    bool has_node(int id) const { return adj_.count(id) != 0; }
    const std::vector<int>& neighbors(int id) const;
    bool has_edge(int a, int b) const;
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

private:
    std::vector<int> nodes_;                          // sorted
    std::vector<std::pair<int, int>> edges_;          // canonical (a < b), sorted
    std::unordered_map<int, std::vector<int>> adj_;   // sorted neighbor lists
};

/// Immutable description of a spin network: sites with local dimensions,
/// edge couplings, optional onsite fields on qubit sites, and the directly
/// controlled subset. Validated on construction.
class Network {
public:
    Network(std::vector<NodeSpec> nodes, std::vector<EdgeSpec> edges,
            std::vector<FieldSpec> fields, std::vector<int> control);

    const std::vector<NodeSpec>& nodes() const { return nodes_; }
    const std::vector<EdgeSpec>& edges() const { return edges_; }
    const std::vector<FieldSpec>& fields() const { return fields_; }
    const std::vector<int>& control() const { return control_; }  // sorted, unique

    int node_position(int id) const;  // position in declaration order
    int node_dim(int id) const;
    std::vector<int> dims() const;
    long long total_dim() const;
    bool all_qubits() const;

private:
    std::vector<NodeSpec> nodes_;
    std::vector<EdgeSpec> edges_;
    std::vector<FieldSpec> fields_;
    std::vector<int> control_;
    std::unordered_map<int, int> position_;
};

/// Adjacency structure of the interaction graph. Stored edges are trusted:
/// every declared edge is a graph edge regardless of its matrix elements.
Graph graph_of(const Network& net);

struct AssembledHamiltonian {
    DenseOperator dense;  // Hermitian H_V = sum of embedded couplings + fields
    /// i * (traceless part of H_V) as a Pauli polynomial; present only when
    /// every site is a qubit.
    std::optional<PauliPolynomial> drift_pauli;
};

/// Builds the global Hamiltonian: embedded two-site couplings over all edges
/// plus embedded onsite field terms b . (X, Y, Z).
AssembledHamiltonian assemble_hamiltonian(const Network& net);

}  // namespace qcontrol
