#include "qcontrol/networks.hpp"

#include <stdexcept>

namespace qcontrol {

namespace {

int kind_dim(const CouplingModel& coupling) {
    return coupling.kind == CouplingKind::Aklt ? 3 : 2;
}

}  // namespace

Network make_chain(int n, const CouplingModel& coupling, std::vector<int> control) {
    return make_chain(n, std::vector<CouplingModel>(static_cast<std::size_t>(n - 1), coupling),
                      std::move(control));
}

Network make_chain(int n, const std::vector<CouplingModel>& couplings,
                   std::vector<int> control) {
    if (n < 2) throw std::invalid_argument("make_chain: need at least two sites");
    if (couplings.size() != static_cast<std::size_t>(n - 1)) {
        throw std::invalid_argument("make_chain: one coupling per edge required");
    }
    std::vector<NodeSpec> nodes;
    std::vector<EdgeSpec> edges;
    for (int i = 1; i <= n; ++i) nodes.push_back({i, kind_dim(couplings[0])});
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1, couplings[i - 1]});
    return Network(std::move(nodes), std::move(edges), {}, std::move(control));
}

Network make_star(int leaves, const CouplingModel& coupling, std::vector<int> control) {
    if (leaves < 1) throw std::invalid_argument("make_star: need at least one leaf");
    std::vector<NodeSpec> nodes{{0, kind_dim(coupling)}};
    std::vector<EdgeSpec> edges;
    for (int i = 1; i <= leaves; ++i) {
        nodes.push_back({i, kind_dim(coupling)});
        edges.push_back({0, i, coupling});
    }
    return Network(std::move(nodes), std::move(edges), {}, std::move(control));
}

Network make_ising_field_chain(int n, double c, const std::array<double, 3>& field,
                               std::vector<int> control) {
    if (n < 2) throw std::invalid_argument("make_ising_field_chain: need at least two sites");
    std::vector<NodeSpec> nodes;
    std::vector<EdgeSpec> edges;
    std::vector<FieldSpec> fields;
    for (int i = 1; i <= n; ++i) {
        nodes.push_back({i, 2});
        fields.push_back({i, field});
    }
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1, CouplingModel::ising(c)});
    return Network(std::move(nodes), std::move(edges), std::move(fields), std::move(control));
}

}  // namespace qcontrol
