#include "qcontrol/infection.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qcontrol {

namespace {

std::vector<int> normalize_seed(const Graph& graph, const std::vector<int>& seed) {
    std::vector<int> out = seed;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (int id : out) {
        if (!graph.has_node(id)) {
            throw std::invalid_argument("infect: unknown node id " + std::to_string(id));
        }
    }
    return out;
}

std::vector<InfectionStep> applicable_forces(const Graph& graph, const std::set<int>& infected) {
    std::vector<InfectionStep> out;
    for (int n : infected) {
        int healthy = -1;
        int healthy_count = 0;
        for (int m : graph.neighbors(n)) {
            if (!infected.count(m)) {
                healthy = m;
                if (++healthy_count > 1) break;
            }
        }
        if (healthy_count == 1) out.push_back({n, healthy});
    }
    return out;  // sorted by forcer since `infected` iterates in order
}

}  // namespace

InfectionOutcome infect_with_policy(const Graph& graph, const std::vector<int>& seed,
                                    const ForcePolicy& policy) {
    InfectionOutcome out;
    out.certificate.seed = normalize_seed(graph, seed);
    std::set<int> infected(out.certificate.seed.begin(), out.certificate.seed.end());

    while (infected.size() < graph.node_count()) {
        const std::vector<InfectionStep> forces = applicable_forces(graph, infected);
        if (forces.empty()) break;
        const std::size_t pick = policy(forces);
        if (pick >= forces.size()) {
            throw std::invalid_argument("infect: policy returned an out-of-range index");
        }
        const InfectionStep step = forces[pick];
        infected.insert(step.forced);
        out.certificate.steps.push_back(step);
    }

    out.infecting = infected.size() == graph.node_count();
    out.stuck_set.assign(infected.begin(), infected.end());
    return out;
}

InfectionOutcome infect(const Graph& graph, const std::vector<int>& seed) {
    return infect_with_policy(graph, seed,
                              [](const std::vector<InfectionStep>&) { return std::size_t{0}; });
}

bool verify_certificate(const Graph& graph, const InfectionCertificate& cert) {
    std::set<int> infected;
    for (int id : cert.seed) {
        if (!graph.has_node(id)) return false;
        infected.insert(id);
    }
    for (const auto& step : cert.steps) {
        if (!graph.has_node(step.forcer) || !graph.has_node(step.forced)) return false;
        if (!infected.count(step.forcer) || infected.count(step.forced)) return false;
        // step.forced must be the unique neighbor of step.forcer outside the set
        int healthy_count = 0;
        bool forced_is_neighbor = false;
        for (int m : graph.neighbors(step.forcer)) {
            if (!infected.count(m)) {
                ++healthy_count;
                if (m == step.forced) forced_is_neighbor = true;
            }
        }
        if (healthy_count != 1 || !forced_is_neighbor) return false;
        infected.insert(step.forced);
    }
    return infected.size() == graph.node_count();
}

std::vector<std::vector<int>> min_infecting_sets(const Graph& graph, int max_size) {
    const int n = static_cast<int>(graph.node_count());
    if (n > 24) {
        throw std::invalid_argument("min_infecting_sets: graph too large for exhaustive search");
    }
    const std::vector<int>& nodes = graph.nodes();
    std::vector<std::vector<int>> found;

    auto is_superset_of_found = [&](const std::vector<int>& candidate) {
        for (const auto& small : found) {
            if (std::includes(candidate.begin(), candidate.end(), small.begin(), small.end())) {
                return true;
            }
        }
        return false;
    };

    std::vector<int> combo;
    // enumerate size-k subsets of the sorted node list in lexicographic order
    std::function<void(int, int)> enumerate = [&](int start, int remaining) {
        if (remaining == 0) {
            if (!is_superset_of_found(combo) && infect(graph, combo).infecting) {
                found.push_back(combo);
            }
            return;
        }
        for (int i = start; i <= n - remaining; ++i) {
            combo.push_back(nodes[i]);
            enumerate(i + 1, remaining - 1);
            combo.pop_back();
        }
    };
    for (int k = 1; k <= std::min(max_size, n); ++k) enumerate(0, k);
    return found;
}

}  // namespace qcontrol
