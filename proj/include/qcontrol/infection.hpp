#pragma once

#include "qcontrol/network.hpp"

#include <functional>
#include <vector>

namespace qcontrol {

struct InfectionStep {
    int forcer = 0;
    int forced = 0;

    friend bool operator==(const InfectionStep&, const InfectionStep&) = default;
};

/// Ordered forcing sequence witnessing that a seed infects the graph:
/// step k is valid when `forced` is the unique neighbor of `forcer` outside
/// the set infected so far.
struct InfectionCertificate {
    std::vector<int> seed;             // sorted, unique
    std::vector<InfectionStep> steps;

    friend bool operator==(const InfectionCertificate&, const InfectionCertificate&) = default;
};

struct InfectionOutcome {
    bool infecting = false;
    InfectionCertificate certificate;
    std::vector<int> stuck_set;  // final infected set (equals all nodes iff infecting)

    friend bool operator==(const InfectionOutcome&, const InfectionOutcome&) = default;
};

/// Chooses which applicable force to apply next; receives the nonempty list
/// of currently applicable (forcer, forced) pairs sorted by forcer id and
/// returns an index into it.
using ForcePolicy = std::function<std::size_t(const std::vector<InfectionStep>&)>;

/// Runs the infection rule to its fixpoint: an infected node infects a
/// healthy neighbor iff it is its only healthy neighbor. Deterministic
/// tie-breaking (smallest forcer, then forced). The final infected set does
/// not depend on the application order; the recorded steps do.
InfectionOutcome infect(const Graph& graph, const std::vector<int>& seed);

/// Same fixpoint with a custom force-selection policy (used to exercise
/// order independence).
InfectionOutcome infect_with_policy(const Graph& graph, const std::vector<int>& seed,
                                    const ForcePolicy& policy);

/// Replays a certificate against the forcing rule. Malformed certificates
/// (unknown ids, steps that are not unique-healthy-neighbor forces, or a
/// sequence that does not end with every node infected) return false.
bool verify_certificate(const Graph& graph, const InfectionCertificate& cert);

/// All inclusion-minimal infecting sets of size <= max_size, found by
/// exhaustive subset enumeration ordered by size. Guarded to graphs with at
/// most 24 nodes.
std::vector<std::vector<int>> min_infecting_sets(const Graph& graph, int max_size);

}  // namespace qcontrol
