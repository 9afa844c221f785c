#pragma once

#include "qcontrol/network.hpp"

#include <vector>

namespace qcontrol {

/// Chain 1 - 2 - ... - n with the same coupling on every edge.
Network make_chain(int n, const CouplingModel& coupling, std::vector<int> control);

/// Chain with one coupling per edge (couplings.size() == n - 1).
Network make_chain(int n, const std::vector<CouplingModel>& couplings, std::vector<int> control);

/// Star with center id 0 and leaves 1..leaves, same coupling on every edge.
Network make_star(int leaves, const CouplingModel& coupling, std::vector<int> control);

/// Chain of qubits with Ising couplings and the same field vector on every site.
Network make_ising_field_chain(int n, double c, const std::array<double, 3>& field,
                               std::vector<int> control);

}  // namespace qcontrol
