#pragma once

#include <string>

#include "einet/enumerate.hpp"
#include "einet/network.hpp"
#include "einet/ode_equiv.hpp"

namespace einet {

// Stable network id: node-type block and the two multiplicity matrices of
// the canonical form, one base-36 digit per entry, e.g. "EI2:1010.0101" for
// the two-typed network with exc [[1,0],[1,0]] and inh [[0,1],[0,1]].
// Single-node-type networks use the prefix "S".
std::string network_id(const EINetwork &net);

// Full catalog for one class at a valence bound: the canonical network list,
// the ODE-partition with span signatures and minimal representatives, and
// the balanced colourings of every member. Deterministic: equal inputs give
// byte-identical serializations.
nlohmann::ordered_json build_catalog(NetworkClass cls, int n_nodes, int max_valence,
                                     bool modulo_duality, int entry_bound = 3);

std::string catalog_summary(const nlohmann::ordered_json &catalog);

// "rei" / "pei" / "uei" / "cei" file stem used under the golden directory.
std::string catalog_stem(NetworkClass cls);

}  // namespace einet
