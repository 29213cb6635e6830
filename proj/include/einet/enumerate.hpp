#pragma once

#include <vector>

#include "einet/network.hpp"

namespace einet {

struct EnumerationSpec {
  int n_nodes = 2;
  NetworkClass network_class = NetworkClass::REI;
  int max_valence = 2;       // bound on every row sum of exc + inh
  bool connected_only = true;
  bool modulo_duality = true;
};

std::vector<std::vector<int>> all_permutations(int n);

// Catalog symmetry orbit. Without modulo_duality the group is node
// renumbering only. With it, the excitatory/inhibitory relabelings of nodes
// and of arrows act as two further independent involutions (the joint dual()
// is their composition); on single-node-type networks only the arrow
// relabeling is effective.
std::vector<EINetwork> symmetry_orbit(const EINetwork &net, bool modulo_duality);

// Lexicographically least orbit element under EINetwork::key(). Idempotent.
EINetwork canonical_form(const EINetwork &net, bool modulo_duality);

// Least orbit element that satisfies the class universe predicate, so that
// catalog representatives stay inside their class (the global orbit minimum
// of a restricted network can be an arrow-relabeled unrestricted variant).
// Throws std::invalid_argument when no orbit element is in the universe.
EINetwork class_canonical_form(const EINetwork &net, NetworkClass cls,
                               bool modulo_duality);

// Enumeration-universe predicate for spec.network_class. For REI/UEI this
// requires both node types to be present. For PEI it requires that the
// network is the type-identification of an REI network: one output
// arrow-type per node, realizable with both node types present.
// (classify_network's PEI predicate is the weaker per-node column rule.)
bool in_enumeration_universe(const EINetwork &net, NetworkClass cls);

// All networks in the universe (valence bound, class predicate, optional
// connectivity), without orbit reduction.
std::vector<EINetwork> enumerate_raw(const EnumerationSpec &spec);

// Canonical representatives, sorted, duplicate-free.
std::vector<EINetwork> enumerate_networks(const EnumerationSpec &spec);

}  // namespace einet
