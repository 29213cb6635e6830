#pragma once

#include <set>
#include <string>
#include <vector>

#include "einet/rational.hpp"
#include "json.hpp"

namespace einet {

enum class NodeType : int { Excitatory = 0, Inhibitory = 1 };

NodeType flipped(NodeType t);
char type_char(NodeType t);  // 'E' / 'I'

// The four structural classes. REI implies UEI and PEI implies CEI.
enum class NetworkClass : int { REI = 0, PEI = 1, UEI = 2, CEI = 3 };

std::string class_name(NetworkClass c);                 // "REI", ...
NetworkClass class_from_string(const std::string &s);   // accepts "rei"/"REI", ...

// A directed multigraph with two arrow-types (excitatory / inhibitory) and
// either one node-type or two node-types.
//
// exc.at(i, j) / inh.at(i, j) count arrows from node j to node i.
// When single_node_type is true the node_types labels carry no information
// and every operation masks them.
struct EINetwork {
  int n = 0;
  bool single_node_type = false;
  std::vector<NodeType> node_types;
  IntMat exc, inh;

  static EINetwork two_typed(std::vector<NodeType> types, IntMat exc, IntMat inh);
  static EINetwork single_typed(int n, IntMat exc, IntMat inh);

  void validate() const;  // throws std::invalid_argument on malformed data

  // Node type with masking applied; meaningful only when !single_node_type.
  NodeType type_of(int i) const;

  // Masked flattening (single_node_type, node_types, exc, inh) used for the
  // total order that canonical forms minimize. Frozen: catalog ids depend on it.
  std::vector<int> key() const;

  bool operator==(const EINetwork &o) const { return key() == o.key(); }
  bool operator!=(const EINetwork &o) const { return !(*this == o); }
  bool operator<(const EINetwork &o) const { return key() < o.key(); }

  long arrow_count() const { return exc.entry_sum() + inh.entry_sum(); }
};

std::set<NetworkClass> classify_network(const EINetwork &net);
bool is_connected(const EINetwork &net);
std::vector<int> valences(const EINetwork &net);

// Partition of node indices by (node type, excitatory in-count, inhibitory
// in-count); blocks sorted by smallest member.
std::vector<std::vector<int>> input_classes(const EINetwork &net);
bool is_homogeneous(const EINetwork &net);
bool is_transitive(const EINetwork &net);

// The joint involution: swap arrow-type matrices and flip every node-type
// label (label flip is a no-op under single_node_type).
EINetwork dual(const EINetwork &net);
// The two halves of the involution, useful separately for catalog symmetry.
EINetwork arrow_flip(const EINetwork &net);
EINetwork node_flip(const EINetwork &net);

// Conjugates node types and both adjacency matrices: node i is renamed
// perm[i]. Throws on non-bijective perm.
EINetwork permute(const EINetwork &net, const std::vector<int> &perm);

// The matrix family whose span defines linear admissibility:
//   two node-types:  [diag indicator of E-nodes, diag indicator of I-nodes, exc, inh]
//   single node-type: [identity, exc, inh]
std::vector<IntMat> adjacency_family(const EINetwork &net);

nlohmann::ordered_json to_json(const EINetwork &net);
EINetwork network_from_json(const nlohmann::json &j);
EINetwork load_network(const std::string &path);

// DOT export: solid edges excitatory, dashed inhibitory; E-nodes white,
// I-nodes gray fill.
std::string to_dot(const EINetwork &net, const std::string &name = "einet");

}  // namespace einet
