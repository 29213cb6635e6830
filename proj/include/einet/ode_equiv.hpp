#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "einet/enumerate.hpp"
#include "einet/network.hpp"
#include "einet/rational.hpp"

namespace einet {

// Canonical invariant deciding ODE-equivalence: the reduced-echelon basis of
// the adjacency-family span, minimized over node renumberings together with
// the node-type pattern they induce. Two networks are ODE-equivalent
// (under the chosen symmetries) iff their signatures compare equal.
//
// The span itself is blind to the excitatory/inhibitory relabelings (they
// permute the family, not the span), so modulo_duality only relaxes which
// renumberings are admissible: without it the type pattern must be matched
// exactly, with it the globally flipped pattern is matched too.
struct OdeClassSignature {
  std::vector<int> type_key;  // canonical node-type pattern; empty for single-type
  RationalMatrixSpace space;

  bool operator==(const OdeClassSignature &o) const {
    return type_key == o.type_key && space == o.space;
  }
  bool operator!=(const OdeClassSignature &o) const { return !(*this == o); }
  bool operator<(const OdeClassSignature &o) const {
    if (type_key != o.type_key) return type_key < o.type_key;
    return space < o.space;
  }
};

OdeClassSignature ode_signature(const EINetwork &net, bool modulo_duality);

// Throws std::invalid_argument when node counts or node-type structure differ.
bool ode_equivalent(const EINetwork &g, const EINetwork &h, bool modulo_duality);

struct OdeClass {
  OdeClassSignature signature;
  std::vector<EINetwork> members;  // sorted
};

struct OdePartition {
  std::vector<OdeClass> classes;  // sorted by smallest member
};

OdePartition partition_classes(const std::vector<EINetwork> &nets, bool modulo_duality);

struct SearchExhaustedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MinimalSet {
  long arrow_count = 0;            // m[G]: fewest arrows over the class
  std::vector<EINetwork> reps;     // all minimal networks, canonical, sorted
};

// Bounded exhaustive search for the minimal-arrow networks ODE-equivalent to
// `member`: every multiplicity-matrix pair with entries <= entry_bound whose
// adjacency family spans the class signature, by increasing total arrow
// count. Throws SearchExhaustedError when the bound cannot realize the span.
MinimalSet minimal_representatives(const EINetwork &member, int entry_bound,
                                   bool modulo_duality);

// Symbolic ODE-class label for connected 2-node networks, following the
// parametric case analysis of the infinite families; labels are normalized
// up to duality. Two-typed inputs get the UEI labels NH1 / NH2 / NH(b1,b2);
// single-node-type inputs must split into one excitatory-output and one
// inhibitory-output node and get the PEI labels NH1 / NH2 / NH3 / H1 / H2 /
// NHab00(a,b) / NHab10(a,b) / NHabgd(a,b,g,d).
struct ParametricClassId {
  bool single_node_type = false;
  std::string family;        // "NH1", "NH2", "NH3", "H1", "H2", "NHab00", "NHab10", "NHabgd", "NHb1b2"
  std::vector<long> params;  // coprime-reduced, duality-normalized

  bool operator==(const ParametricClassId &o) const {
    return single_node_type == o.single_node_type && family == o.family && params == o.params;
  }
  bool operator!=(const ParametricClassId &o) const { return !(*this == o); }
  std::string str() const;
};

ParametricClassId parametric_class_id(const EINetwork &net);

}  // namespace einet
