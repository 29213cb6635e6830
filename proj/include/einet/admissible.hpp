#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "einet/network.hpp"

namespace einet {

// ---------------------------------------------------------------------------
// Formal admissible-ODE signatures
// ---------------------------------------------------------------------------

// One symmetric argument group: (source node, multiplicity) pairs, ascending
// by source. Argument order inside a group is canonicalized this way; the
// group is symmetric so the order carries no meaning.
struct ArgGroup {
  std::vector<std::pair<int, int>> sources;
  int total() const;
};

struct NodeSignature {
  int node = 0;
  int input_class = 0;
  std::string internal_sup;  // "+" / "-" for typed nodes, "" for single-type
  ArgGroup exc, inh;
};

// Rendering convention (frozen; golden files depend on it):
//   x<i>' = <fn>(<internal>; <exc group>; <inh group>)
// Input variables carry the arrow-type superscript (+ excitatory,
// - inhibitory); the internal variable carries the node-type superscript, or
// none for single-node-type networks. Groups with two or more arguments are
// braced, e.g. {x1+,x1+}; empty groups are omitted. Nodes in one input class
// share the function name (f, g, ... in node order).
struct AdmissibleSignature {
  std::vector<NodeSignature> nodes;
  std::vector<std::string> fn_names;  // per input class

  std::vector<std::string> render_lines() const;
  std::string render() const;  // lines joined with '\n'
  nlohmann::ordered_json to_json() const;
};

AdmissibleSignature signature(const EINetwork &net);

// ---------------------------------------------------------------------------
// Symbolic Jacobian
// ---------------------------------------------------------------------------

// A formal partial-derivative symbol. kind: 0 internal, 1 excitatory group,
// 2 inhibitory group; source is the tail node for input symbols (-1 for
// internal). Symbols are shared across nodes of one input class.
struct JacobianTerm {
  int cls = 0;
  int kind = 0;
  int source = -1;
  int weight = 0;
  std::string symbol;
};

struct SymbolicJacobian {
  int n = 0;
  std::vector<std::vector<std::vector<JacobianTerm>>> entries;  // [row][col]

  std::string entry_string(int i, int j) const;
  std::string render() const;  // "[[...],[...]]"
};

SymbolicJacobian symbolic_jacobian(const EINetwork &net);

// ---------------------------------------------------------------------------
// Coupling specifications and executable vector fields
// ---------------------------------------------------------------------------

// Evaluator for one input class. `own` is the node's k-dim state; exc/inh
// hold one k-dim pointer per input slot (multiset arguments already expanded,
// canonical source order). Must be symmetric within each slot list and
// stateless; statelessness is required for concurrent use.
using CouplingFn = std::function<void(const double *own,
                                      const std::vector<const double *> &exc_args,
                                      const std::vector<const double *> &inh_args,
                                      int k, double *out)>;

enum class CouplingFamily { Linear, Sigmoid, Hill, Custom };

struct ClassCoupling {
  CouplingFamily family = CouplingFamily::Linear;
  double internal_coeff = -1.0;  // internal term: internal_coeff * x
  double w_exc = 0.0;
  double w_inh = 0.0;
  double hill_K = 1.0;
  double hill_n = 2.0;
  CouplingFn custom;
};

struct CouplingSpec {
  int k = 1;  // node state dimension
  std::vector<ClassCoupling> per_class;
};

// JSON shape: {"k": 1, "class_0": {"family": "linear", "internal": "-x",
// "weights": {"exc": 1.0, "inh": -1.0}, "K": 1.0, "n": 2.0}, "class_1": ...}
CouplingSpec coupling_spec_from_json(const nlohmann::json &j, const EINetwork &net);

struct VectorField {
  int dim = 0;
  std::function<void(const double *x, double *dx)> eval;

  std::vector<double> operator()(const std::vector<double> &x) const;
};

// Builds the admissible vector field x' = f_class(i)(x_i; exc args; inh
// args). Validates class count, arity, and (by randomized argument swaps)
// the group symmetry of custom evaluators.
VectorField assemble_vector_field(const EINetwork &net, const CouplingSpec &spec);

// Measured partial of node `node`'s component with respect to one input slot
// (kind 1 = excitatory, 2 = inhibitory) with the given source, or the
// internal variable (kind 0), as a k x k block, by central differences at
// `state`. This is how symbolic-Jacobian symbols are instantiated.
std::vector<std::vector<double>> measured_partial(const EINetwork &net,
                                                  const CouplingSpec &spec,
                                                  const std::vector<double> &state,
                                                  int node, int kind, int source,
                                                  double h = 1e-5);

// Random admissible coupling spec: linear part plus bounded random
// polynomial perturbations built from per-group power sums, so group
// symmetry holds by construction. Deterministic for a given rng state.
CouplingSpec random_admissible_spec(const EINetwork &net, std::mt19937_64 &rng, int k = 1);

enum class ArrowSign { Excitatory, Inhibitory, Neutral };

struct ArrowSignReport {
  int head = 0;
  int source = 0;
  bool excitatory_type = false;  // the arrow's structural type
  int multiplicity = 0;
  double derivative = 0.0;  // trace of the measured k x k block
  ArrowSign sign = ArrowSign::Neutral;
};

// Sign of each input arrow's coupling derivative at `state`; |d| below
// neutral_tol reports Neutral. Throws on non-finite values.
std::vector<ArrowSignReport> classify_arrow_signs(const EINetwork &net,
                                                  const CouplingSpec &spec,
                                                  const std::vector<double> &state,
                                                  double h = 1e-5,
                                                  double neutral_tol = 1e-8);

}  // namespace einet
