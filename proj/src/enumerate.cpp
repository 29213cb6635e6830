#include "einet/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace einet {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<EINetwork> symmetry_orbit(const EINetwork &net, bool modulo_duality) {
  std::vector<EINetwork> flips{net};
  if (modulo_duality) {
    flips.push_back(arrow_flip(net));
    if (!net.single_node_type) {
      flips.push_back(node_flip(net));
      flips.push_back(node_flip(arrow_flip(net)));
    }
  }
  std::set<EINetwork> orbit;
  for (const auto &perm : all_permutations(net.n))
    for (const auto &f : flips) orbit.insert(permute(f, perm));
  return {orbit.begin(), orbit.end()};
}

EINetwork canonical_form(const EINetwork &net, bool modulo_duality) {
  auto orbit = symmetry_orbit(net, modulo_duality);
  return orbit.front();  // set iteration order is key order
}

EINetwork class_canonical_form(const EINetwork &net, NetworkClass cls,
                               bool modulo_duality) {
  for (const auto &o : symmetry_orbit(net, modulo_duality))
    if (in_enumeration_universe(o, cls)) return o;
  throw std::invalid_argument("no orbit element lies in the requested class");
}

namespace {

// Output sets: nodes with at least one outgoing arrow of the given type.
std::vector<bool> outputs(const IntMat &m) {
  std::vector<bool> out(m.n, false);
  for (int j = 0; j < m.n; ++j) out[j] = m.col_sum(j) > 0;
  return out;
}

bool both_types_present(const EINetwork &net) {
  if (net.single_node_type) return false;
  bool e = false, i = false;
  for (auto t : net.node_types) (t == NodeType::Excitatory ? e : i) = true;
  return e && i;
}

bool rei_tails_ok(const EINetwork &net) {
  for (int j = 0; j < net.n; ++j) {
    if (net.exc.col_sum(j) > 0 && net.node_types[j] != NodeType::Excitatory) return false;
    if (net.inh.col_sum(j) > 0 && net.node_types[j] != NodeType::Inhibitory) return false;
  }
  return true;
}

}  // namespace

bool in_enumeration_universe(const EINetwork &net, NetworkClass cls) {
  switch (cls) {
    case NetworkClass::REI:
      return !net.single_node_type && both_types_present(net) && rei_tails_ok(net);
    case NetworkClass::UEI:
      return !net.single_node_type && both_types_present(net);
    case NetworkClass::PEI: {
      if (!net.single_node_type) return false;
      auto oe = outputs(net.exc), oi = outputs(net.inh);
      int n_e = 0, n_i = 0;
      for (int j = 0; j < net.n; ++j) {
        if (oe[j] && oi[j]) return false;  // a node outputs both arrow-types
        n_e += oe[j] ? 1 : 0;
        n_i += oi[j] ? 1 : 0;
      }
      // Must extend to a node typing with both types present.
      int free_nodes = net.n - n_e - n_i;
      int needed = (n_e == 0 ? 1 : 0) + (n_i == 0 ? 1 : 0);
      return free_nodes >= needed;
    }
    case NetworkClass::CEI:
      return net.single_node_type;
  }
  return false;
}

namespace {

// All multiplicity rows (exc row | inh row) of length 2n with sum <= bound.
void gen_rows(int len, int bound, std::vector<int> &cur,
              std::vector<std::vector<int>> &out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= bound; ++v) {
    cur.push_back(v);
    gen_rows(len, bound - v, cur, out);
    cur.pop_back();
  }
}

void gen_matrices(int n, int node, const std::vector<std::vector<int>> &rows,
                  IntMat &exc, IntMat &inh, const std::function<void()> &emit) {
  if (node == n) {
    emit();
    return;
  }
  for (const auto &row : rows) {
    for (int j = 0; j < n; ++j) {
      exc.at(node, j) = row[j];
      inh.at(node, j) = row[n + j];
    }
    gen_matrices(n, node + 1, rows, exc, inh, emit);
  }
}

std::vector<std::vector<NodeType>> type_patterns(int n, bool single) {
  std::vector<std::vector<NodeType>> out;
  if (single) {
    out.push_back(std::vector<NodeType>(n, NodeType::Excitatory));
    return out;
  }
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (mask == 0 || mask == (1 << n) - 1) continue;  // both types must occur
    std::vector<NodeType> t(n);
    for (int i = 0; i < n; ++i)
      t[i] = (mask >> i) & 1 ? NodeType::Inhibitory : NodeType::Excitatory;
    out.push_back(t);
  }
  return out;
}

}  // namespace

std::vector<EINetwork> enumerate_raw(const EnumerationSpec &spec) {
  if (spec.n_nodes < 1) throw std::invalid_argument("enumeration needs at least one node");
  if (spec.max_valence < 0) throw std::invalid_argument("max_valence must be nonnegative");
  if (spec.n_nodes > 4)
    throw std::invalid_argument("exhaustive enumeration is limited to 4 nodes");

  int n = spec.n_nodes;
  bool single = spec.network_class == NetworkClass::PEI ||
                spec.network_class == NetworkClass::CEI;

  std::vector<std::vector<int>> rows;
  {
    std::vector<int> cur;
    gen_rows(2 * n, spec.max_valence, cur, rows);
  }

  std::vector<EINetwork> out;
  for (const auto &types : type_patterns(n, single)) {
    EINetwork net;
    net.n = n;
    net.single_node_type = single;
    net.node_types = types;
    net.exc = IntMat(n);
    net.inh = IntMat(n);
    gen_matrices(n, 0, rows, net.exc, net.inh, [&]() {
      if (!in_enumeration_universe(net, spec.network_class)) return;
      if (spec.connected_only && !is_connected(net)) return;
      out.push_back(net);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EINetwork> enumerate_networks(const EnumerationSpec &spec) {
  std::set<EINetwork> reps;
  for (const auto &net : enumerate_raw(spec))
    reps.insert(class_canonical_form(net, spec.network_class, spec.modulo_duality));
  return {reps.begin(), reps.end()};
}

}  // namespace einet
