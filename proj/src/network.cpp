#include "einet/network.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace einet {

NodeType flipped(NodeType t) {
  return t == NodeType::Excitatory ? NodeType::Inhibitory : NodeType::Excitatory;
}

char type_char(NodeType t) { return t == NodeType::Excitatory ? 'E' : 'I'; }

std::string class_name(NetworkClass c) {
  switch (c) {
    case NetworkClass::REI: return "REI";
    case NetworkClass::PEI: return "PEI";
    case NetworkClass::UEI: return "UEI";
    case NetworkClass::CEI: return "CEI";
  }
  return "?";
}

NetworkClass class_from_string(const std::string &s) {
  std::string u;
  for (char c : s) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (u == "REI") return NetworkClass::REI;
  if (u == "PEI") return NetworkClass::PEI;
  if (u == "UEI") return NetworkClass::UEI;
  if (u == "CEI") return NetworkClass::CEI;
  throw std::invalid_argument("unknown network class: " + s);
}

EINetwork EINetwork::two_typed(std::vector<NodeType> types, IntMat exc, IntMat inh) {
  EINetwork net;
  net.n = static_cast<int>(types.size());
  net.single_node_type = false;
  net.node_types = std::move(types);
  net.exc = std::move(exc);
  net.inh = std::move(inh);
  net.validate();
  return net;
}

EINetwork EINetwork::single_typed(int n, IntMat exc, IntMat inh) {
  EINetwork net;
  net.n = n;
  net.single_node_type = true;
  net.node_types.assign(n, NodeType::Excitatory);
  net.exc = std::move(exc);
  net.inh = std::move(inh);
  net.validate();
  return net;
}

void EINetwork::validate() const {
  if (n <= 0) throw std::invalid_argument("network must have at least one node");
  if (static_cast<int>(node_types.size()) != n)
    throw std::invalid_argument("node_types length does not match n");
  if (exc.n != n || inh.n != n)
    throw std::invalid_argument("adjacency matrix dimensions do not match n");
  for (int x : exc.a)
    if (x < 0) throw std::invalid_argument("negative excitatory multiplicity");
  for (int x : inh.a)
    if (x < 0) throw std::invalid_argument("negative inhibitory multiplicity");
}

NodeType EINetwork::type_of(int i) const {
  return single_node_type ? NodeType::Excitatory : node_types[i];
}

std::vector<int> EINetwork::key() const {
  std::vector<int> k;
  k.reserve(2 + n + 2 * n * n);
  k.push_back(single_node_type ? 1 : 0);
  k.push_back(n);
  for (int i = 0; i < n; ++i)
    k.push_back(single_node_type ? 0 : static_cast<int>(node_types[i]));
  k.insert(k.end(), exc.a.begin(), exc.a.end());
  k.insert(k.end(), inh.a.begin(), inh.a.end());
  return k;
}

namespace {

bool has_both_types(const EINetwork &net) {
  if (net.single_node_type) return false;
  bool e = false, i = false;
  for (auto t : net.node_types) (t == NodeType::Excitatory ? e : i) = true;
  return e && i;
}

// Tail condition of the restricted class: arrows of a type may only leave
// nodes of that type.
bool rei_tails_ok(const EINetwork &net) {
  for (int j = 0; j < net.n; ++j) {
    if (net.exc.col_sum(j) > 0 && net.node_types[j] != NodeType::Excitatory) return false;
    if (net.inh.col_sum(j) > 0 && net.node_types[j] != NodeType::Inhibitory) return false;
  }
  return true;
}

}  // namespace

std::set<NetworkClass> classify_network(const EINetwork &net) {
  net.validate();
  std::set<NetworkClass> out;
  if (net.single_node_type) {
    out.insert(NetworkClass::CEI);
    bool pei = true;
    for (int j = 0; j < net.n; ++j)
      if (net.exc.col_sum(j) > 0 && net.inh.col_sum(j) > 0) pei = false;
    if (pei) out.insert(NetworkClass::PEI);
  } else if (has_both_types(net)) {
    out.insert(NetworkClass::UEI);
    if (rei_tails_ok(net)) out.insert(NetworkClass::REI);
  }
  return out;
}

bool is_connected(const EINetwork &net) {
  std::vector<int> stack{0};
  std::vector<bool> seen(net.n, false);
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < net.n; ++w) {
      if (seen[w]) continue;
      if (net.exc.at(v, w) + net.inh.at(v, w) + net.exc.at(w, v) + net.inh.at(w, v) > 0) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<int> valences(const EINetwork &net) {
  std::vector<int> v(net.n);
  for (int i = 0; i < net.n; ++i) v[i] = net.exc.row_sum(i) + net.inh.row_sum(i);
  return v;
}

std::vector<std::vector<int>> input_classes(const EINetwork &net) {
  std::map<std::tuple<int, int, int>, std::vector<int>> groups;
  for (int i = 0; i < net.n; ++i) {
    int t = net.single_node_type ? 0 : static_cast<int>(net.node_types[i]);
    groups[{t, net.exc.row_sum(i), net.inh.row_sum(i)}].push_back(i);
  }
  std::vector<std::vector<int>> out;
  for (auto &[k, block] : groups) out.push_back(block);
  std::sort(out.begin(), out.end(),
            [](const auto &a, const auto &b) { return a.front() < b.front(); });
  return out;
}

bool is_homogeneous(const EINetwork &net) { return input_classes(net).size() == 1; }

bool is_transitive(const EINetwork &net) {
  // Closed arrow-path through every node = strong connectivity of the
  // combined digraph. A single node needs a self-loop.
  if (net.n == 1) return net.exc.at(0, 0) + net.inh.at(0, 0) > 0;
  auto reach = [&](bool forward) {
    std::vector<bool> seen(net.n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < net.n; ++w) {
        if (seen[w]) continue;
        // arrow v -> w is entry (w, v)
        int arrows = forward ? net.exc.at(w, v) + net.inh.at(w, v)
                             : net.exc.at(v, w) + net.inh.at(v, w);
        if (arrows > 0) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  return reach(true) && reach(false);
}

EINetwork dual(const EINetwork &net) {
  EINetwork out = net;
  std::swap(out.exc, out.inh);
  if (!out.single_node_type)
    for (auto &t : out.node_types) t = flipped(t);
  return out;
}

EINetwork arrow_flip(const EINetwork &net) {
  EINetwork out = net;
  std::swap(out.exc, out.inh);
  return out;
}

EINetwork node_flip(const EINetwork &net) {
  EINetwork out = net;
  if (!out.single_node_type)
    for (auto &t : out.node_types) t = flipped(t);
  return out;
}

EINetwork permute(const EINetwork &net, const std::vector<int> &perm) {
  if (static_cast<int>(perm.size()) != net.n)
    throw std::invalid_argument("permutation length does not match node count");
  std::vector<bool> hit(net.n, false);
  for (int p : perm) {
    if (p < 0 || p >= net.n || hit[p])
      throw std::invalid_argument("permute: not a bijection on node indices");
    hit[p] = true;
  }
  EINetwork out = net;
  for (int i = 0; i < net.n; ++i) out.node_types[perm[i]] = net.node_types[i];
  out.exc = net.exc.conjugate(perm);
  out.inh = net.inh.conjugate(perm);
  return out;
}

std::vector<IntMat> adjacency_family(const EINetwork &net) {
  std::vector<IntMat> fam;
  if (net.single_node_type) {
    fam.push_back(IntMat::identity(net.n));
  } else {
    IntMat de(net.n), di(net.n);
    for (int i = 0; i < net.n; ++i) {
      if (net.node_types[i] == NodeType::Excitatory)
        de.at(i, i) = 1;
      else
        di.at(i, i) = 1;
    }
    fam.push_back(de);
    fam.push_back(di);
  }
  fam.push_back(net.exc);
  fam.push_back(net.inh);
  return fam;
}

namespace {

nlohmann::ordered_json matrix_json(const IntMat &m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.n; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < m.n; ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

IntMat matrix_from_json(const nlohmann::json &j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw std::invalid_argument("adjacency matrix must be an n x n array");
  IntMat m(n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != n)
      throw std::invalid_argument("adjacency matrix must be an n x n array");
    for (int jj = 0; jj < n; ++jj) m.at(i, jj) = j[i][jj].get<int>();
  }
  return m;
}

}  // namespace

nlohmann::ordered_json to_json(const EINetwork &net) {
  nlohmann::ordered_json j;
  j["n"] = net.n;
  j["single_node_type"] = net.single_node_type;
  nlohmann::ordered_json types = nlohmann::ordered_json::array();
  for (int i = 0; i < net.n; ++i) types.push_back(std::string(1, type_char(net.type_of(i))));
  j["node_types"] = types;
  j["exc"] = matrix_json(net.exc);
  j["inh"] = matrix_json(net.inh);
  return j;
}

EINetwork network_from_json(const nlohmann::json &j) {
  int n = j.at("n").get<int>();
  bool single = j.at("single_node_type").get<bool>();
  std::vector<NodeType> types;
  for (const auto &t : j.at("node_types")) {
    std::string s = t.get<std::string>();
    if (s == "E")
      types.push_back(NodeType::Excitatory);
    else if (s == "I")
      types.push_back(NodeType::Inhibitory);
    else
      throw std::invalid_argument("node type must be \"E\" or \"I\"");
  }
  IntMat exc = matrix_from_json(j.at("exc"), n);
  IntMat inh = matrix_from_json(j.at("inh"), n);
  EINetwork net;
  net.n = n;
  net.single_node_type = single;
  net.node_types = std::move(types);
  net.exc = std::move(exc);
  net.inh = std::move(inh);
  net.validate();
  return net;
}

EINetwork load_network(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open network file: " + path);
  nlohmann::json j;
  in >> j;
  return network_from_json(j);
}

std::string to_dot(const EINetwork &net, const std::string &name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  node [shape=circle, style=filled];\n";
  for (int i = 0; i < net.n; ++i) {
    const char *fill =
        (!net.single_node_type && net.type_of(i) == NodeType::Inhibitory) ? "gray" : "white";
    out << "  n" << (i + 1) << " [fillcolor=" << fill << "];\n";
  }
  for (int i = 0; i < net.n; ++i)
    for (int j = 0; j < net.n; ++j) {
      for (int k = 0; k < net.exc.at(i, j); ++k)
        out << "  n" << (j + 1) << " -> n" << (i + 1) << ";\n";
      for (int k = 0; k < net.inh.at(i, j); ++k)
        out << "  n" << (j + 1) << " -> n" << (i + 1) << " [style=dashed];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace einet
