#include "einet/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "einet/synchrony.hpp"

namespace einet {

namespace {

char digit36(int v) {
  if (v < 0 || v >= 36) throw std::invalid_argument("multiplicity too large for catalog id");
  return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10);
}

std::string digits(const IntMat &m) {
  std::string s;
  for (int v : m.a) s.push_back(digit36(v));
  return s;
}

}  // namespace

std::string network_id(const EINetwork &net) {
  std::ostringstream out;
  if (net.single_node_type) {
    out << "S";
  } else {
    for (int i = 0; i < net.n; ++i) out << type_char(net.type_of(i));
  }
  out << net.n << ":" << digits(net.exc) << "." << digits(net.inh);
  return out.str();
}

std::string catalog_stem(NetworkClass cls) {
  std::string s = class_name(cls);
  for (auto &c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

namespace {

nlohmann::ordered_json signature_json(const OdeClassSignature &sig) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto &row : sig.space.basis) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto &x : row) r.push_back(to_string(x));
    rows.push_back(r);
  }
  j["dimension"] = sig.space.dimension();
  j["basis"] = rows;
  return j;
}

}  // namespace

nlohmann::ordered_json build_catalog(NetworkClass cls, int n_nodes, int max_valence,
                                     bool modulo_duality, int entry_bound) {
  EnumerationSpec spec;
  spec.n_nodes = n_nodes;
  spec.network_class = cls;
  spec.max_valence = max_valence;
  spec.connected_only = true;
  spec.modulo_duality = modulo_duality;

  auto nets = enumerate_networks(spec);
  auto partition = partition_classes(nets, modulo_duality);

  std::map<std::vector<int>, int> class_of;  // network key -> class index
  for (size_t c = 0; c < partition.classes.size(); ++c)
    for (const auto &m : partition.classes[c].members) class_of[m.key()] = static_cast<int>(c);

  nlohmann::ordered_json doc;
  doc["class"] = class_name(cls);
  doc["nodes"] = n_nodes;
  doc["max_valence"] = max_valence;
  doc["modulo_duality"] = modulo_duality;
  doc["network_count"] = nets.size();
  doc["ode_class_count"] = partition.classes.size();

  nlohmann::ordered_json nets_j = nlohmann::ordered_json::array();
  for (const auto &net : nets) {
    nlohmann::ordered_json nj;
    nj["id"] = network_id(net);
    nj["network"] = to_json(net);
    nj["valences"] = valences(net);
    nlohmann::ordered_json cls_j = nlohmann::ordered_json::array();
    for (auto c : classify_network(net)) cls_j.push_back(class_name(c));
    nj["classes"] = cls_j;
    nj["homogeneous"] = is_homogeneous(net);
    nj["transitive"] = is_transitive(net);
    nj["ode_class"] = class_of.at(net.key());
    nlohmann::ordered_json cols = nlohmann::ordered_json::array();
    for (const auto &c : balanced_colourings(net)) cols.push_back(colouring_to_string(c));
    nj["balanced_colourings"] = cols;
    nets_j.push_back(nj);
  }
  doc["networks"] = nets_j;

  nlohmann::ordered_json classes_j = nlohmann::ordered_json::array();
  for (size_t c = 0; c < partition.classes.size(); ++c) {
    const auto &k = partition.classes[c];
    nlohmann::ordered_json cj;
    cj["index"] = c;
    cj["size"] = k.members.size();
    cj["signature"] = signature_json(k.signature);
    nlohmann::ordered_json members = nlohmann::ordered_json::array();
    for (const auto &m : k.members) members.push_back(network_id(m));
    cj["members"] = members;
    MinimalSet mins = minimal_representatives(k.members.front(), entry_bound, modulo_duality);
    cj["min_arrows"] = mins.arrow_count;
    nlohmann::ordered_json reps = nlohmann::ordered_json::array();
    for (const auto &r : mins.reps) {
      nlohmann::ordered_json rj;
      rj["id"] = network_id(r);
      rj["network"] = to_json(r);
      reps.push_back(rj);
    }
    cj["minimal_representatives"] = reps;
    classes_j.push_back(cj);
  }
  doc["ode_classes"] = classes_j;
  return doc;
}

std::string catalog_summary(const nlohmann::ordered_json &catalog) {
  std::ostringstream out;
  out << catalog["network_count"].get<size_t>() << " networks, "
      << catalog["ode_class_count"].get<size_t>() << " ODE-classes (";
  const auto &classes = catalog["ode_classes"];
  for (size_t i = 0; i < classes.size(); ++i) {
    if (i) out << " + ";
    out << classes[i]["size"].get<size_t>();
  }
  out << ")";
  return out.str();
}

}  // namespace einet
