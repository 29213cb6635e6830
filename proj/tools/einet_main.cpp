#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "einet/admissible.hpp"
#include "einet/catalog.hpp"
#include "einet/enumerate.hpp"
#include "einet/network.hpp"
#include "einet/ode_equiv.hpp"
#include "einet/sim.hpp"
#include "einet/synchrony.hpp"

namespace {

using namespace einet;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<double> parse_doubles(const std::string &text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_enumerate(const std::string &cls, int nodes, int max_valence, bool no_duality,
                  const std::string &format) {
  EnumerationSpec spec;
  spec.network_class = class_from_string(cls);
  spec.n_nodes = nodes;
  spec.max_valence = max_valence;
  spec.modulo_duality = !no_duality;
  auto nets = enumerate_networks(spec);
  if (format == "json") {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto &net : nets) {
      nlohmann::ordered_json j;
      j["id"] = network_id(net);
      j["network"] = to_json(net);
      out.push_back(j);
    }
    std::cout << out.dump(2) << "\n";
  } else if (format == "dot") {
    for (const auto &net : nets) std::cout << to_dot(net, "g") << "\n";
  } else {
    for (const auto &net : nets) {
      std::cout << network_id(net) << "  classes=";
      bool first = true;
      for (auto c : classify_network(net)) {
        if (!first) std::cout << ",";
        std::cout << class_name(c);
        first = false;
      }
      std::cout << "  valences=";
      auto v = valences(net);
      for (size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << v[i];
      std::cout << "\n";
    }
    std::cout << nets.size() << " networks\n";
  }
  return 0;
}

int run_classify(const std::string &cls, int nodes, int max_valence, bool no_duality,
                 int entry_bound, const std::string &format) {
  auto doc = build_catalog(class_from_string(cls), nodes, max_valence, !no_duality,
                           entry_bound);
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << doc["class"].get<std::string>() << " catalog: " << catalog_summary(doc)
            << "\n";
  for (const auto &c : doc["ode_classes"]) {
    std::cout << "class " << c["index"] << " (" << c["size"] << " members, dim "
              << c["signature"]["dimension"] << ", min arrows " << c["min_arrows"]
              << ")\n";
    std::cout << "  members:";
    for (const auto &m : c["members"]) std::cout << " " << m.get<std::string>();
    std::cout << "\n  minimal:";
    for (const auto &r : c["minimal_representatives"])
      std::cout << " " << r["id"].get<std::string>();
    std::cout << "\n";
  }
  return 0;
}

int run_catalog(const std::string &cls_arg, const std::string &golden_dir,
                bool write_golden) {
  std::vector<NetworkClass> classes;
  if (cls_arg == "all")
    classes = {NetworkClass::REI, NetworkClass::PEI, NetworkClass::UEI, NetworkClass::CEI};
  else
    classes = {class_from_string(cls_arg)};
  int bad = 0;
  for (auto cls : classes) {
    auto doc = build_catalog(cls, 2, 2, true);
    std::string text = doc.dump(2) + "\n";
    std::string path = golden_dir + "/catalog_" + catalog_stem(cls) + ".json";
    if (write_golden) {
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot write " + path);
      out << text;
      std::cout << class_name(cls) << ": wrote " << path << " (" << catalog_summary(doc)
                << ")\n";
      continue;
    }
    std::string want;
    try {
      want = read_file(path);
    } catch (const std::exception &e) {
      std::cout << class_name(cls) << ": MISSING golden (" << e.what() << ")\n";
      ++bad;
      continue;
    }
    if (want == text) {
      std::cout << class_name(cls) << ": " << catalog_summary(doc) << " [golden OK]\n";
    } else {
      std::cout << class_name(cls) << ": " << catalog_summary(doc)
                << " [golden MISMATCH: " << path << "]\n";
      ++bad;
    }
  }
  return bad ? 1 : 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"einet: classification and verification toolkit for 2-node "
               "excitatory-inhibitory coupled-cell networks"};
  app.require_subcommand(1);

  // enumerate
  std::string cls = "rei", format = "table";
  int nodes = 2, max_valence = 2, entry_bound = 3;
  bool no_duality = false;
  auto *enum_cmd = app.add_subcommand("enumerate", "list canonical networks of a class");
  enum_cmd->add_option("--class", cls, "rei|pei|uei|cei")->required();
  enum_cmd->add_option("--nodes", nodes, "node count (default 2)");
  enum_cmd->add_option("--max-valence", max_valence, "valence bound (default 2)");
  enum_cmd->add_flag("--no-duality", no_duality, "reduce modulo renumbering only");
  enum_cmd->add_option("--format", format, "json|dot|table");

  // classify
  auto *classify_cmd = app.add_subcommand("classify", "ODE-classes of a catalog");
  classify_cmd->add_option("--class", cls, "rei|pei|uei|cei")->required();
  classify_cmd->add_option("--nodes", nodes, "node count (default 2)");
  classify_cmd->add_option("--max-valence", max_valence, "valence bound (default 2)");
  classify_cmd->add_flag("--no-duality", no_duality, "reduce modulo renumbering only");
  classify_cmd->add_option("--entry-bound", entry_bound, "minimality search bound");
  classify_cmd->add_option("--format", format, "json|table");

  // minimal
  std::string net_path, colouring_text = "";
  auto *minimal_cmd = app.add_subcommand("minimal", "minimal networks of a class");
  minimal_cmd->add_option("network", net_path, "network JSON file")->required();
  minimal_cmd->add_option("--entry-bound", entry_bound, "search bound (default 3)");
  minimal_cmd->add_flag("--no-duality", no_duality, "match modulo renumbering only");

  // colourings
  auto *col_cmd = app.add_subcommand("colourings", "balanced colourings of a network");
  col_cmd->add_option("network", net_path, "network JSON file")->required();
  col_cmd->add_option("--format", format, "json|table");

  // quotient
  auto *quot_cmd = app.add_subcommand("quotient", "quotient by a balanced colouring");
  quot_cmd->add_option("network", net_path, "network JSON file")->required();
  quot_cmd->add_option("colouring", colouring_text, "colouring, e.g. \"1,2|3\"")->required();

  // signature
  auto *sig_cmd = app.add_subcommand("signature", "admissible-ODE signature");
  sig_cmd->add_option("network", net_path, "network JSON file")->required();
  sig_cmd->add_option("--format", format, "json|text");

  // jacobian
  auto *jac_cmd = app.add_subcommand("jacobian", "symbolic Jacobian");
  jac_cmd->add_option("network", net_path, "network JSON file")->required();

  // simulate
  std::string coupling_path, x0_text = "";
  double dt = 0.01, T = 10.0, tol = 1e-8;
  int steps = 1000, trials = 50, k_dim = 1;
  std::uint64_t seed = 7;
  bool dump_trajectory = false;
  auto *sim_cmd = app.add_subcommand("simulate", "fixed-step integration");
  sim_cmd->add_option("network", net_path, "network JSON file")->required();
  sim_cmd->add_option("--coupling", coupling_path, "coupling spec JSON")->required();
  sim_cmd->add_option("--x0", x0_text, "initial state, comma separated")->required();
  sim_cmd->add_option("--dt", dt, "step size");
  sim_cmd->add_option("--steps", steps, "step count");
  sim_cmd->add_flag("--trajectory", dump_trajectory, "print every step");

  // verify-synchrony
  auto *ver_cmd = app.add_subcommand("verify-synchrony", "polydiagonal invariance check");
  ver_cmd->add_option("network", net_path, "network JSON file")->required();
  ver_cmd->add_option("--colouring", colouring_text, "colouring, e.g. \"1,2\"")->required();
  ver_cmd->add_option("--trials", trials, "random systems to integrate");
  ver_cmd->add_option("--tol", tol, "deviation tolerance");
  ver_cmd->add_option("--seed", seed, "base seed")->envname("EINET_SEED");
  ver_cmd->add_option("--T", T, "horizon");
  ver_cmd->add_option("--dt", dt, "step size");
  ver_cmd->add_option("--k", k_dim, "node state dimension");

  // catalog
  std::string golden_dir = "data/golden";
  bool write_golden = false;
  std::string catalog_class = "all";
  auto *cat_cmd = app.add_subcommand("catalog", "regenerate catalogs and diff goldens");
  cat_cmd->add_option("--class", catalog_class, "rei|pei|uei|cei|all");
  cat_cmd->add_option("--golden-dir", golden_dir, "directory of golden catalogs");
  cat_cmd->add_flag("--write-golden", write_golden, "rewrite golden files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*enum_cmd) return run_enumerate(cls, nodes, max_valence, no_duality, format);
    if (*classify_cmd)
      return run_classify(cls, nodes, max_valence, no_duality, entry_bound,
                          format == "table" ? "table" : format);
    if (*minimal_cmd) {
      EINetwork net = load_network(net_path);
      MinimalSet mins = minimal_representatives(net, entry_bound, !no_duality);
      nlohmann::ordered_json out;
      out["min_arrows"] = mins.arrow_count;
      nlohmann::ordered_json reps = nlohmann::ordered_json::array();
      for (const auto &r : mins.reps) {
        nlohmann::ordered_json rj;
        rj["id"] = network_id(r);
        rj["network"] = to_json(r);
        reps.push_back(rj);
      }
      out["representatives"] = reps;
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*col_cmd) {
      EINetwork net = load_network(net_path);
      auto cols = balanced_colourings(net);
      if (format == "json") {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto &c : cols) out.push_back(colouring_to_string(c));
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto &c : cols) std::cout << colouring_to_string(c) << "\n";
      }
      return 0;
    }
    if (*quot_cmd) {
      EINetwork net = load_network(net_path);
      Colouring c = parse_colouring(colouring_text, net.n);
      EINetwork q = quotient(net, c);
      nlohmann::ordered_json out;
      out["id"] = network_id(q);
      out["network"] = to_json(q);
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*sig_cmd) {
      EINetwork net = load_network(net_path);
      AdmissibleSignature sig = signature(net);
      if (format == "json")
        std::cout << sig.to_json().dump(2) << "\n";
      else
        std::cout << sig.render() << "\n";
      return 0;
    }
    if (*jac_cmd) {
      EINetwork net = load_network(net_path);
      std::cout << symbolic_jacobian(net).render() << "\n";
      return 0;
    }
    if (*sim_cmd) {
      EINetwork net = load_network(net_path);
      nlohmann::json cj = nlohmann::json::parse(read_file(coupling_path));
      CouplingSpec spec = coupling_spec_from_json(cj, net);
      VectorField field = assemble_vector_field(net, spec);
      std::vector<double> x0 = parse_doubles(x0_text);
      Trajectory traj = integrate(field, x0, dt, steps);
      if (dump_trajectory) {
        for (size_t s = 0; s < traj.times.size(); ++s) {
          std::cout << fmt(traj.times[s]);
          for (double v : traj.states[s]) std::cout << " " << fmt(v);
          std::cout << "\n";
        }
      } else {
        std::cout << "final t=" << fmt(traj.times.back()) << " x=";
        for (size_t i = 0; i < traj.states.back().size(); ++i)
          std::cout << (i ? "," : "") << fmt(traj.states.back()[i]);
        std::cout << "\n";
      }
      return 0;
    }
    if (*ver_cmd) {
      EINetwork net = load_network(net_path);
      Colouring c = parse_colouring(colouring_text, net.n);
      SynchronyReport report =
          check_synchrony_invariance(net, c, trials, T, dt, tol, seed, k_dim);
      std::cout << report.summary() << "\n";
      return report.balanced && !report.pass ? 1 : 0;
    }
    if (*cat_cmd) return run_catalog(catalog_class, golden_dir, write_golden);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
