#include "einet/admissible.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "einet/synchrony.hpp"

namespace einet {

int ArgGroup::total() const {
  int t = 0;
  for (auto &[s, m] : sources) t += m;
  return t;
}

namespace {

std::vector<int> class_index_of(const EINetwork &net) {
  auto classes = input_classes(net);
  std::vector<int> cls(net.n, 0);
  for (size_t k = 0; k < classes.size(); ++k)
    for (int v : classes[k]) cls[v] = static_cast<int>(k);
  return cls;
}

std::string fn_name(int cls) {
  static const char *names[] = {"f", "g", "h"};
  if (cls < 3) return names[cls];
  return "f" + std::to_string(cls + 1);
}

ArgGroup row_group(const IntMat &m, int i) {
  ArgGroup g;
  for (int j = 0; j < m.n; ++j)
    if (m.at(i, j) > 0) g.sources.push_back({j, m.at(i, j)});
  return g;
}

std::string var(int node, const std::string &sup) {
  return "x" + std::to_string(node + 1) + sup;
}

std::string group_text(const ArgGroup &g, const std::string &sup) {
  std::vector<std::string> parts;
  for (auto &[src, mult] : g.sources)
    for (int c = 0; c < mult; ++c) parts.push_back(var(src, sup));
  std::ostringstream out;
  if (parts.size() > 1) out << "{";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ",";
    out << parts[i];
  }
  if (parts.size() > 1) out << "}";
  return out.str();
}

}  // namespace

AdmissibleSignature signature(const EINetwork &net) {
  auto cls = class_index_of(net);
  AdmissibleSignature sig;
  int n_classes = *std::max_element(cls.begin(), cls.end()) + 1;
  for (int c = 0; c < n_classes; ++c) sig.fn_names.push_back(fn_name(c));
  for (int i = 0; i < net.n; ++i) {
    NodeSignature ns;
    ns.node = i;
    ns.input_class = cls[i];
    if (!net.single_node_type)
      ns.internal_sup = net.type_of(i) == NodeType::Excitatory ? "+" : "-";
    ns.exc = row_group(net.exc, i);
    ns.inh = row_group(net.inh, i);
    sig.nodes.push_back(std::move(ns));
  }
  return sig;
}

std::vector<std::string> AdmissibleSignature::render_lines() const {
  std::vector<std::string> lines;
  for (const auto &ns : nodes) {
    std::ostringstream out;
    out << "x" << ns.node + 1 << "' = " << fn_names[ns.input_class] << "("
        << var(ns.node, ns.internal_sup);
    if (ns.exc.total() > 0) out << "; " << group_text(ns.exc, "+");
    if (ns.inh.total() > 0) out << "; " << group_text(ns.inh, "-");
    out << ")";
    lines.push_back(out.str());
  }
  return lines;
}

std::string AdmissibleSignature::render() const {
  std::ostringstream out;
  auto lines = render_lines();
  for (size_t i = 0; i < lines.size(); ++i) {
    if (i) out << "\n";
    out << lines[i];
  }
  return out.str();
}

nlohmann::ordered_json AdmissibleSignature::to_json() const {
  nlohmann::ordered_json j;
  j["functions"] = fn_names;
  nlohmann::ordered_json nodes_j = nlohmann::ordered_json::array();
  auto lines = render_lines();
  for (const auto &ns : nodes) {
    nlohmann::ordered_json nj;
    nj["node"] = ns.node + 1;
    nj["function"] = fn_names[ns.input_class];
    nj["internal"] = var(ns.node, ns.internal_sup);
    nlohmann::ordered_json exc = nlohmann::ordered_json::array();
    for (auto &[s, m] : ns.exc.sources)
      for (int c = 0; c < m; ++c) exc.push_back(var(s, "+"));
    nlohmann::ordered_json inh = nlohmann::ordered_json::array();
    for (auto &[s, m] : ns.inh.sources)
      for (int c = 0; c < m; ++c) inh.push_back(var(s, "-"));
    nj["exc"] = exc;
    nj["inh"] = inh;
    nj["rendered"] = lines[ns.node];
    nodes_j.push_back(nj);
  }
  j["nodes"] = nodes_j;
  return j;
}

namespace {

// Symbol naming. Two-node networks follow the hand notation: classes get the
// letter triples (a, b, c) and (d, e, f) for internal / excitatory /
// inhibitory partials. When every argument group draws on a single source
// the subscript is the within-group index (always 1); otherwise subscripts
// name the source node. Larger networks get generated names.
struct SymbolNamer {
  int n;
  bool per_group_ordinal;

  std::string name(int cls, int kind, int source) const {
    if (n == 2) {
      static const char *letters[2][3] = {{"a", "b", "c"}, {"d", "e", "f"}};
      std::string base = letters[cls % 2][kind];
      if (kind == 0) return per_group_ordinal ? base + "1" : base;
      return base + std::to_string(per_group_ordinal ? 1 : source + 1);
    }
    std::string base = kind == 0 ? "s" : (kind == 1 ? "e" : "i");
    std::string out = base + std::to_string(cls);
    if (kind != 0) out += "_" + std::to_string(source + 1);
    return out;
  }
};

}  // namespace

SymbolicJacobian symbolic_jacobian(const EINetwork &net) {
  auto cls = class_index_of(net);
  bool single_source_groups = true;
  for (int i = 0; i < net.n; ++i) {
    if (row_group(net.exc, i).sources.size() > 1) single_source_groups = false;
    if (row_group(net.inh, i).sources.size() > 1) single_source_groups = false;
  }
  SymbolNamer namer{net.n, single_source_groups};

  SymbolicJacobian jac;
  jac.n = net.n;
  jac.entries.assign(net.n, std::vector<std::vector<JacobianTerm>>(net.n));
  for (int i = 0; i < net.n; ++i) {
    for (int j = 0; j < net.n; ++j) {
      auto &terms = jac.entries[i][j];
      if (i == j)
        terms.push_back({cls[i], 0, -1, 1, namer.name(cls[i], 0, -1)});
      if (net.exc.at(i, j) > 0)
        terms.push_back({cls[i], 1, j, net.exc.at(i, j), namer.name(cls[i], 1, j)});
      if (net.inh.at(i, j) > 0)
        terms.push_back({cls[i], 2, j, net.inh.at(i, j), namer.name(cls[i], 2, j)});
    }
  }
  return jac;
}

std::string SymbolicJacobian::entry_string(int i, int j) const {
  const auto &terms = entries[i][j];
  if (terms.empty()) return "0";
  std::ostringstream out;
  for (size_t t = 0; t < terms.size(); ++t) {
    if (t) out << "+";
    if (terms[t].weight != 1) out << terms[t].weight << "*";
    out << terms[t].symbol;
  }
  return out.str();
}

std::string SymbolicJacobian::render() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < n; ++i) {
    if (i) out << ",";
    out << "[";
    for (int j = 0; j < n; ++j) {
      if (j) out << ", ";
      out << entry_string(i, j);
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

// ---------------------------------------------------------------------------
// Couplings
// ---------------------------------------------------------------------------

namespace {

double parse_internal(const nlohmann::json &j) {
  if (j.is_number()) return j.get<double>();
  std::string s = j.get<std::string>();
  if (s == "0") return 0.0;
  size_t xpos = s.find('x');
  if (xpos == std::string::npos)
    throw std::invalid_argument("internal term must be a number or c*x form, got: " + s);
  std::string coeff = s.substr(0, xpos);
  if (coeff.empty() || coeff == "+") return 1.0;
  if (coeff == "-") return -1.0;
  if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
  return std::stod(coeff);
}

CouplingFamily family_from_string(const std::string &s) {
  if (s == "linear") return CouplingFamily::Linear;
  if (s == "sigmoid") return CouplingFamily::Sigmoid;
  if (s == "hill") return CouplingFamily::Hill;
  throw std::invalid_argument("unknown coupling family: " + s);
}

double logistic(double u) { return 1.0 / (1.0 + std::exp(-u)); }

void eval_builtin(const ClassCoupling &cc, const double *own,
                  const std::vector<const double *> &exc,
                  const std::vector<const double *> &inh, int k, double *out) {
  auto shape = [&](double u) {
    switch (cc.family) {
      case CouplingFamily::Linear: return u;
      case CouplingFamily::Sigmoid: return logistic(u);
      case CouplingFamily::Hill: {
        double v = std::max(u, 0.0);
        double p = std::pow(v, cc.hill_n);
        return p / (std::pow(cc.hill_K, cc.hill_n) + p);
      }
      case CouplingFamily::Custom: break;
    }
    return u;
  };
  for (int c = 0; c < k; ++c) {
    double acc = cc.internal_coeff * own[c];
    for (const double *e : exc) acc += cc.w_exc * shape(e[c]);
    for (const double *i : inh) acc += cc.w_inh * shape(i[c]);
    out[c] = acc;
  }
}

struct NodeArgs {
  std::vector<int> exc_sources;  // one entry per slot, ascending source
  std::vector<int> inh_sources;
};

std::vector<NodeArgs> arg_layout(const EINetwork &net) {
  std::vector<NodeArgs> layout(net.n);
  for (int i = 0; i < net.n; ++i) {
    for (int j = 0; j < net.n; ++j)
      for (int c = 0; c < net.exc.at(i, j); ++c) layout[i].exc_sources.push_back(j);
    for (int j = 0; j < net.n; ++j)
      for (int c = 0; c < net.inh.at(i, j); ++c) layout[i].inh_sources.push_back(j);
  }
  return layout;
}

void eval_class(const ClassCoupling &cc, const double *own,
                const std::vector<const double *> &exc,
                const std::vector<const double *> &inh, int k, double *out) {
  if (cc.family == CouplingFamily::Custom) {
    if (!cc.custom) throw std::invalid_argument("custom coupling without an evaluator");
    cc.custom(own, exc, inh, k, out);
  } else {
    eval_builtin(cc, own, exc, inh, k, out);
  }
}

// Randomized check that a custom evaluator is symmetric within each slot
// list, at the arities this network actually uses.
void validate_symmetry(const EINetwork &net, const CouplingSpec &spec,
                       const std::vector<NodeArgs> &layout,
                       const std::vector<int> &cls) {
  std::mt19937_64 rng(0x5eed5eed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  int k = spec.k;
  for (int i = 0; i < net.n; ++i) {
    const auto &cc = spec.per_class[cls[i]];
    if (cc.family != CouplingFamily::Custom) continue;
    size_t ne = layout[i].exc_sources.size(), ni = layout[i].inh_sources.size();
    if (ne < 2 && ni < 2) continue;
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<double> own(k), out1(k), out2(k);
      std::vector<std::vector<double>> ebuf(ne, std::vector<double>(k)),
          ibuf(ni, std::vector<double>(k));
      for (auto &v : own) v = dist(rng);
      for (auto &b : ebuf)
        for (auto &v : b) v = dist(rng);
      for (auto &b : ibuf)
        for (auto &v : b) v = dist(rng);
      auto ptrs = [](std::vector<std::vector<double>> &bufs) {
        std::vector<const double *> p;
        for (auto &b : bufs) p.push_back(b.data());
        return p;
      };
      auto ep = ptrs(ebuf), ip = ptrs(ibuf);
      cc.custom(own.data(), ep, ip, k, out1.data());
      auto swap_two = [&](std::vector<const double *> &p) {
        if (p.size() < 2) return;
        std::uniform_int_distribution<size_t> pick(0, p.size() - 1);
        size_t a = pick(rng), b = pick(rng);
        std::swap(p[a], p[b]);
      };
      swap_two(ep);
      swap_two(ip);
      cc.custom(own.data(), ep, ip, k, out2.data());
      for (int c = 0; c < k; ++c)
        if (std::abs(out1[c] - out2[c]) > 1e-9 * (1.0 + std::abs(out1[c])))
          throw std::invalid_argument(
              "coupling function is not symmetric within its argument groups");
    }
  }
}

}  // namespace

CouplingSpec coupling_spec_from_json(const nlohmann::json &j, const EINetwork &net) {
  CouplingSpec spec;
  if (j.contains("k")) spec.k = j.at("k").get<int>();
  size_t n_classes = input_classes(net).size();
  for (size_t c = 0; c < n_classes; ++c) {
    std::string key = "class_" + std::to_string(c);
    if (!j.contains(key))
      throw std::invalid_argument("coupling spec is missing " + key);
    const auto &cj = j.at(key);
    ClassCoupling cc;
    cc.family = family_from_string(cj.value("family", std::string("linear")));
    if (cj.contains("internal")) cc.internal_coeff = parse_internal(cj.at("internal"));
    if (cj.contains("weights")) {
      cc.w_exc = cj.at("weights").value("exc", 0.0);
      cc.w_inh = cj.at("weights").value("inh", 0.0);
    }
    cc.hill_K = cj.value("K", 1.0);
    cc.hill_n = cj.value("n", 2.0);
    spec.per_class.push_back(std::move(cc));
  }
  return spec;
}

std::vector<double> VectorField::operator()(const std::vector<double> &x) const {
  if (static_cast<int>(x.size()) != dim)
    throw std::invalid_argument("state dimension mismatch");
  std::vector<double> dx(dim);
  eval(x.data(), dx.data());
  return dx;
}

VectorField assemble_vector_field(const EINetwork &net, const CouplingSpec &spec) {
  auto cls = class_index_of(net);
  size_t n_classes = input_classes(net).size();
  if (spec.per_class.size() != n_classes)
    throw std::invalid_argument("coupling spec must provide one coupling per input class");
  if (spec.k < 1) throw std::invalid_argument("state dimension k must be positive");
  auto layout = arg_layout(net);
  validate_symmetry(net, spec, layout, cls);

  int n = net.n, k = spec.k;
  VectorField field;
  field.dim = n * k;
  field.eval = [net, spec, cls, layout, n, k](const double *x, double *dx) {
    std::vector<const double *> exc, inh;
    for (int i = 0; i < n; ++i) {
      exc.clear();
      inh.clear();
      for (int s : layout[i].exc_sources) exc.push_back(x + static_cast<size_t>(s) * k);
      for (int s : layout[i].inh_sources) inh.push_back(x + static_cast<size_t>(s) * k);
      eval_class(spec.per_class[cls[i]], x + static_cast<size_t>(i) * k, exc, inh, k,
                 dx + static_cast<size_t>(i) * k);
    }
  };
  return field;
}

std::vector<std::vector<double>> measured_partial(const EINetwork &net,
                                                  const CouplingSpec &spec,
                                                  const std::vector<double> &state,
                                                  int node, int kind, int source,
                                                  double h) {
  auto cls = class_index_of(net);
  auto layout = arg_layout(net);
  int k = spec.k;
  if (static_cast<int>(state.size()) != net.n * k)
    throw std::invalid_argument("state dimension mismatch");

  const auto &args = layout[node];
  int slot = -1;
  if (kind == 1) {
    for (size_t s = 0; s < args.exc_sources.size(); ++s)
      if (args.exc_sources[s] == source) { slot = static_cast<int>(s); break; }
  } else if (kind == 2) {
    for (size_t s = 0; s < args.inh_sources.size(); ++s)
      if (args.inh_sources[s] == source) { slot = static_cast<int>(s); break; }
  }
  if (kind != 0 && slot < 0)
    throw std::invalid_argument("node has no input slot with that kind and source");

  std::vector<std::vector<double>> block(k, std::vector<double>(k, 0.0));
  std::vector<double> own(state.begin() + static_cast<size_t>(node) * k,
                          state.begin() + static_cast<size_t>(node + 1) * k);
  std::vector<std::vector<double>> ebuf, ibuf;
  for (int s : args.exc_sources)
    ebuf.emplace_back(state.begin() + static_cast<size_t>(s) * k,
                      state.begin() + static_cast<size_t>(s + 1) * k);
  for (int s : args.inh_sources)
    ibuf.emplace_back(state.begin() + static_cast<size_t>(s) * k,
                      state.begin() + static_cast<size_t>(s + 1) * k);

  auto eval_at = [&](double *out) {
    std::vector<const double *> ep, ip;
    for (auto &b : ebuf) ep.push_back(b.data());
    for (auto &b : ibuf) ip.push_back(b.data());
    eval_class(spec.per_class[cls[node]], own.data(), ep, ip, k, out);
  };

  double *target = kind == 0 ? own.data()
                   : kind == 1 ? ebuf[slot].data()
                               : ibuf[slot].data();
  std::vector<double> plus(k), minus(k);
  for (int c = 0; c < k; ++c) {
    double save = target[c];
    target[c] = save + h;
    eval_at(plus.data());
    target[c] = save - h;
    eval_at(minus.data());
    target[c] = save;
    for (int r = 0; r < k; ++r) block[r][c] = (plus[r] - minus[r]) / (2 * h);
  }
  return block;
}

CouplingSpec random_admissible_spec(const EINetwork &net, std::mt19937_64 &rng, int k) {
  std::uniform_real_distribution<double> weight(-0.5, 0.5);
  std::uniform_real_distribution<double> small(-0.05, 0.05);
  CouplingSpec spec;
  spec.k = k;
  size_t n_classes = input_classes(net).size();
  for (size_t c = 0; c < n_classes; ++c) {
    double a = -1.0 + small(rng);
    double we = weight(rng), wi = weight(rng);
    double q1 = small(rng), q2 = small(rng), q3 = small(rng), q4 = small(rng);
    ClassCoupling cc;
    cc.family = CouplingFamily::Custom;
    cc.custom = [a, we, wi, q1, q2, q3, q4](const double *own,
                                            const std::vector<const double *> &exc,
                                            const std::vector<const double *> &inh,
                                            int kk, double *out) {
      for (int comp = 0; comp < kk; ++comp) {
        double pe = 0, pe2 = 0, pi = 0, pi2 = 0;
        for (const double *e : exc) {
          pe += e[comp];
          pe2 += e[comp] * e[comp];
        }
        for (const double *i : inh) {
          pi += i[comp];
          pi2 += i[comp] * i[comp];
        }
        out[comp] = a * own[comp] + we * pe + wi * pi + q1 * pe * pe + q2 * pe2 +
                    q3 * own[comp] * pi + q4 * pi2;
      }
    };
    spec.per_class.push_back(std::move(cc));
  }
  return spec;
}

std::vector<ArrowSignReport> classify_arrow_signs(const EINetwork &net,
                                                  const CouplingSpec &spec,
                                                  const std::vector<double> &state,
                                                  double h, double neutral_tol) {
  std::vector<ArrowSignReport> out;
  for (int i = 0; i < net.n; ++i) {
    for (int kind : {1, 2}) {
      const IntMat &m = kind == 1 ? net.exc : net.inh;
      for (int j = 0; j < net.n; ++j) {
        if (m.at(i, j) == 0) continue;
        auto block = measured_partial(net, spec, state, i, kind, j, h);
        double trace = 0;
        for (int c = 0; c < spec.k; ++c) trace += block[c][c];
        if (!std::isfinite(trace))
          throw std::runtime_error("non-finite coupling derivative");
        ArrowSignReport r;
        r.head = i;
        r.source = j;
        r.excitatory_type = kind == 1;
        r.multiplicity = m.at(i, j);
        r.derivative = trace;
        r.sign = trace > neutral_tol    ? ArrowSign::Excitatory
                 : trace < -neutral_tol ? ArrowSign::Inhibitory
                                        : ArrowSign::Neutral;
        out.push_back(r);
      }
    }
  }
  return out;
}

}  // namespace einet
