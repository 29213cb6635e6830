#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "einet/enumerate.hpp"
#include "einet/network.hpp"

namespace einet::testing {

// 2x2 matrix from the drawing quadruple (loops at 1, arrows 1->2,
// arrows 2->1, loops at 2), in the project's (i,j) = arrows j->i layout.
inline IntMat quad(int loops1, int fwd, int back, int loops2) {
  IntMat m(2);
  m.at(0, 0) = loops1;
  m.at(1, 0) = fwd;
  m.at(0, 1) = back;
  m.at(1, 1) = loops2;
  return m;
}

inline EINetwork rei_net(int alpha, int beta, int gamma, int delta) {
  return EINetwork::two_typed({NodeType::Excitatory, NodeType::Inhibitory},
                              quad(alpha, beta, 0, 0), quad(0, 0, gamma, delta));
}

inline EINetwork pei_net(int alpha, int beta, int gamma, int delta) {
  return EINetwork::single_typed(2, quad(alpha, beta, 0, 0), quad(0, 0, gamma, delta));
}

inline EINetwork smolen() { return rei_net(1, 1, 1, 1); }
inline EINetwork smolen_pei() { return pei_net(1, 1, 1, 1); }

// The 15 restricted networks of the valence-2 catalog, by figure label.
// Parameters are (loops at 1, arrows 1->2, arrows 2->1, loops at 2) with the
// excitatory node first.
inline std::vector<std::pair<std::string, EINetwork>> rei_figure() {
  static const std::vector<std::pair<std::string, std::array<int, 4>>> data = {
      {"a", {0, 1, 0, 0}}, {"b", {0, 2, 0, 0}}, {"c", {0, 1, 0, 1}},
      {"d", {1, 1, 0, 0}}, {"e", {2, 1, 0, 0}}, {"f", {1, 2, 0, 0}},
      {"g", {1, 1, 0, 1}}, {"h", {2, 2, 0, 0}}, {"i", {2, 1, 0, 1}},
      {"j", {0, 1, 1, 0}}, {"k", {1, 1, 1, 0}}, {"l", {0, 1, 2, 0}},
      {"m", {1, 2, 1, 0}}, {"n", {1, 1, 1, 1}}, {"o", {0, 2, 2, 0}}};
  std::vector<std::pair<std::string, EINetwork>> out;
  for (const auto &[label, p] : data)
    out.push_back({label, rei_net(p[0], p[1], p[2], p[3])});
  return out;
}

inline std::vector<std::pair<std::string, EINetwork>> pei_figure() {
  std::vector<std::pair<std::string, EINetwork>> out;
  for (const auto &[label, net] : rei_figure())
    out.push_back({label, EINetwork::single_typed(2, net.exc, net.inh)});
  return out;
}

// The 38 unrestricted two-node networks of the valence-2 catalog that are
// not restricted, by figure label: excitatory and inhibitory drawing
// quadruples.
inline std::vector<std::pair<std::string, EINetwork>> uei_extra_figure(bool single_type = false) {
  struct Row {
    const char *label;
    std::array<int, 4> e, i;
  };
  static const std::vector<Row> data = {
      {"b.1", {0, 1, 0, 0}, {0, 1, 0, 0}}, {"c", {0, 1, 0, 1}, {0, 0, 0, 0}},
      {"d.1", {0, 1, 0, 0}, {1, 0, 0, 0}}, {"e.1", {2, 0, 0, 0}, {0, 1, 0, 0}},
      {"e.2", {1, 1, 0, 0}, {1, 0, 0, 0}}, {"f.1", {0, 2, 0, 0}, {1, 0, 0, 0}},
      {"f.2", {1, 1, 0, 0}, {0, 1, 0, 0}}, {"g", {1, 1, 0, 1}, {0, 0, 0, 0}},
      {"g.1", {0, 1, 0, 1}, {1, 0, 0, 0}}, {"g.2", {1, 0, 0, 1}, {0, 1, 0, 0}},
      {"h.1", {1, 2, 0, 0}, {1, 0, 0, 0}}, {"h.2", {0, 2, 0, 0}, {2, 0, 0, 0}},
      {"h.3", {2, 1, 0, 0}, {0, 1, 0, 0}}, {"h.4", {1, 1, 0, 0}, {1, 1, 0, 0}},
      {"i", {2, 1, 0, 1}, {0, 0, 0, 0}},   {"i.1", {1, 1, 0, 1}, {1, 0, 0, 0}},
      {"i.2", {0, 1, 0, 1}, {2, 0, 0, 0}}, {"i.3", {2, 0, 0, 1}, {0, 1, 0, 0}},
      {"i.4", {1, 0, 0, 1}, {1, 1, 0, 0}}, {"j", {0, 1, 1, 0}, {0, 0, 0, 0}},
      {"k", {1, 1, 1, 0}, {0, 0, 0, 0}},   {"k.1", {1, 0, 1, 0}, {0, 1, 0, 0}},
      {"k.2", {0, 1, 1, 0}, {1, 0, 0, 0}}, {"l", {0, 1, 2, 0}, {0, 0, 0, 0}},
      {"l.1", {0, 1, 1, 0}, {0, 0, 1, 0}}, {"m", {1, 2, 1, 0}, {0, 0, 0, 0}},
      {"m.1", {0, 2, 1, 0}, {1, 0, 0, 0}}, {"m.3", {0, 2, 0, 0}, {1, 0, 1, 0}},
      {"m.4", {1, 1, 1, 0}, {0, 1, 0, 0}}, {"m.5", {0, 1, 1, 0}, {1, 1, 0, 0}},
      {"n", {1, 1, 1, 1}, {0, 0, 0, 0}},   {"n.1", {1, 1, 1, 0}, {0, 0, 0, 1}},
      {"n.2", {1, 0, 1, 1}, {0, 1, 0, 0}}, {"n.3", {1, 0, 1, 0}, {0, 1, 0, 1}},
      {"n.4", {1, 0, 0, 1}, {0, 1, 1, 0}}, {"o", {0, 2, 2, 0}, {0, 0, 0, 0}},
      {"o.1", {0, 1, 2, 0}, {0, 1, 0, 0}}, {"o.3", {0, 1, 1, 0}, {0, 1, 1, 0}}};
  std::vector<std::pair<std::string, EINetwork>> out;
  for (const auto &row : data) {
    IntMat e = quad(row.e[0], row.e[1], row.e[2], row.e[3]);
    IntMat i = quad(row.i[0], row.i[1], row.i[2], row.i[3]);
    if (single_type)
      out.push_back({row.label, EINetwork::single_typed(2, e, i)});
    else
      out.push_back(
          {row.label,
           EINetwork::two_typed({NodeType::Excitatory, NodeType::Inhibitory}, e, i)});
  }
  return out;
}

// Independent rank oracle: fraction-free integer elimination, no rationals.
inline int int_rank(std::vector<std::vector<long long>> rows) {
  if (rows.empty()) return 0;
  size_t cols = rows.front().size();
  int rank = 0;
  for (size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<size_t>(rank) || rows[r][col] == 0) continue;
      long long a = rows[rank][col], b = rows[r][col];
      for (size_t c = 0; c < cols; ++c) rows[r][c] = rows[r][c] * a - rows[rank][c] * b;
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<long long>> family_rows(const EINetwork &net) {
  std::vector<std::vector<long long>> rows;
  for (const auto &m : adjacency_family(net)) {
    std::vector<long long> row(m.a.begin(), m.a.end());
    rows.push_back(row);
  }
  return rows;
}

// Oracle span-equality: equal iff rank A = rank B = rank (A concat B).
inline bool oracle_spans_equal(const EINetwork &g, const EINetwork &h) {
  auto a = family_rows(g), b = family_rows(h);
  int ra = int_rank(a), rb = int_rank(b);
  auto both = a;
  both.insert(both.end(), b.begin(), b.end());
  return ra == rb && int_rank(both) == ra;
}

// Oracle ODE-equivalence modulo renumbering and the type relabelings.
inline bool oracle_ode_equivalent(const EINetwork &g, const EINetwork &h) {
  for (const auto &perm : all_permutations(h.n))
    if (oracle_spans_equal(g, permute(h, perm))) return true;
  return false;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace einet::testing
