#include "einet/synchrony.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace einet {

Colouring trivial_colouring(int n) {
  Colouring c;
  for (int i = 0; i < n; ++i) c.push_back({i});
  return c;
}

Colouring normalize_colouring(Colouring c, int n) {
  std::vector<int> seen(n, 0);
  for (auto &block : c) {
    if (block.empty()) throw std::invalid_argument("colouring has an empty block");
    std::sort(block.begin(), block.end());
    for (int v : block) {
      if (v < 0 || v >= n) throw std::invalid_argument("colouring references a bad node index");
      if (seen[v]++) throw std::invalid_argument("colouring repeats a node");
    }
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) throw std::invalid_argument("colouring does not cover every node");
  std::sort(c.begin(), c.end(),
            [](const auto &a, const auto &b) { return a.front() < b.front(); });
  return c;
}

Colouring parse_colouring(const std::string &text, int n) {
  Colouring c;
  std::stringstream blocks(text);
  std::string block;
  while (std::getline(blocks, block, '|')) {
    std::vector<int> b;
    std::stringstream items(block);
    std::string item;
    while (std::getline(items, item, ',')) {
      size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument("bad colouring syntax: " + text);
      b.push_back(v - 1);  // 1-based on the wire
    }
    if (!b.empty()) c.push_back(b);
  }
  return normalize_colouring(std::move(c), n);
}

std::string colouring_to_string(const Colouring &c) {
  std::ostringstream out;
  for (size_t b = 0; b < c.size(); ++b) {
    if (b) out << "|";
    for (size_t i = 0; i < c[b].size(); ++i) {
      if (i) out << ",";
      out << c[b][i] + 1;
    }
  }
  return out.str();
}

namespace {

std::vector<int> colour_of(const Colouring &c, int n) {
  std::vector<int> col(n, -1);
  for (size_t b = 0; b < c.size(); ++b)
    for (int v : c[b]) col[v] = static_cast<int>(b);
  return col;
}

}  // namespace

bool refines_input_classes(const EINetwork &net, const Colouring &c) {
  auto classes = input_classes(net);
  std::vector<int> cls(net.n);
  for (size_t k = 0; k < classes.size(); ++k)
    for (int v : classes[k]) cls[v] = static_cast<int>(k);
  for (const auto &block : c)
    for (int v : block)
      if (cls[v] != cls[block.front()]) return false;
  return true;
}

bool is_balanced_counts(const EINetwork &net, const Colouring &c) {
  auto col = colour_of(c, net.n);
  int k = static_cast<int>(c.size());
  auto counts = [&](const IntMat &m, int i) {
    std::vector<int> per(k, 0);
    for (int j = 0; j < net.n; ++j) per[col[j]] += m.at(i, j);
    return per;
  };
  for (const auto &block : c) {
    int i0 = block.front();
    auto exc0 = counts(net.exc, i0);
    auto inh0 = counts(net.inh, i0);
    for (int i : block)
      if (counts(net.exc, i) != exc0 || counts(net.inh, i) != inh0) return false;
  }
  return true;
}

bool polydiagonal_invariant(const EINetwork &net, const Colouring &c) {
  // Delta_c is spanned by the block indicator vectors; a matrix M leaves it
  // invariant iff M applied to each indicator is constant on every block.
  for (const auto &m : adjacency_family(net)) {
    for (const auto &block : c) {
      std::vector<long> image(net.n, 0);
      for (int i = 0; i < net.n; ++i)
        for (int j : block) image[i] += m.at(i, j);
      for (const auto &other : c)
        for (int i : other)
          if (image[i] != image[other.front()]) return false;
    }
  }
  return true;
}

bool is_balanced(const EINetwork &net, const Colouring &c) {
  Colouring cc = normalize_colouring(c, net.n);
  if (!refines_input_classes(net, cc))
    throw std::invalid_argument("colouring does not refine input equivalence");
  bool counts = is_balanced_counts(net, cc);
  bool invariant = polydiagonal_invariant(net, cc);
  if (counts != invariant)
    throw std::logic_error("balance tests disagree; this is a bug");
  return counts;
}

namespace {

void partitions_rec(int next, int n, std::vector<std::vector<int>> &blocks,
                    std::vector<Colouring> &out) {
  if (next == n) {
    out.push_back(blocks);
    return;
  }
  for (auto &block : blocks) {
    block.push_back(next);
    partitions_rec(next + 1, n, blocks, out);
    block.pop_back();
  }
  blocks.push_back({next});
  partitions_rec(next + 1, n, blocks, out);
  blocks.pop_back();
}

}  // namespace

std::vector<Colouring> balanced_colourings(const EINetwork &net) {
  std::vector<Colouring> all;
  std::vector<std::vector<int>> blocks;
  partitions_rec(0, net.n, blocks, all);
  std::vector<Colouring> out;
  for (auto &c : all) {
    Colouring cc = normalize_colouring(c, net.n);
    if (!refines_input_classes(net, cc)) continue;
    if (is_balanced(net, cc)) out.push_back(cc);
  }
  std::sort(out.begin(), out.end());
  return out;
}

EINetwork quotient(const EINetwork &net, const Colouring &c) {
  Colouring cc = normalize_colouring(c, net.n);
  if (!is_balanced(net, cc))
    throw std::invalid_argument("quotient requires a balanced colouring");
  int k = static_cast<int>(cc.size());
  auto project = [&](const IntMat &m) {
    IntMat q(k);
    for (int b = 0; b < k; ++b) {
      int rep = cc[b].front();
      for (int cblk = 0; cblk < k; ++cblk) {
        int total = 0;
        for (int j : cc[cblk]) total += m.at(rep, j);
        q.at(b, cblk) = total;  // well defined: balance makes it rep-independent
      }
    }
    return q;
  };
  EINetwork out;
  out.n = k;
  out.single_node_type = net.single_node_type;
  out.node_types.resize(k);
  for (int b = 0; b < k; ++b) out.node_types[b] = net.node_types[cc[b].front()];
  out.exc = project(net.exc);
  out.inh = project(net.inh);
  out.validate();
  return out;
}

}  // namespace einet
