#include "einet/ode_equiv.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace einet {

namespace {

std::vector<int> pattern_of(const EINetwork &net) {
  std::vector<int> p;
  if (net.single_node_type) return p;
  p.reserve(net.n);
  for (auto t : net.node_types) p.push_back(static_cast<int>(t));
  return p;
}

std::vector<int> flipped_pattern(const std::vector<int> &p) {
  std::vector<int> q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[i] = 1 - p[i];
  return q;
}

}  // namespace

OdeClassSignature ode_signature(const EINetwork &net, bool modulo_duality) {
  bool first = true;
  OdeClassSignature best;
  for (const auto &perm : all_permutations(net.n)) {
    EINetwork g = permute(net, perm);
    std::vector<int> pat = pattern_of(g);
    if (modulo_duality && !pat.empty()) pat = std::min(pat, flipped_pattern(pat));
    OdeClassSignature cand{std::move(pat), span_of(adjacency_family(g))};
    if (first || cand < best) {
      best = std::move(cand);
      first = false;
    }
  }
  return best;
}

bool ode_equivalent(const EINetwork &g, const EINetwork &h, bool modulo_duality) {
  if (g.n != h.n) throw std::invalid_argument("ode_equivalent: node counts differ");
  if (g.single_node_type != h.single_node_type)
    throw std::invalid_argument("ode_equivalent: node-type structure differs");
  return ode_signature(g, modulo_duality) == ode_signature(h, modulo_duality);
}

OdePartition partition_classes(const std::vector<EINetwork> &nets, bool modulo_duality) {
  if (nets.empty()) return {};
  int n = nets.front().n;
  bool single = nets.front().single_node_type;
  for (const auto &net : nets) {
    if (net.n != n) throw std::invalid_argument("partition_classes: mixed node counts");
    if (net.single_node_type != single)
      throw std::invalid_argument("partition_classes: mixed node-type structure");
  }
  std::map<OdeClassSignature, std::set<EINetwork>> groups;
  for (const auto &net : nets) groups[ode_signature(net, modulo_duality)].insert(net);
  OdePartition part;
  for (auto &[sig, members] : groups)
    part.classes.push_back(OdeClass{sig, {members.begin(), members.end()}});
  std::sort(part.classes.begin(), part.classes.end(),
            [](const OdeClass &a, const OdeClass &b) {
              return a.members.front() < b.members.front();
            });
  return part;
}

namespace {

// Enumerate all fillings of `slots` nonnegative entries with the given total
// and per-entry cap.
void compositions(int slots, int total, int cap, std::vector<int> &cur,
                  const std::function<void(const std::vector<int> &)> &emit) {
  if (slots == 1) {
    if (total <= cap) {
      cur.push_back(total);
      emit(cur);
      cur.pop_back();
    }
    return;
  }
  for (int v = std::min(cap, total); v >= 0; --v) {
    cur.push_back(v);
    compositions(slots - 1, total - v, cap, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

MinimalSet minimal_representatives(const EINetwork &member, int entry_bound,
                                   bool modulo_duality) {
  if (entry_bound < 0) throw std::invalid_argument("entry_bound must be nonnegative");
  OdeClassSignature target = ode_signature(member, modulo_duality);
  EINetwork shape = canonical_form(member, modulo_duality);

  int n = member.n;
  int slots = 2 * n * n;
  long max_total = static_cast<long>(slots) * entry_bound;

  for (long total = 0; total <= max_total; ++total) {
    std::set<EINetwork> found;
    std::vector<int> cur;
    compositions(slots, static_cast<int>(total), entry_bound, cur,
                 [&](const std::vector<int> &fill) {
                   EINetwork cand = shape;
                   std::copy(fill.begin(), fill.begin() + n * n, cand.exc.a.begin());
                   std::copy(fill.begin() + n * n, fill.end(), cand.inh.a.begin());
                   if (ode_signature(cand, modulo_duality) == target)
                     found.insert(canonical_form(cand, modulo_duality));
                 });
    if (!found.empty())
      return MinimalSet{total, {found.begin(), found.end()}};
  }
  std::ostringstream msg;
  msg << "no network with multiplicities <= " << entry_bound
      << " realizes the class span; raise the entry bound";
  throw SearchExhaustedError(msg.str());
}

namespace {

std::pair<long, long> coprime(long x, long y) {
  long g = std::gcd(x, y);
  return g == 0 ? std::pair<long, long>{x, y} : std::pair<long, long>{x / g, y / g};
}

ParametricClassId uei_parametric(const EINetwork &net) {
  long b1 = net.exc.at(1, 0), b2 = net.exc.at(0, 1);
  long g1 = net.inh.at(1, 0), g2 = net.inh.at(0, 1);
  if (b1 * g2 - b2 * g1 != 0) return {false, "NH2", {}};
  // Cross vectors are parallel; take the direction from whichever is nonzero.
  long p = b1, q = b2;
  if (p == 0 && q == 0) {
    p = g1;
    q = g2;
  }
  if (p == 0 || q == 0) return {false, "NH1", {}};
  auto [rp, rq] = coprime(p, q);
  if (rp < rq) std::swap(rp, rq);  // duality exchanges the two directions
  return {false, "NHb1b2", {rp, rq}};
}

ParametricClassId pei_parametric(const EINetwork &net) {
  // Orient so node 1 carries the excitatory outputs and node 2 the
  // inhibitory ones.
  for (bool fl : {false, true}) {
    for (bool sw : {false, true}) {
      EINetwork g = fl ? arrow_flip(net) : net;
      if (sw) g = permute(g, {1, 0});
      if (g.exc.col_sum(1) != 0 || g.inh.col_sum(0) != 0) continue;
      long a = g.exc.at(0, 0), b = g.exc.at(1, 0);
      long ga = g.inh.at(0, 1), d = g.inh.at(1, 1);
      int zeros = (a == 0) + (b == 0) + (ga == 0) + (d == 0);
      if (zeros == 0) {
        auto [a1, b1] = coprime(a, b);
        auto [g1, d1] = coprime(ga, d);
        if (a1 == 1 && b1 == 1 && g1 == 1 && d1 == 1) return {true, "H2", {}};
        std::vector<long> p{a1, b1, g1, d1}, q{d1, g1, b1, a1};
        return {true, "NHabgd", std::min(p, q)};
      }
      if (zeros == 1) {
        if (ga == 0 || b == 0) return {true, "NH2", {}};
        if (d == 0) {
          auto [a1, b1] = coprime(a, b);
          return {true, "NHab10", {a1, b1}};
        }
        // a == 0
        auto [a1, b1] = coprime(d, ga);
        return {true, "NHab10", {a1, b1}};
      }
      if (zeros == 2) {
        if (ga == 0 && d == 0) {
          auto [a1, b1] = coprime(a, b);
          if (a1 == 1 && b1 == 1) return {true, "H1", {}};
          return {true, "NHab00", {a1, b1}};
        }
        if (a == 0 && b == 0) {
          auto [a1, b1] = coprime(d, ga);
          if (a1 == 1 && b1 == 1) return {true, "H1", {}};
          return {true, "NHab00", {a1, b1}};
        }
        if (a == 0 && d == 0) return {true, "NH3", {}};
        return {true, "NH2", {}};  // zeros {a, ga} or {b, d}
      }
      return {true, "NH1", {}};  // zeros == 3, the single cross arrow remains
    }
  }
  throw std::invalid_argument(
      "parametric_class_id: network does not split into one excitatory-output "
      "and one inhibitory-output node");
}

}  // namespace

ParametricClassId parametric_class_id(const EINetwork &net) {
  if (net.n != 2) throw std::invalid_argument("parametric_class_id: two-node networks only");
  if (!is_connected(net)) throw std::invalid_argument("parametric_class_id: network is disconnected");
  return net.single_node_type ? pei_parametric(net) : uei_parametric(net);
}

std::string ParametricClassId::str() const {
  if (params.empty()) return family;
  std::ostringstream out;
  out << family << "(";
  for (size_t i = 0; i < params.size(); ++i) {
    if (i) out << ",";
    out << params[i];
  }
  out << ")";
  return out.str();
}

}  // namespace einet
