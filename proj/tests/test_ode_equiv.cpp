#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "einet/ode_equiv.hpp"
#include "helpers.hpp"

using namespace einet;
using namespace einet::testing;

namespace {

using LabelSet = std::set<std::string>;
using LabelPartition = std::set<LabelSet>;

// Partition of labeled networks into ODE-classes, reported as label sets.
LabelPartition label_partition(const std::vector<std::pair<std::string, EINetwork>> &nets,
                               bool modulo_duality) {
  std::map<OdeClassSignature, LabelSet> groups;
  for (const auto &[label, net] : nets)
    groups[ode_signature(net, modulo_duality)].insert(label);
  LabelPartition out;
  for (auto &[sig, labels] : groups) out.insert(labels);
  return out;
}

std::vector<std::pair<std::string, EINetwork>> cei_labeled() {
  std::vector<std::pair<std::string, EINetwork>> nets;
  for (const auto &[label, net] : pei_figure()) nets.push_back({"R:" + label, net});
  for (const auto &[label, net] : uei_extra_figure(true)) nets.push_back({"U:" + label, net});
  return nets;
}

const EINetwork &uei_extra(const std::string &label) {
  static auto nets = uei_extra_figure();
  for (const auto &[l, net] : nets)
    if (l == label) return net;
  throw std::runtime_error("no such figure label: " + label);
}

}  // namespace

TEST_CASE("the oscillator is equivalent to its two-arrow reduction") {
  EINetwork minimal = rei_net(0, 1, 1, 0);
  CHECK(ode_equivalent(smolen(), minimal, true));
  CHECK(ode_equivalent(smolen(), minimal, false));
  CHECK_FALSE(ode_equivalent(smolen(), rei_net(0, 1, 0, 0), true));
}

TEST_CASE("mixed-type network reduces to the restricted two-arrow network") {
  // exc 1->2 plus inh arrows both ways: the difference of the arrow matrices
  // isolates the inhibitory 2->1 arrow
  EINetwork mixed = EINetwork::two_typed({NodeType::Excitatory, NodeType::Inhibitory},
                                         IntMat(2, {0, 0, 1, 0}), IntMat(2, {0, 1, 1, 0}));
  CHECK(ode_equivalent(mixed, rei_net(0, 1, 1, 0), true));
}

TEST_CASE("loop-arrow ratio separates single-type classes") {
  CHECK_FALSE(ode_equivalent(pei_net(1, 1, 0, 0), pei_net(2, 1, 0, 0), true));
  CHECK_FALSE(ode_equivalent(pei_net(2, 1, 0, 0), pei_net(3, 1, 0, 0), true));
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(ode_equivalent(smolen(), EINetwork::single_typed(1, IntMat(1), IntMat(1)),
                                 true),
                  std::invalid_argument);
  CHECK_THROWS_AS(ode_equivalent(smolen(), smolen_pei(), true), std::invalid_argument);
  CHECK(partition_classes({}, true).classes.empty());
}

TEST_CASE("restricted catalog splits 9 + 6 along the figure labels") {
  LabelPartition expected{{"a", "b", "c", "d", "e", "f", "g", "h", "i"},
                          {"j", "k", "l", "m", "n", "o"}};
  CHECK(label_partition(rei_figure(), true) == expected);
}

TEST_CASE("unrestricted catalog: four classes, non-restricted part 19/8/8/3") {
  auto nets = rei_figure();
  for (auto &p : uei_extra_figure()) nets.push_back({"u." + p.first, p.second});
  LabelPartition expected{
      {"a", "b", "c", "d", "e", "f", "g", "h", "i", "u.b.1", "u.c", "u.d.1", "u.e.1",
       "u.e.2", "u.f.1", "u.f.2", "u.g", "u.g.1", "u.g.2", "u.h.1", "u.h.2", "u.h.3",
       "u.h.4", "u.i", "u.i.1", "u.i.2", "u.i.3", "u.i.4"},
      {"j", "k", "l", "m", "n", "o", "u.k.1", "u.l.1", "u.m.3", "u.m.4", "u.m.5",
       "u.n.2", "u.n.3", "u.o.1"},
      {"u.j", "u.k", "u.k.2", "u.n", "u.n.1", "u.n.4", "u.o", "u.o.3"},
      {"u.l", "u.m", "u.m.1"}};
  CHECK(label_partition(nets, true) == expected);
}

TEST_CASE("partially restricted catalog: nine classes, two homogeneous") {
  LabelPartition expected{{"a", "b"}, {"c", "g", "i"}, {"d", "h"}, {"e"}, {"f"},
                          {"j", "l", "o"}, {"k"}, {"m"}, {"n"}};
  CHECK(label_partition(pei_figure(), true) == expected);

  auto partition = partition_classes(
      [] {
        std::vector<EINetwork> nets;
        for (const auto &[l, n] : pei_figure()) nets.push_back(n);
        return nets;
      }(),
      true);
  int with_homogeneous = 0;
  for (const auto &cls : partition.classes) {
    bool any = false;
    for (const auto &m : cls.members) any = any || is_homogeneous(m);
    with_homogeneous += any ? 1 : 0;
  }
  CHECK(partition.classes.size() == 9);
  CHECK(with_homogeneous == 2);
}

TEST_CASE("completely unrestricted catalog: the exact span partition") {
  // Exact rational spans merge three pairs of label groups that are listed
  // separately in the hand tables; the resulting partition has 18 classes.
  LabelPartition expected{
      {"R:a", "R:b", "U:b.1", "U:g", "U:g.2"},
      {"R:c", "R:g", "R:i", "U:d.1", "U:e.1", "U:e.2", "U:f.1", "U:f.2", "U:g.1",
       "U:h.1", "U:h.2", "U:h.3", "U:i.1", "U:i.2", "U:i.3"},
      {"R:d", "R:h", "U:h.4", "U:i", "U:i.4"},
      {"R:e"},
      {"R:f"},
      {"R:j", "R:l", "R:o", "U:l.1", "U:n.2", "U:o.1"},
      {"R:k"},
      {"R:m"},
      {"R:n", "U:m.5"},
      {"U:c"},
      {"U:j", "U:n", "U:n.4", "U:o", "U:o.3"},
      {"U:k"},
      {"U:k.1", "U:m.3", "U:m.4"},
      {"U:k.2", "U:n.1"},
      {"U:l"},
      {"U:m"},
      {"U:m.1"},
      {"U:n.3"}};
  CHECK(label_partition(cei_labeled(), true) == expected);
}

TEST_CASE("partition agrees with the fraction-free rank oracle") {
  // Independent route: pairwise span equality by integer elimination ranks,
  // grouped with union-find.
  auto labeled = cei_labeled();
  int n = static_cast<int>(labeled.size());
  Dsu dsu(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (oracle_ode_equivalent(labeled[i].second, labeled[j].second)) dsu.unite(i, j);
  std::map<int, LabelSet> groups;
  for (int i = 0; i < n; ++i) groups[dsu.find(i)].insert(labeled[i].first);
  LabelPartition oracle;
  for (auto &[root, labels] : groups) oracle.insert(labels);
  CHECK(oracle == label_partition(labeled, true));
}

TEST_CASE("equivalence is reflexive, symmetric, transitive, and permutation-stable") {
  auto nets = rei_figure();
  for (auto &p : uei_extra_figure()) nets.push_back(p);
  std::vector<OdeClassSignature> sigs;
  for (const auto &[l, net] : nets) sigs.push_back(ode_signature(net, true));
  for (size_t i = 0; i < nets.size(); ++i) {
    CHECK(ode_equivalent(nets[i].second, nets[i].second, true));
    for (size_t j = 0; j < nets.size(); ++j) {
      CHECK((sigs[i] == sigs[j]) == (sigs[j] == sigs[i]));
      for (size_t k = 0; k < nets.size(); ++k)
        if (sigs[i] == sigs[j] && sigs[j] == sigs[k]) CHECK(sigs[i] == sigs[k]);
    }
  }
  // renumbering either side never changes the answer
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto &g = nets[rng() % nets.size()].second;
    const auto &h = nets[rng() % nets.size()].second;
    bool base = ode_equivalent(g, h, true);
    for (const auto &p1 : all_permutations(2))
      for (const auto &p2 : all_permutations(2))
        CHECK(ode_equivalent(permute(g, p1), permute(h, p2), true) == base);
  }
}

TEST_CASE("without duality, signatures still identify relabeled copies") {
  EINetwork g = smolen();
  EINetwork h = permute(g, {1, 0});
  CHECK(ode_equivalent(g, h, false));
  // single-arrow network vs its dual: inequivalent without duality
  EINetwork d = EINetwork::two_typed({NodeType::Inhibitory, NodeType::Excitatory},
                                     IntMat(2), quad(0, 1, 0, 0));
  CHECK_FALSE(ode_equivalent(rei_net(0, 1, 0, 0), d, false));
  CHECK(ode_equivalent(rei_net(0, 1, 0, 0), d, true));
}

TEST_CASE("minimal representatives of the oscillator class") {
  MinimalSet mins = minimal_representatives(smolen(), 3, true);
  CHECK(mins.arrow_count == 2);
  REQUIRE(mins.reps.size() == 1);
  CHECK(mins.reps[0] == canonical_form(rei_net(0, 1, 1, 0), true));
}

TEST_CASE("minimal representative of the feedforward class has one arrow") {
  MinimalSet mins = minimal_representatives(rei_net(2, 2, 0, 0), 3, true);
  CHECK(mins.arrow_count == 1);
  REQUIRE(mins.reps.size() == 1);
  CHECK(mins.reps[0] == canonical_form(rei_net(0, 1, 0, 0), true));
}

TEST_CASE("single-type minimality vs brute-force span oracle") {
  EINetwork net = pei_net(2, 1, 0, 0);
  MinimalSet mins = minimal_representatives(net, 3, true);
  CHECK(mins.arrow_count == 3);

  // Oracle: scan all single-type multiplicity pairs with entries <= 3 and
  // find the fewest arrows whose span matches (integer-rank route).
  long best = 1000;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int d = 0; d <= 3; ++d)
          for (int e = 0; e <= 3; ++e)
            for (int f = 0; f <= 3; ++f)
              for (int g = 0; g <= 3; ++g)
                for (int h = 0; h <= 3; ++h) {
                  EINetwork cand = EINetwork::single_typed(
                      2, IntMat(2, {a, b, c, d}), IntMat(2, {e, f, g, h}));
                  if (oracle_ode_equivalent(net, cand))
                    best = std::min(best, cand.arrow_count());
                }
  CHECK(best == mins.arrow_count);
  for (const auto &rep : mins.reps) {
    CHECK(rep.arrow_count() == mins.arrow_count);
    CHECK(oracle_ode_equivalent(net, rep));
  }
}

TEST_CASE("minimal representatives across the catalogs") {
  for (auto cls : {NetworkClass::REI, NetworkClass::PEI, NetworkClass::UEI,
                   NetworkClass::CEI}) {
    EnumerationSpec spec;
    spec.network_class = cls;
    auto partition = partition_classes(enumerate_networks(spec), true);
    for (const auto &k : partition.classes) {
      MinimalSet mins = minimal_representatives(k.members.front(), 3, true);
      for (const auto &rep : mins.reps) {
        CHECK(ode_signature(rep, true) == k.signature);
        CHECK(rep.arrow_count() == mins.arrow_count);
      }
      for (const auto &m : k.members) CHECK(m.arrow_count() >= mins.arrow_count);
      if (cls == NetworkClass::REI) {
        // the restricted classes keep a restricted minimal network
        bool any_rei = false;
        for (const auto &rep : mins.reps)
          for (const auto &o : symmetry_orbit(rep, true))
            any_rei = any_rei || classify_network(o).count(NetworkClass::REI) > 0;
        CHECK(any_rei);
      }
    }
  }
}

TEST_CASE("minimality search reports exhaustion") {
  CHECK_THROWS_AS(minimal_representatives(smolen(), 0, true), SearchExhaustedError);
}

TEST_CASE("parametric labels: worked examples") {
  CHECK(parametric_class_id(pei_net(2, 4, 0, 0)) ==
        ParametricClassId{true, "NHab00", {1, 2}});
  CHECK(parametric_class_id(pei_net(1, 1, 1, 1)) == ParametricClassId{true, "H2", {}});
  CHECK(parametric_class_id(pei_net(1, 1, 0, 0)) == ParametricClassId{true, "H1", {}});
  CHECK(parametric_class_id(pei_net(0, 1, 0, 1)) == ParametricClassId{true, "NH2", {}});
  CHECK(parametric_class_id(pei_net(0, 1, 1, 0)) == ParametricClassId{true, "NH3", {}});
  CHECK(parametric_class_id(pei_net(0, 1, 0, 0)) == ParametricClassId{true, "NH1", {}});
  CHECK(parametric_class_id(pei_net(2, 1, 1, 0)) ==
        ParametricClassId{true, "NHab10", {2, 1}});
  CHECK(parametric_class_id(pei_net(2, 4, 3, 9)) ==
        ParametricClassId{true, "NHabgd", {1, 2, 1, 3}});

  CHECK(parametric_class_id(uei_extra("j")) == ParametricClassId{false, "NHb1b2", {1, 1}});
  CHECK(parametric_class_id(uei_extra("l")) == ParametricClassId{false, "NHb1b2", {2, 1}});
  CHECK(parametric_class_id(smolen()) == ParametricClassId{false, "NH2", {}});
  CHECK(parametric_class_id(rei_net(0, 1, 0, 0)) == ParametricClassId{false, "NH1", {}});
  CHECK(parametric_class_id(pei_net(2, 4, 3, 9)).str() == "NHabgd(1,2,1,3)");

  CHECK_THROWS_AS(parametric_class_id(pei_net(1, 0, 0, 1)), std::invalid_argument);
  // a single-type network whose node outputs both arrow types has no
  // excitatory/inhibitory node split
  CHECK_THROWS_AS(
      parametric_class_id(EINetwork::single_typed(2, quad(0, 1, 0, 0), quad(0, 1, 0, 0))),
      std::invalid_argument);
}

TEST_CASE("parametric labels agree with the span partition on the catalogs") {
  for (auto cls : {NetworkClass::REI, NetworkClass::UEI, NetworkClass::PEI,
                   NetworkClass::CEI}) {
    EnumerationSpec spec;
    spec.network_class = cls;
    auto nets = enumerate_networks(spec);
    std::vector<OdeClassSignature> sigs;
    std::vector<ParametricClassId> ids;
    std::vector<bool> applicable;
    for (const auto &net : nets) {
      sigs.push_back(ode_signature(net, true));
      try {
        ids.push_back(parametric_class_id(net));
        applicable.push_back(true);
      } catch (const std::invalid_argument &) {
        ids.push_back({});
        applicable.push_back(false);
      }
    }
    if (cls != NetworkClass::CEI)
      for (bool a : applicable) CHECK(a);
    for (size_t i = 0; i < nets.size(); ++i)
      for (size_t j = i + 1; j < nets.size(); ++j)
        if (applicable[i] && applicable[j])
          CHECK((ids[i] == ids[j]) == (sigs[i] == sigs[j]));
  }
}

TEST_CASE("parametric labels agree with span equivalence on random tuples") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(0, 5);
  std::vector<EINetwork> sample;
  while (sample.size() < 25) {
    EINetwork net = pei_net(entry(rng), entry(rng), entry(rng), entry(rng));
    if (is_connected(net)) sample.push_back(net);
  }
  std::vector<EINetwork> uei_sample;
  while (uei_sample.size() < 25) {
    IntMat e(2), i(2);
    for (auto &x : e.a) x = entry(rng);
    for (auto &x : i.a) x = entry(rng);
    EINetwork net =
        EINetwork::two_typed({NodeType::Excitatory, NodeType::Inhibitory}, e, i);
    if (is_connected(net)) uei_sample.push_back(net);
  }
  auto agree = [](const std::vector<EINetwork> &nets) {
    std::vector<OdeClassSignature> sigs;
    std::vector<ParametricClassId> ids;
    for (const auto &n : nets) {
      sigs.push_back(ode_signature(n, true));
      ids.push_back(parametric_class_id(n));
    }
    for (size_t i = 0; i < nets.size(); ++i)
      for (size_t j = i + 1; j < nets.size(); ++j)
        CHECK((ids[i] == ids[j]) == (sigs[i] == sigs[j]));
  };
  agree(sample);
  agree(uei_sample);
}

TEST_CASE("restricted classes split into feedforward and transitive networks") {
  EnumerationSpec spec;
  spec.network_class = NetworkClass::REI;
  auto partition = partition_classes(enumerate_networks(spec), true);
  REQUIRE(partition.classes.size() == 2);
  for (const auto &cls : partition.classes) {
    bool expect_transitive = cls.members.size() == 6;  // the two-arrow class
    for (const auto &m : cls.members) CHECK(is_transitive(m) == expect_transitive);
  }
}

TEST_CASE("only one unrestricted class needs both arrow types minimally") {
  EnumerationSpec spec;
  spec.network_class = NetworkClass::UEI;
  auto partition = partition_classes(enumerate_networks(spec), true);
  int mixed_minimal_classes = 0;
  for (const auto &cls : partition.classes) {
    MinimalSet mins = minimal_representatives(cls.members.front(), 3, true);
    bool mixed = false;
    for (const auto &rep : mins.reps)
      mixed = mixed || (!rep.exc.is_zero() && !rep.inh.is_zero());
    mixed_minimal_classes += mixed ? 1 : 0;
  }
  CHECK(mixed_minimal_classes == 1);
}
