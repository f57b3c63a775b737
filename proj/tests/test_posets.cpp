#include "naphopf/brute_force.hpp"
#include "naphopf/interval.hpp"
#include "naphopf/verify.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace naphopf;

namespace {

oracle::Parents parents_of(const IndexedTree& rep) {
  oracle::Parents p(rep.size());
  for (std::size_t v = 0; v < rep.size(); ++v) p[v] = rep.parent(static_cast<int>(v));
  return p;
}

VertexSet ideal_of(const IntervalPoset& p, const std::vector<int>& vertices) {
  VertexSet s = 0;
  for (int v : vertices) s |= VertexSet{1} << v;
  CHECK(p.index_of(s).has_value());
  return s;
}

bool all_checks_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    INFO(c.name << " " << c.witness);
    CHECK(c.passed);
  }
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

}  // namespace

TEST_CASE("interval elements are the root-containing ideals") {
  for (const auto& t : trees_up_to(7)) {
    const IntervalPoset p(t);
    const auto expected = oracle::root_ideals(parents_of(p.representative()));
    const std::set<VertexSet> got(p.elements().begin(), p.elements().end());
    CHECK(got == std::set<VertexSet>(expected.begin(), expected.end()));
  }
  CHECK(IntervalPoset(single_vertex()).size() == 1);
  for (std::size_t k = 1; k <= 5; ++k) CHECK(IntervalPoset(corolla(k)).size() == std::size_t{1} << k);
}

TEST_CASE("interval of the chain over a 2-corolla") {
  // B(r, B(a, b, c)): in the BFS representative r = 0, a = 1, b = 2, c = 3
  const auto t = parse_tree("((()()))");
  const IntervalPoset p(t);
  CHECK(p.size() == 5);
  const std::set<VertexSet> expected{0b0001, 0b0011, 0b0111, 0b1011, 0b1111};
  CHECK(std::set<VertexSet>(p.elements().begin(), p.elements().end()) == expected);

  const auto rab = *p.index_of(ideal_of(p, {0, 1, 2}));
  CHECK(p.forest_below(rab) == parse_forest("() () (())"));
  CHECK(p.theta(rab) == chain(3));

  const auto full = *p.index_of(0b1111);
  CHECK(p.forest_below(full) == parse_forest("() () () ()"));
  CHECK(p.theta(full) == t);
  const auto root = *p.index_of(0b0001);
  CHECK(p.forest_below(root) == Forest({t}));
  CHECK(p.theta(root) == single_vertex());

  // bottom is the full ideal, top is the root alone
  CHECK(p.bottom() == full);
  CHECK(p.top() == root);
}

TEST_CASE("forest_below and theta recompose to the tree") {
  for (const auto& t : trees_up_to(6)) {
    const IntervalPoset p(t);
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto theta = labeled_theta(p.representative(), p.elements()[i]);
      const auto branches = labeled_branches(p.representative(), p.elements()[i]);
      CHECK(nap_compose(theta, branches).shape() == t);
      CHECK(p.forest_below(i).size() == t.size());
      CHECK(p.forest_below(i).count() == p.theta(i).size());
    }
  }
}

TEST_CASE("invalid ideals are rejected") {
  const auto t = parse_tree("((()()))");
  CHECK_FALSE(is_ideal(IndexedTree(t), 0b0010));
  CHECK_FALSE(is_ideal(IndexedTree(t), 0b0101));
  CHECK_THROWS_AS(forest_below(t, 0b0101), std::invalid_argument);
  CHECK_THROWS_AS(theta_of(t, 0), std::invalid_argument);
}

TEST_CASE("mobius examples") {
  CHECK(mobius(single_vertex()) == 1);
  CHECK(mobius(corolla(4)) == 1);
  CHECK(mobius(corolla(3)) == -1);
  CHECK(mobius(parse_tree("(()(()))")) == 0);
  for (const auto& t : trees_up_to(7)) CHECK(mobius(t) == mobius_closed_form(t));
}

TEST_CASE("mobius of a product is the product of mobius values") {
  const auto a = boolean_lattice(2), b = chain_poset(3);
  const auto ab = product(a, b);
  CHECK(ab.mobius(*ab.bottom(), *ab.top()) == a.mobius(*a.bottom(), *a.top()) * b.mobius(*b.bottom(), *b.top()));
}

TEST_CASE("lattice properties of intervals") {
  for (const auto& t : trees_up_to(6)) {
    const IntervalPoset p(t);
    CHECK(check_total_semimodularity(p));
    CHECK(check_distributive_lattice(p));
  }
  CHECK(check_distributive_lattice(IntervalPoset(corolla(3))));
  CHECK(are_isomorphic(IntervalPoset(corolla(3)).poset(), boolean_lattice(3)));
}

TEST_CASE("negative controls") {
  CHECK(check_total_semimodularity(chain_poset(2)));
  CHECK_FALSE(check_total_semimodularity(pentagon()));
  CHECK_FALSE(check_distributive_lattice(diamond_m3()));
  CHECK_FALSE(check_distributive_lattice(pentagon()));
  CHECK(check_distributive_lattice(boolean_lattice(3)));
}

TEST_CASE("meet and join") {
  const auto b = boolean_lattice(3);
  for (std::size_t x = 0; x < b.size(); ++x) {
    for (std::size_t y = 0; y < b.size(); ++y) {
      CHECK(b.meet(x, y).has_value());
      CHECK(b.join(x, y).has_value());
    }
  }
  // two incomparable maximal elements have no join
  const auto v = FinitePoset::from_covers(3, {{0, 1}, {0, 2}});
  CHECK_FALSE(v.join(1, 2).has_value());
  CHECK(v.meet(1, 2) == std::optional<std::size_t>(0));
}

TEST_CASE("isomorphism search") {
  const auto a = chain_poset(4);
  const auto b = FinitePoset::from_covers(4, {{3, 1}, {1, 0}, {0, 2}});
  const auto iso = find_isomorphism(a, b);
  REQUIRE(iso.has_value());
  CHECK(is_isomorphism(a, b, *iso));
  CHECK_FALSE(are_isomorphic(a, boolean_lattice(2)));
}

TEST_CASE("brute-force NAP posets") {
  const auto p2 = brute_force_pi(nap_instance(), 2);
  CHECK(p2.size() == 3);
  std::vector<std::size_t> trees;
  for (std::size_t x = 0; x < p2.size(); ++x) {
    if (x == p2.bottom()) continue;
    CHECK(p2.order().less(p2.bottom(), x));
    trees.push_back(x);
  }
  REQUIRE(trees.size() == 2);
  CHECK_FALSE(p2.leq(trees[0], trees[1]));
  CHECK_FALSE(p2.leq(trees[1], trees[0]));

  CHECK(brute_force_pi(nap_instance(), 3).size() == 16);
  CHECK(brute_force_pi(nap_instance(), 4).size() == 125);
  CHECK_THROWS_AS(brute_force_pi(nap_instance(), 5), std::invalid_argument);
}

TEST_CASE("brute-force oracle agrees with the ideal model") {
  for (std::size_t n = 1; n <= 4; ++n) CHECK(all_checks_pass(check_brute_force(n)));
}

TEST_CASE("Comm gives the partition lattice") {
  const auto p = brute_force_pi(comm_instance(), 3);
  CHECK(p.size() == 5);
  // refinement order on partitions of {1,2,3}: bottom, three atoms, top
  const auto bottom = p.bottom();
  std::size_t atoms = 0, tops = 0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    CHECK(p.leq(bottom, x));
    if (p.elements()[x].size() == 2) ++atoms;
    if (p.elements()[x].size() == 1) ++tops;
  }
  CHECK(atoms == 3);
  CHECK(tops == 1);
  CHECK(all_checks_pass(check_comm_partition_lattice()));
}

TEST_CASE("f structure constants") {
  const auto f = f_structure_constants(parse_tree("((()()))"));
  // keys drop singleton components
  CHECK(f.at({parse_forest("(())"), chain(3)}) == 2);
  CHECK(f.at({parse_forest("(()())"), chain(2)}) == 1);
  CHECK(f.at({Forest(), parse_tree("((()()))")}) == 1);
  CHECK(f.at({parse_forest("((()()))"), single_vertex()}) == 1);
  CHECK(f.size() == 4);

  const auto one = f_structure_constants(single_vertex());
  CHECK(one.size() == 1);
  CHECK(one.at({Forest(), single_vertex()}) == 1);
  CHECK(pad_with_singletons(parse_forest("(())"), 3) == parse_forest("() () (())"));
  CHECK_THROWS_AS(pad_with_singletons(parse_forest("(()) (())"), 1), std::invalid_argument);
}

TEST_CASE("DOT output") {
  const auto dot = to_dot(IntervalPoset(chain(3)));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}
