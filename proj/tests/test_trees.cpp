#include "naphopf/labeled.hpp"
#include "naphopf/operad.hpp"
#include "naphopf/tree.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <set>

using namespace naphopf;

namespace {

LabeledTree lt(const std::string& root, std::map<Label, std::vector<Label>> kids) {
  return LabeledTree(root, std::move(kids));
}

LabeledTree from_oracle(const oracle::Parents& p, std::size_t first = 1) {
  std::map<Label, Label> parent;
  Label root;
  for (std::size_t v = 0; v < p.size(); ++v) {
    const auto name = std::to_string(v + first);
    if (p[v] < 0) {
      root = name;
    } else {
      parent[name] = std::to_string(static_cast<std::size_t>(p[v]) + first);
    }
  }
  return LabeledTree::from_parents(root, parent);
}

}  // namespace

TEST_CASE("parse and render") {
  CHECK(parse_tree("()").size() == 1);
  CHECK(parse_tree("()").is_single_vertex());
  CHECK(parse_tree("(())").size() == 2);
  CHECK(parse_tree("((())())").str() == "(()(()))");
  CHECK(parse_tree("((())())") == parse_tree("(()(()))"));
  CHECK(chain(3).str() == "((()))");
  CHECK(corolla(2).str() == "(()())");
  CHECK(corolla(0) == single_vertex());
  CHECK(parse_forest("(()) ()").str() == "() (())");
}

TEST_CASE("parse errors carry offsets") {
  auto offset_of = [](const std::string& s) -> std::size_t {
    try {
      parse_tree(s);
    } catch (const ParseError& e) {
      return e.offset();
    }
    FAIL("no error for " << s);
    return 0;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("(()") == 3);
  CHECK(offset_of("())") == 2);
  CHECK(offset_of("(x)") == 1);
  CHECK_THROWS_AS(parse_tree("()()"), ParseError);
}

TEST_CASE("canonical form is idempotent up to 8 vertices") {
  for (const auto& t : trees_up_to(8)) CHECK(parse_tree(t.str()) == t);
}

TEST_CASE("unlabeled counts agree with the labeled quotient") {
  const std::vector<std::size_t> known{1, 1, 2, 4, 9, 20, 48, 115};
  for (std::size_t n = 1; n <= 8; ++n) CHECK(enumerate_trees(n).size() == known[n - 1]);

  for (int n = 1; n <= 7; ++n) {
    const auto labeled = oracle::rooted_labeled_trees(n);
    CHECK(labeled.size() == oracle::ipow(static_cast<std::uint64_t>(n), static_cast<unsigned>(n - 1)));
    std::set<std::string> shapes;
    for (const auto& p : labeled) shapes.insert(oracle::canonical(p));
    std::set<std::string> ours;
    for (const auto& t : enumerate_trees(static_cast<std::size_t>(n))) ours.insert(t.str());
    CHECK(shapes == ours);
  }
}

TEST_CASE("library labeled trees match the Pruefer oracle") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> expected;
    for (const auto& p : oracle::rooted_labeled_trees(n)) expected.insert(from_oracle(p).str());
    std::set<std::string> got;
    for (const auto& t : all_labeled_trees(standard_labels(static_cast<std::size_t>(n)))) got.insert(t.str());
    CHECK(got == expected);
  }
}

TEST_CASE("automorphism orders") {
  CHECK(aut_order(single_vertex()) == 1);
  CHECK(aut_order(corolla(3)) == 6);
  CHECK(aut_order(parse_tree("((())())")) == 1);

  for (int n = 1; n <= 6; ++n) {
    std::map<std::string, std::uint64_t> labeled_per_shape;
    std::map<std::string, std::uint64_t> aut_per_shape;
    for (const auto& p : oracle::rooted_labeled_trees(n)) {
      const auto s = oracle::canonical(p);
      ++labeled_per_shape[s];
      aut_per_shape.try_emplace(s, oracle::automorphisms(p));
    }
    const auto n_fact = factorial(static_cast<unsigned long>(n));
    for (const auto& [s, aut] : aut_per_shape) {
      CHECK(aut_order(parse_tree(s)) == Integer(static_cast<unsigned long>(aut)));
      CHECK(Integer(static_cast<unsigned long>(labeled_per_shape[s] * aut)) == n_fact);
    }
  }
}

TEST_CASE("forest automorphisms") {
  CHECK(aut_order(parse_forest("() () ()")) == 6);
  CHECK(aut_order(parse_forest("() (())")) == 1);
  CHECK(aut_order(parse_forest("(()) (())")) == 2);
  CHECK(aut0_order(parse_forest("() () (())")) == 2);
  CHECK(aut0_order(parse_forest("(()) (()) ()")) == 2);
  CHECK(aut0_order(parse_forest("() () ()")) == 6);
  const auto f = parse_forest("(()()) (()()) () (())");
  CHECK(aut_order(f) == aut0_order(f) * 2 * 2);
}

TEST_CASE("labeled forests are counted by (n+1)^(n-1)") {
  const std::vector<std::uint64_t> expected{1, 3, 16, 125};
  for (int n = 1; n <= 4; ++n) {
    CHECK(oracle::labeled_forests(n) == expected[static_cast<std::size_t>(n - 1)]);
    CHECK(all_labeled_forests(standard_labels(static_cast<std::size_t>(n))).size() ==
          expected[static_cast<std::size_t>(n - 1)]);
  }
}

TEST_CASE("nap_compose examples") {
  const auto two_chain = lt("1", {{"1", {"2"}}, {"2", {}}});
  const auto ab = lt("a", {{"a", {"b"}}, {"b", {}}});
  const auto c = LabeledTree::singleton("c");

  const auto first = nap_compose(two_chain, {{"1", ab}, {"2", c}});
  CHECK(first.root() == "a");
  CHECK(first.children("a") == std::vector<Label>{"b", "c"});
  CHECK(first.shape() == corolla(2));

  const auto second = nap_compose(two_chain, {{"1", c}, {"2", ab}});
  CHECK(second.root() == "c");
  CHECK(second.children("c") == std::vector<Label>{"a"});
  CHECK(second.children("a") == std::vector<Label>{"b"});
  CHECK(second.shape() == chain(3));

  CHECK_THROWS_AS(nap_compose(two_chain, {{"1", ab}}), std::invalid_argument);
  CHECK_THROWS_AS(nap_compose(two_chain, {{"1", ab}, {"2", LabeledTree::singleton("a")}}), std::invalid_argument);
}

TEST_CASE("unit axiom: singleton substitutions relabel") {
  for (const auto& t : all_labeled_trees(standard_labels(4))) {
    std::map<Label, LabeledTree> subs;
    std::map<Label, Label> rename;
    for (const auto& v : t.labels()) {
      subs.emplace(v, LabeledTree::singleton("x" + v));
      rename.emplace(v, "x" + v);
    }
    CHECK(nap_compose(t, subs) == t.relabel(rename));
  }
}

TEST_CASE("graft and corollas") {
  CHECK(RootedTree::graft({}) == single_vertex());
  CHECK(RootedTree::graft({single_vertex(), single_vertex(), single_vertex()}) == corolla(3));
  CHECK(graft_onto(single_vertex(), single_vertex()) == chain(2));
}

TEST_CASE("graft commutes in its right arguments") {
  std::mt19937_64 rng(7);
  const auto pick = [&] {
    const auto& level = enumerate_trees(1 + rng() % 5);
    return level[rng() % level.size()];
  };
  for (int i = 0; i < 200; ++i) {
    const auto s = pick(), t = pick(), u = pick();
    CHECK(graft_onto(graft_onto(s, t), u) == graft_onto(graft_onto(s, u), t));
  }
}

TEST_CASE("operad bases") {
  CHECK(CommOperad::basis(5).size() == 1);
  CHECK(NapOperad::basis(3) == std::vector<RootedTree>{chain(3), corolla(2)});
}

TEST_CASE("NAP composition is associative up to total size 5") {
  // z: forest on labels; y: forest on z's block names; x: tree on y's block names
  const auto name_of = [](const LabeledTree& t) {
    auto labels = t.labels();
    std::sort(labels.begin(), labels.end());
    std::string s = "[";
    for (const auto& l : labels) s += l + ";";
    return s + "]";
  };
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& z : all_labeled_forests(standard_labels(n))) {
      std::vector<Label> z_names;
      std::map<Label, LabeledTree> z_by_name;
      for (const auto& zt : z.components()) {
        z_names.push_back(name_of(zt));
        z_by_name.emplace(z_names.back(), zt);
      }
      for (const auto& y : all_labeled_forests(z_names)) {
        std::vector<Label> y_names;
        std::map<Label, LabeledTree> y_by_name;
        for (const auto& yt : y.components()) {
          y_names.push_back(name_of(yt));
          y_by_name.emplace(y_names.back(), yt);
        }
        for (const auto& x : all_labeled_trees(y_names)) {
          // (x o y) o z
          const auto xy = nap_compose(x, y_by_name);
          const auto left = nap_compose(xy, z_by_name);
          // x o (y o z)
          std::map<Label, LabeledTree> yz;
          for (const auto& [name, yt] : y_by_name) {
            std::map<Label, LabeledTree> subs;
            for (const auto& v : yt.labels()) subs.emplace(v, z_by_name.at(v));
            yz.emplace(name, nap_compose(yt, subs));
          }
          const auto right = nap_compose(x, yz);
          CHECK(left == right);
          ++cases;
        }
      }
    }
  }
  CHECK(cases > 1000);
}

TEST_CASE("NAP is basic: x -> compose(x; y) is injective") {
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto names = standard_labels(k);
    for (const auto& y : all_labeled_forests(standard_labels(k + 2, 10))) {
      if (y.components().size() != k) continue;
      std::map<Label, LabeledTree> subs;
      for (std::size_t i = 0; i < k; ++i) subs.emplace(names[i], y.components()[i]);
      std::set<std::string> images;
      const auto xs = all_labeled_trees(names);
      for (const auto& x : xs) images.insert(nap_compose(x, subs).str());
      CHECK(images.size() == xs.size());
    }
  }
}

TEST_CASE("composition class is invariant under relabeling") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = 1 + rng() % 3;
    const auto outer_all = all_labeled_trees(standard_labels(k));
    const auto outer = outer_all[rng() % outer_all.size()];
    std::map<Label, LabeledTree> subs;
    std::size_t next = 100;
    for (const auto& v : outer.labels()) {
      const std::size_t m = 1 + rng() % 3;
      const auto inner_all = all_labeled_trees(standard_labels(m, next));
      subs.emplace(v, inner_all[rng() % inner_all.size()]);
      next += m;
    }
    const auto base = nap_compose(outer, subs).shape();

    // a random bijection of every label set, applied consistently
    std::vector<Label> all_labels;
    for (const auto& [v, s] : subs) {
      for (const auto& l : s.labels()) all_labels.push_back(l);
    }
    auto shuffled = all_labels;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::map<Label, Label> inner_map;
    for (std::size_t i = 0; i < all_labels.size(); ++i) inner_map[all_labels[i]] = "r" + shuffled[i];
    auto outer_labels = outer.labels();
    auto outer_shuffled = outer_labels;
    std::shuffle(outer_shuffled.begin(), outer_shuffled.end(), rng);
    std::map<Label, Label> outer_map;
    for (std::size_t i = 0; i < outer_labels.size(); ++i) outer_map[outer_labels[i]] = "o" + outer_shuffled[i];

    std::map<Label, LabeledTree> moved;
    for (const auto& [v, s] : subs) moved.emplace(outer_map.at(v), s.relabel(inner_map));
    CHECK(nap_compose(outer.relabel(outer_map), moved).shape() == base);
  }
}

TEST_CASE("nap_compose_shape agrees with labeled composition") {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (const auto& t : enumerate_trees(m)) {
      const IndexedTree rep(t);
      const auto labeled = rep.to_labeled();
      for (const auto& u : trees_up_to(3)) {
        std::vector<RootedTree> inner(m, u);
        inner[0] = single_vertex();
        std::map<Label, LabeledTree> subs;
        std::size_t next = 100;
        for (std::size_t v = 0; v < m; ++v) {
          subs.emplace(rep.label(static_cast<int>(v)), canonical_labeling(inner[v], next));
          next += inner[v].size();
        }
        CHECK(nap_compose_shape(rep, inner) == nap_compose(labeled, subs).shape());
      }
    }
  }
}

TEST_CASE("valence-one factorization") {
  const auto t = parse_tree("(()(())(()))");
  const auto factors = valence_one_factors(t);
  CHECK(factors.size() == 3);
  for (const auto& f : factors) CHECK(f.root_valence() == 1);
  CHECK(merge_roots(Forest(factors)) == t);
}
