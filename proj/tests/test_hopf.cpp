#include "naphopf/hopf.hpp"
#include "naphopf/json_io.hpp"
#include "naphopf/verify.hpp"

#include <doctest.h>

#include <random>
#include <type_traits>

using namespace naphopf;

namespace {

const RootedTree dot = single_vertex();
const RootedTree ch2 = chain(2);
const RootedTree ch3 = chain(3);
const RootedTree cor2 = corolla(2);
const RootedTree t1200 = parse_tree("((()()))");
const RootedTree t2100 = parse_tree("(()(()))");
const RootedTree t3000 = corolla(3);

Tensor<Hnap> FF(const RootedTree& a, const RootedTree& b, long c = 1) {
  return Tensor<Hnap>({a, b}, Rational(c));
}

Forest g(std::initializer_list<const char*> trees) {
  std::vector<RootedTree> out;
  for (const auto* s : trees) out.push_back(parse_tree(s));
  return Forest(out);
}

Tensor<Qgnap> GG(const Forest& a, const Forest& b, long c = 1) { return Tensor<Qgnap>({a, b}, Rational(c)); }

bool all_checks_pass(const std::vector<Check>& checks) {
  bool ok = true;
  for (const auto& c : checks) {
    INFO(c.name << " " << c.witness);
    CHECK(c.passed);
    ok = ok && c.passed;
  }
  return ok;
}

template <class A, class B>
concept Addable = requires(A a, B b) { a + b; };

}  // namespace

TEST_CASE("algebras cannot be mixed") {
  static_assert(Addable<Element<Hnap>, Element<Hnap>>);
  static_assert(!Addable<Element<Hnap>, Element<Qgnap>>);
  static_assert(!Addable<Element<Qgnap>, Element<ConnesKreimer>>);
  CHECK(true);
}

TEST_CASE("H_NAP product merges roots") {
  CHECK(hnap_multiply(F(ch2), F(ch2)) == F(cor2));
  CHECK(power(F(ch2), 3) == F(t3000));
  CHECK(hnap_multiply(F(dot), F(t1200)) == F(t1200));
  CHECK(hnap_multiply(F(ch3), F(ch2)) == F(t2100));
}

TEST_CASE("displayed H_NAP coproducts") {
  CHECK(hnap_coproduct(t1200) == FF(dot, t1200) + FF(ch2, ch3, 2) + FF(cor2, ch2) + FF(t1200, dot));
  // F_[2-chain]^2 = F_[2-corolla] in the tree basis
  CHECK(hnap_coproduct(t2100) ==
        FF(dot, t2100) + FF(ch2, cor2) + FF(ch2, ch3) + FF(cor2, ch2) + FF(ch3, ch2) + FF(t2100, dot));
  CHECK(hnap_coproduct(t3000) == FF(dot, t3000) + FF(ch2, cor2, 3) + FF(cor2, ch2, 3) + FF(t3000, dot));
  CHECK(hnap_coproduct(ch3) == FF(dot, ch3) + FF(ch2, ch2) + FF(ch3, dot));
}

TEST_CASE("displayed Q[G_NAP] coproducts") {
  const Forest one;
  const auto a = Forest({t1200}), b = Forest({t2100}), c = Forest({t3000});
  CHECK(qgnap_coproduct(t1200) == GG(one, a) + GG(g({"(())"}), g({"((()))"})) + GG(g({"(()())"}), g({"(())"})) +
                                      GG(a, one));
  CHECK(qgnap_coproduct(t2100) == GG(one, b) + GG(g({"(())"}), g({"(()())"}), 2) + GG(g({"(())"}), g({"((()))"})) +
                                      GG(g({"(())", "(())"}), g({"(())"})) + GG(g({"((()))"}), g({"(())"})) +
                                      GG(b, one));
  CHECK(qgnap_coproduct(t3000) == GG(one, c) + GG(g({"(())"}), g({"(()())"})) + GG(g({"(()())"}), g({"(())"})) +
                                      GG(c, one));
}

TEST_CASE("g structure constants") {
  const auto gc = g_structure_constants(t2100);
  CHECK(gc.at({g({"(())"}), cor2}) == 2);
  CHECK(gc.at({g({"(())"}), ch3}) == 1);
  CHECK(gc.at({g({"(())", "(())"}), ch2}) == 1);
  CHECK(g_structure_constants(dot).size() == 1);
}

TEST_CASE("E_f and E_g counts") {
  // f = g = 1
  auto two = count_Ef_Eg(ch2, parse_forest("() ()"), ch2);
  CHECK(two.ef == two.eg);
  CHECK(two.ef == aut_order(parse_forest("() ()")) * aut_order(ch2) * 1);

  // g = 2, f = 1: #Aut(a) #Aut0(b) g = #Aut(b) #Aut(c) f
  const auto beta = parse_forest("(()) () ()");
  auto c = count_Ef_Eg(t2100, beta, cor2);
  CHECK(c.ef == c.eg);
  CHECK(c.eg == aut_order(t2100) * aut0_order(beta) * 2);
  CHECK(c.ef == aut_order(beta) * aut_order(cor2) * 1);
  CHECK(c.ef == 4);

  CHECK_THROWS_AS(count_Ef_Eg(t2100, parse_forest("(()) ()"), cor2), std::invalid_argument);
  CHECK_THROWS_AS(count_Ef_Eg(t2100, parse_forest("(()) (()) ()"), cor2), std::invalid_argument);
}

TEST_CASE("main identity") {
  CHECK(all_checks_pass(check_main_theorem(5, 4)));
}

TEST_CASE("rho") {
  CHECK(rho(G(ch2)) == F(ch2));
  CHECK(rho(G(t3000)) == Rational(1, 6) * F(t3000));
  CHECK(rho(G(t3000)) == Rational(1, 6) * power(F(ch2), 3));
  CHECK(rho(G(dot)) == F(dot));

  const auto lhs = tensor_map<Hnap>(qgnap_coproduct(t1200), [](const Forest& m) { return rho(m); },
                                    [](const Forest& m) { return rho(m); });
  CHECK(aut_order(t1200) == 2);
  CHECK(lhs == Rational(1, 2) * hnap_coproduct(t1200));
}

TEST_CASE("antipode") {
  CHECK(antipode(F(ch2)) == -F(ch2));
  CHECK(antipode(F(ch3)) == -F(ch3) + power(F(ch2), 2));
  CHECK(antipode(F(dot)) == F(dot));

  const auto s = [](const RootedTree& m) { return antipode(F(m)); };
  const auto id = [](const RootedTree& m) { return F(m); };
  CHECK(convolve(F(t3000), s, id).is_zero());
  for (const auto& t : trees_up_to(6)) {
    if (t.size() == 1) continue;
    CHECK(convolve(F(t), s, id).is_zero());
    CHECK(convolve(F(t), id, s).is_zero());
  }
  for (const auto& t : trees_up_to(5)) {
    if (t.size() == 1) continue;
    const auto m = Forest({t});
    CHECK(convolve(CK(m), [](const Forest& x) { return antipode(CK(x)); }, [](const Forest& x) { return CK(x); })
              .is_zero());
    CHECK(convolve(G(t), [](const Forest& x) { return antipode(Element<Qgnap>(x)); },
                   [](const Forest& x) { return Element<Qgnap>(x); })
              .is_zero());
  }
}

TEST_CASE("coassociativity up to 6 vertices") {
  for (const auto& t : trees_up_to(6)) {
    CHECK(is_coassociative<Hnap>(t));
    CHECK(is_coassociative<ConnesKreimer>(Forest({t})));
    if (t.size() > 1) CHECK(is_coassociative<Qgnap>(Forest({t})));
  }
}

TEST_CASE("coproduct is multiplicative on random pairs") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 2 + rng() % 3;
    const std::size_t m = 2 + rng() % (7 - n);
    const auto& la = enumerate_trees(n);
    const auto& lb = enumerate_trees(m);
    const auto a = la[rng() % la.size()], b = lb[rng() % lb.size()];
    CHECK(coproduct(hnap_multiply(F(a), F(b))) == multiply(hnap_coproduct(a), hnap_coproduct(b)));
    CHECK(coproduct(multiply(G(a), G(b))) == multiply(qgnap_coproduct(a), qgnap_coproduct(b)));
    CHECK(coproduct(multiply(CK(Forest({a})), CK(Forest({b})))) ==
          multiply(ck_coproduct(Forest({a})), ck_coproduct(Forest({b}))));
  }
}

TEST_CASE("Connes-Kreimer coproduct") {
  const Forest one;
  const auto ck = [](const Forest& a, const Forest& b, long c = 1) {
    return Tensor<ConnesKreimer>({a, b}, Rational(c));
  };
  const auto d = Forest({dot});
  CHECK(ck_coproduct(d) == ck(d, one) + ck(one, d));
  const auto c2 = Forest({ch2});
  CHECK(ck_coproduct(c2) == ck(c2, one) + ck(one, c2) + ck(d, d));
  CHECK(ck_coproduct(one) == ck(one, one));
  CHECK(b_plus(Forest()) == dot);
  CHECK(b_plus(parse_forest("() ()")) == cor2);

  for (std::size_t n = 0; n <= 5; ++n) {
    for (std::size_t parts = 1; parts <= std::max<std::size_t>(n, 1); ++parts) {
      for (const auto& f : enumerate_forests(n, parts)) {
        CHECK(ck_coproduct(f) == ck_coproduct_by_cuts(f));
        // cocycle
        const auto lhs = ck_coproduct(Forest({b_plus(f)}));
        auto rhs = ck(Forest({b_plus(f)}), one);
        rhs += tensor_map<ConnesKreimer>(ck_coproduct(f), [](const Forest& x) { return CK(x); },
                                         [](const Forest& x) { return b_plus(CK(x)); });
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("isomorphism with Connes-Kreimer") {
  CHECK(iso_to_ck(F(ch2)) == CK(Forest({dot})));
  CHECK(iso_to_ck(F(t1200)) == CK(Forest({cor2})));
  CHECK(iso_to_ck(F(cor2)) == CK(parse_forest("() ()")));
  CHECK(iso_to_ck(F(dot)) == CK(Forest()));
  for (const auto& t : trees_up_to(6)) {
    const auto x = F(t);
    CHECK(iso_from_ck(iso_to_ck(x)) == x);
    CHECK(iso_to_ck(l_nap(x)) == b_plus(iso_to_ck(x)));
    const auto lhs = tensor_map<ConnesKreimer>(hnap_coproduct(t), [](const RootedTree& m) { return iso_to_ck(F(m)); },
                                               [](const RootedTree& m) { return iso_to_ck(F(m)); });
    CHECK(lhs == coproduct(iso_to_ck(x)));
  }
  CHECK(all_checks_pass(check_ck_bridge(5)));
}

TEST_CASE("free factorization") {
  for (const auto& t : trees_up_to(7)) {
    const auto f = free_factorization(t);
    CHECK(from_free_factorization(f) == t);
  }
  CHECK_THROWS_AS(from_free_factorization(Forest({cor2})), std::invalid_argument);
}

TEST_CASE("counit") {
  CHECK(counit(F(dot)) == 1);
  CHECK(counit(F(ch2)) == 0);
  CHECK(counit(Element<Qgnap>(Forest())) == 1);
}

TEST_CASE("JSON export of tensors") {
  const auto j = to_json(hnap_coproduct(ch3));
  REQUIRE(j.is_array());
  CHECK(j.size() == 3);
  for (const auto& term : j) {
    CHECK(term.contains("left"));
    CHECK(term.contains("right"));
    CHECK(term["coeff"] == "1/1");
  }
  const auto half = to_json(Rational(1, 2) * F(ch3));
  CHECK(half[0]["monomial"] == "((()))");
  CHECK(half[0]["coeff"] == "1/2");
}
