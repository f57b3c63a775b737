#pragma once

// H_NAP (tree basis F_[t]), Q[G_NAP] (free on G_alpha, |alpha| >= 2) and the
// Connes-Kreimer algebra H_R (free on rooted trees), with the maps between them.
//
// Elements carry their algebra as a type parameter, so mixing algebras is a
// compile error rather than a runtime check.

#include "naphopf/interval.hpp"
#include "naphopf/rational.hpp"
#include "naphopf/tree.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace naphopf {

/// Finite rational combination of keys; zero coefficients are never stored.
template <class Algebra, class Key>
class Linear {
 public:
  using algebra_type = Algebra;
  using key_type = Key;
  using Terms = std::map<Key, Rational>;

  Linear() = default;
  explicit Linear(const Key& key, const Rational& coeff = Rational(1)) { add(key, coeff); }

  const Terms& terms() const& noexcept { return terms_; }
  // keeps `for (auto& x : f().terms())` safe on temporaries
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const Key& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Linear& operator+=(const Linear& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  Linear& operator-=(const Linear& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  Linear& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Linear operator+(Linear a, const Linear& b) { return a += b; }
  friend Linear operator-(Linear a, const Linear& b) { return a -= b; }
  friend Linear operator-(Linear a) { return a *= Rational(-1); }
  friend Linear operator*(const Rational& s, Linear a) { return a *= s; }
  friend Linear operator*(Linear a, const Rational& s) { return a *= s; }
  friend bool operator==(const Linear& a, const Linear& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

template <class A>
using Element = Linear<A, typename A::Monomial>;
template <class A>
using Tensor = Linear<A, std::pair<typename A::Monomial, typename A::Monomial>>;
template <class A>
using Tensor3 = Linear<A, std::tuple<typename A::Monomial, typename A::Monomial, typename A::Monomial>>;

/// Incidence Hopf algebra of NAP intervals. Monomials are basis trees F_[t];
/// F_[single vertex] is the unit.
struct Hnap {
  using Monomial = RootedTree;
  static constexpr std::string_view name = "hnap";
  static Monomial unit() { return RootedTree(); }
  static Monomial multiply(const Monomial& a, const Monomial& b) { return merge_roots(a, b); }
  static std::size_t degree(const Monomial& m) { return m.size() - 1; }
  static std::string render(const Monomial& m) { return m.str(); }
  static const Tensor<Hnap>& coproduct(const Monomial& m);
};

/// Functions on G_NAP. Monomials are forests of trees with at least two
/// vertices (products of generators G_alpha); the empty forest is the unit.
struct Qgnap {
  using Monomial = Forest;
  static constexpr std::string_view name = "qgnap";
  static Monomial unit() { return Forest(); }
  static Monomial multiply(const Monomial& a, const Monomial& b) { return a * b; }
  static std::size_t degree(const Monomial& m);
  static std::string render(const Monomial& m) { return m.str(); }
  static const Tensor<Qgnap>& coproduct(const Monomial& m);
};

/// Connes-Kreimer algebra: polynomials in rooted trees, the empty forest is the unit.
struct ConnesKreimer {
  using Monomial = Forest;
  static constexpr std::string_view name = "ck";
  static Monomial unit() { return Forest(); }
  static Monomial multiply(const Monomial& a, const Monomial& b) { return a * b; }
  static std::size_t degree(const Monomial& m) { return m.size(); }
  static std::string render(const Monomial& m) { return m.str(); }
  static const Tensor<ConnesKreimer>& coproduct(const Monomial& m);
};

// ---- generic algebra operations ----

template <class A>
Element<A> unit_element() {
  return Element<A>(A::unit());
}

template <class A>
Element<A> multiply(const Element<A>& a, const Element<A>& b) {
  Element<A> out;
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) out.add(A::multiply(x, y), cx * cy);
  }
  return out;
}

template <class A>
Element<A> power(const Element<A>& a, unsigned k) {
  Element<A> out = unit_element<A>();
  for (unsigned i = 0; i < k; ++i) out = multiply(out, a);
  return out;
}

template <class A>
Tensor<A> multiply(const Tensor<A>& a, const Tensor<A>& b) {
  Tensor<A> out;
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) {
      out.add({A::multiply(x.first, y.first), A::multiply(x.second, y.second)}, cx * cy);
    }
  }
  return out;
}

template <class A>
Tensor<A> coproduct(const Element<A>& a) {
  Tensor<A> out;
  for (const auto& [m, c] : a.terms()) {
    for (const auto& [k, d] : A::coproduct(m).terms()) out.add(k, c * d);
  }
  return out;
}

template <class A>
Rational counit(const Element<A>& a) {
  return a.coefficient(A::unit());
}

/// m: H (x) H -> H.
template <class A>
Element<A> contract(const Tensor<A>& t) {
  Element<A> out;
  for (const auto& [k, c] : t.terms()) out.add(A::multiply(k.first, k.second), c);
  return out;
}

template <class A>
Tensor<A> tensor(const Element<A>& a, const Element<A>& b) {
  Tensor<A> out;
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) out.add({x, y}, cx * cy);
  }
  return out;
}

/// f (x) g applied termwise; f and g map monomials of A to elements of B.
template <class B, class A, class F, class G>
Tensor<B> tensor_map(const Tensor<A>& t, F&& f, G&& g) {
  Tensor<B> out;
  for (const auto& [k, c] : t.terms()) {
    const Element<B> left = f(k.first);
    const Element<B> right = g(k.second);
    for (const auto& [x, cx] : left.terms()) {
      for (const auto& [y, cy] : right.terms()) out.add({x, y}, c * cx * cy);
    }
  }
  return out;
}

/// (Delta (x) id) Delta and (id (x) Delta) Delta.
template <class A>
Tensor3<A> coproduct_left(const Tensor<A>& t) {
  Tensor3<A> out;
  for (const auto& [k, c] : t.terms()) {
    for (const auto& [l, d] : A::coproduct(k.first).terms()) out.add({l.first, l.second, k.second}, c * d);
  }
  return out;
}

template <class A>
Tensor3<A> coproduct_right(const Tensor<A>& t) {
  Tensor3<A> out;
  for (const auto& [k, c] : t.terms()) {
    for (const auto& [r, d] : A::coproduct(k.second).terms()) out.add({k.first, r.first, r.second}, c * d);
  }
  return out;
}

template <class A>
bool is_coassociative(const typename A::Monomial& m) {
  const auto& d = A::coproduct(m);
  return coproduct_left<A>(d) == coproduct_right<A>(d);
}

/// S(1) = 1 and S(m) = -sum S(m') m'' over the terms of Delta(m) with m' != m.
template <class A>
Element<A> antipode(const Element<A>& a) {
  std::map<typename A::Monomial, Element<A>> memo;
  std::function<const Element<A>&(const typename A::Monomial&)> s = [&](const typename A::Monomial& m)
      -> const Element<A>& {
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    Element<A> out;
    if (m == A::unit()) {
      out = unit_element<A>();
    } else {
      for (const auto& [k, c] : A::coproduct(m).terms()) {
        if (k.first == m) continue;
        out -= c * multiply(s(k.first), Element<A>(k.second));
      }
    }
    return memo.emplace(m, std::move(out)).first->second;
  };
  Element<A> out;
  for (const auto& [m, c] : a.terms()) out += c * s(m);
  return out;
}

/// (f * g)(a) = m (f (x) g) Delta(a), for linear maps given on monomials.
template <class A, class F, class G>
Element<A> convolve(const Element<A>& a, F&& f, G&& g) {
  Element<A> out;
  for (const auto& [k, c] : coproduct(a).terms()) out += c * multiply<A>(f(k.first), g(k.second));
  return out;
}

// ---- H_NAP ----

inline Element<Hnap> F(const RootedTree& t) { return Element<Hnap>(t); }
Element<Hnap> hnap_multiply(const Element<Hnap>& a, const Element<Hnap>& b);
/// Sum over the ideals of interval_of(t) of F_[forest_below] (x) F_[theta].
Tensor<Hnap> hnap_coproduct(const RootedTree& t);
/// L_NAP(F_[t]) = F_[B(r, t)].
Element<Hnap> l_nap(const Element<Hnap>& a);

/// Free generators: the valence-one trees whose product is F_[t].
Forest free_factorization(const RootedTree& t);
/// Product in H_NAP of valence-one generators.
RootedTree from_free_factorization(const Forest& generators);

// ---- Q[G_NAP] and the surjection ----

inline Element<Qgnap> G(const RootedTree& t) {
  return Element<Qgnap>(t.is_single_vertex() ? Forest() : Forest({t}));
}
/// (beta without singletons, gamma) -> number of distinct sequences of the
/// components of beta placed on the vertices of r(gamma) composing to alpha.
StructureConstants g_structure_constants(const RootedTree& alpha);
Tensor<Qgnap> qgnap_coproduct(const RootedTree& alpha);

struct EfEgCounts {
  Integer ef;
  Integer eg;
};
/// Exhaustive labeled counts of E_f and E_g. beta must have size(gamma)
/// components (singletons included) of total size size(alpha).
EfEgCounts count_Ef_Eg(const RootedTree& alpha, const Forest& beta, const RootedTree& gamma);

/// G_alpha -> F_[alpha] / #Aut(alpha), multiplicatively.
Element<Hnap> rho(const Element<Qgnap>& x);
Element<Hnap> rho(const Forest& monomial);

// ---- Connes-Kreimer ----

inline Element<ConnesKreimer> CK(const Forest& f) { return Element<ConnesKreimer>(f); }
inline RootedTree b_plus(const Forest& f) { return RootedTree::graft(f.components()); }
Element<ConnesKreimer> b_plus(const Element<ConnesKreimer>& a);
/// Delta through B+: Delta(B+(f)) = B+(f) (x) 1 + (id (x) B+) Delta(f), multiplicatively.
Tensor<ConnesKreimer> ck_coproduct(const Forest& f);
/// Delta from admissible cuts, multiplicatively.
Tensor<ConnesKreimer> ck_coproduct_by_cuts(const Forest& f);

/// F_[B(r, t_1..t_k)] -> t_1...t_k, and its inverse.
Element<ConnesKreimer> iso_to_ck(const Element<Hnap>& a);
Element<Hnap> iso_from_ck(const Element<ConnesKreimer>& a);

// ---- rendering ----

template <class A>
std::string to_string(const Element<A>& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + "*[" + A::render(m) + "]";
  }
  return out;
}

template <class A>
std::string to_string(const Tensor<A>& t) {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : t.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + "*[" + A::render(k.first) + "](x)[" + A::render(k.second) + "]";
  }
  return out;
}

}  // namespace naphopf
