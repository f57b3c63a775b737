#pragma once

// The group G_NAP of truncated tree series, the classical power-series groups
// it projects to, and the characters of H_NAP attached to its elements.

#include "naphopf/hopf.hpp"
#include "naphopf/labeled.hpp"
#include "naphopf/rational.hpp"
#include "naphopf/tree.hpp"

#include <map>
#include <optional>
#include <vector>

namespace naphopf {

/// sum a_t t over trees with at most N vertices.
class TreeSeries {
 public:
  using Coeffs = std::map<RootedTree, Rational>;

  explicit TreeSeries(std::size_t truncation);
  /// Throws std::invalid_argument if a tree exceeds the truncation.
  TreeSeries(std::size_t truncation, const Coeffs& coeffs);

  std::size_t truncation() const noexcept { return truncation_; }
  const Coeffs& coeffs() const& noexcept { return coeffs_; }
  Coeffs coeffs() && { return std::move(coeffs_); }
  Rational coefficient(const RootedTree& t) const;
  Rational operator[](const RootedTree& t) const { return coefficient(t); }
  void set(const RootedTree& t, const Rational& value);
  void add(const RootedTree& t, const Rational& value);

  /// Coefficient 1 on the single vertex.
  bool is_group_element() const;
  TreeSeries truncated(std::size_t n) const;

  TreeSeries& operator+=(const TreeSeries& other);
  TreeSeries& operator-=(const TreeSeries& other);
  TreeSeries& operator*=(const Rational& s);
  friend TreeSeries operator+(TreeSeries a, const TreeSeries& b) { return a += b; }
  friend TreeSeries operator-(TreeSeries a, const TreeSeries& b) { return a -= b; }
  friend TreeSeries operator*(const Rational& s, TreeSeries a) { return a *= s; }
  /// Compares coefficients up to the smaller truncation.
  friend bool operator==(const TreeSeries& a, const TreeSeries& b);

 private:
  std::size_t truncation_;
  Coeffs coeffs_;
};

/// The unit: the single vertex with coefficient 1.
TreeSeries epsilon(std::size_t truncation);
TreeSeries monomial_series(std::size_t truncation, const RootedTree& t, const Rational& coeff = Rational(1));

using Representative = IndexedTree::Order;

/// Substitution product without the group precondition: left-linear in a,
/// truncated at min(N_a, N_b).
TreeSeries substitute(const TreeSeries& a, const TreeSeries& b, Representative rep = Representative::BreadthFirst);
/// a x b. Throws std::invalid_argument unless both are group elements.
TreeSeries series_multiply(const TreeSeries& a, const TreeSeries& b,
                           Representative rep = Representative::BreadthFirst);
/// The h with h x a = epsilon, checked to satisfy a x h = epsilon as well.
TreeSeries series_inverse(const TreeSeries& a);
/// Bilinear extension of s <| t.
TreeSeries series_graft(const TreeSeries& a, const TreeSeries& b);
/// x o y: y substituted at one vertex of x, single vertices everywhere else.
TreeSeries pre_lie(const TreeSeries& x, const TreeSeries& y);
TreeSeries lie_bracket(const TreeSeries& a, const TreeSeries& b);

TreeSeries zeta_series(std::size_t n);
TreeSeries mobius_series(std::size_t n);
TreeSeries corolla_series(std::size_t n);
TreeSeries ladder_series(std::size_t n);

struct Membership {
  bool member = true;
  std::optional<RootedTree> witness;
};
/// #Aut(t) a_t == prod_i #Aut(B(r,t_i)) a_{B(r,t_i)} for t = B(r, t_1..t_k);
/// the witness is the first failing tree in canonical order.
Membership spec_membership(const TreeSeries& a);

/// phi_a(F_[t]) = #Aut(t) a_t.
Rational character_value(const TreeSeries& a, const RootedTree& t);
/// (phi_b (x) phi_a) Delta(F_[t]), which equals phi_{a x b}(F_[t]) for members.
Rational convolve_characters(const TreeSeries& a, const TreeSeries& b, const RootedTree& t);

/// Gamma_n = sum over trees t with n+1 vertices of F_[t] / #Aut(t).
Element<Hnap> faa_generators(std::size_t n);

/// c_0 + c_1 x + ... + c_N x^N.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t truncation);
  explicit PowerSeries(std::vector<Rational> coeffs);

  std::size_t truncation() const noexcept { return coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const& noexcept { return coeffs_; }
  std::vector<Rational> coeffs() && { return std::move(coeffs_); }
  Rational operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }
  PowerSeries truncated(std::size_t n) const;

  friend bool operator==(const PowerSeries& a, const PowerSeries& b);

 private:
  std::vector<Rational> coeffs_;
};

PowerSeries ps_multiply(const PowerSeries& a, const PowerSeries& b);
/// Throws std::invalid_argument if c_0 == 0.
PowerSeries ps_mul_inverse(const PowerSeries& a);
/// a(b(x)); throws std::invalid_argument unless b has no constant term.
PowerSeries ps_compose(const PowerSeries& a, const PowerSeries& b);
/// Throws std::invalid_argument unless c_0 == 0 and c_1 != 0.
PowerSeries ps_comp_inverse(const PowerSeries& a);
/// Product of G_Comm: sum_m a_m over degree tuples (u_1..u_m) of prod b_{u_i}.
PowerSeries gcomm_product(const PowerSeries& a, const PowerSeries& b);

PowerSeries ps_exp(std::size_t n, const Rational& scale = Rational(1));

/// c_n = a_{corolla with n leaves}, truncated at N - 1.
PowerSeries project_corolla(const TreeSeries& a);
/// c_n = a_{chain with n + 1 vertices}, truncated at N - 1.
PowerSeries project_ladder(const TreeSeries& a);
/// c_n = sum of a_t over trees with n vertices.
PowerSeries project_comm(const TreeSeries& a);

}  // namespace naphopf
