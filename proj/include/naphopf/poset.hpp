#pragma once

// Finite posets stored as an explicit order relation, with the lattice
// checks, Möbius recursion and isomorphism search used on operad posets.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace naphopf {

class FinitePoset {
 public:
  using Cover = std::pair<std::size_t, std::size_t>;  // (smaller, larger)

  FinitePoset() = default;

  /// Transitive-reflexive closure of the cover pairs. Throws
  /// std::invalid_argument if the pairs contain a cycle.
  static FinitePoset from_covers(std::size_t n, const std::vector<Cover>& covers);
  /// `leq` is row-major n x n. Throws unless it is a partial order.
  static FinitePoset from_relation(std::size_t n, std::vector<std::uint8_t> leq);

  std::size_t size() const noexcept { return n_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * n_ + b] != 0; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool is_covered_by(std::size_t a, std::size_t b) const;

  const std::vector<Cover>& covers() const noexcept { return covers_; }
  const std::vector<std::size_t>& upper_covers(std::size_t a) const { return up_[a]; }
  const std::vector<std::size_t>& lower_covers(std::size_t a) const { return down_[a]; }

  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;

  /// Sub-poset on [lo, hi]; `members` receives the original indices.
  FinitePoset interval(std::size_t lo, std::size_t hi, std::vector<std::size_t>* members = nullptr) const;
  /// Sub-poset on the given elements, in the given order.
  FinitePoset restrict_to(const std::vector<std::size_t>& elements) const;

  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const;

  /// mu(lo, hi) by mu(lo,lo) = 1, mu(lo,y) = -sum_{lo <= x < y} mu(lo,x).
  std::int64_t mobius(std::size_t lo, std::size_t hi) const;

  /// Reflexive, antisymmetric, transitive.
  bool is_partial_order() const;

 private:
  void build_covers();

  std::size_t n_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<Cover> covers_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
};

/// Product order; element (i, j) has index i * b.size() + j.
FinitePoset product(const FinitePoset& a, const FinitePoset& b);
FinitePoset product(const std::vector<FinitePoset>& factors);

/// Whenever x != y both cover some z, some w covers both x and y.
bool is_totally_semimodular(const FinitePoset& p);
/// All meets and joins exist and x ^ (y v z) = (x ^ y) v (x ^ z).
bool is_distributive_lattice(const FinitePoset& p);

/// Order isomorphism a -> b as an index map, found by backtracking.
std::optional<std::vector<std::size_t>> find_isomorphism(const FinitePoset& a, const FinitePoset& b);
inline bool are_isomorphic(const FinitePoset& a, const FinitePoset& b) { return find_isomorphism(a, b).has_value(); }
/// `map` is a bijection with a <= b iff map[a] <= map[b].
bool is_isomorphism(const FinitePoset& a, const FinitePoset& b, const std::vector<std::size_t>& map);

/// Hasse diagram in DOT, edges drawn from smaller to larger.
std::string to_dot(const FinitePoset& p, const std::vector<std::string>& labels, const std::string& name = "poset");

FinitePoset chain_poset(std::size_t n);
FinitePoset boolean_lattice(std::size_t atoms);
/// N5: 0 < a < b < 1 and 0 < c < 1. Not (upper) semimodular.
FinitePoset pentagon();
/// M3: 0 < a, b, c < 1. Modular but not distributive.
FinitePoset diamond_m3();

}  // namespace naphopf
