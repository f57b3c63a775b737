#pragma once

// Unlabeled rooted trees and forests in canonical form.
//
// A tree is written in the grammar  tree := "(" tree* ")"  and is stored with
// its children sorted by (size, canonical string). Two trees are equal iff
// their canonical strings are equal, so equality and ordering are string
// comparisons and a sorted vector of trees is a canonical multiset.

#include "naphopf/rational.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace naphopf {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class RootedTree {
 public:
  struct Node;

  /// The single-vertex tree.
  RootedTree();

  /// B(r, t_1, ..., t_k): a new root carrying the given branches.
  static RootedTree graft(std::vector<RootedTree> children);

  const std::vector<RootedTree>& children() const noexcept;
  std::size_t size() const noexcept;
  const std::string& str() const noexcept;

  std::size_t root_valence() const noexcept { return children().size(); }
  bool is_single_vertex() const noexcept { return size() == 1; }
  /// Every non-root vertex is a child of the root (the single vertex counts).
  bool is_corolla() const noexcept;
  /// A path hanging from the root (the single vertex counts).
  bool is_chain() const noexcept;

  friend bool operator==(const RootedTree& a, const RootedTree& b) noexcept;
  friend bool operator<(const RootedTree& a, const RootedTree& b) noexcept;
  friend bool operator!=(const RootedTree& a, const RootedTree& b) noexcept { return !(a == b); }

 private:
  explicit RootedTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Canonical multiset of rooted trees. The empty forest is the unit monomial.
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<RootedTree> components);

  const std::vector<RootedTree>& components() const noexcept { return components_; }
  bool empty() const noexcept { return components_.empty(); }
  std::size_t count() const noexcept { return components_.size(); }
  /// Total number of vertices.
  std::size_t size() const noexcept;
  /// Whitespace-separated canonical tree strings; "" for the empty forest.
  std::string str() const;

  Forest without_singletons() const;
  /// Multiset union.
  friend Forest operator*(const Forest& a, const Forest& b);

  friend bool operator==(const Forest& a, const Forest& b) noexcept;
  friend bool operator<(const Forest& a, const Forest& b) noexcept;
  friend bool operator!=(const Forest& a, const Forest& b) noexcept { return !(a == b); }

 private:
  std::vector<RootedTree> components_;
};

/// Throws ParseError (with byte offset) on malformed input.
RootedTree parse_tree(std::string_view text);
/// Whitespace-separated trees; empty or blank input is the empty forest.
Forest parse_forest(std::string_view text);

RootedTree single_vertex();
/// Chain with the given number of vertices (>= 1).
RootedTree chain(std::size_t vertices);
/// Corolla with the given number of leaves.
RootedTree corolla(std::size_t leaves);

/// The NAP product s ◁ t: the root of t becomes a new child of the root of s.
RootedTree graft_onto(const RootedTree& s, const RootedTree& t);
/// B(r,u...) merged with B(r,v...) gives B(r,u...,v...).
RootedTree merge_roots(const RootedTree& a, const RootedTree& b);
/// Merge of all components (single vertex for the empty forest).
RootedTree merge_roots(const Forest& f);
/// The root-valence-one factors B(r, t_i) of t = B(r, t_1, ..., t_k).
std::vector<RootedTree> valence_one_factors(const RootedTree& t);

/// All unlabeled rooted trees with n vertices, canonically ordered.
const std::vector<RootedTree>& enumerate_trees(std::size_t n);
/// All trees with 1..n vertices, canonically ordered.
std::vector<RootedTree> trees_up_to(std::size_t n);

/// All multisets of `parts` trees whose sizes add up to `total`.
std::vector<Forest> enumerate_forests(std::size_t total, std::size_t parts);

Integer aut_order(const RootedTree& t);
/// Product of multiplicity factorials over distinct component classes.
Integer aut0_order(const Forest& f);
/// aut0_order(f) times the product of the component automorphism orders.
Integer aut_order(const Forest& f);

}  // namespace naphopf

template <>
struct std::hash<naphopf::RootedTree> {
  std::size_t operator()(const naphopf::RootedTree& t) const noexcept {
    return std::hash<std::string>{}(t.str());
  }
};
