#pragma once

// Labeled rooted trees (elements of NAP(I)), labeled forests (elements of
// Pi_NAP(I)), NAP composition, and vertex-indexed views of unlabeled trees.

#include "naphopf/tree.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace naphopf {

using Label = std::string;

class LabeledTree {
 public:
  /// `children` may omit leaves. Throws std::invalid_argument unless the data
  /// describe a tree rooted at `root` (every non-root label has exactly one
  /// parent, everything is reachable from the root).
  LabeledTree(Label root, std::map<Label, std::vector<Label>> children);

  static LabeledTree singleton(Label label);
  static LabeledTree from_parents(Label root, const std::map<Label, Label>& parent);

  const Label& root() const noexcept { return root_; }
  const std::vector<Label>& children(const Label& v) const;
  std::optional<Label> parent(const Label& v) const;
  /// Sorted label set.
  std::vector<Label> labels() const;
  std::size_t size() const noexcept { return children_.size(); }
  bool contains(const Label& v) const { return children_.count(v) != 0; }

  RootedTree shape() const;
  /// Subtree hanging at v (v and all its descendants).
  LabeledTree subtree(const Label& v) const;
  /// Restriction to a vertex set containing the root and closed under parents.
  LabeledTree restrict_to(const std::vector<Label>& vertices) const;
  /// `mapping` must be a bijection defined on every label.
  LabeledTree relabel(const std::map<Label, Label>& mapping) const;

  /// `label:(child child ...)`, children in label order.
  std::string str() const;

  friend bool operator==(const LabeledTree& a, const LabeledTree& b) {
    return a.root_ == b.root_ && a.children_ == b.children_;
  }
  friend bool operator<(const LabeledTree& a, const LabeledTree& b) {
    if (a.root_ != b.root_) return a.root_ < b.root_;
    return a.children_ < b.children_;
  }

 private:
  Label root_;
  std::map<Label, std::vector<Label>> children_;  // every vertex has an entry
};

LabeledTree parse_labeled_tree(std::string_view text);

/// NAP composition: the substituted trees are joined by an edge between
/// root(subs[i]) and root(subs[i']) for every edge (i, i') of `outer`.
/// Throws std::invalid_argument on a missing substitution or label collision.
LabeledTree nap_compose(const LabeledTree& outer, const std::map<Label, LabeledTree>& subs);

/// All labeled rooted trees on the given label set (n^{n-1} of them), found by
/// filtering all parent assignments.
std::vector<LabeledTree> all_labeled_trees(const std::vector<Label>& labels);

/// Standard ground set "1".."n".
std::vector<Label> standard_labels(std::size_t n, std::size_t first = 1);

/// A set of labeled trees with pairwise disjoint label sets.
class LabeledForest {
 public:
  explicit LabeledForest(std::vector<LabeledTree> components);

  /// Components ordered by least label.
  const std::vector<LabeledTree>& components() const noexcept { return components_; }
  /// Blocks of the induced partition, in component order.
  std::vector<std::vector<Label>> partition() const;
  Forest shape() const;
  std::string str() const;

  friend bool operator==(const LabeledForest& a, const LabeledForest& b) {
    return a.components_ == b.components_;
  }

 private:
  std::vector<LabeledTree> components_;
};

/// All labeled forests on the label set ((n+1)^{n-1} of them).
std::vector<LabeledForest> all_labeled_forests(const std::vector<Label>& labels);

using VertexSet = std::uint64_t;

/// Vertex-indexed view of an unlabeled tree: vertices 0..n-1 with a parent
/// array. Used as the fixed labeled representative r(t).
class IndexedTree {
 public:
  enum class Order {
    BreadthFirst,      // root is 0, levels in canonical child order
    ReversePostorder,  // children visited in reverse order, root last
  };

  explicit IndexedTree(const RootedTree& t, Order order = Order::BreadthFirst);

  std::size_t size() const noexcept { return parent_.size(); }
  int root() const noexcept { return root_; }
  int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& children(int v) const { return children_[static_cast<std::size_t>(v)]; }
  const RootedTree& shape() const noexcept { return shape_; }

  /// Shape of the subtree hanging at v.
  RootedTree subtree_shape(int v) const;
  /// Shape of the restriction to `vertices`; v must be in the set.
  RootedTree restricted_shape(int v, VertexSet vertices) const;

  /// Labels are first, first+1, ... by vertex index.
  LabeledTree to_labeled(std::size_t first = 1) const;
  Label label(int v, std::size_t first = 1) const { return std::to_string(static_cast<std::size_t>(v) + first); }

 private:
  RootedTree shape_;
  int root_ = 0;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
};

/// Class of the NAP composition of the representative `outer` with inner[v]
/// substituted at vertex v, computed on shapes: the branch at root(inner[v])
/// keeps the children of inner[v] and gains the composed children of v.
RootedTree nap_compose_shape(const IndexedTree& outer, const std::vector<RootedTree>& inner);

/// r(t): labels "1".."n" in breadth-first canonical order.
LabeledTree canonical_labeling(const RootedTree& t, std::size_t first = 1);

}  // namespace naphopf
