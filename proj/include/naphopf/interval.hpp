#pragma once

// Maximal intervals [0, t] of the NAP posets, realized as the lattice of
// sub-rooted trees (root-containing lower ideals) of a fixed labeled
// representative of t.
//
// Orientation is that of [0, t]: the bottom element is the full vertex set
// (the forest of singletons) and the top element is the root alone (t itself).
// An ideal S is covered by S minus one of its non-root leaves.

#include "naphopf/labeled.hpp"
#include "naphopf/poset.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace naphopf {

class IntervalPoset {
 public:
  explicit IntervalPoset(const RootedTree& t);

  const RootedTree& tree() const noexcept { return rep_.shape(); }
  const IndexedTree& representative() const noexcept { return rep_; }
  const std::vector<VertexSet>& elements() const noexcept { return ideals_; }
  const std::vector<FinitePoset::Cover>& covers() const noexcept { return poset_.covers(); }
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }
  std::size_t size() const noexcept { return ideals_.size(); }
  const FinitePoset& poset() const noexcept { return poset_; }

  std::optional<std::size_t> index_of(VertexSet ideal) const;
  Forest forest_below(std::size_t element) const;
  RootedTree theta(std::size_t element) const;
  /// Canonical string of the restriction of t to the ideal.
  std::string element_label(std::size_t element) const;

 private:
  IndexedTree rep_;
  std::vector<VertexSet> ideals_;
  FinitePoset poset_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

inline IntervalPoset interval_of(const RootedTree& t) { return IntervalPoset(t); }

/// Contains the root and every parent of a member.
bool is_ideal(const IndexedTree& rep, VertexSet vertices);

/// Shapes of the branches x_v, v in the ideal: v together with the full
/// subtrees of its children outside the ideal. Throws on an invalid ideal.
Forest forest_below(const RootedTree& t, VertexSet ideal);
/// Shape of t restricted to the ideal. Throws on an invalid ideal.
RootedTree theta_of(const RootedTree& t, VertexSet ideal);

/// Labeled versions on the representative's labels ("1".."n"): the ideal as a
/// labeled tree, and the branch hanging at each of its vertices, so that
/// nap_compose(labeled_theta, labeled_branches) is the representative.
LabeledTree labeled_theta(const IndexedTree& rep, VertexSet ideal);
std::map<Label, LabeledTree> labeled_branches(const IndexedTree& rep, VertexSet ideal);

/// mu(0, t) computed on the ideal lattice.
std::int64_t mobius(const RootedTree& t);
/// (-1)^n for a corolla with n+1 vertices, 0 otherwise.
std::int64_t mobius_closed_form(const RootedTree& t);

bool check_total_semimodularity(const FinitePoset& p);
bool check_total_semimodularity(const IntervalPoset& p);
bool check_distributive_lattice(const FinitePoset& p);
/// Also checks that meet and join are union and intersection of ideals.
bool check_distributive_lattice(const IntervalPoset& p);

/// (beta, gamma) -> number of ideals whose forest_below has class beta and
/// whose theta has class gamma. Singleton trees are dropped from beta (they
/// are units in the Hopf algebra).
using StructureConstants = std::map<std::pair<Forest, RootedTree>, std::uint64_t>;
StructureConstants f_structure_constants(const RootedTree& alpha);

/// Restores the singletons dropped from a structure-constant key so that the
/// forest has exactly `parts` components.
Forest pad_with_singletons(const Forest& beta, std::size_t parts);

std::string to_dot(const IntervalPoset& p);

}  // namespace naphopf
