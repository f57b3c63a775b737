#include "naphopf/interval.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace naphopf {

namespace {

constexpr std::size_t kMaxVertices = 64;

VertexSet bit(int v) { return VertexSet{1} << v; }

void check_size(const RootedTree& t) {
  if (t.size() > kMaxVertices) throw std::invalid_argument("interval posets are limited to 64 vertices");
}

void require_ideal(const IndexedTree& rep, VertexSet ideal) {
  if (!is_ideal(rep, ideal)) throw std::invalid_argument("vertex set is not a sub-rooted tree");
}

RootedTree branch_shape(const IndexedTree& rep, int v, VertexSet ideal) {
  std::vector<RootedTree> kids;
  for (int c : rep.children(v)) {
    if (!(ideal & bit(c))) kids.push_back(rep.subtree_shape(c));
  }
  return RootedTree::graft(std::move(kids));
}

Forest branches(const IndexedTree& rep, VertexSet ideal) {
  std::vector<RootedTree> parts;
  for (std::size_t v = 0; v < rep.size(); ++v) {
    if (ideal & bit(static_cast<int>(v))) parts.push_back(branch_shape(rep, static_cast<int>(v), ideal));
  }
  return Forest(std::move(parts));
}

}  // namespace

bool is_ideal(const IndexedTree& rep, VertexSet vertices) {
  const auto n = rep.size();
  if (n < kMaxVertices && (vertices >> n) != 0) return false;
  if (!(vertices & bit(rep.root()))) return false;
  for (std::size_t v = 0; v < n; ++v) {
    const int u = static_cast<int>(v);
    if ((vertices & bit(u)) && u != rep.root() && !(vertices & bit(rep.parent(u)))) return false;
  }
  return true;
}

IntervalPoset::IntervalPoset(const RootedTree& t) : rep_((check_size(t), t)) {
  // ideals grow outward from the root in breadth-first order, so a vertex is
  // decided after its parent
  const auto n = rep_.size();
  std::function<void(std::size_t, VertexSet)> grow = [&](std::size_t v, VertexSet current) {
    if (v == n) {
      ideals_.push_back(current);
      return;
    }
    const int u = static_cast<int>(v);
    grow(v + 1, current);
    if (current & bit(rep_.parent(u))) grow(v + 1, current | bit(u));
  };
  grow(1, bit(rep_.root()));
  // larger sets first: the bottom of [0, t] comes first
  std::sort(ideals_.begin(), ideals_.end(), [](VertexSet a, VertexSet b) {
    const auto pa = std::popcount(a);
    const auto pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });

  std::vector<FinitePoset::Cover> covers;
  for (std::size_t i = 0; i < ideals_.size(); ++i) {
    const auto ideal = ideals_[i];
    for (std::size_t v = 0; v < n; ++v) {
      const int u = static_cast<int>(v);
      if (u == rep_.root() || !(ideal & bit(u))) continue;
      const auto& kids = rep_.children(u);
      const bool leaf = std::none_of(kids.begin(), kids.end(), [&](int c) { return ideal & bit(c); });
      if (leaf) covers.emplace_back(i, *index_of(ideal & ~bit(u)));
    }
  }
  poset_ = FinitePoset::from_covers(ideals_.size(), covers);
  bottom_ = 0;
  top_ = ideals_.size() - 1;
}

std::optional<std::size_t> IntervalPoset::index_of(VertexSet ideal) const {
  auto it = std::find(ideals_.begin(), ideals_.end(), ideal);
  if (it == ideals_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ideals_.begin());
}

Forest IntervalPoset::forest_below(std::size_t element) const { return branches(rep_, ideals_.at(element)); }

RootedTree IntervalPoset::theta(std::size_t element) const {
  return rep_.restricted_shape(rep_.root(), ideals_.at(element));
}

std::string IntervalPoset::element_label(std::size_t element) const { return theta(element).str(); }

Forest forest_below(const RootedTree& t, VertexSet ideal) {
  check_size(t);
  IndexedTree rep(t);
  require_ideal(rep, ideal);
  return branches(rep, ideal);
}

RootedTree theta_of(const RootedTree& t, VertexSet ideal) {
  check_size(t);
  IndexedTree rep(t);
  require_ideal(rep, ideal);
  return rep.restricted_shape(rep.root(), ideal);
}

LabeledTree labeled_theta(const IndexedTree& rep, VertexSet ideal) {
  require_ideal(rep, ideal);
  std::map<Label, std::vector<Label>> kids;
  for (std::size_t v = 0; v < rep.size(); ++v) {
    const int u = static_cast<int>(v);
    if (!(ideal & bit(u))) continue;
    auto& out = kids[rep.label(u)];
    for (int c : rep.children(u)) {
      if (ideal & bit(c)) out.push_back(rep.label(c));
    }
  }
  return LabeledTree(rep.label(rep.root()), std::move(kids));
}

std::map<Label, LabeledTree> labeled_branches(const IndexedTree& rep, VertexSet ideal) {
  require_ideal(rep, ideal);
  std::map<Label, LabeledTree> out;
  for (std::size_t v = 0; v < rep.size(); ++v) {
    const int u = static_cast<int>(v);
    if (!(ideal & bit(u))) continue;
    std::map<Label, std::vector<Label>> kids;
    std::vector<int> stack;
    kids[rep.label(u)];
    for (int c : rep.children(u)) {
      if (!(ideal & bit(c))) {
        kids[rep.label(u)].push_back(rep.label(c));
        stack.push_back(c);
      }
    }
    while (!stack.empty()) {
      const int w = stack.back();
      stack.pop_back();
      auto& out_kids = kids[rep.label(w)];
      for (int c : rep.children(w)) {
        out_kids.push_back(rep.label(c));
        stack.push_back(c);
      }
    }
    out.emplace(rep.label(u), LabeledTree(rep.label(u), std::move(kids)));
  }
  return out;
}

std::int64_t mobius(const RootedTree& t) {
  const IntervalPoset p(t);
  return p.poset().mobius(p.bottom(), p.top());
}

std::int64_t mobius_closed_form(const RootedTree& t) {
  if (!t.is_corolla()) return 0;
  return t.root_valence() % 2 == 0 ? 1 : -1;
}

bool check_total_semimodularity(const FinitePoset& p) { return is_totally_semimodular(p); }
bool check_total_semimodularity(const IntervalPoset& p) { return is_totally_semimodular(p.poset()); }
bool check_distributive_lattice(const FinitePoset& p) { return is_distributive_lattice(p); }

bool check_distributive_lattice(const IntervalPoset& p) {
  const auto& order = p.poset();
  const auto& ideals = p.elements();
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      const auto m = order.meet(a, b);
      const auto j = order.join(a, b);
      if (!m || !j) return false;
      // going up removes vertices: meet is the union, join the intersection
      if (ideals[*m] != (ideals[a] | ideals[b])) return false;
      if (ideals[*j] != (ideals[a] & ideals[b])) return false;
    }
  }
  return is_distributive_lattice(order);
}

StructureConstants f_structure_constants(const RootedTree& alpha) {
  const IntervalPoset p(alpha);
  StructureConstants out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    ++out[{p.forest_below(i).without_singletons(), p.theta(i)}];
  }
  return out;
}

Forest pad_with_singletons(const Forest& beta, std::size_t parts) {
  if (beta.count() > parts) throw std::invalid_argument("forest already has more components than requested");
  std::vector<RootedTree> all = beta.components();
  all.resize(parts, RootedTree());
  return Forest(std::move(all));
}

std::string to_dot(const IntervalPoset& p) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < p.size(); ++i) labels.push_back(p.element_label(i));
  return to_dot(p.poset(), labels, "interval " + p.tree().str());
}

}  // namespace naphopf
