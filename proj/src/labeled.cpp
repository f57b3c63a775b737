#include "naphopf/labeled.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace naphopf {

LabeledTree::LabeledTree(Label root, std::map<Label, std::vector<Label>> children)
    : root_(std::move(root)), children_(std::move(children)) {
  children_.try_emplace(root_);
  std::map<Label, int> parent_count;
  for (auto& [v, kids] : children_) {
    std::sort(kids.begin(), kids.end());
    for (const auto& c : kids) ++parent_count[c];
  }
  for (const auto& [c, count] : parent_count) {
    children_.try_emplace(c);
    if (count != 1) throw std::invalid_argument("label '" + c + "' has more than one parent");
  }
  if (parent_count.count(root_)) throw std::invalid_argument("root '" + root_ + "' has a parent");
  std::size_t reached = 0;
  std::vector<Label> stack{root_};
  while (!stack.empty()) {
    auto v = std::move(stack.back());
    stack.pop_back();
    ++reached;
    for (const auto& c : children_.at(v)) stack.push_back(c);
  }
  if (reached != children_.size()) throw std::invalid_argument("labeled tree is not connected");
}

LabeledTree LabeledTree::singleton(Label label) { return LabeledTree(std::move(label), {}); }

LabeledTree LabeledTree::from_parents(Label root, const std::map<Label, Label>& parent) {
  std::map<Label, std::vector<Label>> children;
  for (const auto& [v, p] : parent) children[p].push_back(v);
  return LabeledTree(std::move(root), std::move(children));
}

const std::vector<Label>& LabeledTree::children(const Label& v) const {
  auto it = children_.find(v);
  if (it == children_.end()) throw std::out_of_range("unknown label '" + v + "'");
  return it->second;
}

std::optional<Label> LabeledTree::parent(const Label& v) const {
  for (const auto& [p, kids] : children_) {
    if (std::binary_search(kids.begin(), kids.end(), v)) return p;
  }
  return std::nullopt;
}

std::vector<Label> LabeledTree::labels() const {
  std::vector<Label> out;
  out.reserve(children_.size());
  for (const auto& entry : children_) out.push_back(entry.first);
  return out;
}

RootedTree LabeledTree::shape() const {
  std::function<RootedTree(const Label&)> build = [&](const Label& v) {
    std::vector<RootedTree> kids;
    for (const auto& c : children_.at(v)) kids.push_back(build(c));
    return RootedTree::graft(std::move(kids));
  };
  return build(root_);
}

LabeledTree LabeledTree::subtree(const Label& v) const {
  std::map<Label, std::vector<Label>> kids;
  std::vector<Label> stack{v};
  while (!stack.empty()) {
    auto u = std::move(stack.back());
    stack.pop_back();
    const auto& cs = children(u);
    kids[u] = cs;
    stack.insert(stack.end(), cs.begin(), cs.end());
  }
  return LabeledTree(v, std::move(kids));
}

LabeledTree LabeledTree::restrict_to(const std::vector<Label>& vertices) const {
  const std::set<Label> keep(vertices.begin(), vertices.end());
  if (!keep.count(root_)) throw std::invalid_argument("restriction must contain the root");
  std::map<Label, std::vector<Label>> kids;
  for (const auto& v : keep) {
    auto& out = kids[v];
    for (const auto& c : children(v)) {
      if (keep.count(c)) out.push_back(c);
    }
  }
  return LabeledTree(root_, std::move(kids));
}

LabeledTree LabeledTree::relabel(const std::map<Label, Label>& mapping) const {
  auto image = [&](const Label& v) -> const Label& {
    auto it = mapping.find(v);
    if (it == mapping.end()) throw std::invalid_argument("relabeling misses '" + v + "'");
    return it->second;
  };
  std::map<Label, std::vector<Label>> kids;
  for (const auto& [v, cs] : children_) {
    auto& out = kids[image(v)];
    for (const auto& c : cs) out.push_back(image(c));
  }
  if (kids.size() != children_.size()) throw std::invalid_argument("relabeling is not injective");
  return LabeledTree(image(root_), std::move(kids));
}

std::string LabeledTree::str() const {
  std::function<void(const Label&, std::string&)> render = [&](const Label& v, std::string& out) {
    out += v;
    out += ":(";
    bool first = true;
    for (const auto& c : children_.at(v)) {
      if (!first) out.push_back(' ');
      first = false;
      render(c, out);
    }
    out.push_back(')');
  };
  std::string out;
  render(root_, out);
  return out;
}

namespace {

class LabeledParser {
 public:
  explicit LabeledParser(std::string_view text) : text_(text) {}

  Label parse(std::map<Label, std::vector<Label>>& kids) {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ':' && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a label", pos_);
    Label v(text_.substr(start, pos_ - start));
    expect(':');
    expect('(');
    if (!kids.try_emplace(v).second) throw ParseError("repeated label '" + v + "'", start);
    skip_space();
    while (pos_ < text_.size() && text_[pos_] != ')') {
      Label c = parse(kids);
      kids[v].push_back(c);
      skip_space();
    }
    expect(')');
    return v;
  }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing characters after labeled tree", pos_);
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LabeledTree parse_labeled_tree(std::string_view text) {
  LabeledParser parser(text);
  std::map<Label, std::vector<Label>> kids;
  Label root = parser.parse(kids);
  parser.finish();
  std::size_t mentioned = 1;
  for (const auto& entry : kids) mentioned += entry.second.size();
  if (mentioned != kids.size()) throw std::invalid_argument("repeated label in labeled tree");
  return LabeledTree(std::move(root), std::move(kids));
}

LabeledTree nap_compose(const LabeledTree& outer, const std::map<Label, LabeledTree>& subs) {
  std::map<Label, std::vector<Label>> kids;
  for (const auto& i : outer.labels()) {
    auto it = subs.find(i);
    if (it == subs.end()) throw std::invalid_argument("missing substitution for '" + i + "'");
    for (const auto& j : it->second.labels()) {
      if (!kids.try_emplace(j, it->second.children(j)).second) {
        throw std::invalid_argument("label collision on '" + j + "'");
      }
    }
  }
  if (subs.size() != outer.size()) throw std::invalid_argument("substitution for a label outside the outer tree");
  for (const auto& i : outer.labels()) {
    const auto& from = subs.at(i).root();
    for (const auto& c : outer.children(i)) kids[from].push_back(subs.at(c).root());
  }
  return LabeledTree(subs.at(outer.root()).root(), std::move(kids));
}

std::vector<LabeledTree> all_labeled_trees(const std::vector<Label>& labels) {
  std::vector<LabeledTree> out;
  const auto n = labels.size();
  if (n == 0) return out;
  for (std::size_t root = 0; root < n; ++root) {
    // parent[v] for v != root ranges over all other vertices; keep acyclic ones
    std::vector<std::size_t> others;
    for (std::size_t v = 0; v < n; ++v) {
      if (v != root) others.push_back(v);
    }
    std::vector<std::size_t> parent(n, n);
    std::function<void(std::size_t)> assign = [&](std::size_t idx) {
      if (idx == others.size()) {
        for (std::size_t v : others) {
          std::size_t steps = 0;
          std::size_t u = v;
          while (u != root && steps <= n) {
            u = parent[u];
            ++steps;
          }
          if (u != root) return;
        }
        std::map<Label, Label> parents;
        for (std::size_t v : others) parents[labels[v]] = labels[parent[v]];
        out.push_back(LabeledTree::from_parents(labels[root], parents));
        return;
      }
      const auto v = others[idx];
      for (std::size_t p = 0; p < n; ++p) {
        if (p == v) continue;
        parent[v] = p;
        assign(idx + 1);
      }
    };
    assign(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Label> standard_labels(std::size_t n, std::size_t first) {
  std::vector<Label> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(first + i));
  return out;
}

// LabeledForest ----------------------------------------------------------

LabeledForest::LabeledForest(std::vector<LabeledTree> components) : components_(std::move(components)) {
  std::set<Label> seen;
  for (const auto& c : components_) {
    for (const auto& v : c.labels()) {
      if (!seen.insert(v).second) throw std::invalid_argument("label '" + v + "' in two components");
    }
  }
  std::sort(components_.begin(), components_.end(), [](const LabeledTree& a, const LabeledTree& b) {
    return a.labels().front() < b.labels().front();
  });
}

std::vector<std::vector<Label>> LabeledForest::partition() const {
  std::vector<std::vector<Label>> blocks;
  for (const auto& c : components_) blocks.push_back(c.labels());
  return blocks;
}

Forest LabeledForest::shape() const {
  std::vector<RootedTree> trees;
  for (const auto& c : components_) trees.push_back(c.shape());
  return Forest(std::move(trees));
}

std::string LabeledForest::str() const {
  std::string out;
  for (const auto& c : components_) {
    if (!out.empty()) out.push_back(' ');
    out += c.str();
  }
  return out;
}

namespace {

void set_partitions(const std::vector<Label>& labels, std::size_t idx, std::vector<std::vector<Label>>& blocks,
                    const std::function<void(const std::vector<std::vector<Label>>&)>& visit) {
  if (idx == labels.size()) {
    visit(blocks);
    return;
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b].push_back(labels[idx]);
    set_partitions(labels, idx + 1, blocks, visit);
    blocks[b].pop_back();
  }
  blocks.push_back({labels[idx]});
  set_partitions(labels, idx + 1, blocks, visit);
  blocks.pop_back();
}

}  // namespace

std::vector<LabeledForest> all_labeled_forests(const std::vector<Label>& labels) {
  std::vector<LabeledForest> out;
  std::vector<std::vector<Label>> blocks;
  set_partitions(labels, 0, blocks, [&](const std::vector<std::vector<Label>>& partition) {
    std::vector<std::vector<LabeledTree>> choices;
    for (const auto& block : partition) choices.push_back(all_labeled_trees(block));
    std::vector<LabeledTree> current;
    std::function<void(std::size_t)> pick = [&](std::size_t i) {
      if (i == choices.size()) {
        out.emplace_back(current);
        return;
      }
      for (const auto& t : choices[i]) {
        current.push_back(t);
        pick(i + 1);
        current.pop_back();
      }
    };
    pick(0);
  });
  return out;
}

// IndexedTree ------------------------------------------------------------

IndexedTree::IndexedTree(const RootedTree& t, Order order) : shape_(t) {
  const auto n = t.size();
  parent_.assign(n, -1);
  children_.assign(n, {});
  if (order == Order::BreadthFirst) {
    std::deque<std::pair<const RootedTree*, int>> queue{{&shape_, 0}};
    int next = 1;
    root_ = 0;
    while (!queue.empty()) {
      auto [node, idx] = queue.front();
      queue.pop_front();
      for (const auto& c : node->children()) {
        const int child = next++;
        parent_[static_cast<std::size_t>(child)] = idx;
        children_[static_cast<std::size_t>(idx)].push_back(child);
        queue.emplace_back(&c, child);
      }
    }
  } else {
    int next = 0;
    std::function<int(const RootedTree&)> visit = [&](const RootedTree& node) {
      std::vector<int> kids;
      for (auto it = node.children().rbegin(); it != node.children().rend(); ++it) kids.push_back(visit(*it));
      const int idx = next++;
      for (int c : kids) parent_[static_cast<std::size_t>(c)] = idx;
      children_[static_cast<std::size_t>(idx)] = std::move(kids);
      return idx;
    };
    root_ = visit(shape_);
  }
}

RootedTree IndexedTree::subtree_shape(int v) const {
  std::vector<RootedTree> kids;
  for (int c : children(v)) kids.push_back(subtree_shape(c));
  return RootedTree::graft(std::move(kids));
}

RootedTree IndexedTree::restricted_shape(int v, VertexSet vertices) const {
  std::vector<RootedTree> kids;
  for (int c : children(v)) {
    if (vertices >> c & 1U) kids.push_back(restricted_shape(c, vertices));
  }
  return RootedTree::graft(std::move(kids));
}

LabeledTree IndexedTree::to_labeled(std::size_t first) const {
  std::map<Label, std::vector<Label>> kids;
  for (std::size_t v = 0; v < size(); ++v) {
    auto& out = kids[label(static_cast<int>(v), first)];
    for (int c : children_[v]) out.push_back(label(c, first));
  }
  return LabeledTree(label(root_, first), std::move(kids));
}

namespace {

RootedTree compose_at(const IndexedTree& outer, const std::vector<RootedTree>& inner, int v) {
  const auto& sub = inner[static_cast<std::size_t>(v)];
  std::vector<RootedTree> kids = sub.children();
  for (int c : outer.children(v)) kids.push_back(compose_at(outer, inner, c));
  return RootedTree::graft(std::move(kids));
}

}  // namespace

RootedTree nap_compose_shape(const IndexedTree& outer, const std::vector<RootedTree>& inner) {
  if (inner.size() != outer.size()) throw std::invalid_argument("one inner tree per outer vertex is required");
  return compose_at(outer, inner, outer.root());
}

LabeledTree canonical_labeling(const RootedTree& t, std::size_t first) {
  return IndexedTree(t).to_labeled(first);
}

}  // namespace naphopf
