#include "naphopf/tree.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

namespace naphopf {

struct RootedTree::Node {
  std::vector<RootedTree> children;
  std::string canonical;
  std::size_t size = 1;
};

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " at byte " + std::to_string(offset)), offset_(offset) {}

namespace {

const std::shared_ptr<const RootedTree::Node>& leaf_node();

}  // namespace

RootedTree::RootedTree() : node_(leaf_node()) {}

RootedTree RootedTree::graft(std::vector<RootedTree> children) {
  if (children.empty()) return RootedTree();
  std::sort(children.begin(), children.end());
  auto node = std::make_shared<Node>();
  node->canonical.push_back('(');
  for (const auto& c : children) {
    node->canonical += c.str();
    node->size += c.size();
  }
  node->canonical.push_back(')');
  node->children = std::move(children);
  return RootedTree(std::move(node));
}

const std::vector<RootedTree>& RootedTree::children() const noexcept { return node_->children; }
std::size_t RootedTree::size() const noexcept { return node_->size; }
const std::string& RootedTree::str() const noexcept { return node_->canonical; }

bool RootedTree::is_corolla() const noexcept {
  return std::all_of(children().begin(), children().end(),
                     [](const RootedTree& c) { return c.is_single_vertex(); });
}

bool RootedTree::is_chain() const noexcept {
  if (children().empty()) return true;
  return children().size() == 1 && children().front().is_chain();
}

bool operator==(const RootedTree& a, const RootedTree& b) noexcept {
  return a.node_ == b.node_ || (a.size() == b.size() && a.str() == b.str());
}

bool operator<(const RootedTree& a, const RootedTree& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.str() < b.str();
}

namespace {

const std::shared_ptr<const RootedTree::Node>& leaf_node() {
  static const std::shared_ptr<const RootedTree::Node> leaf = [] {
    auto node = std::make_shared<RootedTree::Node>();
    node->canonical = "()";
    return node;
  }();
  return leaf;
}

}  // namespace

// Forest -----------------------------------------------------------------

Forest::Forest(std::vector<RootedTree> components) : components_(std::move(components)) {
  std::sort(components_.begin(), components_.end());
}

std::size_t Forest::size() const noexcept {
  std::size_t total = 0;
  for (const auto& t : components_) total += t.size();
  return total;
}

std::string Forest::str() const {
  std::string out;
  for (const auto& t : components_) {
    if (!out.empty()) out.push_back(' ');
    out += t.str();
  }
  return out;
}

Forest Forest::without_singletons() const {
  std::vector<RootedTree> kept;
  for (const auto& t : components_) {
    if (!t.is_single_vertex()) kept.push_back(t);
  }
  return Forest(std::move(kept));
}

Forest operator*(const Forest& a, const Forest& b) {
  std::vector<RootedTree> all = a.components_;
  all.insert(all.end(), b.components_.begin(), b.components_.end());
  return Forest(std::move(all));
}

bool operator==(const Forest& a, const Forest& b) noexcept { return a.components_ == b.components_; }

bool operator<(const Forest& a, const Forest& b) noexcept {
  const auto sa = a.size();
  const auto sb = b.size();
  if (sa != sb) return sa < sb;
  if (a.count() != b.count()) return a.count() < b.count();
  return std::lexicographical_compare(a.components_.begin(), a.components_.end(),
                                      b.components_.begin(), b.components_.end());
}

// Parsing ----------------------------------------------------------------

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  RootedTree parse_one() {
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input, expected '('", pos_);
    if (text_[pos_] != '(') throw ParseError(std::string("expected '(' but found '") + text_[pos_] + "'", pos_);
    ++pos_;
    std::vector<RootedTree> children;
    while (pos_ < text_.size() && text_[pos_] == '(') children.push_back(parse_one());
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input, expected ')'", pos_);
    if (text_[pos_] != ')') throw ParseError(std::string("expected ')' but found '") + text_[pos_] + "'", pos_);
    ++pos_;
    return RootedTree::graft(std::move(children));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RootedTree parse_tree(std::string_view text) {
  TreeParser parser(text);
  RootedTree t = parser.parse_one();
  if (!parser.at_end()) throw ParseError("trailing characters after tree", parser.pos());
  return t;
}

Forest parse_forest(std::string_view text) {
  TreeParser parser(text);
  std::vector<RootedTree> trees;
  parser.skip_space();
  while (!parser.at_end()) {
    trees.push_back(parser.parse_one());
    parser.skip_space();
  }
  return Forest(std::move(trees));
}

// Constructors -----------------------------------------------------------

RootedTree single_vertex() { return RootedTree(); }

RootedTree chain(std::size_t vertices) {
  if (vertices == 0) throw std::invalid_argument("chain needs at least one vertex");
  RootedTree t;
  for (std::size_t i = 1; i < vertices; ++i) t = RootedTree::graft({t});
  return t;
}

RootedTree corolla(std::size_t leaves) {
  return RootedTree::graft(std::vector<RootedTree>(leaves, RootedTree()));
}

RootedTree graft_onto(const RootedTree& s, const RootedTree& t) {
  auto children = s.children();
  children.push_back(t);
  return RootedTree::graft(std::move(children));
}

RootedTree merge_roots(const RootedTree& a, const RootedTree& b) {
  auto children = a.children();
  children.insert(children.end(), b.children().begin(), b.children().end());
  return RootedTree::graft(std::move(children));
}

RootedTree merge_roots(const Forest& f) {
  std::vector<RootedTree> children;
  for (const auto& t : f.components()) {
    children.insert(children.end(), t.children().begin(), t.children().end());
  }
  return RootedTree::graft(std::move(children));
}

std::vector<RootedTree> valence_one_factors(const RootedTree& t) {
  std::vector<RootedTree> out;
  out.reserve(t.children().size());
  for (const auto& c : t.children()) out.push_back(RootedTree::graft({c}));
  return out;
}

// Enumeration ------------------------------------------------------------

namespace {

void collect_multisets(const std::vector<RootedTree>& pool, std::size_t start, std::size_t remaining,
                       std::vector<RootedTree>& current, std::vector<RootedTree>& out) {
  if (remaining == 0) {
    out.push_back(RootedTree::graft(current));
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    if (pool[i].size() > remaining) break;
    current.push_back(pool[i]);
    collect_multisets(pool, i, remaining - pool[i].size(), current, out);
    current.pop_back();
  }
}

}  // namespace

const std::vector<RootedTree>& enumerate_trees(std::size_t n) {
  if (n == 0) throw std::invalid_argument("trees have at least one vertex");
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<RootedTree>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<RootedTree> result;
  if (n == 1) {
    result.emplace_back();
  } else {
    // Child multisets of total size n-1, drawn in canonical order so each
    // multiset is produced once.
    const auto pool = trees_up_to(n - 1);
    std::vector<RootedTree> current;
    collect_multisets(pool, 0, n - 1, current, result);
    std::sort(result.begin(), result.end());
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(result)).first->second;
}

std::vector<RootedTree> trees_up_to(std::size_t n) {
  std::vector<RootedTree> all;
  for (std::size_t k = 1; k <= n; ++k) {
    const auto& level = enumerate_trees(k);
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

namespace {

void collect_forests(const std::vector<RootedTree>& pool, std::size_t start, std::size_t total,
                     std::size_t parts, std::vector<RootedTree>& current, std::vector<Forest>& out) {
  if (parts == 0) {
    if (total == 0) out.emplace_back(current);
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    const auto s = pool[i].size();
    // every remaining part needs at least one vertex
    if (s + (parts - 1) > total) break;
    current.push_back(pool[i]);
    collect_forests(pool, i, total - s, parts - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Forest> enumerate_forests(std::size_t total, std::size_t parts) {
  std::vector<Forest> out;
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  if (total < parts) return out;
  const auto pool = trees_up_to(total - parts + 1);
  std::vector<RootedTree> current;
  collect_forests(pool, 0, total, parts, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

// Automorphisms ----------------------------------------------------------

Integer aut_order(const RootedTree& t) {
  Integer result = 1;
  const auto& kids = t.children();
  for (std::size_t i = 0; i < kids.size();) {
    std::size_t j = i;
    while (j < kids.size() && kids[j] == kids[i]) ++j;
    const auto multiplicity = j - i;
    Integer child_aut = aut_order(kids[i]);
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), child_aut.get_mpz_t(), multiplicity);
    result *= factorial(multiplicity) * power;
    i = j;
  }
  return result;
}

Integer aut0_order(const Forest& f) {
  Integer result = 1;
  const auto& parts = f.components();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    result *= factorial(j - i);
    i = j;
  }
  return result;
}

Integer aut_order(const Forest& f) {
  Integer result = aut0_order(f);
  for (const auto& t : f.components()) result *= aut_order(t);
  return result;
}

}  // namespace naphopf
