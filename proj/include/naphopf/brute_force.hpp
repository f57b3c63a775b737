#pragma once

// The poset Pi_P(I) computed straight from its definition: x <= y iff some
// theta in Pi_P(pi_x) satisfies theta o x = y. Exponential; meant as an
// oracle for small ground sets.

#include "naphopf/operad.hpp"
#include "naphopf/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace naphopf {

/// An element of Pi_P(I): one structure per block, blocks ordered by least label.
template <SetOperad P>
using StructuredPartition = std::vector<typename P::Structure>;

template <SetOperad P>
std::string render_partition(const StructuredPartition<P>& x) {
  std::string out;
  for (const auto& block : x) {
    if (!out.empty()) out.push_back(' ');
    out += P::render(block);
  }
  return out;
}

/// Name used for a block when blocks themselves become labels.
inline Label block_name(const std::vector<Label>& block) {
  std::string out = "{";
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i) out.push_back(',');
    out += block[i];
  }
  out.push_back('}');
  return out;
}

template <SetOperad P>
Label least_label(const typename P::Structure& s) {
  const auto labels = P::labels(s);
  return *std::min_element(labels.begin(), labels.end());
}

template <SetOperad P>
void sort_blocks(StructuredPartition<P>& x) {
  std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return least_label<P>(a) < least_label<P>(b); });
}

template <SetOperad P>
std::vector<StructuredPartition<P>> all_structured_partitions(const std::vector<Label>& labels) {
  std::vector<StructuredPartition<P>> out;
  std::vector<std::vector<Label>> blocks;
  std::function<void(std::size_t)> split = [&](std::size_t idx) {
    if (idx == labels.size()) {
      std::vector<std::vector<typename P::Structure>> choices;
      for (const auto& b : blocks) choices.push_back(P::structures(b));
      StructuredPartition<P> current;
      std::function<void(std::size_t)> pick = [&](std::size_t i) {
        if (i == choices.size()) {
          auto sorted = current;
          sort_blocks<P>(sorted);
          out.push_back(std::move(sorted));
          return;
        }
        for (const auto& s : choices[i]) {
          current.push_back(s);
          pick(i + 1);
          current.pop_back();
        }
      };
      pick(0);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(labels[idx]);
      split(idx + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({labels[idx]});
    split(idx + 1);
    blocks.pop_back();
  };
  if (!labels.empty()) split(0);
  return out;
}

template <SetOperad P>
class BruteForcePoset {
 public:
  using Structure = typename P::Structure;
  using Element = StructuredPartition<P>;

  explicit BruteForcePoset(std::vector<Label> ground, std::size_t limit = 4) : ground_(std::move(ground)) {
    if (ground_.size() > limit) {
      throw std::invalid_argument("brute-force poset on " + std::to_string(ground_.size()) +
                                  " labels exceeds the limit of " + std::to_string(limit));
    }
    std::sort(ground_.begin(), ground_.end());
    elements_ = all_structured_partitions<P>(ground_);
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(render_partition<P>(elements_[i]), i);

    const auto n = elements_.size();
    std::vector<std::uint8_t> rel(n * n, 0);
    theta_.assign(n, {});
    for (std::size_t x = 0; x < n; ++x) {
      for (const auto& a : all_structured_partitions<P>(block_names(x))) {
        const auto y = *index_of(compose(a, x));
        if (rel[x * n + y]) basic_ = false;
        rel[x * n + y] = 1;
        theta_[x].emplace(y, a);
      }
    }
    order_ = FinitePoset::from_relation(n, std::move(rel));
    for (std::size_t x = 0; x < n; ++x) {
      if (elements_[x].size() == ground_.size()) bottom_ = x;
    }
  }

  const std::vector<Label>& ground() const noexcept { return ground_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const FinitePoset& order() const noexcept { return order_; }
  bool leq(std::size_t x, std::size_t y) const { return order_.leq(x, y); }
  /// The all-singletons element.
  std::size_t bottom() const noexcept { return bottom_; }
  /// False if some pair x <= y admits two different theta.
  bool is_basic() const noexcept { return basic_; }

  std::optional<std::size_t> index_of(const Element& e) const {
    auto it = index_.find(render_partition<P>(e));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::string render(std::size_t x) const { return render_partition<P>(elements_.at(x)); }

  /// pi_x with every block turned into a label.
  std::vector<Label> block_names(std::size_t x) const {
    std::vector<Label> names;
    for (const auto& s : elements_.at(x)) names.push_back(block_name(P::labels(s)));
    std::sort(names.begin(), names.end());
    return names;
  }

  /// theta(x, y) in Pi_P(pi_x), when x <= y.
  std::optional<Element> theta(std::size_t x, std::size_t y) const {
    auto it = theta_.at(x).find(y);
    if (it == theta_.at(x).end()) return std::nullopt;
    return it->second;
  }

  /// a o x for a in Pi_P(pi_x).
  Element compose(const Element& a, std::size_t x) const {
    std::map<Label, Structure> by_name;
    for (const auto& s : elements_.at(x)) by_name.emplace(block_name(P::labels(s)), s);
    Element out;
    for (const auto& outer : a) {
      std::map<Label, Structure> subs;
      for (const auto& name : P::labels(outer)) subs.emplace(name, by_name.at(name));
      out.push_back(P::compose(outer, subs));
    }
    sort_blocks<P>(out);
    return out;
  }

 private:
  std::vector<Label> ground_;
  std::vector<Element> elements_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::map<std::size_t, Element>> theta_;
  FinitePoset order_;
  std::size_t bottom_ = 0;
  bool basic_ = true;
};

template <SetOperad P>
BruteForcePoset<P> brute_force_pi(const P&, std::size_t n, std::size_t limit = 4) {
  return BruteForcePoset<P>(standard_labels(n), limit);
}

}  // namespace naphopf
