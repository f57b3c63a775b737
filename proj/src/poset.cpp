#include "naphopf/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace naphopf {

FinitePoset FinitePoset::from_covers(std::size_t n, const std::vector<Cover>& covers) {
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (const auto& [a, b] : covers) {
    if (a >= n || b >= n) throw std::out_of_range("cover index out of range");
    leq[a * n + b] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[k * n + j]) leq[i * n + j] = 1;
      }
    }
  }
  return from_relation(n, std::move(leq));
}

FinitePoset FinitePoset::from_relation(std::size_t n, std::vector<std::uint8_t> leq) {
  if (leq.size() != n * n) throw std::invalid_argument("relation has the wrong size");
  FinitePoset p;
  p.n_ = n;
  p.leq_ = std::move(leq);
  if (!p.is_partial_order()) throw std::invalid_argument("relation is not a partial order");
  p.build_covers();
  return p;
}

void FinitePoset::build_covers() {
  covers_.clear();
  up_.assign(n_, {});
  down_.assign(n_, {});
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      if (!less(a, b)) continue;
      bool direct = true;
      for (std::size_t c = 0; c < n_ && direct; ++c) {
        if (less(a, c) && less(c, b)) direct = false;
      }
      if (direct) {
        covers_.emplace_back(a, b);
        up_[a].push_back(b);
        down_[b].push_back(a);
      }
    }
  }
}

bool FinitePoset::is_covered_by(std::size_t a, std::size_t b) const {
  const auto& ups = up_[a];
  return std::find(ups.begin(), ups.end(), b) != ups.end();
}

bool FinitePoset::is_partial_order() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (!leq(i, i)) return false;
    for (std::size_t j = 0; j < n_; ++j) {
      if (i != j && leq(i, j) && leq(j, i)) return false;
      if (!leq(i, j)) continue;
      for (std::size_t k = 0; k < n_; ++k) {
        if (leq(j, k) && !leq(i, k)) return false;
      }
    }
  }
  return true;
}

std::optional<std::size_t> FinitePoset::bottom() const {
  for (std::size_t a = 0; a < n_; ++a) {
    bool below_all = true;
    for (std::size_t b = 0; b < n_ && below_all; ++b) below_all = leq(a, b);
    if (below_all) return a;
  }
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::top() const {
  for (std::size_t a = 0; a < n_; ++a) {
    bool above_all = true;
    for (std::size_t b = 0; b < n_ && above_all; ++b) above_all = leq(b, a);
    if (above_all) return a;
  }
  return std::nullopt;
}

FinitePoset FinitePoset::restrict_to(const std::vector<std::size_t>& elements) const {
  const auto m = elements.size();
  std::vector<std::uint8_t> rel(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) rel[i * m + j] = leq(elements[i], elements[j]);
  }
  return from_relation(m, std::move(rel));
}

FinitePoset FinitePoset::interval(std::size_t lo, std::size_t hi, std::vector<std::size_t>* members) const {
  std::vector<std::size_t> inside;
  for (std::size_t x = 0; x < n_; ++x) {
    if (leq(lo, x) && leq(x, hi)) inside.push_back(x);
  }
  if (members) *members = inside;
  return restrict_to(inside);
}

std::optional<std::size_t> FinitePoset::meet(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> lower;
  for (std::size_t x = 0; x < n_; ++x) {
    if (leq(x, a) && leq(x, b)) lower.push_back(x);
  }
  for (auto m : lower) {
    if (std::all_of(lower.begin(), lower.end(), [&](std::size_t x) { return leq(x, m); })) return m;
  }
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::join(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> upper;
  for (std::size_t x = 0; x < n_; ++x) {
    if (leq(a, x) && leq(b, x)) upper.push_back(x);
  }
  for (auto j : upper) {
    if (std::all_of(upper.begin(), upper.end(), [&](std::size_t x) { return leq(j, x); })) return j;
  }
  return std::nullopt;
}

std::int64_t FinitePoset::mobius(std::size_t lo, std::size_t hi) const {
  if (!leq(lo, hi)) return 0;
  std::vector<std::size_t> members;
  for (std::size_t x = 0; x < n_; ++x) {
    if (leq(lo, x) && leq(x, hi)) members.push_back(x);
  }
  // a linear extension: sort by the number of members below
  std::vector<std::size_t> rank(n_, 0);
  for (auto x : members) {
    for (auto y : members) rank[x] += leq(y, x);
  }
  std::sort(members.begin(), members.end(), [&](auto a, auto b) { return rank[a] < rank[b]; });
  std::vector<std::int64_t> mu(n_, 0);
  for (auto y : members) {
    if (y == lo) {
      mu[y] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (auto x : members) {
      if (less(x, y)) sum += mu[x];
    }
    mu[y] = -sum;
  }
  return mu[hi];
}

FinitePoset product(const FinitePoset& a, const FinitePoset& b) {
  const auto na = a.size();
  const auto nb = b.size();
  const auto n = na * nb;
  std::vector<std::uint8_t> rel(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rel[i * n + j] = a.leq(i / nb, j / nb) && b.leq(i % nb, j % nb);
    }
  }
  return FinitePoset::from_relation(n, std::move(rel));
}

FinitePoset product(const std::vector<FinitePoset>& factors) {
  FinitePoset result = chain_poset(1);
  for (const auto& f : factors) result = product(result, f);
  return result;
}

bool is_totally_semimodular(const FinitePoset& p) {
  for (std::size_t z = 0; z < p.size(); ++z) {
    const auto& ups = p.upper_covers(z);
    for (std::size_t i = 0; i < ups.size(); ++i) {
      for (std::size_t j = i + 1; j < ups.size(); ++j) {
        const auto& above_x = p.upper_covers(ups[i]);
        const bool shared = std::any_of(above_x.begin(), above_x.end(),
                                        [&](std::size_t w) { return p.is_covered_by(ups[j], w); });
        if (!shared) return false;
      }
    }
  }
  return true;
}

bool is_distributive_lattice(const FinitePoset& p) {
  const auto n = p.size();
  if (n == 0) return false;
  std::vector<std::size_t> meet(n * n);
  std::vector<std::size_t> join(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto m = p.meet(a, b);
      auto j = p.join(a, b);
      if (!m || !j) return false;
      meet[a * n + b] = *m;
      join[a * n + b] = *j;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const auto lhs = meet[x * n + join[y * n + z]];
        const auto rhs = join[meet[x * n + y] * n + meet[x * n + z]];
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

namespace {

using Signature = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;

std::vector<Signature> signatures(const FinitePoset& p) {
  std::vector<Signature> out(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) {
    std::size_t below = 0;
    std::size_t above = 0;
    for (std::size_t b = 0; b < p.size(); ++b) {
      below += p.leq(b, a);
      above += p.leq(a, b);
    }
    out[a] = {below, above, p.lower_covers(a).size(), p.upper_covers(a).size()};
  }
  return out;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const FinitePoset& a, const FinitePoset& b) {
  const auto n = a.size();
  if (n != b.size() || a.covers().size() != b.covers().size()) return std::nullopt;
  const auto sig_a = signatures(a);
  const auto sig_b = signatures(b);
  {
    auto sa = sig_a;
    auto sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  // assign elements of `a` from the bottom up
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return sig_a[x] < sig_a[y]; });

  std::vector<std::size_t> map(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t k) {
    if (k == n) return true;
    const auto x = order[k];
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || sig_a[x] != sig_b[y]) continue;
      bool consistent = true;
      for (std::size_t i = 0; i < k && consistent; ++i) {
        const auto u = order[i];
        consistent = a.leq(u, x) == b.leq(map[u], y) && a.leq(x, u) == b.leq(y, map[u]);
      }
      if (!consistent) continue;
      map[x] = y;
      used[y] = true;
      if (extend(k + 1)) return true;
      used[y] = false;
    }
    map[x] = n;
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

bool is_isomorphism(const FinitePoset& a, const FinitePoset& b, const std::vector<std::size_t>& map) {
  const auto n = a.size();
  if (b.size() != n || map.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (auto y : map) {
    if (y >= n || hit[y]) return false;
    hit[y] = true;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (a.leq(x, y) != b.leq(map[x], map[y])) return false;
    }
  }
  return true;
}

std::string to_dot(const FinitePoset& p, const std::vector<std::string>& labels, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  for (std::size_t a = 0; a < p.size(); ++a) {
    out << "  n" << a << " [label=\"" << (a < labels.size() ? labels[a] : std::to_string(a)) << "\"];\n";
  }
  for (const auto& [lo, hi] : p.covers()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

FinitePoset chain_poset(std::size_t n) {
  std::vector<FinitePoset::Cover> covers;
  for (std::size_t i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return FinitePoset::from_covers(n, covers);
}

FinitePoset boolean_lattice(std::size_t atoms) {
  const std::size_t n = std::size_t{1} << atoms;
  std::vector<std::uint8_t> rel(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rel[i * n + j] = (i & j) == i;
  }
  return FinitePoset::from_relation(n, std::move(rel));
}

FinitePoset pentagon() {
  // 0 = bottom, 1 = a, 2 = b, 3 = c, 4 = top
  return FinitePoset::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

FinitePoset diamond_m3() {
  return FinitePoset::from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

}  // namespace naphopf
