#include "naphopf/series.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace naphopf {

namespace {

using Terms = std::vector<std::pair<RootedTree, Rational>>;

Terms terms_of(const TreeSeries& a) { return {a.coeffs().begin(), a.coeffs().end()}; }

// coeff * t x b for the single tree t: every assignment of terms of b to the
// vertices of the representative, truncated at n vertices.
void substitute_tree(const IndexedTree& rep, const Terms& b, std::size_t n, const Rational& coeff, TreeSeries& out) {
  const std::size_t m = rep.size();
  if (m > n) return;
  std::vector<RootedTree> inner;
  inner.reserve(m);
  std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t budget, const Rational& weight) {
    if (inner.size() == m) {
      out.add(nap_compose_shape(rep, inner), weight);
      return;
    }
    const std::size_t reserve = m - inner.size() - 1;
    for (const auto& [u, c] : b) {
      if (u.size() + reserve > budget) break;
      inner.push_back(u);
      rec(budget - u.size(), weight * c);
      inner.pop_back();
    }
  };
  rec(n, coeff);
}

void require_group(const TreeSeries& a, const char* what) {
  if (!a.is_group_element()) {
    throw std::invalid_argument(std::string(what) + " is not a group element (single-vertex coefficient must be 1)");
  }
}

}  // namespace

// ---- TreeSeries ----

TreeSeries::TreeSeries(std::size_t truncation) : truncation_(truncation) {
  if (truncation == 0) throw std::invalid_argument("truncation must be at least 1");
}

TreeSeries::TreeSeries(std::size_t truncation, const Coeffs& coeffs) : TreeSeries(truncation) {
  for (const auto& [t, c] : coeffs) set(t, c);
}

Rational TreeSeries::coefficient(const RootedTree& t) const {
  auto it = coeffs_.find(t);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void TreeSeries::set(const RootedTree& t, const Rational& value) {
  if (t.size() > truncation_) {
    throw std::invalid_argument("tree " + t.str() + " exceeds truncation " + std::to_string(truncation_));
  }
  if (value == 0) {
    coeffs_.erase(t);
  } else {
    coeffs_[t] = value;
  }
}

void TreeSeries::add(const RootedTree& t, const Rational& value) {
  if (t.size() > truncation_ || value == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(t, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) coeffs_.erase(it);
  }
}

bool TreeSeries::is_group_element() const { return coefficient(single_vertex()) == 1; }

TreeSeries TreeSeries::truncated(std::size_t n) const {
  TreeSeries out(n);
  for (const auto& [t, c] : coeffs_) out.add(t, c);
  return out;
}

TreeSeries& TreeSeries::operator+=(const TreeSeries& other) {
  truncation_ = std::min(truncation_, other.truncation_);
  *this = truncated(truncation_);
  for (const auto& [t, c] : other.coeffs_) add(t, c);
  return *this;
}

TreeSeries& TreeSeries::operator-=(const TreeSeries& other) {
  truncation_ = std::min(truncation_, other.truncation_);
  *this = truncated(truncation_);
  for (const auto& [t, c] : other.coeffs_) add(t, -c);
  return *this;
}

TreeSeries& TreeSeries::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
  } else {
    for (auto& [t, c] : coeffs_) c *= s;
  }
  return *this;
}

bool operator==(const TreeSeries& a, const TreeSeries& b) {
  const auto n = std::min(a.truncation(), b.truncation());
  return a.truncated(n).coeffs() == b.truncated(n).coeffs();
}

TreeSeries epsilon(std::size_t truncation) { return monomial_series(truncation, single_vertex()); }

TreeSeries monomial_series(std::size_t truncation, const RootedTree& t, const Rational& coeff) {
  TreeSeries out(truncation);
  out.set(t, coeff);
  return out;
}

// ---- group law ----

TreeSeries substitute(const TreeSeries& a, const TreeSeries& b, Representative rep) {
  const auto n = std::min(a.truncation(), b.truncation());
  const Terms inner = terms_of(b);
  TreeSeries out(n);
  for (const auto& [t, c] : a.coeffs()) {
    if (t.size() > n) continue;
    substitute_tree(IndexedTree(t, rep), inner, n, c, out);
  }
  return out;
}

TreeSeries series_multiply(const TreeSeries& a, const TreeSeries& b, Representative rep) {
  require_group(a, "left factor");
  require_group(b, "right factor");
  return substitute(a, b, rep);
}

TreeSeries series_inverse(const TreeSeries& a) {
  require_group(a, "argument");
  const auto n = a.truncation();
  const Terms inner = terms_of(a);
  TreeSeries h(n);
  TreeSeries acc(n);
  for (std::size_t s = 1; s <= n; ++s) {
    const auto& level = enumerate_trees(s);
    for (const auto& c : level) h.set(c, Rational(s == 1 ? 1 : 0) - acc.coefficient(c));
    for (const auto& c : level) {
      const auto hc = h.coefficient(c);
      if (hc != 0) substitute_tree(IndexedTree(c), inner, n, hc, acc);
    }
  }
  if (!(substitute(a, h) == epsilon(n))) throw std::logic_error("left inverse is not a right inverse");
  return h;
}

TreeSeries series_graft(const TreeSeries& a, const TreeSeries& b) {
  const auto n = std::min(a.truncation(), b.truncation());
  TreeSeries out(n);
  for (const auto& [s, cs] : a.coeffs()) {
    for (const auto& [t, ct] : b.coeffs()) {
      if (s.size() + t.size() <= n) out.add(graft_onto(s, t), cs * ct);
    }
  }
  return out;
}

TreeSeries pre_lie(const TreeSeries& x, const TreeSeries& y) {
  const auto n = std::min(x.truncation(), y.truncation());
  TreeSeries out(n);
  for (const auto& [s, cs] : x.coeffs()) {
    const IndexedTree rep(s);
    for (const auto& [t, ct] : y.coeffs()) {
      if (s.size() + t.size() - 1 > n) continue;
      std::vector<RootedTree> inner(s.size(), single_vertex());
      for (std::size_t i = 0; i < s.size(); ++i) {
        inner[i] = t;
        out.add(nap_compose_shape(rep, inner), cs * ct);
        inner[i] = single_vertex();
      }
    }
  }
  return out;
}

TreeSeries lie_bracket(const TreeSeries& a, const TreeSeries& b) { return pre_lie(a, b) - pre_lie(b, a); }

// ---- named series ----

TreeSeries zeta_series(std::size_t n) {
  TreeSeries out(n);
  for (const auto& t : trees_up_to(n)) out.set(t, Rational(1) / Rational(aut_order(t)));
  return out;
}

TreeSeries mobius_series(std::size_t n) {
  TreeSeries out(n);
  for (std::size_t leaves = 0; leaves < n; ++leaves) {
    out.set(corolla(leaves), Rational(leaves % 2 == 0 ? 1 : -1) / Rational(factorial(leaves)));
  }
  return out;
}

TreeSeries corolla_series(std::size_t n) {
  TreeSeries out(n);
  for (std::size_t leaves = 0; leaves < n; ++leaves) out.set(corolla(leaves), Rational(1));
  return out;
}

TreeSeries ladder_series(std::size_t n) {
  TreeSeries out(n);
  for (std::size_t v = 1; v <= n; ++v) out.set(chain(v), Rational(v % 2 == 1 ? 1 : -1));
  return out;
}

Membership spec_membership(const TreeSeries& a) {
  for (const auto& t : trees_up_to(a.truncation())) {
    const Rational lhs = character_value(a, t);
    Rational rhs = 1;
    for (const auto& child : t.children()) rhs *= character_value(a, RootedTree::graft({child}));
    if (lhs != rhs) return {false, t};
  }
  return {};
}

Rational character_value(const TreeSeries& a, const RootedTree& t) {
  return Rational(aut_order(t)) * a.coefficient(t);
}

Rational convolve_characters(const TreeSeries& a, const TreeSeries& b, const RootedTree& t) {
  Rational out = 0;
  for (const auto& [k, c] : Hnap::coproduct(t).terms()) {
    out += c * character_value(b, k.first) * character_value(a, k.second);
  }
  return out;
}

Element<Hnap> faa_generators(std::size_t n) {
  if (n == 0) throw std::invalid_argument("generators are indexed from 1");
  Element<Hnap> out;
  for (const auto& t : enumerate_trees(n + 1)) out.add(t, Rational(1) / Rational(aut_order(t)));
  return out;
}

// ---- power series ----

PowerSeries::PowerSeries(std::size_t truncation) : coeffs_(truncation + 1, Rational(0)) {}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0);
}

PowerSeries PowerSeries::truncated(std::size_t n) const {
  PowerSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) out.coeffs_[i] = (*this)[i];
  return out;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
  const auto n = std::min(a.truncation(), b.truncation());
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

PowerSeries ps_multiply(const PowerSeries& a, const PowerSeries& b) {
  const auto n = std::min(a.truncation(), b.truncation());
  PowerSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

PowerSeries ps_mul_inverse(const PowerSeries& a) {
  if (a[0] == 0) throw std::invalid_argument("constant term is zero");
  const auto n = a.truncation();
  PowerSeries out(n);
  out[0] = Rational(1) / a[0];
  for (std::size_t k = 1; k <= n; ++k) {
    Rational s = 0;
    for (std::size_t i = 1; i <= k; ++i) s += a[i] * out[k - i];
    out[k] = -s / a[0];
  }
  return out;
}

PowerSeries ps_compose(const PowerSeries& a, const PowerSeries& b) {
  if (b[0] != 0) throw std::invalid_argument("inner series has a constant term");
  const auto n = std::min(a.truncation(), b.truncation());
  PowerSeries out(n);
  for (std::size_t i = n + 1; i-- > 0;) {
    out = ps_multiply(out, b);
    out[0] += a[i];
  }
  return out;
}

PowerSeries ps_comp_inverse(const PowerSeries& a) {
  if (a[0] != 0 || a[1] == 0) throw std::invalid_argument("series must be c_1 x + ... with c_1 != 0");
  const auto n = a.truncation();
  PowerSeries g(n);
  g[1] = Rational(1) / a[1];
  for (std::size_t k = 2; k <= n; ++k) {
    const auto e = ps_compose(a, g)[k];
    g[k] = -e / a[1];
  }
  return g;
}

PowerSeries gcomm_product(const PowerSeries& a, const PowerSeries& b) {
  if (b[0] != 0) throw std::invalid_argument("right factor has a constant term");
  const auto n = std::min(a.truncation(), b.truncation());
  PowerSeries out(n);
  out[0] = a[0];
  std::function<void(std::size_t, std::size_t, std::size_t, const Rational&)> rec =
      [&](std::size_t left, std::size_t degree, std::size_t remaining, const Rational& weight) {
        if (left == 0) {
          out[degree] += weight;
          return;
        }
        for (std::size_t u = 1; u + (left - 1) <= remaining; ++u) {
          if (b[u] != 0) rec(left - 1, degree + u, remaining - u, weight * b[u]);
        }
      };
  for (std::size_t m = 1; m <= n; ++m) {
    if (a[m] != 0) rec(m, 0, n, a[m]);
  }
  return out;
}

PowerSeries ps_exp(std::size_t n, const Rational& scale) {
  PowerSeries out(n);
  Rational term = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    out[k] = term;
    term = term * scale / Rational(static_cast<long>(k + 1));
  }
  return out;
}

PowerSeries project_corolla(const TreeSeries& a) {
  PowerSeries out(a.truncation() - 1);
  for (std::size_t k = 0; k < a.truncation(); ++k) out[k] = a.coefficient(corolla(k));
  return out;
}

PowerSeries project_ladder(const TreeSeries& a) {
  PowerSeries out(a.truncation() - 1);
  for (std::size_t k = 0; k < a.truncation(); ++k) out[k] = a.coefficient(chain(k + 1));
  return out;
}

PowerSeries project_comm(const TreeSeries& a) {
  PowerSeries out(a.truncation());
  for (const auto& [t, c] : a.coeffs()) out[t.size()] += c;
  return out;
}

}  // namespace naphopf
