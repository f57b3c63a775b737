#include "naphopf/hopf.hpp"

#include "naphopf/labeled.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace naphopf {

namespace {

// Read-mostly cache: values are computed outside the lock, so a coproduct may
// call back into another cached coproduct.
template <class Key, class Value>
class Cache {
 public:
  template <class Compute>
  const Value& get(const Key& key, Compute&& compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Value value = compute();
    std::lock_guard lock(mutex_);
    return table_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, Value> table_;
};

template <class A>
Tensor<A> product_of_coproducts(const std::vector<RootedTree>& parts,
                                const std::function<const Tensor<A>&(const RootedTree&)>& of_tree) {
  Tensor<A> out({A::unit(), A::unit()});
  for (const auto& t : parts) out = multiply<A>(out, of_tree(t));
  return out;
}

std::vector<std::vector<int>> permutations(int k) {
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Number of bijections phi: domain -> labels(target) with relabel(v, phi) == target.
std::uint64_t count_isomorphisms(const LabeledTree& v, const LabeledTree& target) {
  const auto domain = v.labels();
  auto image = target.labels();
  if (domain.size() != image.size()) return 0;
  std::uint64_t count = 0;
  do {
    std::map<Label, Label> phi;
    for (std::size_t i = 0; i < domain.size(); ++i) phi.emplace(domain[i], image[i]);
    if (v.relabel(phi) == target) ++count;
  } while (std::next_permutation(image.begin(), image.end()));
  return count;
}

// Set partitions of {0..n-1} into exactly k blocks, blocks ordered by least element.
std::vector<std::vector<std::vector<int>>> set_partitions(int n, int k) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> blocks;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (static_cast<int>(blocks.size()) == k) out.push_back(blocks);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(i);
      rec(i + 1);
      blocks[b].pop_back();
    }
    if (static_cast<int>(blocks.size()) < k) {
      blocks.push_back({i});
      rec(i + 1);
      blocks.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Label> labels_of(const std::vector<int>& block) {
  std::vector<Label> out;
  for (int i : block) out.push_back(std::to_string(i + 1));
  std::sort(out.begin(), out.end());
  return out;
}

Tensor<ConnesKreimer> ck_tree_by_cuts(const RootedTree& t) {
  const IndexedTree rep(t);
  const int n = static_cast<int>(rep.size());
  if (n > 63) throw std::invalid_argument("admissible-cut enumeration is limited to 63 vertices");
  std::vector<VertexSet> below(static_cast<std::size_t>(n), 0);
  // breadth-first indices: children come after parents
  for (int v = n - 1; v >= 0; --v) {
    below[static_cast<std::size_t>(v)] |= VertexSet{1} << v;
    if (v != rep.root()) below[static_cast<std::size_t>(rep.parent(v))] |= below[static_cast<std::size_t>(v)];
  }
  const VertexSet all = (VertexSet{1} << n) - 1;
  Tensor<ConnesKreimer> out({Forest({t}), Forest()});
  for (VertexSet cut = 0; cut < (VertexSet{1} << n); ++cut) {
    if (cut & (VertexSet{1} << rep.root())) continue;
    bool admissible = true;
    VertexSet removed = 0;
    std::vector<RootedTree> pruned;
    for (int v = 0; v < n && admissible; ++v) {
      if (!(cut & (VertexSet{1} << v))) continue;
      for (int a = rep.parent(v); a != -1 && a != rep.root(); a = rep.parent(a)) {
        if (cut & (VertexSet{1} << a)) admissible = false;
      }
      removed |= below[static_cast<std::size_t>(v)];
      pruned.push_back(rep.subtree_shape(v));
    }
    if (!admissible) continue;
    out.add({Forest(std::move(pruned)), Forest({rep.restricted_shape(rep.root(), all & ~removed)})}, 1);
  }
  return out;
}

}  // namespace

// ---- algebra policies ----

const Tensor<Hnap>& Hnap::coproduct(const RootedTree& t) {
  static Cache<RootedTree, Tensor<Hnap>> cache;
  return cache.get(t, [&] {
    const IntervalPoset p(t);
    Tensor<Hnap> out;
    for (std::size_t i = 0; i < p.size(); ++i) out.add({merge_roots(p.forest_below(i)), p.theta(i)}, 1);
    return out;
  });
}

std::size_t Qgnap::degree(const Forest& m) { return m.size() - m.count(); }

const Tensor<Qgnap>& Qgnap::coproduct(const Forest& m) {
  static Cache<RootedTree, Tensor<Qgnap>> generators;
  static Cache<Forest, Tensor<Qgnap>> monomials;
  return monomials.get(m, [&] {
    return product_of_coproducts<Qgnap>(m.components(), [&](const RootedTree& t) -> const Tensor<Qgnap>& {
      return generators.get(t, [&] {
        Tensor<Qgnap> out;
        for (const auto& [key, g] : g_structure_constants(t)) {
          const auto& [beta, gamma] = key;
          out.add({beta, gamma.is_single_vertex() ? Forest() : Forest({gamma})}, Rational(g));
        }
        return out;
      });
    });
  });
}

const Tensor<ConnesKreimer>& ConnesKreimer::coproduct(const Forest& m) {
  static Cache<Forest, Tensor<ConnesKreimer>> cache;
  return cache.get(m, [&] {
    return product_of_coproducts<ConnesKreimer>(
        m.components(), [](const RootedTree& t) -> const Tensor<ConnesKreimer>& {
          static Cache<RootedTree, Tensor<ConnesKreimer>> trees;
          return trees.get(t, [&] {
            const Forest branches(t.children());
            Tensor<ConnesKreimer> out({Forest({t}), Forest()});
            for (const auto& [k, c] : ConnesKreimer::coproduct(branches).terms()) {
              out.add({k.first, Forest({b_plus(k.second)})}, c);
            }
            return out;
          });
        });
  });
}

// ---- H_NAP ----

Element<Hnap> hnap_multiply(const Element<Hnap>& a, const Element<Hnap>& b) { return multiply<Hnap>(a, b); }

Tensor<Hnap> hnap_coproduct(const RootedTree& t) { return Hnap::coproduct(t); }

Element<Hnap> l_nap(const Element<Hnap>& a) {
  Element<Hnap> out;
  for (const auto& [t, c] : a.terms()) out.add(RootedTree::graft({t}), c);
  return out;
}

Forest free_factorization(const RootedTree& t) { return Forest(valence_one_factors(t)); }

RootedTree from_free_factorization(const Forest& generators) {
  for (const auto& g : generators.components()) {
    if (g.root_valence() != 1) throw std::invalid_argument("generator " + g.str() + " does not have root valence 1");
  }
  return merge_roots(generators);
}

// ---- Q[G_NAP] ----

StructureConstants g_structure_constants(const RootedTree& alpha) {
  const std::size_t n = alpha.size();
  StructureConstants out;
  for (std::size_t k = 1; k <= n; ++k) {
    for (const auto& gamma : enumerate_trees(k)) {
      const IndexedTree rep(gamma);
      std::vector<RootedTree> seq;
      std::function<void(std::size_t)> place = [&](std::size_t budget) {
        const std::size_t pos = seq.size();
        if (pos == k) {
          if (budget == 0 && nap_compose_shape(rep, seq) == alpha) {
            ++out[{Forest(seq).without_singletons(), gamma}];
          }
          return;
        }
        const std::size_t still = k - pos - 1;
        for (std::size_t s = 1; s + still <= budget; ++s) {
          if (still == 0 && s != budget) continue;
          for (const auto& u : enumerate_trees(s)) {
            seq.push_back(u);
            place(budget - s);
            seq.pop_back();
          }
        }
      };
      place(n);
    }
  }
  return out;
}

Tensor<Qgnap> qgnap_coproduct(const RootedTree& alpha) { return coproduct(G(alpha)); }

EfEgCounts count_Ef_Eg(const RootedTree& alpha, const Forest& beta, const RootedTree& gamma) {
  const int n = static_cast<int>(alpha.size());
  const int k = static_cast<int>(gamma.size());
  if (beta.size() != alpha.size() || static_cast<int>(beta.count()) != k) {
    throw std::invalid_argument("beta must have size(gamma) components of total size size(alpha)");
  }
  const LabeledTree r_alpha = canonical_labeling(alpha);
  const LabeledTree r_gamma = canonical_labeling(gamma);
  const auto& parts = beta.components();
  std::vector<LabeledTree> r_beta;
  for (const auto& b : parts) r_beta.push_back(canonical_labeling(b));
  const auto perms_k = permutations(k);

  EfEgCounts out{0, 0};

  const auto outer_trees = all_labeled_trees(standard_labels(static_cast<std::size_t>(k)));
  for (const auto& p : set_partitions(n, k)) {
    std::vector<std::vector<LabeledTree>> choices;
    for (const auto& block : p) choices.push_back(all_labeled_trees(labels_of(block)));
    for (const auto& u : outer_trees) {
      std::uint64_t psi = 0;
      std::vector<LabeledTree> v;
      std::function<void(std::size_t)> pick = [&](std::size_t i) {
        if (i == choices.size()) {
          std::map<Label, LabeledTree> subs;
          for (std::size_t j = 0; j < v.size(); ++j) subs.emplace(std::to_string(j + 1), v[j]);
          if (!(nap_compose(u, subs) == r_alpha)) return;
          if (psi == 0) psi = count_isomorphisms(u, r_gamma);
          for (const auto& sigma : perms_k) {
            Integer prod = psi;
            for (int j = 0; j < k && prod != 0; ++j) {
              prod *= count_isomorphisms(v[static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)])],
                                         r_beta[static_cast<std::size_t>(j)]);
            }
            out.ef += prod;
          }
          return;
        }
        for (const auto& t : choices[i]) {
          v.push_back(t);
          pick(i + 1);
          v.pop_back();
        }
      };
      pick(0);
    }
  }

  auto image = standard_labels(static_cast<std::size_t>(n));
  std::vector<LabeledTree> targets;
  for (const auto& tau : perms_k) {
    std::map<Label, LabeledTree> subs;
    std::size_t offset = 1;
    for (int j = 0; j < k; ++j) {
      const auto& b = parts[static_cast<std::size_t>(tau[static_cast<std::size_t>(j)])];
      subs.emplace(std::to_string(j + 1), canonical_labeling(b, offset));
      offset += b.size();
    }
    targets.push_back(nap_compose(r_gamma, subs));
  }
  const auto domain = image;
  do {
    std::map<Label, Label> phi;
    for (std::size_t i = 0; i < domain.size(); ++i) phi.emplace(domain[i], image[i]);
    const auto moved = r_alpha.relabel(phi);
    for (const auto& target : targets) {
      if (moved == target) out.eg += 1;
    }
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

Element<Hnap> rho(const Forest& monomial) {
  Integer aut = 1;
  for (const auto& t : monomial.components()) aut *= aut_order(t);
  return Element<Hnap>(merge_roots(monomial), Rational(1, 1) / Rational(aut));
}

Element<Hnap> rho(const Element<Qgnap>& x) {
  Element<Hnap> out;
  for (const auto& [m, c] : x.terms()) out += c * rho(m);
  return out;
}

// ---- Connes-Kreimer ----

Element<ConnesKreimer> b_plus(const Element<ConnesKreimer>& a) {
  Element<ConnesKreimer> out;
  for (const auto& [f, c] : a.terms()) out.add(Forest({b_plus(f)}), c);
  return out;
}

Tensor<ConnesKreimer> ck_coproduct(const Forest& f) { return ConnesKreimer::coproduct(f); }

Tensor<ConnesKreimer> ck_coproduct_by_cuts(const Forest& f) {
  Tensor<ConnesKreimer> out({Forest(), Forest()});
  for (const auto& t : f.components()) out = multiply<ConnesKreimer>(out, ck_tree_by_cuts(t));
  return out;
}

Element<ConnesKreimer> iso_to_ck(const Element<Hnap>& a) {
  Element<ConnesKreimer> out;
  for (const auto& [t, c] : a.terms()) out.add(Forest(t.children()), c);
  return out;
}

Element<Hnap> iso_from_ck(const Element<ConnesKreimer>& a) {
  Element<Hnap> out;
  for (const auto& [f, c] : a.terms()) out.add(b_plus(f), c);
  return out;
}

}  // namespace naphopf
