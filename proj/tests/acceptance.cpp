// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "naphopf/hopf.hpp"
#include "naphopf/series.hpp"
#include "naphopf/verify.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

using namespace naphopf;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void require(const std::vector<Check>& checks) {
    for (const auto& c : checks) require(c.passed, c.name + (c.witness.empty() ? "" : ": " + c.witness));
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_ms, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (limit_ms > 0) out.require(ms < limit_ms, "took " + std::to_string(ms) + " ms");
  if (!out.ok) ++failures;
  std::printf("[%s] %2d. %s (%.0f ms)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, ms, out.ok ? "" : " -- ",
              out.detail.c_str());
  std::fflush(stdout);
}

PowerSeries ps(std::initializer_list<long> c) {
  std::vector<Rational> r;
  for (long x : c) r.emplace_back(x);
  return PowerSeries(r);
}

PowerSeries identity_map(std::size_t n) {
  PowerSeries x(n);
  x[1] = 1;
  return x;
}

}  // namespace

int main() {
  criterion(1, "rooted-tree counts 1..8, labeled-quotient oracle to 6", 1000, [](Outcome& o) {
    const std::size_t known[] = {1, 1, 2, 4, 9, 20, 48, 115};
    for (std::size_t n = 1; n <= 8; ++n) {
      o.require(enumerate_trees(n).size() == known[n - 1], "count at n=" + std::to_string(n));
    }
    for (int n = 1; n <= 6; ++n) {
      const auto labeled = oracle::rooted_labeled_trees(n);
      o.require(labeled.size() == oracle::ipow(static_cast<std::uint64_t>(n), static_cast<unsigned>(n - 1)),
                "labeled count at n=" + std::to_string(n));
      std::set<std::string> shapes;
      for (const auto& p : labeled) shapes.insert(oracle::canonical(p));
      std::set<std::string> ours;
      for (const auto& t : enumerate_trees(static_cast<std::size_t>(n))) ours.insert(t.str());
      o.require(shapes == ours, "shape set at n=" + std::to_string(n));
    }
  });

  criterion(2, "recursive mobius equals the corolla closed form, trees <= 7", 5000, [](Outcome& o) {
    for (const auto& t : trees_up_to(7)) {
      const auto expected = t.is_corolla() ? ((t.size() - 1) % 2 ? -1 : 1) : 0;
      o.require(mobius(t) == expected, t.str());
    }
  });

  criterion(3, "displayed H_NAP and Q[G_NAP] coproducts", 0, [](Outcome& o) {
    o.require(check_displayed_coproducts());
    o.require(power(F(chain(2)), 3) == F(corolla(3)), "F[3-corolla] = F[2-chain]^3");
  });

  criterion(4, "main identity to size 5, E_f/E_g counts to size 4", 60000,
            [](Outcome& o) { o.require(check_main_theorem(5, 4)); });

  criterion(5, "Z x M = M x Z = e (N=7), C x L = L x C = e and C = e + C <| e (N=8)", 0, [](Outcome& o) {
    const auto z = zeta_series(7), m = mobius_series(7);
    o.require(series_multiply(z, m) == epsilon(7), "Z x M");
    o.require(series_multiply(m, z) == epsilon(7), "M x Z");
    const auto c = corolla_series(8), l = ladder_series(8);
    o.require(series_multiply(c, l) == epsilon(8), "C x L");
    o.require(series_multiply(l, c) == epsilon(8), "L x C");
    o.require(c == epsilon(8) + series_graft(c, epsilon(8)), "C = e + C <| e");
  });

  criterion(6, "membership: Z accepted, C and L rejected with witnesses", 0, [](Outcome& o) {
    const auto z = spec_membership(zeta_series(8));
    o.require(z.member && !z.witness, "Z rejected");
    for (const auto& [name, s] : {std::pair{"C", corolla_series(8)}, std::pair{"L", ladder_series(8)}}) {
      const auto r = spec_membership(s);
      o.require(!r.member && r.witness.has_value(), std::string(name) + " accepted");
      if (r.witness) {
        // the witness must actually violate the product rule
        const auto& t = *r.witness;
        Rational rhs = 1;
        for (const auto& b : t.children()) {
          const auto branch = RootedTree::graft({b});
          rhs *= Rational(aut_order(branch)) * s[branch];
        }
        o.require(Rational(aut_order(t)) * s[t] != rhs, std::string(name) + " witness " + t.str());
      }
    }
  });

  criterion(7, "projections of Z, M, C, L", 0, [](Outcome& o) {
    PowerSeries lambert(8);
    for (std::size_t n = 1; n <= 8; ++n) {
      Integer p = 1;
      for (std::size_t i = 1; i < n; ++i) p *= static_cast<unsigned long>(n);
      lambert[n] = Rational(p) / Rational(factorial(n));
    }
    o.require(project_comm(zeta_series(8)) == lambert, "comm(Z)");
    PowerSeries x_exp(8);
    for (std::size_t k = 1; k <= 8; ++k) x_exp[k] = Rational(k % 2 ? 1 : -1) / Rational(factorial(k - 1));
    o.require(ps_comp_inverse(x_exp) == lambert, "inverse of x exp(-x)");

    const auto cc = project_comm(corolla_series(8)), cl = project_comm(ladder_series(8));
    o.require(ps_compose(cc, cl) == identity_map(8), "comm(C) o comm(L)");
    o.require(ps_compose(cl, cc) == identity_map(8), "comm(L) o comm(C)");

    const auto one = ps({1, 0, 0, 0, 0, 0, 0, 0});
    const std::pair<TreeSeries, TreeSeries> pairs[] = {{zeta_series(8), mobius_series(8)},
                                                       {corolla_series(8), ladder_series(8)}};
    for (const auto& [a, b] : pairs) {
      o.require(ps_multiply(project_corolla(a), project_corolla(b)) == one, "corolla projections");
      o.require(ps_multiply(project_ladder(a), project_ladder(b)) == one, "ladder projections");
    }
  });

  criterion(8, "Connes-Kreimer bridge on trees <= 5", 0, [](Outcome& o) { o.require(check_ck_bridge(5)); });

  criterion(9, "intervals <= 6 totally semimodular and distributive, controls fail", 0, [](Outcome& o) {
    o.require(check_lattices(6));
    o.require(check_negative_controls());
  });

  criterion(10, "brute-force NAP posets to n=4 and the Comm partition lattice", 0, [](Outcome& o) {
    for (std::size_t n = 1; n <= 4; ++n) o.require(check_brute_force(n));
    o.require(check_comm_partition_lattice());
  });

  return failures == 0 ? 0 : 1;
}
