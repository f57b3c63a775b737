// naphopf: command-line front end. Structured output is JSON on stdout,
// diagnostics go to stderr.

#include "naphopf/hopf.hpp"
#include "naphopf/interval.hpp"
#include "naphopf/json_io.hpp"
#include "naphopf/series.hpp"
#include "naphopf/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace naphopf;

namespace {

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

TreeSeries named_or_file(const std::string& source, std::size_t n) {
  if (source == "zeta") return zeta_series(n);
  if (source == "mobius") return mobius_series(n);
  if (source == "corolla") return corolla_series(n);
  if (source == "ladder") return ladder_series(n);
  if (source == "epsilon") return epsilon(n);
  std::ifstream in(source);
  if (!in) throw std::invalid_argument("'" + source + "' is neither a named series nor a readable file");
  return tree_series_from_json(Json::parse(in)).truncated(n);
}

Json interval_json(const IntervalPoset& p) {
  const auto& rep = p.representative();
  Json elements = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    Json ideal = Json::array();
    for (std::size_t v = 0; v < rep.size(); ++v) {
      if (p.elements()[i] & (VertexSet{1} << v)) ideal.push_back(rep.label(static_cast<int>(v)));
    }
    elements.push_back({{"ideal", ideal}, {"theta", p.theta(i).str()}, {"forest", p.forest_below(i).str()}});
  }
  Json covers = Json::array();
  for (const auto& [lo, hi] : p.covers()) covers.push_back({lo, hi});
  return {{"tree", p.tree().str()},
          {"representative", rep.to_labeled().str()},
          {"bottom", p.bottom()},
          {"top", p.top()},
          {"elements", elements},
          {"covers", covers},
          {"mobius", p.poset().mobius(p.bottom(), p.top())}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incidence Hopf algebra of NAP posets and the group of tree series"};
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand("enumerate", "list rooted trees with n vertices");
  std::size_t enum_n = 1;
  bool labeled = false;
  bool count_only = false;
  enumerate->add_option("n", enum_n, "number of vertices")->required()->check(CLI::Range(1, 12));
  enumerate->add_flag("--labeled", labeled, "list labeled trees on 1..n instead");
  enumerate->add_flag("--count-only", count_only, "print only the count");

  auto* copro = app.add_subcommand("coproduct", "coproduct of a tree as JSON");
  std::string copro_tree;
  std::string algebra = "hnap";
  copro->add_option("tree", copro_tree, "canonical tree string, e.g. ((()()))")->required();
  copro->add_option("--algebra", algebra, "hnap, qgnap or ck")->check(CLI::IsMember({"hnap", "qgnap", "ck"}));

  auto* series = app.add_subcommand("series", "tree series: zeta|mobius|corolla|ladder|mul|inv|graft|project|membership");
  std::vector<std::string> series_args;
  std::size_t truncation = 6;
  series->add_option("args", series_args, "operation followed by operands (named series or JSON files)")->required();
  series->add_option("-N,--truncation", truncation, "truncation degree")->check(CLI::Range(1, 10));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  std::optional<std::size_t> degree;
  std::uint64_t seed = VerifyOptions{}.seed;
  bool as_json = false;
  bool timing = false;
  verify->add_option("--suite", suite, "poset|mobius|hopf|main-theorem|ck-iso|series|projections|all")
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--degree", degree, "degree bound for every check")->check(CLI::Range(1, 9));
  verify->add_option("--seed", seed, "seed for randomized checks");
  verify->add_flag("--json", as_json, "JSON report on stdout");
  verify->add_flag("--timing", timing, "include elapsed time");

  auto* interval = app.add_subcommand("interval", "the interval [0, t] as JSON");
  std::string interval_tree;
  bool emit_dot = false;
  interval->add_option("tree", interval_tree, "canonical tree string")->required();
  interval->add_flag("--emit-dot", emit_dot, "print a DOT Hasse diagram instead");

  auto* mob = app.add_subcommand("mobius", "mu(0, t), recursive and closed form");
  std::string mob_tree;
  mob->add_option("tree", mob_tree, "canonical tree string")->required();

  auto* aut = app.add_subcommand("aut", "automorphism group order of a tree");
  std::string aut_tree;
  aut->add_option("tree", aut_tree, "canonical tree string")->required();

  auto* faa = app.add_subcommand("faa", "generator Gamma_n of the Faa di Bruno subalgebra");
  std::size_t faa_n = 1;
  faa->add_option("n", faa_n, "index")->required()->check(CLI::Range(1, 9));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate) {
      if (labeled) {
        const auto all = all_labeled_trees(standard_labels(enum_n));
        if (!count_only) {
          for (const auto& t : all) std::cout << t.str() << '\n';
          std::cout << "count: ";
        }
        std::cout << all.size() << '\n';
      } else {
        const auto& all = enumerate_trees(enum_n);
        if (!count_only) {
          for (const auto& t : all) std::cout << t.str() << '\n';
          std::cout << "count: ";
        }
        std::cout << all.size() << '\n';
      }
      return 0;
    }
    if (*copro) {
      const auto t = parse_tree(copro_tree);
      if (algebra == "hnap") {
        print(to_json(hnap_coproduct(t)));
      } else if (algebra == "qgnap") {
        print(to_json(qgnap_coproduct(t)));
      } else {
        print(to_json(ck_coproduct(Forest({t}))));
      }
      return 0;
    }
    if (*series) {
      const auto& op = series_args.front();
      const auto operands = std::vector<std::string>(series_args.begin() + 1, series_args.end());
      const auto need = [&](std::size_t k) {
        if (operands.size() != k) {
          throw std::invalid_argument("'" + op + "' takes " + std::to_string(k) + " operand(s)");
        }
      };
      if (op == "zeta" || op == "mobius" || op == "corolla" || op == "ladder") {
        need(0);
        print(to_json(named_or_file(op, truncation)));
      } else if (op == "mul") {
        need(2);
        print(to_json(series_multiply(named_or_file(operands[0], truncation), named_or_file(operands[1], truncation))));
      } else if (op == "inv") {
        need(1);
        print(to_json(series_inverse(named_or_file(operands[0], truncation))));
      } else if (op == "graft") {
        need(2);
        print(to_json(series_graft(named_or_file(operands[0], truncation), named_or_file(operands[1], truncation))));
      } else if (op == "project") {
        need(2);
        const auto a = named_or_file(operands[1], truncation);
        if (operands[0] == "corolla") {
          print(to_json(project_corolla(a)));
        } else if (operands[0] == "ladder") {
          print(to_json(project_ladder(a)));
        } else if (operands[0] == "comm") {
          print(to_json(project_comm(a)));
        } else {
          throw std::invalid_argument("projection must be corolla, ladder or comm");
        }
      } else if (op == "membership") {
        need(1);
        const auto m = spec_membership(named_or_file(operands[0], truncation));
        Json out = {{"member", m.member}};
        out["witness"] = m.witness ? Json(m.witness->str()) : Json(nullptr);
        print(out);
      } else {
        throw std::invalid_argument("unknown series operation '" + op + "'");
      }
      return 0;
    }
    if (*verify) {
      VerifyOptions options;
      options.degree = degree;
      options.seed = seed;
      const auto report = run_suite(suite, options);
      if (as_json) {
        print(to_json(report, timing));
      } else {
        std::cout << render_text(report, timing);
      }
      return report.passed() ? 0 : 1;
    }
    if (*interval) {
      const IntervalPoset p(parse_tree(interval_tree));
      if (emit_dot) {
        std::cout << to_dot(p);
      } else {
        print(interval_json(p));
      }
      return 0;
    }
    if (*mob) {
      const auto t = parse_tree(mob_tree);
      print({{"tree", t.str()}, {"mobius", mobius(t)}, {"closed_form", mobius_closed_form(t)}});
      return 0;
    }
    if (*aut) {
      const auto t = parse_tree(aut_tree);
      print({{"tree", t.str()}, {"aut", aut_order(t).get_str()}});
      return 0;
    }
    if (*faa) {
      print(to_json(faa_generators(faa_n)));
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error at offset " << e.offset() << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
