#include "blowcalc/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "blowcalc/classify.hpp"
#include "blowcalc/enumeration.hpp"
#include "blowcalc/invariants.hpp"
#include "blowcalc/oracle.hpp"
#include "blowcalc/textio.hpp"

namespace blowcalc {

namespace {

std::string resolve_input(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  return arg;
}

WeightedGraph as_graph(const ParsedInput& p) {
  if (std::holds_alternative<WeightedGraph>(p)) return std::get<WeightedGraph>(p);
  return chain_graph(std::get<IntSeq>(p));
}

std::string min_state(const WeightedGraph& g) {
  // trailing part of the fingerprint: the minimized (canonical W, eta) text
  std::string fp = fingerprint(g).bytes;
  std::size_t bar = fp.find('|');
  if (bar != std::string::npos) bar = fp.find('|', bar + 1);
  return bar == std::string::npos ? fp : fp.substr(bar + 1);
}

std::string skeleton_code_of(const WeightedGraph& g) {
  WeightedGraph m = minimalize(g);
  if (m.empty()) return "(empty)";
  return canonical_code(skeleton_of(m).skeleton, false);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"blowcalc: blow-up/blow-down calculus on weighted forests"};
  app.require_subcommand(1);

  std::string in1, in2;
  EnumBounds bounds;
  SearchBounds search;

  auto* invariants = app.add_subcommand("invariants", "det, Hodge number and Sub of the input");
  invariants->add_option("input", in1)->required();

  auto* canonical = app.add_subcommand("canonical", "canonical form of a chain or forest");
  canonical->add_option("input", in1)->required();

  auto* equiv = app.add_subcommand("equiv", "decide equivalence of two forests or chains");
  equiv->add_option("first", in1)->required();
  equiv->add_option("second", in2)->required();

  auto* minimal = app.add_subcommand("minimal", "minimal models of the input's class");
  minimal->add_option("input", in1)->required();
  minimal->add_option("--c-max", bounds.c_max);
  minimal->add_option("--n-max", bounds.n_max);
  minimal->add_option("--x-min", bounds.x_min);
  minimal->add_option("--x-max", bounds.x_max);

  auto* skeleton = app.add_subcommand("skeleton", "skeleton and skeletal map of a forest");
  skeleton->add_option("input", in1)->required();

  auto* geometric = app.add_subcommand("geometric", "geometric-chain predicate");
  geometric->add_option("input", in1)->required();

  auto* oracle = app.add_subcommand("oracle-equiv", "bounded brute-force equivalence check");
  oracle->add_option("first", in1)->required();
  oracle->add_option("second", in2)->required();
  oracle->add_option("--max-len", search.max_size);
  oracle->add_option("--max-vertices", search.max_size);
  oracle->add_option("--w-min", search.w_min);
  oracle->add_option("--w-max", search.w_max);
  oracle->add_option("--budget", search.budget);

  auto* fp = app.add_subcommand("fingerprint", "complete equivalence invariant of a forest");
  fp->add_option("input", in1)->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (invariants->parsed()) {
      ParsedInput p = parse_input(resolve_input(in1));
      if (std::holds_alternative<IntSeq>(p)) {
        const IntSeq& x = std::get<IntSeq>(p);
        auto [s1, s2] = sub(x);
        auto [b1, b2] = sub_bar(x);
        out << "det: " << seq_det(x) << '\n'
            << "hodge: " << seq_hodge(x) << '\n'
            << "sub: (" << s1 << "," << s2 << ")\n"
            << "sub-bar: (" << b1 << "," << b2 << ")\n"
            << "minimal: " << (is_minimal_seq(x) ? "yes" : "no") << '\n';
      } else {
        const WeightedGraph& g = std::get<WeightedGraph>(p);
        out << "det: " << det_graph(g) << '\n'
            << "hodge: " << hodge_graph(g) << '\n'
            << "forest: " << (is_forest(g) ? "yes" : "no") << '\n'
            << "minimal: " << (contractible_vertices(g).empty() ? "yes" : "no") << '\n';
      }
      return 0;
    }

    if (canonical->parsed()) {
      ParsedInput p = parse_input(resolve_input(in1));
      if (std::holds_alternative<IntSeq>(p)) {
        CanonicalSeq c = canonical_form(std::get<IntSeq>(p));
        out << "canonical: " << seq_to_string(c.to_seq()) << '\n'
            << "transpose: " << seq_to_string(transpose(c).to_seq()) << '\n';
      } else {
        WeightedGraph c = canonical_forest(std::get<WeightedGraph>(p));
        out << "canonical-forest:\n" << graph_to_string(c);
      }
      return 0;
    }

    if (equiv->parsed()) {
      WeightedGraph a = as_graph(parse_input(resolve_input(in1)));
      WeightedGraph b = as_graph(parse_input(resolve_input(in2)));
      out << "skeleton-1: " << skeleton_code_of(a) << '\n'
          << "skeleton-2: " << skeleton_code_of(b) << '\n'
          << "state-1: " << min_state(a) << '\n'
          << "state-2: " << min_state(b) << '\n';
      bool eq = forests_equivalent(a, b);
      out << "equivalent: " << (eq ? "yes" : "no") << '\n';
      return eq ? 0 : 1;
    }

    if (minimal->parsed()) {
      ParsedInput p = parse_input(resolve_input(in1));
      if (std::holds_alternative<IntSeq>(p)) {
        MinimalSet ms = minimal_in_class(std::get<IntSeq>(p), bounds);
        for (const IntSeq& e : ms.elements) out << "element: " << seq_to_string(e) << '\n';
        out << "completeness: " << (ms.complete ? "complete" : "bounded-complete") << '\n';
      } else {
        ModelSet ms = minimal_models(std::get<WeightedGraph>(p), bounds);
        for (std::size_t i = 0; i < ms.models.size(); ++i)
          out << "model " << i + 1 << ":\n" << graph_to_string(ms.models[i]);
        out << "completeness: " << (ms.complete ? "complete" : "bounded-complete") << '\n';
      }
      return 0;
    }

    if (skeleton->parsed()) {
      WeightedGraph g = as_graph(parse_input(resolve_input(in1)));
      SkeletalMap sk = skeleton_of(g);
      out << graph_to_string(sk.skeleton);
      for (const auto& [s, t] : sk.vmap) out << "m " << s << ' ' << t << '\n';
      return 0;
    }

    if (geometric->parsed()) {
      ParsedInput p = parse_input(resolve_input(in1));
      if (!std::holds_alternative<IntSeq>(p))
        throw std::invalid_argument("geometric expects a chain input");
      bool geo = is_geometric_chain(std::get<IntSeq>(p));
      out << "geometric: " << (geo ? "yes" : "no") << '\n';
      return geo ? 0 : 1;
    }

    if (oracle->parsed()) {
      ParsedInput p1 = parse_input(resolve_input(in1));
      ParsedInput p2 = parse_input(resolve_input(in2));
      OracleVerdict v;
      if (std::holds_alternative<IntSeq>(p1) && std::holds_alternative<IntSeq>(p2))
        v = oracle_seq_equivalent(std::get<IntSeq>(p1), std::get<IntSeq>(p2), search);
      else
        v = oracle_forests_equivalent(as_graph(p1), as_graph(p2), search);
      switch (v) {
        case OracleVerdict::Yes:
          out << "verdict: yes\n";
          return 0;
        case OracleVerdict::NoWithinBounds:
          out << "verdict: no-within-bounds\n---\nnot reached; bounded search is one-sided, "
                 "this is not a proof of inequivalence\n";
          return 1;
        case OracleVerdict::BudgetExhausted:
          out << "verdict: budget-exhausted\n";
          return 1;
      }
    }

    if (fp->parsed()) {
      WeightedGraph g = as_graph(parse_input(resolve_input(in1)));
      out << "fingerprint: " << fingerprint(g).text() << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace blowcalc
