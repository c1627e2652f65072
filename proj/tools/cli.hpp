/*
   Copyright 2026 The loopvir Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LOOPVIR_TOOLS_CLI_HPP
#define LOOPVIR_TOOLS_CLI_HPP

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "loopvir/loopvir.hpp"

namespace loopvir::cli {

enum class Format { text, json, csv };

struct RunConfig {
  Format format = Format::text;
  int depth_cap = 12;
  std::int64_t window_cap = 64;
};

enum ExitCode : int { ok = 0, verification_failed = 1, usage = 2 };

namespace detail {

/// Inline text, or the contents of a file when the argument starts with '@'.
inline std::string read_input(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw parse_error("cannot read input file", arg.substr(1));
  return std::string(std::istreambuf_iterator<char>(in), {});
}

inline Window checked_window(const std::string& text, const RunConfig& cfg) {
  Window w = parse_window(text);
  if (w.width() > cfg.window_cap)
    throw usage_error("window " + text + " is wider than the cap " + std::to_string(cfg.window_cap));
  return w;
}

inline void check_depth(int depth, const RunConfig& cfg) {
  if (depth < 0) throw usage_error("depth must be nonnegative");
  if (depth > cfg.depth_cap)
    throw usage_error("depth " + std::to_string(depth) + " exceeds the cap " + std::to_string(cfg.depth_cap) +
                      " (raise it with --depth-cap)");
}

inline std::string kind_text(const KindSpec& k) {
  return to_string(k.kind) + (k.e ? "@" + to_string(*k.e) : std::string());
}

inline void emit_json(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

}  // namespace detail

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 verification failure, 2 usage error.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with the loop-Virasoro algebra and its weight modules", "loopvir"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--depth-cap", cfg.depth_cap, "Largest depth accepted by char and tensor-check");
  app.add_option("--window-cap", cfg.window_cap, "Largest window width accepted");

  int code = ExitCode::ok;
  std::function<void()> action;

  // bracket
  std::string lhs, rhs, modulus_text;
  auto* bracket_cmd = app.add_subcommand("bracket", "Bracket of two elements");
  bracket_cmd->add_option("x", lhs, "First element, e.g. \"2*d(1,0)+c(3)\"")->required();
  bracket_cmd->add_option("y", rhs, "Second element")->required();
  bracket_cmd->add_option("--mod", modulus_text, "Work in the quotient by this polynomial");
  bracket_cmd->callback([&] {
    action = [&] {
      RingPtr ring = modulus_text.empty() ? nullptr : make_ring(parse_laurent(modulus_text));
      const LieElement result = bracket(parse_element(lhs, ring), parse_element(rhs, ring));
      if (cfg.format == Format::json) {
        json terms = json::array();
        for (const auto& [s, c] : result.terms()) terms.push_back({{"coeff", to_string(c)}, {"symbol", to_string(s)}});
        detail::emit_json(out, {{"result", to_string(result)}, {"terms", terms}});
      } else if (cfg.format == Format::csv) {
        out << "symbol,coeff\n";
        for (const auto& [s, c] : result.terms()) out << '"' << to_string(s) << "\"," << to_string(c) << "\n";
      } else {
        out << to_string(result) << "\n";
      }
    };
  });

  // jacobi
  std::string deg_window = "-4..4", loop_window = "-3..3", jacobi_mod;
  auto* jacobi_cmd = app.add_subcommand("jacobi", "Check the structure constants on basis windows");
  jacobi_cmd->add_option("--deg-window", deg_window, "Degree window a..b")->capture_default_str();
  jacobi_cmd->add_option("--loop-window", loop_window, "Loop-index window a..b")->capture_default_str();
  jacobi_cmd->add_option("--mod", jacobi_mod, "Work in the quotient by this polynomial");
  jacobi_cmd->callback([&] {
    action = [&] {
      const Window dw = detail::checked_window(deg_window, cfg), lw = detail::checked_window(loop_window, cfg);
      RingPtr ring = jacobi_mod.empty() ? nullptr : make_ring(parse_laurent(jacobi_mod));
      const auto jac = jacobi_check(dw, lw, ring);
      const auto st = structure_check(dw, lw, ring);
      const std::size_t structure_failures = st.antisymmetry_failures + st.grading_failures + st.centrality_failures;
      if (cfg.format == Format::json) {
        detail::emit_json(out, {{"triples", jac.triples_checked},
                                {"violations", jac.violations.size()},
                                {"pairs", st.pairs_checked},
                                {"antisymmetry_failures", st.antisymmetry_failures},
                                {"grading_failures", st.grading_failures},
                                {"centrality_failures", st.centrality_failures}});
      } else if (cfg.format == Format::csv) {
        out << "triples,violations,pairs,structure_failures\n"
            << jac.triples_checked << "," << jac.violations.size() << "," << st.pairs_checked << ","
            << structure_failures << "\n";
      } else {
        out << "triples checked: " << jac.triples_checked << "\n"
            << "violations: " << jac.violations.size() << "\n"
            << "pairs checked: " << st.pairs_checked << "\n"
            << "structure failures: " << structure_failures << "\n";
        for (const auto& v : jac.violations)
          out << "  [" << to_string(v.x) << ", " << to_string(v.y) << ", " << to_string(v.z)
              << "] -> " << to_string(v.value) << "\n";
      }
      if (!jac.ok() || !st.ok()) code = ExitCode::verification_failed;
    };
  });

  // intseries-verify
  std::string kind_arg;
  Relation51Windows rel;
  std::string iw = "-2..2", jw = "-2..2", kw = "-5..5", mw = "-3..3", nw = "-3..3";
  auto* inter_cmd = app.add_subcommand("intseries-verify", "Verify an evaluation module of the intermediate series");
  inter_cmd->add_option("kind", kind_arg, "Module, e.g. \"V(1/3,2/5)@2\"")->required();
  inter_cmd->add_option("--i-window", iw)->capture_default_str();
  inter_cmd->add_option("--j-window", jw)->capture_default_str();
  inter_cmd->add_option("--k-window", kw)->capture_default_str();
  inter_cmd->add_option("--m-window", mw)->capture_default_str();
  inter_cmd->add_option("--n-window", nw)->capture_default_str();
  inter_cmd->callback([&] {
    action = [&] {
      const KindSpec spec = parse_kind(kind_arg);
      if (!spec.e) throw parse_error("module needs an evaluation point '@e'", kind_arg);
      rel = {detail::checked_window(iw, cfg), detail::checked_window(jw, cfg), detail::checked_window(kw, cfg),
             detail::checked_window(mw, cfg), detail::checked_window(nw, cfg)};
      const EvalModule mod(spec.kind, *spec.e);
      const auto r51 = relation51_check(mod, rel);
      const Window degs{std::min(rel.i.lo, rel.j.lo), std::max(rel.i.hi, rel.j.hi)};
      const Window loops{std::min(rel.m.lo, rel.n.lo), std::max(rel.m.hi, rel.n.hi)};
      const auto axiom = module_axiom_check(mod, degs, loops, rel.k);
      const auto flags = reducibility_flags(spec.kind);
      if (cfg.format == Format::json) {
        detail::emit_json(out, {{"module", to_string(mod)},
                                {"relation_tuples", r51.tuples_checked},
                                {"relation_violations", r51.violations.size()},
                                {"axiom_cases", axiom.cases_checked},
                                {"axiom_failures", axiom.failures},
                                {"irreducible", flags.irreducible()},
                                {"structure", flags.note}});
      } else if (cfg.format == Format::csv) {
        out << "module,relation_tuples,relation_violations,axiom_cases,axiom_failures,irreducible\n"
            << '"' << to_string(mod) << "\"," << r51.tuples_checked << "," << r51.violations.size() << ","
            << axiom.cases_checked << "," << axiom.failures << "," << (flags.irreducible() ? "true" : "false") << "\n";
      } else {
        out << "module: " << to_string(mod) << "\n"
            << "coefficient relation: " << r51.tuples_checked << " tuples, " << r51.violations.size()
            << " violations\n"
            << "module axiom: " << axiom.cases_checked << " cases, " << axiom.failures << " failures\n"
            << "structure: " << flags.note << "\n";
        for (const auto& v : r51.violations)
          out << "  violation at i=" << v.i << " j=" << v.j << " k=" << v.k << " m=" << v.m << " n=" << v.n << ": "
              << to_string(v.lhs) << " != " << to_string(v.rhs) << "\n";
      }
      if (!r51.ok() || !axiom.ok()) code = ExitCode::verification_failed;
    };
  });

  // dual / canonical
  std::string map_arg;
  const auto kind_mapper = [&](const char* name, const char* help, IntSeriesKind (*fn)(const IntSeriesKind&)) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("kind", map_arg, "Module kind, optionally with @e")->required();
    cmd->callback([&, fn] {
      action = [&, fn] {
        KindSpec spec = parse_kind(map_arg);
        spec.kind = fn(spec.kind);
        if (cfg.format == Format::json) detail::emit_json(out, {{"kind", detail::kind_text(spec)}});
        else if (cfg.format == Format::csv) out << "kind\n\"" << detail::kind_text(spec) << "\"\n";
        else out << detail::kind_text(spec) << "\n";
      };
    });
  };
  kind_mapper("dual", "Graded dual of a module kind", &dual);
  kind_mapper("canonical", "Canonical representative of a module kind", &canonical_form);

  // annihilator
  std::string seq_arg;
  auto* ann_cmd = app.add_subcommand("annihilator", "Minimal annihilating polynomial of a sequence");
  ann_cmd->add_option("--seq", seq_arg, "Sequence JSON (or @file)")->required();
  ann_cmd->callback([&] {
    action = [&] {
      const auto p = seq_annihilator(parse_sequence(detail::read_input(seq_arg)));
      const std::string text = p ? to_string(p->expand()) : "none";
      if (cfg.format == Format::json) detail::emit_json(out, {{"annihilator", p ? json(text) : json(nullptr)}});
      else if (cfg.format == Format::csv) out << "annihilator\n" << text << "\n";
      else out << text << "\n";
    };
  });

  // hc-test / verma-test
  std::string phi_arg;
  auto* hc_cmd = app.add_subcommand("hc-test", "Decide whether V(phi) has finite-dimensional weight spaces");
  hc_cmd->add_option("--phi", phi_arg, "Functional JSON (or @file)")->required();
  hc_cmd->callback([&] {
    action = [&] {
      const auto p = hc_test(parse_functional(detail::read_input(phi_arg)));
      if (cfg.format == Format::json) {
        detail::emit_json(out, {{"harish_chandra", p.has_value()},
                                {"modulus", p ? json(to_string(p->expand())) : json(nullptr)}});
      } else if (cfg.format == Format::csv) {
        out << "harish_chandra,modulus\n" << (p ? "true," + to_string(p->expand()) : "false,") << "\n";
      } else {
        out << (p ? "P = " + to_string(p->expand()) : "not Harish-Chandra") << "\n";
      }
    };
  });

  auto* verma_cmd = app.add_subcommand("verma-test", "Decide reducibility of the Verma module over the full algebra");
  verma_cmd->add_option("--phi", phi_arg, "Functional JSON (or @file)")->required();
  verma_cmd->callback([&] {
    action = [&] {
      const auto r = verma_reducibility_test(parse_functional(detail::read_input(phi_arg)));
      const std::string cert = r.certificate ? to_string(*r.certificate) : std::string();
      if (cfg.format == Format::json) {
        detail::emit_json(out, {{"reducible", r.reducible}, {"certificate", r.reducible ? json(cert) : json(nullptr)}});
      } else if (cfg.format == Format::csv) {
        out << "reducible,certificate\n" << (r.reducible ? "true," + cert : "false,") << "\n";
      } else {
        out << (r.reducible ? "reducible, P = " + cert : "irreducible") << "\n";
      }
    };
  });

  // char
  std::string char_mod;
  int depth = 0;
  bool redundant = false;
  auto* char_cmd = app.add_subcommand("char", "Graded dimensions of the irreducible highest-weight module");
  char_cmd->add_option("--phi", phi_arg, "Functional JSON (or @file)")->required();
  char_cmd->add_option("--mod", char_mod, "Quotient modulus (default: the Harish-Chandra certificate)");
  char_cmd->add_option("--depth", depth, "Largest depth")->required();
  char_cmd->add_flag("--redundant", redundant, "Use raising generators of every degree when eliminating");
  char_cmd->callback([&] {
    action = [&] {
      detail::check_depth(depth, cfg);
      const HWFunctional phi = parse_functional(detail::read_input(phi_arg));
      const LaurentPoly modulus = char_mod.empty() ? module_modulus(phi) : parse_laurent(char_mod);
      const VermaQuotientModule mod(modulus, phi, {redundant});
      const auto chi = mod.irreducible_character(depth);
      const int d = mod.residues();
      if (cfg.format == Format::json) {
        json rows = json::array();
        for (int n = 0; n <= depth; ++n) {
          const auto pbw = pbw_dimension(d, n);
          rows.push_back({{"depth", n}, {"irreducible_dim", chi[n]}, {"j_dim", pbw - chi[n]}, {"pbw_dim", pbw}});
        }
        detail::emit_json(out, {{"modulus", to_string(mod.ring()->modulus())}, {"rows", rows}});
      } else {
        const char* sep = cfg.format == Format::csv ? "," : " ";
        if (cfg.format == Format::text) out << "modulus: " << to_string(mod.ring()->modulus()) << "\n";
        out << "depth" << sep << "pbw_dim" << sep << "j_dim" << sep << "irreducible_dim\n";
        for (int n = 0; n <= depth; ++n) {
          const auto pbw = pbw_dimension(d, n);
          out << n << sep << pbw << sep << pbw - chi[n] << sep << chi[n] << "\n";
        }
      }
    };
  });

  // tensor-check
  auto* tensor_cmd = app.add_subcommand("tensor-check", "Compare the character with the product of factor characters");
  tensor_cmd->add_option("--phi", phi_arg, "Functional JSON (or @file)")->required();
  tensor_cmd->add_option("--depth", depth, "Largest depth")->required();
  tensor_cmd->callback([&] {
    action = [&] {
      detail::check_depth(depth, cfg);
      const auto rep = tensor_character_check(parse_functional(detail::read_input(phi_arg)), depth);
      if (cfg.format == Format::json) {
        detail::emit_json(out, {{"character", rep.character},
                                {"convolution", rep.convolution},
                                {"factors", rep.factor_characters},
                                {"mismatched_depths", rep.mismatched_depths}});
      } else {
        const char* sep = cfg.format == Format::csv ? "," : " ";
        out << "depth" << sep << "character" << sep << "convolution\n";
        for (int n = 0; n <= depth; ++n)
          out << n << sep << rep.character[n] << sep << rep.convolution[n] << "\n";
        if (cfg.format == Format::text)
          out << (rep.ok() ? "verified: " : "MISMATCH: ") << rep.factor_characters.size() << " factors\n";
      }
      if (!rep.ok()) code = ExitCode::verification_failed;
    };
  });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::usage;
  }

  cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
  try {
    if (action) action();
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::usage;
  }
  return code;
}

}  // namespace loopvir::cli

#endif  // LOOPVIR_TOOLS_CLI_HPP
