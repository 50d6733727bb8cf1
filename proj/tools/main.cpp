// Command-line front end: subcommand parsing, file IO, and dispatch into the
// library. See README.md for usage.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "betti/cli.hpp"

namespace {

// Presentations are accepted inline or as @path.
std::string resolve_input(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw CLI::ValidationError("input", "cannot read file '" + arg.substr(1) + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

mpq_class parse_ratio(const std::string& s) {
  mpq_class q(s);
  q.canonicalize();
  return q;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"betti: coset enumeration, subgroup rewriting, abelian invariants,\n"
               "p-series chains, betti-ratio reports and deficiency certificates\n"
               "for finitely presented groups"};
  app.require_subcommand(1);

  betti::RunConfig config;
  config.limits = betti::default_limits();

  std::string output_path;
  std::string presentation_arg;
  std::string known_b12, delta, torsion_eps, eps = "1/2";
  std::string chain_file;

  auto add_common = [&](CLI::App* cmd, bool needs_presentation) {
    if (needs_presentation)
      cmd->add_option("presentation", presentation_arg,
                      "presentation text like \"< x, y | [x, y] >\" (or @file)")
          ->required();
    cmd->add_option("-o,--output", output_path, "write output to a file instead of stdout");
    cmd->add_option("--format", config.format, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--max-cosets", config.limits.max_cosets,
                    "enumeration limit (also via GRP_MAX_COSETS)");
  };

  auto* parse_cmd = app.add_subcommand("parse", "parse and reprint a presentation");
  add_common(parse_cmd, true);

  auto* tc = app.add_subcommand("tc", "Todd-Coxeter coset enumeration");
  add_common(tc, true);
  tc->add_option("--subgens", config.subgroup_words, "comma-separated subgroup generator words");
  tc->add_flag("--closure", config.closure_mode,
               "enumerate the normal closure of the words instead of the subgroup");

  auto* rs = app.add_subcommand("rs", "Reidemeister-Schreier subgroup presentation");
  add_common(rs, true);
  rs->add_option("--subgens", config.subgroup_words, "comma-separated subgroup generator words");
  rs->add_flag("--closure", config.closure_mode,
               "rewrite the normal closure of the words instead of the subgroup");

  auto* b1 = app.add_subcommand("b1", "abelian invariants and first betti number");
  add_common(b1, true);
  b1->add_option("--p-rank", config.p_rank_primes, "extra primes to report p-ranks for");

  auto* chain = app.add_subcommand("chain", "derived p-series chain");
  add_common(chain, true);
  chain->add_option("--p", config.p, "prime");
  chain->add_option("--depth", config.depth, "chain depth");

  auto* approx = app.add_subcommand("approx", "betti ratio sequence and lower-bound report");
  add_common(approx, false);
  approx->add_option("presentation", presentation_arg,
                     "presentation text (or @file); omit when using --from-chain");
  approx->add_option("--p", config.p, "prime");
  approx->add_option("--depth", config.depth, "chain depth");
  approx->add_option("--from-chain", chain_file, "read a serialized chain JSON file");
  approx->add_option("--known-b12", known_b12,
                     "known exact first L2-betti number (reference, e.g. \"1\" or \"2\")");
  approx->add_option("--torsion-eps", torsion_eps, "epsilon for the torsion annotation");

  auto* vd = app.add_subcommand("vd", "p-virtual deficiency lower bound certificate");
  add_common(vd, true);
  vd->add_option("--p", config.p, "prime");
  vd->add_option("--depth", config.depth, "chain depth");

  auto* cert = app.add_subcommand("cert", "deficiency, vd and completion certificates");
  add_common(cert, true);
  cert->add_option("--p", config.p, "prime");
  cert->add_option("--depth", config.depth, "chain depth");

  auto* tower = app.add_subcommand("tower", "bounded-depth torsion-tower simulation");
  add_common(tower, false);
  tower->add_option("--gens", config.gens, "number of generators (>= 2)");
  tower->add_option("--p", config.p, "prime");
  tower->add_option("--eps", eps, "epsilon, 0 < eps < gens - 1 (rational, e.g. 1/2)");
  tower->add_option("--steps", config.steps, "number of enumeration steps");
  tower->add_option("--probe-depth", config.probe_depth, "order probe depth");
  tower->add_option("--n-cap", config.n_cap, "largest exponent n tried in case 2");
  tower->add_option("--chain-depth", config.chain_depth, "witness chain depth");
  tower->add_option("--word-check-cap", config.word_check_cap,
                    "cap for the separation word length check");
  tower->add_option("--delta", delta, "expected per-step drop bound (rational)");

  CLI11_PARSE(app, argc, argv);

  try {
    config.command = app.get_subcommands().front()->get_name();
    config.presentation = resolve_input(presentation_arg);
    if (!known_b12.empty()) config.known_b12 = parse_ratio(known_b12);
    if (!delta.empty()) config.delta = parse_ratio(delta);
    if (!torsion_eps.empty()) config.torsion_epsilon = parse_ratio(torsion_eps);
    if (!eps.empty()) config.eps = parse_ratio(eps);
    if (!chain_file.empty()) config.chain_input = resolve_input("@" + chain_file);
    if (config.command == "approx" && chain_file.empty() && config.presentation.empty()) {
      std::cerr << "error: approx needs a presentation or --from-chain\n";
      return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (!output_path.empty()) {
    std::ofstream out(output_path);
    if (!out) {
      std::cerr << "error: cannot write '" << output_path << "'\n";
      return 1;
    }
    return betti::dispatch(config, out, std::cerr);
  }
  return betti::dispatch(config, std::cout, std::cerr);
}
