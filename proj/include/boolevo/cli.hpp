#pragma once

#include <cstdint>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "boolevo/csv.hpp"
#include "boolevo/ga.hpp"
#include "boolevo/oracle.hpp"
#include "boolevo/sweep.hpp"

namespace boolevo {

namespace detail {

inline void print_spectrum(std::ostream& out, const WalshSpectrum& s) {
  out << "spectrum:";
  for (std::int32_t c : s.coeffs) {
    out << ' ' << c;
  }
  out << '\n';
}

inline void print_run_summary(std::ostream& out, const RunResult& r) {
  const std::uint64_t evals_to_best =
      r.best_fitness_trace.empty() ? 0 : r.best_fitness_trace.back().first;
  out << "run: n=" << r.config.n << " k=" << r.config.k
      << " crossover=" << to_string(r.config.crossover)
      << " fitness=" << to_string(r.config.fitness) << " budget=" << r.config.budget
      << " seed=" << r.seed << '\n';
  out << "best_fitness=" << format_double(r.best_individual.fitness)
      << " best_balanced_nl=" << r.best_balanced_nonlinearity
      << " evals_to_best=" << evals_to_best << '\n';
  out << "evaluations=" << r.evaluations_used << " bias_updates=" << r.bias_updates_applied
      << " final_p=" << format_double(r.final_p)
      << " wallclock_ms=" << format_double(r.wallclock_ms) << '\n';
  out << "best_table_hex=" << format_truth_table_hex(r.best_individual.chromosome) << '\n';
}

}  // namespace detail

// Entry point behind the `boolevo` binary; split out so tests can drive it
// directly. Exit codes: 0 success, 1 usage error, 2 runtime error.
inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  CLI::App app{"steady-state GA for evolving balanced highly nonlinear Boolean functions"};
  app.require_subcommand(1);

  GaConfig cfg;
  std::uint64_t k_flag = 0;
  std::string fitness_name = "fit2";
  std::string crossover_name = "adaptive";
  std::string out_path;
  std::string aggregate_path;
  std::vector<double> p0_list{0.5, 0.6, 0.7, 0.8, 0.9};
  std::vector<double> alpha_list{0.9, 0.95, 0.99};
  std::size_t runs = 50;
  unsigned threads = 1;
  int threshold = 0;
  int optimum = 0;
  int oracle_n = 3;
  std::string table_text;

  const auto add_ga_flags = [&](CLI::App* cmd) {
    cmd->add_option("--n", cfg.n, "number of Boolean variables")->capture_default_str();
    cmd->add_option("--k", k_flag, "target Hamming weight (default 2^(n-1))");
    cmd->add_option("--pop", cfg.pop_size, "population size")->capture_default_str();
    cmd->add_option("--tournament", cfg.tournament_size, "tournament size")->capture_default_str();
    cmd->add_option("--pm", cfg.p_m, "swap mutation probability")->capture_default_str();
    cmd->add_option("--budget", cfg.budget, "total fitness evaluations")->capture_default_str();
    cmd->add_option("--p0", cfg.p0, "initial unbalancedness probability")->capture_default_str();
    cmd->add_option("--alpha", cfg.alpha, "cooling factor")->capture_default_str();
    cmd->add_option("--interval", cfg.interval_m, "evaluations between bias updates")
        ->capture_default_str();
    cmd->add_option("--fitness", fitness_name, "fitness variant, fit1 or fit2")
        ->check(CLI::IsMember({"fit1", "fit2"}))
        ->capture_default_str();
    cmd->add_option("--crossover", crossover_name, "crossover operator, plain or adaptive")
        ->check(CLI::IsMember({"plain", "adaptive"}))
        ->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "64-bit seed")->capture_default_str();
  };

  CLI::App* run_cmd = app.add_subcommand("run", "execute one GA run");
  add_ga_flags(run_cmd);
  run_cmd->add_option("--out", out_path, "write the run as a rows CSV");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "run the (p0, alpha) parameter sweep");
  add_ga_flags(sweep_cmd);
  sweep_cmd->add_option("--p0-list", p0_list, "swept p0 values")
      ->delimiter(',')
      ->capture_default_str();
  sweep_cmd->add_option("--alpha-list", alpha_list, "swept alpha values")
      ->delimiter(',')
      ->capture_default_str();
  sweep_cmd->add_option("--runs", runs, "independent runs per combination")->capture_default_str();
  sweep_cmd->add_option("--threads", threads, "worker threads (0 = hardware)")
      ->capture_default_str();
  sweep_cmd->add_option("--threshold", threshold, "success nonlinearity threshold (default by n)");
  sweep_cmd->add_option("--optimum", optimum, "optimum nonlinearity (default by n)");
  sweep_cmd->add_option("--out", out_path, "write per-run rows CSV");
  sweep_cmd->add_option("--aggregate-out", aggregate_path, "write per-combination aggregate CSV");

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "brute-force reference computations");
  oracle_cmd->require_subcommand(1);
  CLI::App* oracle_walsh = oracle_cmd->add_subcommand("walsh", "naive Walsh transform");
  oracle_walsh->add_option("table", table_text, "truth table, binary or hex")->required();
  CLI::App* oracle_affine =
      oracle_cmd->add_subcommand("affine-nl", "nonlinearity via affine distance enumeration");
  oracle_affine->add_option("table", table_text, "truth table, binary or hex")->required();
  CLI::App* oracle_exhaustive = oracle_cmd->add_subcommand(
      "exhaustive", "exhaustive balanced optimum for small n");
  oracle_exhaustive->add_option("--n", oracle_n, "number of variables (at most 4)")
      ->capture_default_str();

  CLI::App* props_cmd = app.add_subcommand("props", "print properties of a truth table");
  props_cmd->add_option("table", table_text, "truth table, binary or hex")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run_cmd->parsed() || sweep_cmd->parsed()) {
      CLI::App* cmd = run_cmd->parsed() ? run_cmd : sweep_cmd;
      cfg.fitness = fitness_variant_from_string(fitness_name);
      cfg.crossover = crossover_kind_from_string(crossover_name);
      cfg.k = cmd->count("--k") ? k_flag : table_size(cfg.n) / 2;
      if (cfg.crossover == CrossoverKind::Plain) {
        for (const char* flag : {"--p0", "--alpha", "--interval"}) {
          if (cmd->count(flag)) {
            throw std::invalid_argument(std::string(flag) + " requires --crossover adaptive");
          }
        }
      }
      validate(cfg);

      if (run_cmd->parsed()) {
        const RunResult result = ga_run(cfg);
        detail::print_run_summary(out, result);
        if (!out_path.empty()) {
          export_results(result, out_path, ExportFormat::Rows);
        }
        return 0;
      }

      SweepSpec spec;
      spec.base = cfg;
      spec.p0_values = p0_list;
      spec.alpha_values = alpha_list;
      spec.runs_per_combo = runs;
      spec.master_seed = cfg.seed;
      spec.threshold = sweep_cmd->count("--threshold") ? threshold : default_threshold(cfg.n);
      spec.optimum = sweep_cmd->count("--optimum") ? optimum : default_optimum(cfg.n);
      if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
      }
      const SweepGrid grid = run_sweep(spec, threads);
      out << "sweep: n=" << cfg.n << " combos=" << grid.combos.size() << " runs_per_combo=" << runs
          << " threshold=" << spec.threshold << " optimum=" << spec.optimum << '\n';
      for (const SweepCombo& combo : grid.combos) {
        out << "p0=" << format_double(combo.p0) << " alpha=" << format_double(combo.alpha)
            << " runs=" << combo.runs.size() << " count_ge_threshold=" << combo.count_ge_threshold
            << " count_eq_optimum=" << combo.count_eq_optimum
            << " success_rate=" << format_double(combo.success_rate) << '\n';
      }
      if (!out_path.empty()) {
        export_results(grid, out_path, ExportFormat::Rows);
      }
      if (!aggregate_path.empty()) {
        export_results(grid, aggregate_path, ExportFormat::Aggregate);
      }
      return 0;
    }

    if (oracle_walsh->parsed()) {
      const TruthTable t = parse_truth_table(table_text);
      out << "n=" << t.n << '\n';
      detail::print_spectrum(out, naive_walsh(t));
      return 0;
    }
    if (oracle_affine->parsed()) {
      const TruthTable t = parse_truth_table(table_text);
      out << "n=" << t.n << " affine_distance_nl=" << affine_distance_nl(t) << '\n';
      return 0;
    }
    if (oracle_exhaustive->parsed()) {
      const BalancedOptimum opt = exhaustive_balanced_optimum(oracle_n);
      out << "n=" << oracle_n << " max_nonlinearity=" << opt.max_nonlinearity
          << " optima_count=" << opt.optima_count << '\n';
      return 0;
    }
    if (props_cmd->parsed()) {
      const TruthTable t = parse_truth_table(table_text);
      const WalshSpectrum spectrum = walsh_transform(t);
      out << "n=" << t.n << " length=" << t.bits.size() << '\n';
      out << "weight=" << hamming_weight(t) << '\n';
      out << "balanced=" << (is_balanced(t) ? "yes" : "no") << '\n';
      out << "nonlinearity=" << nonlinearity(spectrum) << '\n';
      detail::print_spectrum(out, spectrum);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace boolevo
