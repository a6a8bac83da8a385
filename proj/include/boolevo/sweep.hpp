#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "boolevo/ga.hpp"
#include "boolevo/random.hpp"

namespace boolevo {

// Best known / exact balanced nonlinearity for the instance sizes used in
// the experiments; 0 for sizes without a recorded value. CLI defaults only;
// both thresholds stay overridable flags.
inline int default_threshold(int n) {
  switch (n) {
    case 3: return 2;
    case 4: return 4;
    case 5: return 12;
    case 6: return 26;
    case 7: return 54;
    default: return 0;
  }
}

inline int default_optimum(int n) {
  switch (n) {
    case 3: return 2;
    case 4: return 4;
    case 5: return 12;
    case 6: return 26;
    case 7: return 56;
    default: return 0;
  }
}

// Parameter sweep over the (p0, alpha) grid with R independent runs per
// combination. Per-run success means the best exactly-balanced individual
// reached `threshold`; `optimum` is counted alongside.
struct SweepSpec {
  GaConfig base;
  std::vector<double> p0_values{0.5, 0.6, 0.7, 0.8, 0.9};
  std::vector<double> alpha_values{0.9, 0.95, 0.99};
  std::size_t runs_per_combo = 50;
  std::uint64_t master_seed = 0;
  int threshold = 54;
  int optimum = 56;
};

struct SweepCombo {
  double p0 = 0.0;
  double alpha = 0.0;
  std::vector<RunResult> runs;
  // Aggregates, recomputable from `runs` (see heatmap_counts).
  std::size_t count_ge_threshold = 0;
  std::size_t count_eq_optimum = 0;
  double success_rate = 0.0;
};

struct SweepGrid {
  SweepSpec spec;
  std::vector<SweepCombo> combos;  // p0-major order, matching combo_index below
};

// Per-run seed: a bijective mix of (combo, run) xored into the master seed,
// injective across all (combo, run) pairs below 2^32. No stream is ever
// reused between runs.
inline std::uint64_t derive_run_seed(std::uint64_t master_seed, std::uint64_t combo_index,
                                     std::uint64_t run_index) {
  return mix64(master_seed ^ mix64((combo_index << 32) | (run_index & 0xffffffffULL)));
}

inline void validate(const SweepSpec& spec) {
  if (spec.p0_values.empty() || spec.alpha_values.empty()) {
    throw std::invalid_argument("sweep: parameter value lists must be non-empty");
  }
  if (spec.runs_per_combo == 0) {
    throw std::invalid_argument("sweep: runs per combination must be at least 1");
  }
  if (spec.runs_per_combo >= (std::uint64_t{1} << 32) ||
      spec.p0_values.size() * spec.alpha_values.size() >= (std::uint64_t{1} << 32)) {
    throw std::invalid_argument("sweep: grid too large for seed derivation");
  }
  for (std::size_t c = 0; c < spec.p0_values.size() * spec.alpha_values.size(); ++c) {
    GaConfig cfg = spec.base;
    cfg.p0 = spec.p0_values[c / spec.alpha_values.size()];
    cfg.alpha = spec.alpha_values[c % spec.alpha_values.size()];
    validate(cfg);
  }
}

namespace detail {

inline void aggregate_combo(SweepCombo& combo, int threshold, int optimum) {
  combo.count_ge_threshold = 0;
  combo.count_eq_optimum = 0;
  for (const RunResult& r : combo.runs) {
    if (r.best_balanced_nonlinearity >= threshold) ++combo.count_ge_threshold;
    if (r.best_balanced_nonlinearity == optimum) ++combo.count_eq_optimum;
  }
  combo.success_rate =
      static_cast<double>(combo.count_ge_threshold) / static_cast<double>(combo.runs.size());
}

}  // namespace detail

// Executes the full grid. Each run owns an independently seeded stream and a
// fixed result slot, so the grid is a pure function of the spec no matter how
// many worker threads execute it (wallclock fields aside).
inline SweepGrid run_sweep(const SweepSpec& spec, unsigned threads = 1) {
  validate(spec);
  const std::size_t alpha_count = spec.alpha_values.size();
  const std::size_t combo_count = spec.p0_values.size() * alpha_count;
  const std::size_t total_runs = combo_count * spec.runs_per_combo;

  std::vector<RunResult> results(total_runs);
  const auto run_job = [&](std::size_t job) {
    const std::size_t combo = job / spec.runs_per_combo;
    const std::size_t run = job % spec.runs_per_combo;
    GaConfig cfg = spec.base;
    cfg.p0 = spec.p0_values[combo / alpha_count];
    cfg.alpha = spec.alpha_values[combo % alpha_count];
    cfg.seed = derive_run_seed(spec.master_seed, combo, run);
    results[job] = ga_run(cfg);
  };

  if (threads <= 1) {
    for (std::size_t job = 0; job < total_runs; ++job) {
      run_job(job);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&] {
        for (std::size_t job = next.fetch_add(1); job < total_runs; job = next.fetch_add(1)) {
          run_job(job);
        }
      });
    }
    for (std::thread& w : workers) {
      w.join();
    }
  }

  SweepGrid grid;
  grid.spec = spec;
  grid.combos.resize(combo_count);
  for (std::size_t c = 0; c < combo_count; ++c) {
    SweepCombo& combo = grid.combos[c];
    combo.p0 = spec.p0_values[c / alpha_count];
    combo.alpha = spec.alpha_values[c % alpha_count];
    combo.runs.assign(results.begin() + static_cast<std::ptrdiff_t>(c * spec.runs_per_combo),
                      results.begin() + static_cast<std::ptrdiff_t>((c + 1) * spec.runs_per_combo));
    detail::aggregate_combo(combo, spec.threshold, spec.optimum);
  }
  return grid;
}

struct HeatmapCell {
  double p0 = 0.0;
  double alpha = 0.0;
  std::size_t count_ge_threshold = 0;
  std::size_t count_eq_optimum = 0;
};

// Per-cell counts recomputed from the raw runs: how many reached at least
// `threshold` and how many hit `optimum` exactly.
inline std::vector<HeatmapCell> heatmap_counts(const SweepGrid& grid, int threshold, int optimum) {
  std::vector<HeatmapCell> cells;
  cells.reserve(grid.combos.size());
  for (const SweepCombo& combo : grid.combos) {
    HeatmapCell cell{combo.p0, combo.alpha, 0, 0};
    for (const RunResult& r : combo.runs) {
      if (r.best_balanced_nonlinearity >= threshold) ++cell.count_ge_threshold;
      if (r.best_balanced_nonlinearity == optimum) ++cell.count_eq_optimum;
    }
    cells.push_back(cell);
  }
  return cells;
}

}  // namespace boolevo
