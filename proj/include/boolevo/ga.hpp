#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "boolevo/bias_schedule.hpp"
#include "boolevo/bitstring.hpp"
#include "boolevo/crossover.hpp"
#include "boolevo/fitness.hpp"
#include "boolevo/mutation.hpp"
#include "boolevo/random.hpp"
#include "boolevo/truth_table.hpp"
#include "boolevo/walsh.hpp"

namespace boolevo {

enum class CrossoverKind { Plain, Adaptive };

inline std::string_view to_string(CrossoverKind c) {
  return c == CrossoverKind::Plain ? "plain" : "adaptive";
}

inline CrossoverKind crossover_kind_from_string(std::string_view s) {
  if (s == "plain") return CrossoverKind::Plain;
  if (s == "adaptive") return CrossoverKind::Adaptive;
  throw std::invalid_argument("crossover must be plain or adaptive, got '" + std::string(s) + "'");
}

// Complete description of one GA run. Defaults are the reference setup for
// n = 7: population 50, tournament 3, swap mutation at 0.7, a 10^6 evaluation
// budget and a bias update every 2000 evaluations.
struct GaConfig {
  int n = 7;
  std::size_t k = 64;  // target weight; 2^(n-1) for the balanced problem
  std::size_t pop_size = 50;
  std::size_t tournament_size = 3;
  double p_m = 0.7;
  std::uint64_t budget = 1'000'000;
  double p0 = 0.5;
  double alpha = 0.99;
  std::uint64_t interval_m = 2000;
  FitnessVariant fitness = FitnessVariant::WeightedPenalty;
  CrossoverKind crossover = CrossoverKind::Adaptive;
  std::uint64_t seed = 0;

  bool operator==(const GaConfig&) const = default;
};

inline GaConfig default_config(int n) {
  GaConfig c;
  c.n = n;
  c.k = table_size(n) / 2;
  return c;
}

inline void validate(const GaConfig& c) {
  if (c.n < 2 || c.n > 20) {
    throw std::invalid_argument("config: n must be in [2, 20]");
  }
  if (c.k > table_size(c.n)) {
    throw std::invalid_argument("config: target weight exceeds 2^n");
  }
  if (c.pop_size == 0) {
    throw std::invalid_argument("config: population must be non-empty");
  }
  if (c.tournament_size < 2 || c.tournament_size > c.pop_size) {
    throw std::invalid_argument("config: tournament size must be in [2, pop_size]");
  }
  if (!(c.p_m >= 0.0 && c.p_m <= 1.0)) {
    throw std::invalid_argument("config: mutation probability outside [0,1]");
  }
  if (!(c.p0 >= 0.0 && c.p0 <= 1.0)) {
    throw std::invalid_argument("config: p0 outside [0,1]");
  }
  if (!(c.alpha > 0.0 && c.alpha < 1.0)) {
    throw std::invalid_argument("config: alpha outside (0,1)");
  }
  if (c.interval_m == 0) {
    throw std::invalid_argument("config: update interval must be positive");
  }
  if (c.budget < c.pop_size) {
    throw std::invalid_argument("config: budget must cover the initial population");
  }
}

struct Individual {
  TruthTable chromosome;
  double fitness = 0.0;
  std::size_t weight = 0;  // cached, equals hamming_weight(chromosome)
  int nonlinearity = 0;    // cached, equals nonlinearity(walsh_transform(chromosome))
};

using Population = std::vector<Individual>;

struct RunResult {
  GaConfig config;
  std::uint64_t seed = 0;
  Individual best_individual;              // highest fitness ever evaluated, first on ties
  int best_balanced_nonlinearity = -1;     // over weight-2^(n-1) individuals only; -1 if none seen
  std::uint64_t evaluations_used = 0;
  std::vector<std::pair<std::uint64_t, double>> best_fitness_trace;  // (evaluation index, best fitness)
  std::uint64_t bias_updates_applied = 0;
  double final_p = 0.0;
  double wallclock_ms = 0.0;
};

inline Individual make_individual(TruthTable t, const Evaluation& e) {
  return Individual{std::move(t), e.fitness, e.weight, e.nonlinearity};
}

// pop_size uniformly random weight-k chromosomes (random k-subsets of
// positions), all evaluated; the caller accounts pop_size budget units.
template <class Rng>
Population init_population(const GaConfig& config, Rng& rng) {
  validate(config);
  const std::size_t size = table_size(config.n);
  Population pop;
  pop.reserve(config.pop_size);
  for (std::size_t i = 0; i < config.pop_size; ++i) {
    BitString bits(size, 0);
    for (std::size_t idx : sample_indices(rng, size, config.k)) {
      bits[idx] = 1;
    }
    TruthTable t{config.n, std::move(bits)};
    const Evaluation e = evaluate(t, config.fitness, config.k, config.p0);
    pop.push_back(make_individual(std::move(t), e));
  }
  return pop;
}

// One steady-state step: sample tournament_size distinct individuals, cross
// the two fittest (ties resolved by sample order, earlier wins), mutate,
// evaluate, and unconditionally overwrite the tournament's worst slot with
// the offspring. Consumes one budget unit and records it on the schedule.
// Returns the slot that now holds the offspring.
template <class Rng>
const Individual& tournament_step(Population& pop, const GaConfig& config,
                                  BiasSchedule& schedule, Rng& rng) {
  const std::vector<std::size_t> picks = sample_indices(rng, pop.size(), config.tournament_size);
  std::vector<std::size_t> order(picks.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double fa = pop[picks[a]].fitness;
    const double fb = pop[picks[b]].fitness;
    if (fa != fb) return fa > fb;
    return a < b;
  });
  const BitString& parent_x = pop[picks[order[0]]].chromosome.bits;
  const BitString& parent_y = pop[picks[order[1]]].chromosome.bits;
  const std::size_t loser = picks[order.back()];

  BitString child = config.crossover == CrossoverKind::Adaptive
                        ? counter_cross_unbal(parent_x, parent_y, parent_x.size(), config.k,
                                              schedule.current_p(), rng)
                        : counter_cross(parent_x, parent_y, config.k, rng);
  child = swap_mutation(std::move(child), config.p_m, rng);

  TruthTable t{config.n, std::move(child)};
  const Evaluation e = evaluate(t, config.fitness, config.k, schedule.current_p());
  pop[loser] = make_individual(std::move(t), e);
  schedule.record_evaluations(1);
  return pop[loser];
}

// Full steady-state run: seeds the stream from config.seed, evaluates the
// initial population, then iterates tournament steps until the evaluation
// budget is spent. Identical configs (seed included) produce identical
// results, wallclock aside.
inline RunResult ga_run(const GaConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();

  RandomSource rng(config.seed);
  BiasSchedule schedule(config.p0, config.alpha, config.interval_m);

  RunResult result;
  result.config = config;
  result.seed = config.seed;

  const std::size_t balanced_weight = table_size(config.n) / 2;
  std::uint64_t evals = 0;
  bool have_best = false;

  const auto observe = [&](const Individual& ind) {
    ++evals;
    if (!have_best || ind.fitness > result.best_individual.fitness) {
      result.best_individual = ind;
      result.best_fitness_trace.emplace_back(evals, ind.fitness);
      have_best = true;
    }
    if (ind.weight == balanced_weight && ind.nonlinearity > result.best_balanced_nonlinearity) {
      result.best_balanced_nonlinearity = ind.nonlinearity;
    }
  };

  Population pop = init_population(config, rng);
  for (const Individual& ind : pop) {
    observe(ind);
  }
  schedule.record_evaluations(config.pop_size);

  while (evals < config.budget) {
    observe(tournament_step(pop, config, schedule, rng));
  }

  result.evaluations_used = evals;
  result.bias_updates_applied = schedule.updates_applied();
  result.final_p = schedule.current_p();
  result.wallclock_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace boolevo
