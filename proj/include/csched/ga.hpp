#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "csched/objective.hpp"
#include "csched/rng.hpp"

namespace csched {

struct GaConfig {
    std::size_t population_size = 100;
    std::size_t generations = 300;
    double crossover_rate = 0.9;
    // Per-gene resample probability; defaults to 1 / num_containers when unset.
    std::optional<double> mutation_rate;
    std::size_t elite_count = 2;
    std::size_t tournament_size = 3;
    double penalty_weight = 10.0;
    ObjectiveWeights weights{};
    std::uint64_t seed = 0;
};

// Throws std::invalid_argument on out-of-range parameters.
void validate(const GaConfig& cfg);

double resolved_mutation_rate(const GaConfig& cfg, std::size_t num_containers);

struct GenerationStats {
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
};

struct GaOutcome {
    Assignment best;
    ObjectiveBreakdown best_breakdown;
    bool best_feasible = false;
    // One entry per generation plus the initial population (generations + 1).
    std::vector<GenerationStats> history;
};

// Random allocation: population_size individuals, each gene drawn uniformly
// over all nodes. Seeded from cfg.seed; identical seeds give identical
// populations.
std::vector<Assignment> init_population(const ProblemInstance& instance, const GaConfig& cfg);

// Penalized objective: O(a) - penalty_weight * violation_amount(a), with O
// evaluated on raw (possibly over-capacity) loads.
double fitness(const ProblemInstance& instance, const Assignment& a, const GaConfig& cfg);

// Tournament over precomputed fitness values: draws cfg.tournament_size pool
// indices uniformly with replacement, returns the index with the highest
// fitness; ties go to the lowest index. One uniform_index draw per entrant.
std::size_t tournament_select(const std::vector<double>& fitnesses, std::size_t tournament_size,
                              Rng& rng);
const Assignment& select(const std::vector<Assignment>& pool, const std::vector<double>& fitnesses,
                         const GaConfig& cfg, Rng& rng);

// Uniform crossover. Draw order: one uniform_double against crossover_rate;
// if it hits, one uniform_double per gene (< 0.5 takes parent 1 for child 1,
// child 2 gets the complement). Otherwise the children are copies.
std::pair<Assignment, Assignment> crossover(const Assignment& p1, const Assignment& p2,
                                            const GaConfig& cfg, Rng& rng);

// Per-gene mutation: one uniform_double per gene against the resolved rate;
// a hit resamples that gene uniformly over all nodes.
Assignment mutate(const Assignment& a, std::size_t num_nodes, const GaConfig& cfg, Rng& rng);

// Full run: generational replacement with elitism, fixed generation count,
// deterministic for a given (instance, cfg). A zero-container instance
// yields the empty assignment with a zero objective.
GaOutcome evolve(const ProblemInstance& instance, const GaConfig& cfg);

}  // namespace csched
