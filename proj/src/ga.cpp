#include "csched/ga.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace csched {

void validate(const GaConfig& cfg) {
    if (cfg.population_size == 0) {
        throw std::invalid_argument("population_size must be >= 1");
    }
    if (cfg.generations == 0) {
        throw std::invalid_argument("generations must be >= 1");
    }
    if (!(cfg.crossover_rate >= 0.0 && cfg.crossover_rate <= 1.0)) {
        throw std::invalid_argument("crossover_rate must be in [0, 1]");
    }
    if (cfg.mutation_rate && !(*cfg.mutation_rate >= 0.0 && *cfg.mutation_rate <= 1.0)) {
        throw std::invalid_argument("mutation_rate must be in [0, 1]");
    }
    if (cfg.elite_count >= cfg.population_size) {
        throw std::invalid_argument("elite_count must be < population_size");
    }
    if (cfg.tournament_size < 2) {
        throw std::invalid_argument("tournament_size must be >= 2");
    }
    if (cfg.tournament_size > cfg.population_size) {
        throw std::invalid_argument("tournament_size must be <= population_size");
    }
    if (!(cfg.penalty_weight >= 0.0) || !std::isfinite(cfg.penalty_weight)) {
        throw std::invalid_argument("penalty_weight must be finite and >= 0");
    }
}

double resolved_mutation_rate(const GaConfig& cfg, std::size_t num_containers) {
    if (cfg.mutation_rate) {
        return *cfg.mutation_rate;
    }
    return num_containers == 0 ? 0.0 : 1.0 / static_cast<double>(num_containers);
}

namespace {

Assignment random_assignment(std::size_t num_containers, std::size_t num_nodes, Rng& rng) {
    Assignment a;
    a.node_of.resize(num_containers);
    for (auto& gene : a.node_of) {
        gene = rng.uniform_index(num_nodes);
    }
    return a;
}

std::vector<Assignment> init_population_impl(const ProblemInstance& instance, const GaConfig& cfg,
                                             Rng& rng) {
    std::vector<Assignment> pop;
    pop.reserve(cfg.population_size);
    for (std::size_t i = 0; i < cfg.population_size; ++i) {
        pop.push_back(random_assignment(instance.num_containers(), instance.num_nodes(), rng));
    }
    return pop;
}

double fitness_of_loads(const ProblemInstance& instance, const std::vector<ResourceVector>& loads,
                        const GaConfig& cfg) {
    const auto breakdown = objective_from_loads(instance.nodes(), loads, cfg.weights);
    return breakdown.scalar - cfg.penalty_weight * loads_violation(instance.nodes(), loads);
}

// Fitness with reusable load buffer, the hot path of evolve().
double fitness_buffered(const ProblemInstance& instance, const Assignment& a, const GaConfig& cfg,
                        std::vector<ResourceVector>& loads) {
    loads = instance.base_load();
    for (std::size_t i = 0; i < a.node_of.size(); ++i) {
        loads[a.node_of[i]] += instance.containers()[i].demand;
    }
    return fitness_of_loads(instance, loads, cfg);
}

}  // namespace

std::vector<Assignment> init_population(const ProblemInstance& instance, const GaConfig& cfg) {
    validate(cfg);
    Rng rng(cfg.seed);
    return init_population_impl(instance, cfg, rng);
}

double fitness(const ProblemInstance& instance, const Assignment& a, const GaConfig& cfg) {
    check_assignment(instance, a);
    return fitness_of_loads(instance, node_loads(instance, a), cfg);
}

std::size_t tournament_select(const std::vector<double>& fitnesses, std::size_t tournament_size,
                              Rng& rng) {
    if (fitnesses.empty()) {
        throw std::invalid_argument("selection pool must be non-empty");
    }
    std::size_t best = fitnesses.size();
    for (std::size_t t = 0; t < tournament_size; ++t) {
        const std::size_t cand = rng.uniform_index(fitnesses.size());
        if (best == fitnesses.size() || fitnesses[cand] > fitnesses[best] ||
            (fitnesses[cand] == fitnesses[best] && cand < best)) {
            best = cand;
        }
    }
    return best;
}

const Assignment& select(const std::vector<Assignment>& pool, const std::vector<double>& fitnesses,
                         const GaConfig& cfg, Rng& rng) {
    if (pool.size() != fitnesses.size()) {
        throw std::invalid_argument("pool and fitness sizes differ");
    }
    return pool[tournament_select(fitnesses, cfg.tournament_size, rng)];
}

std::pair<Assignment, Assignment> crossover(const Assignment& p1, const Assignment& p2,
                                            const GaConfig& cfg, Rng& rng) {
    if (p1.node_of.size() != p2.node_of.size()) {
        throw std::invalid_argument("crossover parents must cover the same containers");
    }
    std::pair<Assignment, Assignment> children{p1, p2};
    if (!rng.bernoulli(cfg.crossover_rate)) {
        return children;
    }
    for (std::size_t i = 0; i < p1.node_of.size(); ++i) {
        if (rng.uniform_double() < 0.5) {
            children.first.node_of[i] = p1.node_of[i];
            children.second.node_of[i] = p2.node_of[i];
        } else {
            children.first.node_of[i] = p2.node_of[i];
            children.second.node_of[i] = p1.node_of[i];
        }
    }
    return children;
}

Assignment mutate(const Assignment& a, std::size_t num_nodes, const GaConfig& cfg, Rng& rng) {
    const double rate = resolved_mutation_rate(cfg, a.node_of.size());
    Assignment out = a;
    for (auto& gene : out.node_of) {
        if (rng.uniform_double() < rate) {
            gene = rng.uniform_index(num_nodes);
        }
    }
    return out;
}

GaOutcome evolve(const ProblemInstance& instance, const GaConfig& cfg) {
    validate(cfg);
    Rng rng(cfg.seed);

    std::vector<Assignment> pop = init_population_impl(instance, cfg, rng);
    std::vector<double> fit(pop.size());
    std::vector<ResourceVector> load_buffer;

    GaOutcome outcome;
    outcome.history.reserve(cfg.generations + 1);

    double best_ever = -std::numeric_limits<double>::infinity();

    auto evaluate = [&] {
        double sum = 0.0;
        double gen_best = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < pop.size(); ++i) {
            fit[i] = fitness_buffered(instance, pop[i], cfg, load_buffer);
            sum += fit[i];
            if (fit[i] > gen_best) {
                gen_best = fit[i];
            }
            if (fit[i] > best_ever) {
                best_ever = fit[i];
                outcome.best = pop[i];
            }
        }
        outcome.history.push_back({gen_best, sum / static_cast<double>(pop.size())});
    };

    evaluate();

    std::vector<std::size_t> order(pop.size());
    std::vector<Assignment> next;
    next.reserve(pop.size());

    for (std::size_t gen = 0; gen < cfg.generations; ++gen) {
        // Elites: fittest individuals carried over unchanged, ties by index.
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (fit[a] != fit[b]) {
                return fit[a] > fit[b];
            }
            return a < b;
        });
        next.clear();
        for (std::size_t e = 0; e < cfg.elite_count; ++e) {
            next.push_back(pop[order[e]]);
        }
        while (next.size() < cfg.population_size) {
            const std::size_t ia = tournament_select(fit, cfg.tournament_size, rng);
            const std::size_t ib = tournament_select(fit, cfg.tournament_size, rng);
            auto children = crossover(pop[ia], pop[ib], cfg, rng);
            next.push_back(mutate(children.first, instance.num_nodes(), cfg, rng));
            if (next.size() < cfg.population_size) {
                next.push_back(mutate(children.second, instance.num_nodes(), cfg, rng));
            }
        }
        pop.swap(next);
        evaluate();
    }

    outcome.best_breakdown = objective_value(instance, outcome.best, cfg.weights);
    outcome.best_feasible = is_feasible(instance, outcome.best);
    return outcome;
}

}  // namespace csched
