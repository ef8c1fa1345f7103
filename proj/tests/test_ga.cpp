#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "csched/ga.hpp"
#include "oracle.hpp"

using namespace csched;

namespace {

ProblemInstance make_instance(std::vector<ResourceVector> demands, std::vector<ResourceVector> caps) {
    std::vector<Container> containers;
    for (std::size_t i = 0; i < demands.size(); ++i) {
        containers.emplace_back("c" + std::to_string(i), demands[i]);
    }
    std::vector<Node> nodes;
    for (std::size_t j = 0; j < caps.size(); ++j) {
        nodes.emplace_back("n" + std::to_string(j), caps[j]);
    }
    return ProblemInstance(std::move(containers), std::move(nodes));
}

ProblemInstance random_small_instance(Rng& rng, std::size_t min_containers, std::size_t max_containers,
                                      std::size_t min_nodes, std::size_t max_nodes) {
    const std::size_t m = min_containers + rng.uniform_index(max_containers - min_containers + 1);
    const std::size_t k = min_nodes + rng.uniform_index(max_nodes - min_nodes + 1);
    std::vector<ResourceVector> demands;
    for (std::size_t i = 0; i < m; ++i) {
        demands.push_back({0.05 + 0.4 * rng.uniform_double(), 0.05 + 0.4 * rng.uniform_double()});
    }
    std::vector<ResourceVector> caps;
    for (std::size_t j = 0; j < k; ++j) {
        caps.push_back({0.6 + 1.2 * rng.uniform_double(), 0.6 + 1.2 * rng.uniform_double()});
    }
    return make_instance(std::move(demands), std::move(caps));
}

bool assignment_valid(const Assignment& a, std::size_t num_nodes) {
    for (std::size_t g : a.node_of) {
        if (g >= num_nodes) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("config validation") {
    GaConfig cfg;
    CHECK_NOTHROW(validate(cfg));
    cfg.elite_count = cfg.population_size;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg = GaConfig{};
    cfg.tournament_size = 1;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg = GaConfig{};
    cfg.tournament_size = cfg.population_size + 1;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg = GaConfig{};
    cfg.crossover_rate = 1.5;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg = GaConfig{};
    cfg.mutation_rate = -0.1;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
}

TEST_CASE("init_population") {
    GaConfig cfg;
    cfg.population_size = 200;
    cfg.seed = 41;

    SUBCASE("single node forces every gene") {
        auto inst = make_instance({{0.1, 0.1}, {0.2, 0.2}}, {{1, 1}});
        for (const auto& a : init_population(inst, cfg)) {
            for (std::size_t g : a.node_of) {
                CHECK(g == 0);
            }
        }
    }
    SUBCASE("same seed gives identical populations") {
        auto inst = make_instance({{0.1, 0.1}, {0.2, 0.2}, {0.3, 0.1}}, {{1, 1}, {1, 1}, {1, 1}});
        const auto p1 = init_population(inst, cfg);
        const auto p2 = init_population(inst, cfg);
        REQUIRE(p1.size() == p2.size());
        for (std::size_t i = 0; i < p1.size(); ++i) {
            CHECK(p1[i] == p2[i]);
        }
    }
    SUBCASE("gene values are uniform over nodes (chi-square)") {
        // 3 nodes, 6 containers, population 200: 1200 gene draws, expected
        // 400 per node. Chi-square with 2 dof at p = 0.001 is 13.816.
        auto inst = make_instance(
            {{0.1, 0.1}, {0.1, 0.1}, {0.1, 0.1}, {0.1, 0.1}, {0.1, 0.1}, {0.1, 0.1}},
            {{1, 1}, {1, 1}, {1, 1}});
        std::size_t counts[3] = {0, 0, 0};
        for (const auto& a : init_population(inst, cfg)) {
            for (std::size_t g : a.node_of) {
                ++counts[g];
            }
        }
        const double expected = 1200.0 / 3.0;
        double chi2 = 0.0;
        for (std::size_t c : counts) {
            const double d = static_cast<double>(c) - expected;
            chi2 += d * d / expected;
        }
        CHECK(chi2 < 13.816);
    }
}

TEST_CASE("fitness is the penalized objective") {
    // Two containers on one node of capacity (1,1): load (1.2, 0.8),
    // violation 0.2. On separate nodes: feasible.
    auto inst = make_instance({{0.7, 0.5}, {0.5, 0.3}}, {{1, 1}, {1, 1}});
    GaConfig cfg;
    cfg.weights = ObjectiveWeights(1.0, 1.0);

    SUBCASE("feasible assignment scores exactly O") {
        Assignment a{{0, 1}};
        const auto b = objective_value(inst, a, cfg.weights);
        CHECK(fitness(inst, a, cfg) == b.scalar);
    }
    SUBCASE("violation 0.2 with penalty 10 subtracts 2.0") {
        Assignment a{{0, 0}};
        cfg.penalty_weight = 10.0;
        const auto b = objective_value(inst, a, cfg.weights);
        CHECK(fitness(inst, a, cfg) == doctest::Approx(b.scalar - 2.0).epsilon(1e-12));
    }
    SUBCASE("penalty 0 scores O even when infeasible") {
        Assignment a{{0, 0}};
        cfg.penalty_weight = 0.0;
        const auto b = objective_value(inst, a, cfg.weights);
        CHECK(fitness(inst, a, cfg) == b.scalar);
    }
}

TEST_CASE("tournament selection") {
    SUBCASE("pool of one") {
        Rng rng(5);
        const std::vector<double> fitnesses{0.7};
        CHECK(tournament_select(fitnesses, 3, rng) == 0);
    }
    SUBCASE("winner is the fittest drawn entrant, ties to lowest index") {
        const std::vector<double> fitnesses{0.3, 0.9, 0.9, 0.1, 0.5};
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            Rng rng(seed);
            const std::size_t picked = tournament_select(fitnesses, 3, rng);

            // Replay the same draw sequence to reconstruct the entrants.
            Rng replay(seed);
            std::size_t expected = fitnesses.size();
            for (int t = 0; t < 3; ++t) {
                const std::size_t cand = replay.uniform_index(fitnesses.size());
                if (expected == fitnesses.size() || fitnesses[cand] > fitnesses[expected] ||
                    (fitnesses[cand] == fitnesses[expected] && cand < expected)) {
                    expected = cand;
                }
            }
            CHECK(picked == expected);
        }
    }
    SUBCASE("a tournament that drew the global best returns it") {
        const std::vector<double> fitnesses{0.3, 0.9, 0.2};
        int best_drawn = 0;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            Rng replay(seed);
            bool contains_best = false;
            for (int t = 0; t < 2; ++t) {
                if (replay.uniform_index(fitnesses.size()) == 1) {
                    contains_best = true;
                }
            }
            Rng rng(seed);
            if (contains_best) {
                CHECK(tournament_select(fitnesses, 2, rng) == 1);
                ++best_drawn;
            }
        }
        CHECK(best_drawn > 20);
    }
    SUBCASE("fixed seed gives an identical selection sequence") {
        const std::vector<double> fitnesses{0.3, 0.9, 0.2, 0.4};
        Rng a(77);
        Rng b(77);
        for (int i = 0; i < 50; ++i) {
            CHECK(tournament_select(fitnesses, 3, a) == tournament_select(fitnesses, 3, b));
        }
    }
}

TEST_CASE("crossover") {
    GaConfig cfg;
    Assignment p1{{0, 1, 2, 0, 1, 2}};
    Assignment p2{{2, 2, 0, 1, 1, 0}};

    SUBCASE("identical parents breed identical children") {
        Rng rng(3);
        cfg.crossover_rate = 1.0;
        const auto [c1, c2] = crossover(p1, p1, cfg, rng);
        CHECK(c1 == p1);
        CHECK(c2 == p1);
    }
    SUBCASE("rate zero copies the parents") {
        Rng rng(3);
        cfg.crossover_rate = 0.0;
        const auto [c1, c2] = crossover(p1, p2, cfg, rng);
        CHECK(c1 == p1);
        CHECK(c2 == p2);
    }
    SUBCASE("rate one interleaves by the seeded coin sequence") {
        cfg.crossover_rate = 1.0;
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            Rng rng(seed);
            const auto [c1, c2] = crossover(p1, p2, cfg, rng);

            Rng replay(seed);
            REQUIRE(replay.uniform_double() < 1.0);  // the rate coin
            for (std::size_t i = 0; i < p1.node_of.size(); ++i) {
                const bool take_first = replay.uniform_double() < 0.5;
                CHECK(c1.node_of[i] == (take_first ? p1 : p2).node_of[i]);
                CHECK(c2.node_of[i] == (take_first ? p2 : p1).node_of[i]);
            }
        }
    }
}

TEST_CASE("mutate") {
    GaConfig cfg;
    Assignment a{{0, 1, 2, 0, 1}};

    SUBCASE("rate zero leaves the assignment unchanged") {
        Rng rng(9);
        cfg.mutation_rate = 0.0;
        CHECK(mutate(a, 3, cfg, rng) == a);
    }
    SUBCASE("rate one over a single node is a no-op") {
        Rng rng(9);
        cfg.mutation_rate = 1.0;
        Assignment single{{0, 0, 0}};
        CHECK(mutate(single, 1, cfg, rng) == single);
    }
    SUBCASE("rate one resamples reproducibly") {
        cfg.mutation_rate = 1.0;
        Rng r1(123);
        Rng r2(123);
        const auto m1 = mutate(a, 3, cfg, r1);
        const auto m2 = mutate(a, 3, cfg, r2);
        CHECK(m1 == m2);
        CHECK(assignment_valid(m1, 3));
    }
}

TEST_CASE("operators stay closed over valid assignments") {
    Rng rng(31);
    GaConfig cfg;
    for (int iter = 0; iter < 1000; ++iter) {
        const std::size_t m = 1 + rng.uniform_index(8);
        const std::size_t k = 1 + rng.uniform_index(4);
        Assignment p1;
        Assignment p2;
        for (std::size_t i = 0; i < m; ++i) {
            p1.node_of.push_back(rng.uniform_index(k));
            p2.node_of.push_back(rng.uniform_index(k));
        }
        cfg.crossover_rate = rng.uniform_double();
        cfg.mutation_rate = rng.uniform_double();
        const auto [c1, c2] = crossover(p1, p2, cfg, rng);
        CHECK(assignment_valid(c1, k));
        CHECK(assignment_valid(c2, k));
        CHECK(c1.node_of.size() == m);
        CHECK(c2.node_of.size() == m);
        const auto mutated = mutate(c1, k, cfg, rng);
        CHECK(assignment_valid(mutated, k));
        CHECK(mutated.node_of.size() == m);
    }
}

TEST_CASE("evolve") {
    SUBCASE("one container, one node") {
        auto inst = make_instance({{0.5, 0.5}}, {{1, 1}});
        GaConfig cfg;
        cfg.population_size = 10;
        cfg.generations = 5;
        cfg.tournament_size = 3;
        cfg.elite_count = 1;
        const auto out = evolve(inst, cfg);
        CHECK(out.best.node_of == std::vector<std::size_t>{0});
        CHECK(out.best_feasible);

        auto too_big = make_instance({{1.5, 0.5}}, {{1, 1}});
        const auto out2 = evolve(too_big, cfg);
        CHECK(out2.best.node_of == std::vector<std::size_t>{0});
        CHECK_FALSE(out2.best_feasible);
    }

    SUBCASE("zero containers yields the empty assignment with O = 0") {
        auto inst = make_instance({}, {{1, 1}, {1, 1}});
        GaConfig cfg;
        cfg.population_size = 8;
        cfg.generations = 3;
        const auto out = evolve(inst, cfg);
        CHECK(out.best.node_of.empty());
        CHECK(out.best_breakdown.scalar == 0.0);
        CHECK(out.best_feasible);
        CHECK(out.history.size() == cfg.generations + 1);
    }

    SUBCASE("matches the exhaustive optimum on 6 containers x 3 nodes") {
        Rng rng(2);
        auto inst = random_small_instance(rng, 6, 6, 3, 3);
        GaConfig cfg;
        cfg.seed = 4242;
        const auto out = evolve(inst, cfg);
        const auto best = oracle::exhaustive_best(inst, cfg.weights.alpha, cfg.weights.beta,
                                                  cfg.penalty_weight);
        CHECK(fitness(inst, out.best, cfg) == doctest::Approx(best.fitness).epsilon(1e-12));
    }

    SUBCASE("identical configs give identical outcomes") {
        Rng rng(14);
        auto inst = random_small_instance(rng, 8, 8, 3, 3);
        GaConfig cfg;
        cfg.population_size = 30;
        cfg.generations = 40;
        cfg.seed = 99;
        const auto a = evolve(inst, cfg);
        const auto b = evolve(inst, cfg);
        CHECK(a.best == b.best);
        REQUIRE(a.history.size() == b.history.size());
        for (std::size_t i = 0; i < a.history.size(); ++i) {
            CHECK(a.history[i].best_fitness == b.history[i].best_fitness);
            CHECK(a.history[i].mean_fitness == b.history[i].mean_fitness);
        }
    }

    SUBCASE("history has generations + 1 entries and elitism keeps best monotone") {
        Rng rng(8);
        for (int iter = 0; iter < 25; ++iter) {
            auto inst = random_small_instance(rng, 4, 10, 2, 4);
            GaConfig cfg;
            cfg.population_size = 20;
            cfg.generations = 30;
            cfg.elite_count = 2;
            cfg.seed = 1000 + static_cast<std::uint64_t>(iter);
            const auto out = evolve(inst, cfg);
            REQUIRE(out.history.size() == cfg.generations + 1);
            for (std::size_t g = 1; g < out.history.size(); ++g) {
                CHECK(out.history[g].best_fitness >= out.history[g - 1].best_fitness);
            }
        }
    }
}
