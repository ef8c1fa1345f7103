#include "csched/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "csched/objective.hpp"

namespace csched {

Assignment PlacementResult::to_assignment() const {
    if (!complete()) {
        throw std::logic_error("placement left " + std::to_string(unplaced.size()) +
                               " containers unplaced");
    }
    return Assignment{node_of};
}

namespace {

bool fits(const ResourceVector& load, const ResourceVector& demand, const ResourceVector& cap) {
    return (load + demand).fits_within(cap);
}

}  // namespace

PlacementResult static_rule_schedule(const ProblemInstance& instance) {
    PlacementResult result;
    result.node_of.assign(instance.num_containers(), PlacementResult::kUnplaced);
    std::vector<ResourceVector> loads = instance.base_load();

    for (std::size_t i = 0; i < instance.num_containers(); ++i) {
        const ResourceVector& demand = instance.containers()[i].demand;
        for (std::size_t j = 0; j < instance.num_nodes(); ++j) {
            if (fits(loads[j], demand, instance.nodes()[j].capacity)) {
                loads[j] += demand;
                result.node_of[i] = j;
                break;
            }
        }
        if (result.node_of[i] == PlacementResult::kUnplaced) {
            result.unplaced.push_back(i);
        }
    }
    return result;
}

PlacementResult heuristic_schedule(const ProblemInstance& instance) {
    PlacementResult result;
    result.node_of.assign(instance.num_containers(), PlacementResult::kUnplaced);
    std::vector<ResourceVector> loads = instance.base_load();

    std::vector<std::size_t> order(instance.num_containers());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const ResourceVector& da = instance.containers()[a].demand;
        const ResourceVector& db = instance.containers()[b].demand;
        const double dom_a = std::max(da.cpu, da.mem);
        const double dom_b = std::max(db.cpu, db.mem);
        if (dom_a != dom_b) {
            return dom_a > dom_b;
        }
        return instance.containers()[a].id < instance.containers()[b].id;
    });

    for (std::size_t i : order) {
        const ResourceVector& demand = instance.containers()[i].demand;
        std::size_t best_node = PlacementResult::kUnplaced;
        double best_util = 0.0;
        for (std::size_t j = 0; j < instance.num_nodes(); ++j) {
            if (!fits(loads[j], demand, instance.nodes()[j].capacity)) {
                continue;
            }
            const double util = utilization_of_load(instance.nodes()[j], loads[j] + demand);
            if (best_node == PlacementResult::kUnplaced || util < best_util) {
                best_node = j;
                best_util = util;
            }
        }
        if (best_node == PlacementResult::kUnplaced) {
            result.unplaced.push_back(i);
        } else {
            loads[best_node] += demand;
            result.node_of[i] = best_node;
        }
    }
    std::sort(result.unplaced.begin(), result.unplaced.end());
    return result;
}

}  // namespace csched
