#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "csched/model.hpp"

namespace csched {

// Output of the one-pass schedulers. Containers that fit nowhere are left
// unplaced rather than failing the whole schedule; the simulator queues them.
struct PlacementResult {
    static constexpr std::size_t kUnplaced = std::numeric_limits<std::size_t>::max();

    // node_of[i] is the chosen node for container i, or kUnplaced.
    std::vector<std::size_t> node_of;
    // Indices of unplaced containers, ascending.
    std::vector<std::size_t> unplaced;

    bool complete() const { return unplaced.empty(); }

    // Converts to a total Assignment; throws std::logic_error if any
    // container is unplaced.
    Assignment to_assignment() const;
};

// First-fit in fixed node order, containers in input order. Deterministic;
// never places beyond capacity.
PlacementResult static_rule_schedule(const ProblemInstance& instance);

// Best-fit-decreasing with a balance-seeking score: containers sorted by
// decreasing dominant demand (max of cpu and mem, ties by id), each placed on
// the feasible node whose post-placement utilization is lowest (ties by node
// index). Deterministic; never places beyond capacity.
PlacementResult heuristic_schedule(const ProblemInstance& instance);

}  // namespace csched
