#pragma once

#include <vector>

#include "csched/model.hpp"

namespace csched {

// Weights of the scalarized objective O = alpha * U - beta * L.
// Both must be finite and >= 0, and not both zero.
struct ObjectiveWeights {
    double alpha = 1.0;
    double beta = 1.0;

    ObjectiveWeights() = default;
    ObjectiveWeights(double alpha, double beta);
};

struct ObjectiveBreakdown {
    double mean_utilization = 0.0;             // U, mean of per-node utilizations
    double imbalance = 0.0;                    // L, population stddev of per-node utilizations
    double scalar = 0.0;                       // O = alpha * U - beta * L
    std::vector<double> per_node_utilization;  // U_j
};

// Utilization of one node: mean of the cpu and mem load ratios,
// (load_cpu / cap_cpu + load_mem / cap_mem) / 2. In [0, 1] for feasible
// loads; deliberately unclamped so the penalized fitness path sees overload.
double utilization_of_load(const Node& node, const ResourceVector& load);

// Per-node utilizations U_j of an assignment. Throws std::out_of_range for
// an out-of-range node index in the single-node overload.
double node_utilization(const ProblemInstance& instance, const Assignment& a, std::size_t j);
std::vector<double> per_node_utilization(const ProblemInstance& instance, const Assignment& a);

// U: mean of U_j over all nodes, empty nodes included.
double mean_utilization(const ProblemInstance& instance, const Assignment& a);

// L: population standard deviation of the U_j (1/k normalization). Zero for
// a single node.
double load_imbalance(const ProblemInstance& instance, const Assignment& a);

// Full breakdown; higher scalar is better.
ObjectiveBreakdown objective_value(const ProblemInstance& instance, const Assignment& a,
                                   const ObjectiveWeights& w);

// Same breakdown computed from precomputed per-node loads (the simulator's
// sampling path and the GA fitness path share this).
ObjectiveBreakdown objective_from_loads(const std::vector<Node>& nodes,
                                        const std::vector<ResourceVector>& loads,
                                        const ObjectiveWeights& w);

}  // namespace csched
