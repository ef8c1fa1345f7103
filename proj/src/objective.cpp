#include "csched/objective.hpp"

#include <cmath>
#include <stdexcept>

namespace csched {

ObjectiveWeights::ObjectiveWeights(double alpha_in, double beta_in) : alpha(alpha_in), beta(beta_in) {
    if (!std::isfinite(alpha) || !std::isfinite(beta) || alpha < 0.0 || beta < 0.0) {
        throw std::invalid_argument("objective weights must be finite and >= 0");
    }
    if (alpha == 0.0 && beta == 0.0) {
        throw std::invalid_argument("objective weights must not both be zero");
    }
}

double utilization_of_load(const Node& node, const ResourceVector& load) {
    return 0.5 * (load.cpu / node.capacity.cpu + load.mem / node.capacity.mem);
}

std::vector<double> per_node_utilization(const ProblemInstance& instance, const Assignment& a) {
    const auto loads = node_loads(instance, a);
    std::vector<double> util(instance.num_nodes());
    for (std::size_t j = 0; j < util.size(); ++j) {
        util[j] = utilization_of_load(instance.nodes()[j], loads[j]);
    }
    return util;
}

double node_utilization(const ProblemInstance& instance, const Assignment& a, std::size_t j) {
    return utilization_of_load(instance.nodes().at(j), node_load(instance, a, j));
}

namespace {

double mean_of(const std::vector<double>& values) {
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    return sum / static_cast<double>(values.size());
}

double population_stddev(const std::vector<double>& values, double mean) {
    double sq = 0.0;
    for (double v : values) {
        const double d = v - mean;
        sq += d * d;
    }
    return std::sqrt(sq / static_cast<double>(values.size()));
}

}  // namespace

double mean_utilization(const ProblemInstance& instance, const Assignment& a) {
    return mean_of(per_node_utilization(instance, a));
}

double load_imbalance(const ProblemInstance& instance, const Assignment& a) {
    const auto util = per_node_utilization(instance, a);
    return population_stddev(util, mean_of(util));
}

ObjectiveBreakdown objective_from_loads(const std::vector<Node>& nodes,
                                        const std::vector<ResourceVector>& loads,
                                        const ObjectiveWeights& w) {
    ObjectiveBreakdown out;
    out.per_node_utilization.resize(nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        out.per_node_utilization[j] = utilization_of_load(nodes[j], loads[j]);
    }
    out.mean_utilization = mean_of(out.per_node_utilization);
    out.imbalance = population_stddev(out.per_node_utilization, out.mean_utilization);
    out.scalar = w.alpha * out.mean_utilization - w.beta * out.imbalance;
    return out;
}

ObjectiveBreakdown objective_value(const ProblemInstance& instance, const Assignment& a,
                                   const ObjectiveWeights& w) {
    return objective_from_loads(instance.nodes(), node_loads(instance, a), w);
}

}  // namespace csched
