#include "csched/model.hpp"

#include <stdexcept>
#include <unordered_set>

namespace csched {

Container::Container(std::string id_in, ResourceVector demand_in)
    : id(std::move(id_in)), demand(demand_in) {
    if (!is_valid_resource(demand)) {
        throw std::invalid_argument("container '" + id + "': demand must be finite and >= 0");
    }
    if (demand.is_zero()) {
        throw std::invalid_argument("container '" + id + "': demand must be nonzero in cpu or mem");
    }
}

Node::Node(std::string id_in, ResourceVector capacity_in)
    : id(std::move(id_in)), capacity(capacity_in) {
    if (!is_valid_resource(capacity) || capacity.cpu <= 0.0 || capacity.mem <= 0.0) {
        throw std::invalid_argument("node '" + id + "': capacity must be finite and > 0 in both dimensions");
    }
}

namespace {

void check_unique_ids(const std::vector<Container>& containers, const std::vector<Node>& nodes) {
    std::unordered_set<std::string> seen;
    for (const auto& c : containers) {
        if (!seen.insert(c.id).second) {
            throw std::invalid_argument("duplicate container id '" + c.id + "'");
        }
    }
    seen.clear();
    for (const auto& n : nodes) {
        if (!seen.insert(n.id).second) {
            throw std::invalid_argument("duplicate node id '" + n.id + "'");
        }
    }
}

}  // namespace

ProblemInstance::ProblemInstance(std::vector<Container> containers, std::vector<Node> nodes)
    : ProblemInstance(std::move(containers), std::move(nodes), {}) {}

ProblemInstance::ProblemInstance(std::vector<Container> containers, std::vector<Node> nodes,
                                 std::vector<ResourceVector> base_load)
    : containers_(std::move(containers)), nodes_(std::move(nodes)), base_load_(std::move(base_load)) {
    if (nodes_.empty()) {
        throw std::invalid_argument("instance needs at least one node");
    }
    check_unique_ids(containers_, nodes_);
    if (base_load_.empty()) {
        base_load_.assign(nodes_.size(), ResourceVector{});
    } else if (base_load_.size() != nodes_.size()) {
        throw std::invalid_argument("base_load size must match node count");
    } else {
        for (const auto& b : base_load_) {
            if (!is_valid_resource(b)) {
                throw std::invalid_argument("base_load entries must be finite and >= 0");
            }
        }
    }
}

void check_assignment(const ProblemInstance& instance, const Assignment& a) {
    if (a.node_of.size() != instance.num_containers()) {
        throw std::invalid_argument("assignment covers " + std::to_string(a.node_of.size()) +
                                    " containers, instance has " +
                                    std::to_string(instance.num_containers()));
    }
    for (std::size_t j : a.node_of) {
        if (j >= instance.num_nodes()) {
            throw std::invalid_argument("assignment maps a container to node index " +
                                        std::to_string(j) + ", instance has " +
                                        std::to_string(instance.num_nodes()) + " nodes");
        }
    }
}

ResourceVector node_load(const ProblemInstance& instance, const Assignment& a, std::size_t j) {
    check_assignment(instance, a);
    if (j >= instance.num_nodes()) {
        throw std::out_of_range("node index " + std::to_string(j) + " out of range");
    }
    ResourceVector load = instance.base_load()[j];
    for (std::size_t i = 0; i < a.node_of.size(); ++i) {
        if (a.node_of[i] == j) {
            load += instance.containers()[i].demand;
        }
    }
    return load;
}

std::vector<ResourceVector> node_loads(const ProblemInstance& instance, const Assignment& a) {
    check_assignment(instance, a);
    std::vector<ResourceVector> loads = instance.base_load();
    for (std::size_t i = 0; i < a.node_of.size(); ++i) {
        loads[a.node_of[i]] += instance.containers()[i].demand;
    }
    return loads;
}

bool loads_feasible(const std::vector<Node>& nodes, const std::vector<ResourceVector>& loads) {
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (!loads[j].fits_within(nodes[j].capacity)) {
            return false;
        }
    }
    return true;
}

double loads_violation(const std::vector<Node>& nodes, const std::vector<ResourceVector>& loads) {
    double total = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const ResourceVector& cap = nodes[j].capacity;
        if (loads[j].cpu > cap.cpu) {
            total += (loads[j].cpu - cap.cpu) / cap.cpu;
        }
        if (loads[j].mem > cap.mem) {
            total += (loads[j].mem - cap.mem) / cap.mem;
        }
    }
    return total;
}

bool is_feasible(const ProblemInstance& instance, const Assignment& a) {
    return loads_feasible(instance.nodes(), node_loads(instance, a));
}

double violation_amount(const ProblemInstance& instance, const Assignment& a) {
    return loads_violation(instance.nodes(), node_loads(instance, a));
}

}  // namespace csched
