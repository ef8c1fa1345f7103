#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "csched/resources.hpp"

namespace csched {

// A schedulable unit of work. Construction rejects invalid demands
// (non-finite, negative, or zero in both dimensions).
struct Container {
    std::string id;
    ResourceVector demand;

    Container(std::string id, ResourceVector demand);
};

// A machine with fixed capacity; both dimensions must be strictly positive.
struct Node {
    std::string id;
    ResourceVector capacity;

    Node(std::string id, ResourceVector capacity);
};

// One placement problem: the containers to place and the nodes available.
// Immutable after construction; safe to share across threads.
//
// base_load carries resource already committed on each node before any
// container of this instance is placed (the simulator uses it for load that
// belongs to running tasks). It is all-zero for a standalone problem, in
// which case every operation below reduces to the plain definitions.
class ProblemInstance {
public:
    ProblemInstance(std::vector<Container> containers, std::vector<Node> nodes);
    ProblemInstance(std::vector<Container> containers, std::vector<Node> nodes,
                    std::vector<ResourceVector> base_load);

    const std::vector<Container>& containers() const { return containers_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<ResourceVector>& base_load() const { return base_load_; }

    std::size_t num_containers() const { return containers_.size(); }
    std::size_t num_nodes() const { return nodes_.size(); }

private:
    std::vector<Container> containers_;
    std::vector<Node> nodes_;
    std::vector<ResourceVector> base_load_;
};

// Dense encoding of the allocation matrix: node_of[i] is the node index of
// container i. Every container maps to exactly one node by construction.
struct Assignment {
    std::vector<std::size_t> node_of;

    friend bool operator==(const Assignment& a, const Assignment& b) {
        return a.node_of == b.node_of;
    }
};

// Throws std::invalid_argument unless a has one in-range gene per container.
void check_assignment(const ProblemInstance& instance, const Assignment& a);

// Total load on node j: base load plus the demands of all containers mapped
// there. Empty node with zero base load -> zero vector.
// Throws std::out_of_range for an out-of-range j.
ResourceVector node_load(const ProblemInstance& instance, const Assignment& a, std::size_t j);

// Loads of all nodes in one pass.
std::vector<ResourceVector> node_loads(const ProblemInstance& instance, const Assignment& a);

// True iff every node's load stays within capacity in both dimensions
// (non-strict: load equal to capacity is feasible).
bool is_feasible(const ProblemInstance& instance, const Assignment& a);

// Capacity-overflow magnitude: sum over nodes and dimensions of
// max(0, load - capacity) / capacity. Zero exactly when feasible.
double violation_amount(const ProblemInstance& instance, const Assignment& a);

// Same measures on a precomputed load vector (shared with the simulator).
bool loads_feasible(const std::vector<Node>& nodes, const std::vector<ResourceVector>& loads);
double loads_violation(const std::vector<Node>& nodes, const std::vector<ResourceVector>& loads);

}  // namespace csched
