#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csched/ga.hpp"
#include "csched/trace.hpp"

namespace csched {

enum class Strategy { kStatic, kHeuristic, kGa };

const char* to_string(Strategy s);
std::optional<Strategy> parse_strategy(const std::string& name);

// Default per-round solver budget for online GA placement.
GaConfig default_sim_ga();

struct SimConfig {
    Strategy strategy = Strategy::kStatic;
    GaConfig ga = default_sim_ga();          // used when strategy == kGa
    ObjectiveWeights weights{};
    std::optional<double> burst_deadline;    // seconds from submission; nullopt = within horizon
    double sample_interval = 1.0;            // > 0
};

struct TaskOutcome {
    std::string id;
    double wait_s = 0.0;
    bool completed = false;
};

struct TimelinePoint {
    double time = 0.0;
    double utilization = 0.0;  // U at this sample
    double imbalance = 0.0;    // L at this sample
};

struct SimResult {
    double avg_utilization_pct = 0.0;  // mean of sampled U, percent
    double load_stddev_pct = 0.0;      // mean of sampled L, percent
    // Fraction of burst tasks finishing within the deadline; absent when the
    // trace has no burst tasks.
    std::optional<double> burst_completion_rate_pct;
    double avg_wait_s = 0.0;      // over burst tasks when the trace has any, else all tasks
    double avg_wait_all_s = 0.0;  // over all started tasks
    std::vector<TaskOutcome> per_task;    // trace order
    std::vector<TimelinePoint> timeline;  // one point per sample_interval
    std::size_t completed_tasks = 0;
    std::size_t never_placeable = 0;
    double end_time = 0.0;
};

// Deterministic discrete-event replay of a trace against a node pool.
//
// Events are processed in timestamp order, completions before arrivals at
// equal timestamps and ties broken by task id. After the events of a
// timestamp, one placement round places queued tasks FIFO:
//   static     first node (fixed order) with room,
//   heuristic  feasible node with the lowest post-placement utilization,
//   ga         a solver run over the whole queued set against the current
//              residual capacities (running load enters the instance as
//              base_load), applied FIFO where genes still fit, followed by a
//              first-fit sweep so no placeable task is left waiting.
// Running tasks are never migrated. Tasks too large for every node are
// marked never-placeable on arrival. The capacity constraint is checked
// after every round (std::logic_error on violation).
SimResult run_simulation(const Trace& trace, const std::vector<Node>& nodes, const SimConfig& cfg);

// Runs several strategies on identical inputs and seeds; result order is
// fixed (static, heuristic, ga) regardless of the requested order.
std::vector<std::pair<Strategy, SimResult>> compare_strategies(const Trace& trace,
                                                               const std::vector<Node>& nodes,
                                                               const SimConfig& base,
                                                               std::vector<Strategy> strategies);

// One-shot placement of every task in the trace, ignoring timing: the whole
// trace becomes a single instance and the utilization/imbalance of the
// resulting placement is evaluated once.
struct SnapshotResult {
    ObjectiveBreakdown breakdown;
    std::size_t placed = 0;
    std::size_t unplaced = 0;  // always 0 for ga (total assignment)
    bool feasible = true;
};

SnapshotResult run_snapshot(const Trace& trace, const std::vector<Node>& nodes,
                            Strategy strategy, const SimConfig& cfg);

}  // namespace csched
