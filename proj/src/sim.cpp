#include "csched/sim.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <queue>
#include <stdexcept>

#include "csched/baselines.hpp"

namespace csched {

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::kStatic:
            return "static";
        case Strategy::kHeuristic:
            return "heuristic";
        case Strategy::kGa:
            return "ga";
    }
    return "unknown";
}

std::optional<Strategy> parse_strategy(const std::string& name) {
    if (name == "static") {
        return Strategy::kStatic;
    }
    if (name == "heuristic") {
        return Strategy::kHeuristic;
    }
    if (name == "ga") {
        return Strategy::kGa;
    }
    return std::nullopt;
}

GaConfig default_sim_ga() {
    GaConfig cfg;
    cfg.population_size = 50;
    cfg.generations = 100;
    return cfg;
}

namespace {

constexpr double kLoadTolerance = 1e-9;

struct Completion {
    double time;
    std::string id;  // tie order at equal timestamps
    std::size_t task;
    std::size_t node;

    bool operator>(const Completion& o) const {
        if (time != o.time) {
            return time > o.time;
        }
        return id > o.id;
    }
};

using CompletionQueue = std::priority_queue<Completion, std::vector<Completion>, std::greater<>>;

bool fits(const ResourceVector& load, const ResourceVector& demand, const ResourceVector& cap) {
    return (load + demand).fits_within(cap);
}

// Subtraction of previously added demands can leave residue of a few ulp;
// anything beyond the tolerance is a bookkeeping bug.
void snap_to_zero(ResourceVector& load) {
    if (load.cpu < 0.0 || load.mem < 0.0) {
        if (load.cpu < -kLoadTolerance || load.mem < -kLoadTolerance) {
            throw std::logic_error("node load went negative");
        }
        load.cpu = std::max(load.cpu, 0.0);
        load.mem = std::max(load.mem, 0.0);
    }
}

bool placeable_anywhere(const ResourceVector& demand, const std::vector<Node>& nodes) {
    for (const auto& n : nodes) {
        if (demand.fits_within(n.capacity)) {
            return true;
        }
    }
    return false;
}

class Replay {
public:
    Replay(const Trace& trace, const std::vector<Node>& nodes, const SimConfig& cfg)
        : trace_(trace), nodes_(nodes), cfg_(cfg) {
        if (nodes_.empty()) {
            throw std::invalid_argument("simulation needs at least one node");
        }
        if (!(cfg_.sample_interval > 0.0) || !std::isfinite(cfg_.sample_interval)) {
            throw std::invalid_argument("sample_interval must be finite and > 0");
        }
        if (cfg_.burst_deadline && !(*cfg_.burst_deadline > 0.0)) {
            throw std::invalid_argument("burst_deadline must be > 0");
        }
        loads_.assign(nodes_.size(), ResourceVector{});
        start_time_.assign(trace_.size(), -1.0);
        finish_time_.assign(trace_.size(), -1.0);
    }

    SimResult run() {
        const auto& records = trace_.records();
        std::size_t cursor = 0;
        CompletionQueue completions;

        while (cursor < records.size() || !completions.empty()) {
            double t = std::numeric_limits<double>::infinity();
            if (cursor < records.size()) {
                t = records[cursor].submit_time;
            }
            if (!completions.empty()) {
                t = std::min(t, completions.top().time);
            }

            // Completions first so freed capacity is visible to arrivals at
            // the same timestamp.
            bool freed = false;
            while (!completions.empty() && completions.top().time == t) {
                const Completion c = completions.top();
                completions.pop();
                loads_[c.node] -= records[c.task].demand;
                snap_to_zero(loads_[c.node]);
                finish_time_[c.task] = t;
                freed = true;
            }
            bool arrived = false;
            while (cursor < records.size() && records[cursor].submit_time == t) {
                if (!placeable_anywhere(records[cursor].demand, nodes_)) {
                    never_placeable_.push_back(cursor);
                } else {
                    queue_.push_back(cursor);
                    arrived = true;
                }
                ++cursor;
            }

            if ((freed || arrived) && !queue_.empty()) {
                placement_round(t, completions);
            }
            check_capacity();
            record_state(t);
        }

        return collect();
    }

private:
    void start_task(std::size_t task, std::size_t node, double now, CompletionQueue& completions) {
        const TaskRecord& r = trace_.records()[task];
        loads_[node] += r.demand;
        start_time_[task] = now;
        completions.push({now + r.duration, r.id, task, node});
    }

    void placement_round(double now, CompletionQueue& completions) {
        std::vector<std::size_t> placed_nodes(queue_.size(), PlacementResult::kUnplaced);

        switch (cfg_.strategy) {
            case Strategy::kStatic:
                for (std::size_t q = 0; q < queue_.size(); ++q) {
                    const auto& demand = trace_.records()[queue_[q]].demand;
                    for (std::size_t j = 0; j < nodes_.size(); ++j) {
                        if (fits(loads_[j], demand, nodes_[j].capacity)) {
                            placed_nodes[q] = j;
                            loads_[j] += demand;
                            break;
                        }
                    }
                }
                break;
            case Strategy::kHeuristic:
                for (std::size_t q = 0; q < queue_.size(); ++q) {
                    const auto& demand = trace_.records()[queue_[q]].demand;
                    std::size_t best = PlacementResult::kUnplaced;
                    double best_util = 0.0;
                    for (std::size_t j = 0; j < nodes_.size(); ++j) {
                        if (!fits(loads_[j], demand, nodes_[j].capacity)) {
                            continue;
                        }
                        const double util = utilization_of_load(nodes_[j], loads_[j] + demand);
                        if (best == PlacementResult::kUnplaced || util < best_util) {
                            best = j;
                            best_util = util;
                        }
                    }
                    if (best != PlacementResult::kUnplaced) {
                        placed_nodes[q] = best;
                        loads_[best] += demand;
                    }
                }
                break;
            case Strategy::kGa:
                ga_round(placed_nodes);
                break;
        }

        // Commit placements and drop them from the queue.
        std::deque<std::size_t> still_waiting;
        for (std::size_t q = 0; q < queue_.size(); ++q) {
            if (placed_nodes[q] != PlacementResult::kUnplaced) {
                // Reverse the tentative load so start_task is the single
                // bookkeeping path.
                loads_[placed_nodes[q]] -= trace_.records()[queue_[q]].demand;
                start_task(queue_[q], placed_nodes[q], now, completions);
            } else {
                still_waiting.push_back(queue_[q]);
            }
        }
        queue_.swap(still_waiting);
    }

    void ga_round(std::vector<std::size_t>& placed_nodes) {
        std::vector<Container> containers;
        containers.reserve(queue_.size());
        for (std::size_t task : queue_) {
            const TaskRecord& r = trace_.records()[task];
            containers.emplace_back(r.id, r.demand);
        }
        ProblemInstance instance(std::move(containers), nodes_, loads_);

        GaConfig round_cfg = cfg_.ga;
        round_cfg.weights = cfg_.weights;
        round_cfg.seed = mix64(cfg_.ga.seed ^ ga_round_index_);
        ++ga_round_index_;

        const GaOutcome outcome = evolve(instance, round_cfg);

        // Apply genes FIFO where they still fit, then sweep the leftovers
        // with the utilization-balancing rule so no placeable task stays
        // queued behind an over-committed gene.
        for (std::size_t q = 0; q < queue_.size(); ++q) {
            const auto& demand = trace_.records()[queue_[q]].demand;
            const std::size_t j = outcome.best.node_of[q];
            if (fits(loads_[j], demand, nodes_[j].capacity)) {
                placed_nodes[q] = j;
                loads_[j] += demand;
            }
        }
        for (std::size_t q = 0; q < queue_.size(); ++q) {
            if (placed_nodes[q] != PlacementResult::kUnplaced) {
                continue;
            }
            const auto& demand = trace_.records()[queue_[q]].demand;
            std::size_t best = PlacementResult::kUnplaced;
            double best_util = 0.0;
            for (std::size_t j = 0; j < nodes_.size(); ++j) {
                if (!fits(loads_[j], demand, nodes_[j].capacity)) {
                    continue;
                }
                const double util = utilization_of_load(nodes_[j], loads_[j] + demand);
                if (best == PlacementResult::kUnplaced || util < best_util) {
                    best = j;
                    best_util = util;
                }
            }
            if (best != PlacementResult::kUnplaced) {
                placed_nodes[q] = best;
                loads_[best] += demand;
            }
        }
    }

    void check_capacity() const {
        for (std::size_t j = 0; j < nodes_.size(); ++j) {
            const auto& cap = nodes_[j].capacity;
            if (loads_[j].cpu > cap.cpu + kLoadTolerance || loads_[j].mem > cap.mem + kLoadTolerance) {
                throw std::logic_error("capacity violated on node '" + nodes_[j].id + "'");
            }
        }
    }

    void record_state(double t) {
        const auto b = objective_from_loads(nodes_, loads_, cfg_.weights);
        segments_.push_back({t, b.mean_utilization, b.imbalance});
    }

    SimResult collect() const {
        const auto& records = trace_.records();
        SimResult result;

        double last_finish = 0.0;
        for (double f : finish_time_) {
            last_finish = std::max(last_finish, f);
        }
        result.end_time = std::max(trace_.horizon(), last_finish);

        // Sample the piecewise-constant state every sample_interval; a
        // sample observes the state after all events at its timestamp.
        const double interval = cfg_.sample_interval;
        const auto num_samples =
            static_cast<std::size_t>(std::ceil(result.end_time / interval - 1e-12)) + 1;
        double util_sum = 0.0;
        double imbalance_sum = 0.0;
        std::size_t seg = 0;
        TimelinePoint current{};
        result.timeline.reserve(num_samples);
        for (std::size_t k = 0; k < num_samples; ++k) {
            const double t = static_cast<double>(k) * interval;
            while (seg < segments_.size() && segments_[seg].time <= t) {
                current = segments_[seg];
                ++seg;
            }
            result.timeline.push_back({t, current.utilization, current.imbalance});
            util_sum += current.utilization;
            imbalance_sum += current.imbalance;
        }
        result.avg_utilization_pct = 100.0 * util_sum / static_cast<double>(num_samples);
        result.load_stddev_pct = 100.0 * imbalance_sum / static_cast<double>(num_samples);

        double wait_all_sum = 0.0;
        std::size_t wait_all_count = 0;
        double wait_burst_sum = 0.0;
        std::size_t wait_burst_count = 0;
        std::size_t burst_total = 0;
        std::size_t burst_done = 0;

        result.per_task.reserve(records.size());
        for (std::size_t i = 0; i < records.size(); ++i) {
            const TaskRecord& r = records[i];
            TaskOutcome out;
            out.id = r.id;
            const bool started = start_time_[i] >= 0.0;
            const bool finished = finish_time_[i] >= 0.0;
            out.completed = finished;
            out.wait_s = started ? start_time_[i] - r.submit_time : result.end_time - r.submit_time;
            if (started) {
                wait_all_sum += out.wait_s;
                ++wait_all_count;
                if (r.burst) {
                    wait_burst_sum += out.wait_s;
                    ++wait_burst_count;
                }
            }
            if (r.burst) {
                ++burst_total;
                const bool in_deadline =
                    finished && (!cfg_.burst_deadline ||
                                 finish_time_[i] - r.submit_time <= *cfg_.burst_deadline + 1e-9);
                if (in_deadline) {
                    ++burst_done;
                }
            }
            if (finished) {
                ++result.completed_tasks;
            }
            result.per_task.push_back(std::move(out));
        }

        result.never_placeable = never_placeable_.size();
        result.avg_wait_all_s =
            wait_all_count == 0 ? 0.0 : wait_all_sum / static_cast<double>(wait_all_count);
        if (burst_total > 0) {
            result.burst_completion_rate_pct =
                100.0 * static_cast<double>(burst_done) / static_cast<double>(burst_total);
            result.avg_wait_s =
                wait_burst_count == 0 ? 0.0 : wait_burst_sum / static_cast<double>(wait_burst_count);
        } else {
            result.avg_wait_s = result.avg_wait_all_s;
        }
        return result;
    }

    const Trace& trace_;
    const std::vector<Node>& nodes_;
    const SimConfig& cfg_;

    std::vector<ResourceVector> loads_;
    std::deque<std::size_t> queue_;
    std::vector<std::size_t> never_placeable_;
    std::vector<double> start_time_;
    std::vector<double> finish_time_;
    std::vector<TimelinePoint> segments_;
    std::uint64_t ga_round_index_ = 0;
};

}  // namespace

SimResult run_simulation(const Trace& trace, const std::vector<Node>& nodes, const SimConfig& cfg) {
    Replay replay(trace, nodes, cfg);
    return replay.run();
}

std::vector<std::pair<Strategy, SimResult>> compare_strategies(const Trace& trace,
                                                               const std::vector<Node>& nodes,
                                                               const SimConfig& base,
                                                               std::vector<Strategy> strategies) {
    std::sort(strategies.begin(), strategies.end());
    strategies.erase(std::unique(strategies.begin(), strategies.end()), strategies.end());

    std::vector<std::pair<Strategy, SimResult>> results;
    results.reserve(strategies.size());
    for (Strategy s : strategies) {
        SimConfig cfg = base;
        cfg.strategy = s;
        results.emplace_back(s, run_simulation(trace, nodes, cfg));
    }
    return results;
}

SnapshotResult run_snapshot(const Trace& trace, const std::vector<Node>& nodes, Strategy strategy,
                            const SimConfig& cfg) {
    std::vector<Container> containers;
    containers.reserve(trace.size());
    for (const auto& r : trace.records()) {
        containers.emplace_back(r.id, r.demand);
    }
    ProblemInstance instance(std::move(containers), nodes);

    SnapshotResult out;
    if (strategy == Strategy::kGa) {
        GaConfig ga = cfg.ga;
        ga.weights = cfg.weights;
        const GaOutcome outcome = evolve(instance, ga);
        out.breakdown = outcome.best_breakdown;
        out.placed = instance.num_containers();
        out.feasible = outcome.best_feasible;
        return out;
    }

    const PlacementResult placement = strategy == Strategy::kStatic
                                          ? static_rule_schedule(instance)
                                          : heuristic_schedule(instance);
    std::vector<ResourceVector> loads(nodes.size());
    for (std::size_t i = 0; i < placement.node_of.size(); ++i) {
        if (placement.node_of[i] != PlacementResult::kUnplaced) {
            loads[placement.node_of[i]] += instance.containers()[i].demand;
        }
    }
    out.breakdown = objective_from_loads(nodes, loads, cfg.weights);
    out.unplaced = placement.unplaced.size();
    out.placed = instance.num_containers() - out.unplaced;
    out.feasible = true;
    return out;
}

}  // namespace csched
