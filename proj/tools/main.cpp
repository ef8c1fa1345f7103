// csched: container placement optimization and trace-driven cluster
// simulation. Subcommands: solve, simulate, compare, gen-trace. Every run
// writes a manifest from which it can be reproduced via --from-manifest.

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "csched/files.hpp"
#include "csched/ga.hpp"
#include "csched/sim.hpp"
#include "csched/trace.hpp"
#include "csched/version.hpp"

using json = nlohmann::ordered_json;
using namespace csched;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInfeasible = 2;

std::string shortest(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

struct SharedOpts {
    double alpha = 1.0;
    double beta = 1.0;
    std::uint64_t seed = 42;
    std::string out_dir = "out";
    std::string format = "csv";
};

struct GaOpts {
    std::size_t pop_size = 100;
    std::size_t generations = 300;
    double crossover_rate = 0.9;
    std::string mutation_rate = "auto";  // "auto" = 1/num_containers
    std::size_t elite = 2;
    double penalty = 10.0;
};

struct SynthOpts {
    std::size_t num_tasks = 500;
    double base_rate = 1.0;
    double burst_start = 0.0;
    double burst_end = 0.0;
    double burst_multiplier = 1.0;
    double cpu_mean = 0.1;
    double cpu_sigma = 0.5;
    double mem_mean = 0.1;
    double mem_sigma = 0.5;
    double dur_mean = 60.0;
    double dur_sigma = 0.8;
};

struct SimOpts {
    std::string trace_file;
    std::string nodes_file;
    std::string strategy = "static";
    std::string strategies = "static,heuristic,ga";
    std::string burst_deadline = "none";
    double sample_interval = 1.0;
    bool static_snapshot = false;
    bool timeline = false;
};

void add_shared_flags(CLI::App* cmd, SharedOpts& o) {
    cmd->add_option("--alpha", o.alpha, "Utilization weight of the objective")
        ->capture_default_str();
    cmd->add_option("--beta", o.beta, "Imbalance weight of the objective")->capture_default_str();
    cmd->add_option("--seed", o.seed, "Master random seed")->capture_default_str();
    cmd->add_option("--out-dir", o.out_dir, "Output directory")->capture_default_str();
    cmd->add_option("--format", o.format, "Stdout format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

void add_ga_flags(CLI::App* cmd, GaOpts& o) {
    cmd->add_option("--pop-size", o.pop_size, "GA population size")->capture_default_str();
    cmd->add_option("--generations", o.generations, "GA generation count")->capture_default_str();
    cmd->add_option("--crossover-rate", o.crossover_rate, "Per-pair crossover probability")
        ->capture_default_str();
    cmd->add_option("--mutation-rate", o.mutation_rate,
                    "Per-gene mutation probability, or 'auto' for 1/containers")
        ->capture_default_str();
    cmd->add_option("--elite", o.elite, "Individuals carried over unchanged")->capture_default_str();
    cmd->add_option("--penalty", o.penalty, "Weight of the capacity-overflow penalty")
        ->capture_default_str();
}

std::vector<CLI::Option*> add_synth_flags(CLI::App* cmd, SynthOpts& o) {
    std::vector<CLI::Option*> opts;
    opts.push_back(cmd->add_option("--num-tasks", o.num_tasks, "Number of tasks to generate")
                       ->capture_default_str());
    opts.push_back(cmd->add_option("--base-rate", o.base_rate, "Base arrival rate, tasks/s")
                       ->capture_default_str());
    opts.push_back(cmd->add_option("--burst-start", o.burst_start, "Burst window start, s")
                       ->capture_default_str());
    opts.push_back(
        cmd->add_option("--burst-end", o.burst_end, "Burst window end, s")->capture_default_str());
    opts.push_back(cmd->add_option("--burst-multiplier", o.burst_multiplier,
                                   "Arrival-rate multiplier inside the window")
                       ->capture_default_str());
    opts.push_back(cmd->add_option("--cpu-mean", o.cpu_mean, "Mean cpu demand")->capture_default_str());
    opts.push_back(cmd->add_option("--cpu-sigma", o.cpu_sigma, "Log-space sigma of cpu demand")
                       ->capture_default_str());
    opts.push_back(cmd->add_option("--mem-mean", o.mem_mean, "Mean mem demand")->capture_default_str());
    opts.push_back(cmd->add_option("--mem-sigma", o.mem_sigma, "Log-space sigma of mem demand")
                       ->capture_default_str());
    opts.push_back(
        cmd->add_option("--dur-mean", o.dur_mean, "Mean task duration, s")->capture_default_str());
    opts.push_back(cmd->add_option("--dur-sigma", o.dur_sigma, "Log-space sigma of task duration")
                       ->capture_default_str());
    return opts;
}

GaConfig make_ga_config(const GaOpts& g, const SharedOpts& shared) {
    GaConfig cfg;
    cfg.population_size = g.pop_size;
    cfg.generations = g.generations;
    cfg.crossover_rate = g.crossover_rate;
    if (g.mutation_rate != "auto") {
        cfg.mutation_rate = std::stod(g.mutation_rate);
    }
    cfg.elite_count = g.elite;
    cfg.penalty_weight = g.penalty;
    cfg.weights = ObjectiveWeights(shared.alpha, shared.beta);
    cfg.seed = shared.seed;
    return cfg;
}

SyntheticTraceConfig make_synth_config(const SynthOpts& s, std::uint64_t seed) {
    SyntheticTraceConfig cfg;
    cfg.num_tasks = s.num_tasks;
    cfg.base_arrival_rate = s.base_rate;
    cfg.burst_start = s.burst_start;
    cfg.burst_end = s.burst_end;
    cfg.burst_rate_multiplier = s.burst_multiplier;
    cfg.cpu = {s.cpu_mean, s.cpu_sigma};
    cfg.mem = {s.mem_mean, s.mem_sigma};
    cfg.duration = {s.dur_mean, s.dur_sigma};
    cfg.seed = seed;
    validate(cfg);
    return cfg;
}

std::optional<double> parse_deadline(const std::string& text) {
    if (text == "none") {
        return std::nullopt;
    }
    return std::stod(text);
}

// Key-value synthetic-trace config: one `name = value` per line, names are
// the long flag names without the leading dashes, '#' starts a comment.
// Explicit command-line flags win over file values.
void apply_trace_config(const std::string& path, SynthOpts& o,
                        const std::vector<CLI::Option*>& flags) {
    const std::string text = read_file(path);
    std::istringstream in(text);

    std::map<std::string, std::function<void(const std::string&)>> setters;
    setters["num-tasks"] = [&](const std::string& v) { o.num_tasks = std::stoul(v); };
    setters["base-rate"] = [&](const std::string& v) { o.base_rate = std::stod(v); };
    setters["burst-start"] = [&](const std::string& v) { o.burst_start = std::stod(v); };
    setters["burst-end"] = [&](const std::string& v) { o.burst_end = std::stod(v); };
    setters["burst-multiplier"] = [&](const std::string& v) { o.burst_multiplier = std::stod(v); };
    setters["cpu-mean"] = [&](const std::string& v) { o.cpu_mean = std::stod(v); };
    setters["cpu-sigma"] = [&](const std::string& v) { o.cpu_sigma = std::stod(v); };
    setters["mem-mean"] = [&](const std::string& v) { o.mem_mean = std::stod(v); };
    setters["mem-sigma"] = [&](const std::string& v) { o.mem_sigma = std::stod(v); };
    setters["dur-mean"] = [&](const std::string& v) { o.dur_mean = std::stod(v); };
    setters["dur-sigma"] = [&](const std::string& v) { o.dur_sigma = std::stod(v); };

    auto given_on_cli = [&](const std::string& key) {
        for (const auto* f : flags) {
            if (f->get_name() == "--" + key) {
                return f->count() > 0;
            }
        }
        return false;
    };

    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t");
        const auto b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected 'name = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = setters.find(key);
        if (it == setters.end()) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": unknown key '" + key +
                                     "'");
        }
        if (!given_on_cli(key)) {
            it->second(value);
        }
    }
}

// --- manifest ---------------------------------------------------------------

struct ArgList {
    std::vector<std::string> args;

    void add(const std::string& flag, const std::string& value) {
        args.push_back(flag);
        args.push_back(value);
    }
    void add(const std::string& flag, double value) { add(flag, shortest(value)); }
    void add(const std::string& flag, std::size_t value) { add(flag, std::to_string(value)); }
    void add_flag_if(const std::string& flag, bool set) {
        if (set) {
            args.push_back(flag);
        }
    }
};

void append_shared_args(ArgList& a, const SharedOpts& o) {
    a.add("--alpha", o.alpha);
    a.add("--beta", o.beta);
    a.add("--seed", std::to_string(o.seed));
    a.add("--format", o.format);
}

void append_ga_args(ArgList& a, const GaOpts& o) {
    a.add("--pop-size", o.pop_size);
    a.add("--generations", o.generations);
    a.add("--crossover-rate", o.crossover_rate);
    a.add("--mutation-rate", o.mutation_rate);
    a.add("--elite", o.elite);
    a.add("--penalty", o.penalty);
}

void append_synth_args(ArgList& a, const SynthOpts& o) {
    a.add("--num-tasks", o.num_tasks);
    a.add("--base-rate", o.base_rate);
    a.add("--burst-start", o.burst_start);
    a.add("--burst-end", o.burst_end);
    a.add("--burst-multiplier", o.burst_multiplier);
    a.add("--cpu-mean", o.cpu_mean);
    a.add("--cpu-sigma", o.cpu_sigma);
    a.add("--mem-mean", o.mem_mean);
    a.add("--mem-sigma", o.mem_sigma);
    a.add("--dur-mean", o.dur_mean);
    a.add("--dur-sigma", o.dur_sigma);
}

json input_entry(const std::string& path) {
    return json{{"path", path}, {"fnv1a64", file_digest(path)}};
}

void write_manifest(const std::string& command, const SharedOpts& shared, const ArgList& args,
                    const json& inputs) {
    json manifest;
    manifest["artifact_version"] = kVersion;
    manifest["command"] = command;
    manifest["out_dir"] = shared.out_dir;
    manifest["resolved_args"] = args.args;
    manifest["seed"] = shared.seed;
    manifest["inputs"] = inputs;
    write_file(shared.out_dir + "/manifest.json", manifest.dump(2) + "\n");
}

void ensure_out_dir(const SharedOpts& shared) {
    std::filesystem::create_directories(shared.out_dir);
}

// --- solve ------------------------------------------------------------------

int cmd_solve(const std::string& instance_path, const SharedOpts& shared, const GaOpts& ga_opts) {
    const ProblemInstance instance = load_instance_file(instance_path);
    const GaConfig cfg = make_ga_config(ga_opts, shared);
    const GaOutcome outcome = evolve(instance, cfg);

    ensure_out_dir(shared);
    save_assignment_csv(instance, outcome.best, shared.out_dir + "/assignment.csv");

    json breakdown;
    breakdown["mean_utilization"] = outcome.best_breakdown.mean_utilization;
    breakdown["load_imbalance"] = outcome.best_breakdown.imbalance;
    breakdown["objective"] = outcome.best_breakdown.scalar;
    breakdown["per_node_utilization"] = outcome.best_breakdown.per_node_utilization;
    breakdown["feasible"] = outcome.best_feasible;
    breakdown["final_best_fitness"] = outcome.history.back().best_fitness;
    write_file(shared.out_dir + "/breakdown.json", breakdown.dump(2) + "\n");

    ArgList args;
    args.add("--instance", instance_path);
    append_shared_args(args, shared);
    append_ga_args(args, ga_opts);
    write_manifest("solve", shared, args, json{{"instance", input_entry(instance_path)}});

    if (shared.format == "json") {
        std::cout << breakdown.dump(2) << "\n";
    } else {
        std::cout << "metric,value\n";
        std::cout << "mean_utilization," << format_fixed(outcome.best_breakdown.mean_utilization, 6)
                  << "\n";
        std::cout << "load_imbalance," << format_fixed(outcome.best_breakdown.imbalance, 6) << "\n";
        std::cout << "objective," << format_fixed(outcome.best_breakdown.scalar, 6) << "\n";
        std::cout << "feasible," << (outcome.best_feasible ? 1 : 0) << "\n";
    }
    return outcome.best_feasible ? kExitOk : kExitInfeasible;
}

// --- gen-trace ----------------------------------------------------------------

int cmd_gen_trace(const SharedOpts& shared, const SynthOpts& synth) {
    const Trace trace = generate_synthetic_trace(make_synth_config(synth, shared.seed));
    ensure_out_dir(shared);
    serialize_trace_file(trace, shared.out_dir + "/trace.csv");

    ArgList args;
    append_shared_args(args, shared);
    append_synth_args(args, synth);
    write_manifest("gen-trace", shared, args, json::object());
    return kExitOk;
}

// --- simulate / compare -------------------------------------------------------

struct StrategyRow {
    std::string name;
    double utilization_pct = 0.0;
    double stddev_pct = 0.0;
    std::optional<double> completion_pct;
    std::optional<double> wait_s;
    json detail;
};

std::string table1_csv(const std::vector<StrategyRow>& rows) {
    std::string out = "strategy,avg_utilization_pct,load_stddev_pct\n";
    for (const auto& r : rows) {
        out += r.name + "," + format_fixed(r.utilization_pct, 2) + "," +
               format_fixed(r.stddev_pct, 2) + "\n";
    }
    return out;
}

std::string table2_csv(const std::vector<StrategyRow>& rows) {
    std::string out = "strategy,burst_completion_rate_pct,avg_wait_s\n";
    for (const auto& r : rows) {
        out += r.name + ",";
        out += r.completion_pct ? format_fixed(*r.completion_pct, 2) : "";
        out += ",";
        out += r.wait_s ? format_fixed(*r.wait_s, 3) : "";
        out += "\n";
    }
    return out;
}

std::vector<Strategy> parse_strategy_list(const std::string& csv) {
    std::vector<Strategy> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto s = parse_strategy(item);
        if (!s) {
            throw std::runtime_error("unknown strategy '" + item + "'");
        }
        out.push_back(*s);
    }
    if (out.empty()) {
        throw std::runtime_error("no strategies requested");
    }
    return out;
}

int run_sim_command(const std::string& command, const SharedOpts& shared, const GaOpts& ga_opts,
                    const SynthOpts& synth, const SimOpts& sim, bool synth_flags_used,
                    const std::vector<Strategy>& strategies) {
    if (!sim.trace_file.empty() && synth_flags_used) {
        std::cerr << "error: --trace conflicts with synthetic trace flags\n";
        return kExitInputError;
    }

    const std::vector<Node> nodes = load_nodes_csv(sim.nodes_file);
    const Trace trace = sim.trace_file.empty()
                            ? generate_synthetic_trace(make_synth_config(synth, shared.seed))
                            : parse_trace_file(sim.trace_file);

    SimConfig base;
    base.ga = make_ga_config(ga_opts, shared);
    base.weights = ObjectiveWeights(shared.alpha, shared.beta);
    base.burst_deadline = parse_deadline(sim.burst_deadline);
    base.sample_interval = sim.sample_interval;

    std::vector<StrategyRow> rows;
    json result;
    result["command"] = command;
    result["mode"] = sim.static_snapshot ? "snapshot" : "replay";
    result["trace_tasks"] = trace.size();
    result["strategies"] = json::array();

    ensure_out_dir(shared);

    if (sim.static_snapshot) {
        for (Strategy s : strategies) {
            const SnapshotResult snap = run_snapshot(trace, nodes, s, base);
            StrategyRow row;
            row.name = to_string(s);
            row.utilization_pct = 100.0 * snap.breakdown.mean_utilization;
            row.stddev_pct = 100.0 * snap.breakdown.imbalance;
            row.detail = json{{"strategy", row.name},
                              {"avg_utilization_pct", row.utilization_pct},
                              {"load_stddev_pct", row.stddev_pct},
                              {"objective", snap.breakdown.scalar},
                              {"placed", snap.placed},
                              {"unplaced", snap.unplaced},
                              {"feasible", snap.feasible}};
            rows.push_back(std::move(row));
        }
    } else {
        const auto results = compare_strategies(trace, nodes, base, strategies);
        for (const auto& [s, r] : results) {
            StrategyRow row;
            row.name = to_string(s);
            row.utilization_pct = r.avg_utilization_pct;
            row.stddev_pct = r.load_stddev_pct;
            row.completion_pct = r.burst_completion_rate_pct;
            row.wait_s = r.avg_wait_s;

            json per_task = json::array();
            for (const auto& t : r.per_task) {
                per_task.push_back(json{{"id", t.id}, {"wait_s", t.wait_s}, {"completed", t.completed}});
            }
            row.detail = json{{"strategy", row.name},
                              {"avg_utilization_pct", r.avg_utilization_pct},
                              {"load_stddev_pct", r.load_stddev_pct},
                              {"burst_completion_rate_pct",
                               r.burst_completion_rate_pct ? json(*r.burst_completion_rate_pct)
                                                           : json(nullptr)},
                              {"avg_wait_s", r.avg_wait_s},
                              {"avg_wait_all_s", r.avg_wait_all_s},
                              {"completed_tasks", r.completed_tasks},
                              {"never_placeable", r.never_placeable},
                              {"end_time_s", r.end_time},
                              {"per_task", std::move(per_task)}};

            if (sim.timeline) {
                std::string csv = "time_s,utilization_pct,imbalance_pct\n";
                for (const auto& p : r.timeline) {
                    csv += format_fixed(p.time, 3) + "," + format_fixed(100.0 * p.utilization, 4) +
                           "," + format_fixed(100.0 * p.imbalance, 4) + "\n";
                }
                write_file(shared.out_dir + "/timeline_" + row.name + ".csv", csv);
            }
            rows.push_back(std::move(row));
        }
    }

    for (const auto& r : rows) {
        result["strategies"].push_back(r.detail);
    }

    const std::string t1 = table1_csv(rows);
    const std::string t2 = table2_csv(rows);
    write_file(shared.out_dir + "/table1.csv", t1);
    write_file(shared.out_dir + "/table2.csv", t2);
    write_file(shared.out_dir + "/result.json", result.dump(2) + "\n");

    ArgList args;
    json inputs;
    inputs["nodes_file"] = input_entry(sim.nodes_file);
    if (!sim.trace_file.empty()) {
        args.add("--trace", sim.trace_file);
        inputs["trace"] = input_entry(sim.trace_file);
    }
    args.add("--nodes-file", sim.nodes_file);
    if (command == "simulate") {
        args.add("--strategy", std::string(to_string(strategies.front())));
    } else {
        std::string list;
        for (std::size_t i = 0; i < strategies.size(); ++i) {
            list += (i ? "," : "") + std::string(to_string(strategies[i]));
        }
        args.add("--strategies", list);
    }
    args.add("--burst-deadline", sim.burst_deadline);
    args.add("--sample-interval", sim.sample_interval);
    args.add_flag_if("--static-snapshot", sim.static_snapshot);
    args.add_flag_if("--timeline", sim.timeline);
    append_shared_args(args, shared);
    append_ga_args(args, ga_opts);
    if (sim.trace_file.empty()) {
        append_synth_args(args, synth);
    }
    write_manifest(command, shared, args, inputs);

    if (shared.format == "json") {
        std::cout << result.dump(2) << "\n";
    } else {
        std::cout << t1 << "\n" << t2;
    }
    return kExitOk;
}

// --- manifest rerun -----------------------------------------------------------

int run_cli(std::vector<std::string> args);

int rerun_from_manifest(const std::string& manifest_path, const std::string& out_dir_override) {
    const json manifest = json::parse(read_file(manifest_path));
    const std::string command = manifest.at("command").get<std::string>();

    // Inputs must still match the recorded digests.
    for (const auto& [name, entry] : manifest.at("inputs").items()) {
        const std::string path = entry.at("path").get<std::string>();
        const std::string digest = entry.at("fnv1a64").get<std::string>();
        if (file_digest(path) != digest) {
            std::cerr << "error: input '" << name << "' (" << path
                      << ") does not match the manifest digest\n";
            return kExitInputError;
        }
    }

    std::vector<std::string> args;
    args.push_back(command);
    for (const auto& a : manifest.at("resolved_args")) {
        args.push_back(a.get<std::string>());
    }
    args.push_back("--out-dir");
    args.push_back(out_dir_override.empty() ? manifest.at("out_dir").get<std::string>()
                                            : out_dir_override);
    return run_cli(std::move(args));
}

int run_cli(std::vector<std::string> args) {
    CLI::App app{"Container placement optimizer and cluster simulator"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "Optimize one placement instance");
    std::string instance_path;
    solve->add_option("--instance", instance_path, "Instance file (two-section CSV)")->required();
    SharedOpts solve_shared;
    GaOpts solve_ga;
    add_shared_flags(solve, solve_shared);
    add_ga_flags(solve, solve_ga);

    // gen-trace
    auto* gen = app.add_subcommand("gen-trace", "Generate a synthetic task trace");
    SharedOpts gen_shared;
    SynthOpts gen_synth;
    std::string gen_config;
    add_shared_flags(gen, gen_shared);
    auto gen_synth_opts = add_synth_flags(gen, gen_synth);
    gen->add_option("--trace-config", gen_config, "Key-value config file for the synthetic trace");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Replay a trace under one strategy");
    SharedOpts sim_shared;
    GaOpts sim_ga;
    sim_ga.pop_size = 50;
    sim_ga.generations = 100;
    SynthOpts sim_synth;
    SimOpts sim_opts;
    add_shared_flags(simulate, sim_shared);
    add_ga_flags(simulate, sim_ga);
    auto sim_synth_opts = add_synth_flags(simulate, sim_synth);
    simulate->add_option("--trace", sim_opts.trace_file, "Trace CSV to replay");
    simulate->add_option("--nodes-file", sim_opts.nodes_file, "Node pool CSV")->required();
    simulate->add_option("--strategy", sim_opts.strategy, "Strategy: static, heuristic or ga")
        ->check(CLI::IsMember({"static", "heuristic", "ga"}))
        ->capture_default_str();
    simulate->add_option("--burst-deadline", sim_opts.burst_deadline,
                         "Burst completion deadline in seconds, or 'none'")
        ->capture_default_str();
    simulate->add_option("--sample-interval", sim_opts.sample_interval,
                         "Utilization sampling interval, s")
        ->capture_default_str();
    simulate->add_flag("--static-snapshot", sim_opts.static_snapshot,
                       "One-shot placement of the whole trace instead of replay");
    simulate->add_flag("--timeline", sim_opts.timeline, "Also write sampled timeline CSVs");
    std::string sim_config;
    simulate->add_option("--trace-config", sim_config,
                         "Key-value config file for the synthetic trace");

    // compare
    auto* compare = app.add_subcommand("compare", "Replay a trace under several strategies");
    SharedOpts cmp_shared;
    GaOpts cmp_ga;
    cmp_ga.pop_size = 50;
    cmp_ga.generations = 100;
    SynthOpts cmp_synth;
    SimOpts cmp_opts;
    add_shared_flags(compare, cmp_shared);
    add_ga_flags(compare, cmp_ga);
    auto cmp_synth_opts = add_synth_flags(compare, cmp_synth);
    compare->add_option("--trace", cmp_opts.trace_file, "Trace CSV to replay");
    compare->add_option("--nodes-file", cmp_opts.nodes_file, "Node pool CSV")->required();
    compare->add_option("--strategies", cmp_opts.strategies, "Comma-separated strategy list")
        ->capture_default_str();
    compare->add_option("--burst-deadline", cmp_opts.burst_deadline,
                        "Burst completion deadline in seconds, or 'none'")
        ->capture_default_str();
    compare->add_option("--sample-interval", cmp_opts.sample_interval,
                        "Utilization sampling interval, s")
        ->capture_default_str();
    compare->add_flag("--static-snapshot", cmp_opts.static_snapshot,
                      "One-shot placement of the whole trace instead of replay");
    compare->add_flag("--timeline", cmp_opts.timeline, "Also write sampled timeline CSVs");
    std::string cmp_config;
    compare->add_option("--trace-config", cmp_config,
                        "Key-value config file for the synthetic trace");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (solve->parsed()) {
            return cmd_solve(instance_path, solve_shared, solve_ga);
        }
        if (gen->parsed()) {
            if (!gen_config.empty()) {
                apply_trace_config(gen_config, gen_synth, gen_synth_opts);
            }
            return cmd_gen_trace(gen_shared, gen_synth);
        }
        if (simulate->parsed()) {
            bool synth_used = !sim_config.empty();
            for (const auto* o : sim_synth_opts) {
                synth_used = synth_used || o->count() > 0;
            }
            if (!sim_config.empty()) {
                apply_trace_config(sim_config, sim_synth, sim_synth_opts);
            }
            const auto strategy = parse_strategy(sim_opts.strategy);
            return run_sim_command("simulate", sim_shared, sim_ga, sim_synth, sim_opts, synth_used,
                                   {*strategy});
        }
        if (compare->parsed()) {
            bool synth_used = !cmp_config.empty();
            for (const auto* o : cmp_synth_opts) {
                synth_used = synth_used || o->count() > 0;
            }
            if (!cmp_config.empty()) {
                apply_trace_config(cmp_config, cmp_synth, cmp_synth_opts);
            }
            return run_sim_command("compare", cmp_shared, cmp_ga, cmp_synth, cmp_opts, synth_used,
                                   parse_strategy_list(cmp_opts.strategies));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);

    // Manifest rerun path: csched --from-manifest FILE [--out-dir DIR]
    if (!args.empty() && args[0] == "--from-manifest") {
        if (args.size() != 2 && !(args.size() == 4 && args[2] == "--out-dir")) {
            std::cerr << "usage: csched --from-manifest FILE [--out-dir DIR]\n";
            return kExitInputError;
        }
        try {
            return rerun_from_manifest(args[1], args.size() == 4 ? args[3] : "");
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitInputError;
        }
    }

    return run_cli(std::move(args));
}
