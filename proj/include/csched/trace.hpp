#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "csched/resources.hpp"

namespace csched {

// One workload trace entry. Times are seconds.
struct TaskRecord {
    std::string id;
    double submit_time = 0.0;  // >= 0
    double duration = 0.0;     // > 0
    ResourceVector demand;     // finite, >= 0, nonzero in at least one dimension
    int priority = 0;          // parsed and carried, not interpreted
    bool burst = false;

    friend bool operator==(const TaskRecord& a, const TaskRecord& b) {
        return a.id == b.id && a.submit_time == b.submit_time && a.duration == b.duration &&
               a.demand == b.demand && a.priority == b.priority && a.burst == b.burst;
    }
};

// Immutable, sorted task stream. Records are ordered by (submit_time, id);
// horizon is the last submit time (zero when empty).
class Trace {
public:
    Trace() = default;
    explicit Trace(std::vector<TaskRecord> records);  // validates and sorts

    const std::vector<TaskRecord>& records() const { return records_; }
    double horizon() const { return horizon_; }
    bool empty() const { return records_.empty(); }
    std::size_t size() const { return records_.size(); }

private:
    std::vector<TaskRecord> records_;
    double horizon_ = 0.0;
};

// Parse failure with the 1-based input line and the offending column name.
class TraceParseError : public std::runtime_error {
public:
    TraceParseError(std::size_t line, std::string column, const std::string& what);

    std::size_t line() const { return line_; }
    const std::string& column() const { return column_; }

private:
    std::size_t line_;
    std::string column_;
};

// CSV format (UTF-8, comma separator, '.' decimal point, no quoting; ids must
// not contain commas). Header row is required and must be exactly:
//   id,submit_time_s,duration_s,cpu,mem,priority,burst
// burst is 0 or 1. An empty input yields an empty trace.
Trace parse_trace(std::istream& in);
Trace parse_trace_file(const std::string& path);

// Writes the same format. Floating fields use shortest round-trip notation,
// so parse(serialize(trace)) reproduces every field exactly.
void serialize_trace(const Trace& trace, std::ostream& out);
void serialize_trace_file(const Trace& trace, const std::string& path);

// Lognormal parameterized by the distribution mean and the log-space sigma.
struct LognormalParams {
    double mean = 1.0;
    double sigma = 0.5;
};

struct SyntheticTraceConfig {
    std::size_t num_tasks = 0;
    double base_arrival_rate = 1.0;      // tasks per second
    double burst_start = 0.0;            // window [start, end)
    double burst_end = 0.0;
    double burst_rate_multiplier = 1.0;  // >= 1
    LognormalParams cpu{0.1, 0.5};
    LognormalParams mem{0.1, 0.5};
    LognormalParams duration{60.0, 0.8};
    std::uint64_t seed = 0;
};

void validate(const SyntheticTraceConfig& cfg);  // throws std::invalid_argument

// Poisson arrivals at base_arrival_rate, rate multiplied by
// burst_rate_multiplier inside the burst window (arrivals generated through
// the inverse cumulative intensity, so the window boundary is exact).
// Records submitted inside [burst_start, burst_end) are flagged burst.
// Demands are clamped to at most a full machine (1.0 per dimension),
// durations to at least 1 s and at most the generated horizon. Fully
// deterministic in cfg.seed.
Trace generate_synthetic_trace(const SyntheticTraceConfig& cfg);

}  // namespace csched
