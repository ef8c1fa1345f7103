#include "csched/trace.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "csched/rng.hpp"

namespace csched {

Trace::Trace(std::vector<TaskRecord> records) : records_(std::move(records)) {
    std::unordered_set<std::string> ids;
    for (const auto& r : records_) {
        if (!ids.insert(r.id).second) {
            throw std::invalid_argument("duplicate task id '" + r.id + "'");
        }
        if (!std::isfinite(r.submit_time) || r.submit_time < 0.0) {
            throw std::invalid_argument("task '" + r.id + "': submit_time must be finite and >= 0");
        }
        if (!std::isfinite(r.duration) || r.duration <= 0.0) {
            throw std::invalid_argument("task '" + r.id + "': duration must be finite and > 0");
        }
        if (!is_valid_resource(r.demand) || r.demand.is_zero()) {
            throw std::invalid_argument("task '" + r.id + "': demand must be finite, >= 0 and nonzero");
        }
    }
    std::sort(records_.begin(), records_.end(), [](const TaskRecord& a, const TaskRecord& b) {
        if (a.submit_time != b.submit_time) {
            return a.submit_time < b.submit_time;
        }
        return a.id < b.id;
    });
    horizon_ = records_.empty() ? 0.0 : records_.back().submit_time;
}

TraceParseError::TraceParseError(std::size_t line, std::string column, const std::string& what)
    : std::runtime_error("trace line " + std::to_string(line) + ", column '" + column + "': " + what),
      line_(line),
      column_(column) {}

namespace {

const char* const kColumns[] = {"id", "submit_time_s", "duration_s", "cpu", "mem", "priority", "burst"};
constexpr std::size_t kNumColumns = 7;
const char* const kHeader = "id,submit_time_s,duration_s,cpu,mem,priority,burst";

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

double parse_double(const std::string& field, std::size_t line, const char* column) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || field.empty()) {
        throw TraceParseError(line, column, "expected a number, got '" + field + "'");
    }
    if (!std::isfinite(value)) {
        throw TraceParseError(line, column, "value must be finite");
    }
    return value;
}

int parse_int(const std::string& field, std::size_t line, const char* column) {
    int value = 0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || field.empty()) {
        throw TraceParseError(line, column, "expected an integer, got '" + field + "'");
    }
    return value;
}

// Shortest representation that parses back to the same double.
std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace

Trace parse_trace(std::istream& in) {
    std::vector<TaskRecord> records;
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (!saw_header) {
            if (line != kHeader) {
                throw TraceParseError(line_no, "header",
                                      "expected header '" + std::string(kHeader) + "'");
            }
            saw_header = true;
            continue;
        }

        const auto fields = split_csv(line);
        if (fields.size() != kNumColumns) {
            const char* column = fields.size() < kNumColumns ? kColumns[fields.size()] : "extra";
            throw TraceParseError(line_no, column,
                                  "expected " + std::to_string(kNumColumns) + " fields, got " +
                                      std::to_string(fields.size()));
        }

        TaskRecord r;
        r.id = fields[0];
        if (r.id.empty()) {
            throw TraceParseError(line_no, "id", "must be non-empty");
        }
        r.submit_time = parse_double(fields[1], line_no, "submit_time_s");
        if (r.submit_time < 0.0) {
            throw TraceParseError(line_no, "submit_time_s", "must be >= 0");
        }
        r.duration = parse_double(fields[2], line_no, "duration_s");
        if (r.duration <= 0.0) {
            throw TraceParseError(line_no, "duration_s", "must be > 0");
        }
        r.demand.cpu = parse_double(fields[3], line_no, "cpu");
        r.demand.mem = parse_double(fields[4], line_no, "mem");
        if (r.demand.cpu < 0.0) {
            throw TraceParseError(line_no, "cpu", "must be >= 0");
        }
        if (r.demand.mem < 0.0) {
            throw TraceParseError(line_no, "mem", "must be >= 0");
        }
        if (r.demand.is_zero()) {
            throw TraceParseError(line_no, "cpu", "demand must be nonzero in cpu or mem");
        }
        r.priority = parse_int(fields[5], line_no, "priority");
        if (fields[6] == "0") {
            r.burst = false;
        } else if (fields[6] == "1") {
            r.burst = true;
        } else {
            throw TraceParseError(line_no, "burst", "must be 0 or 1, got '" + fields[6] + "'");
        }
        records.push_back(std::move(r));
    }

    try {
        return Trace(std::move(records));
    } catch (const std::invalid_argument& e) {
        throw TraceParseError(line_no, "id", e.what());
    }
}

Trace parse_trace_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open trace file '" + path + "'");
    }
    return parse_trace(in);
}

void serialize_trace(const Trace& trace, std::ostream& out) {
    out << kHeader << '\n';
    for (const auto& r : trace.records()) {
        out << r.id << ',' << format_double(r.submit_time) << ',' << format_double(r.duration)
            << ',' << format_double(r.demand.cpu) << ',' << format_double(r.demand.mem) << ','
            << r.priority << ',' << (r.burst ? '1' : '0') << '\n';
    }
}

void serialize_trace_file(const Trace& trace, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    serialize_trace(trace, out);
}

void validate(const SyntheticTraceConfig& cfg) {
    if (!(cfg.base_arrival_rate > 0.0) || !std::isfinite(cfg.base_arrival_rate)) {
        throw std::invalid_argument("base_arrival_rate must be finite and > 0");
    }
    if (!(cfg.burst_rate_multiplier >= 1.0) || !std::isfinite(cfg.burst_rate_multiplier)) {
        throw std::invalid_argument("burst_rate_multiplier must be finite and >= 1");
    }
    if (cfg.burst_rate_multiplier > 1.0 && !(cfg.burst_start < cfg.burst_end)) {
        throw std::invalid_argument("burst window start must be before end");
    }
    if (cfg.burst_start < 0.0 || cfg.burst_end < cfg.burst_start) {
        throw std::invalid_argument("burst window must satisfy 0 <= start <= end");
    }
    for (const auto* p : {&cfg.cpu, &cfg.mem, &cfg.duration}) {
        if (!(p->mean > 0.0) || !std::isfinite(p->mean) || !(p->sigma >= 0.0) ||
            !std::isfinite(p->sigma)) {
            throw std::invalid_argument("distribution parameters must be finite, mean > 0, sigma >= 0");
        }
    }
}

namespace {

// Inverse of the cumulative arrival intensity for the piecewise-constant
// rate: base everywhere, base * multiplier inside [w0, w1).
double inverse_intensity(double s, double rate, double w0, double w1, double multiplier) {
    const double at_w0 = rate * w0;
    const double at_w1 = at_w0 + rate * multiplier * (w1 - w0);
    if (s < at_w0 || multiplier <= 1.0 || w1 <= w0) {
        return s / rate;
    }
    if (s < at_w1) {
        return w0 + (s - at_w0) / (rate * multiplier);
    }
    return w1 + (s - at_w1) / rate;
}

std::string task_id(std::size_t index, std::size_t total) {
    std::size_t width = 1;
    for (std::size_t v = total; v >= 10; v /= 10) {
        ++width;
    }
    std::string digits = std::to_string(index + 1);
    return "t" + std::string(width > digits.size() ? width - digits.size() : 0, '0') + digits;
}

// mu chosen so the distribution mean equals p.mean.
double lognormal_draw(const LognormalParams& p, Rng& rng) {
    const double mu = std::log(p.mean) - 0.5 * p.sigma * p.sigma;
    return rng.lognormal(mu, p.sigma);
}

}  // namespace

Trace generate_synthetic_trace(const SyntheticTraceConfig& cfg) {
    validate(cfg);
    Rng rng(cfg.seed);

    // Arrival times first (one exponential draw each), then per-task demand
    // and duration (two normal draws each, two uniforms per normal).
    std::vector<double> arrivals(cfg.num_tasks);
    double s = 0.0;
    for (std::size_t i = 0; i < cfg.num_tasks; ++i) {
        s += rng.exponential(1.0);
        arrivals[i] = inverse_intensity(s, cfg.base_arrival_rate, cfg.burst_start, cfg.burst_end,
                                        cfg.burst_rate_multiplier);
    }
    const double horizon = arrivals.empty() ? 0.0 : arrivals.back();

    std::vector<TaskRecord> records;
    records.reserve(cfg.num_tasks);
    for (std::size_t i = 0; i < cfg.num_tasks; ++i) {
        TaskRecord r;
        r.id = task_id(i, cfg.num_tasks);
        r.submit_time = arrivals[i];
        r.demand.cpu = std::min(lognormal_draw(cfg.cpu, rng), 1.0);
        r.demand.mem = std::min(lognormal_draw(cfg.mem, rng), 1.0);
        r.duration = std::clamp(lognormal_draw(cfg.duration, rng), 1.0, std::max(1.0, horizon));
        r.priority = 0;
        r.burst = r.submit_time >= cfg.burst_start && r.submit_time < cfg.burst_end;
        records.push_back(std::move(r));
    }
    return Trace(std::move(records));
}

}  // namespace csched
