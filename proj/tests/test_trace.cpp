#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "csched/trace.hpp"

using namespace csched;

TEST_CASE("parse_trace basics") {
    SUBCASE("empty input is an empty trace") {
        std::istringstream in("");
        const auto t = parse_trace(in);
        CHECK(t.empty());
        CHECK(t.horizon() == 0.0);
    }
    SUBCASE("header-only input has zero records") {
        std::istringstream in("id,submit_time_s,duration_s,cpu,mem,priority,burst\n");
        CHECK(parse_trace(in).size() == 0);
    }
    SUBCASE("a full row maps fields directly") {
        std::istringstream in(
            "id,submit_time_s,duration_s,cpu,mem,priority,burst\n"
            "t1,0,10,0.5,0.25,1,0\n");
        const auto t = parse_trace(in);
        REQUIRE(t.size() == 1);
        const auto& r = t.records()[0];
        CHECK(r.id == "t1");
        CHECK(r.submit_time == 0.0);
        CHECK(r.duration == 10.0);
        CHECK(r.demand.cpu == 0.5);
        CHECK(r.demand.mem == 0.25);
        CHECK(r.priority == 1);
        CHECK_FALSE(r.burst);
    }
    SUBCASE("records come out sorted by submit time, ties by id") {
        std::istringstream in(
            "id,submit_time_s,duration_s,cpu,mem,priority,burst\n"
            "b,5,1,0.1,0.1,0,0\n"
            "a,5,1,0.1,0.1,0,0\n"
            "c,1,1,0.1,0.1,0,0\n");
        const auto t = parse_trace(in);
        REQUIRE(t.size() == 3);
        CHECK(t.records()[0].id == "c");
        CHECK(t.records()[1].id == "a");
        CHECK(t.records()[2].id == "b");
        CHECK(t.horizon() == 5.0);
    }
    SUBCASE("a 5000-row file parses to 5000 records") {
        std::ostringstream body;
        body << "id,submit_time_s,duration_s,cpu,mem,priority,burst\n";
        for (int i = 0; i < 5000; ++i) {
            body << "t" << i << ',' << i * 0.5 << ",10,0.1,0.1,0,0\n";
        }
        std::istringstream in(body.str());
        CHECK(parse_trace(in).size() == 5000);
    }
}

TEST_CASE("parse_trace reports line and column on malformed input") {
    const std::string header = "id,submit_time_s,duration_s,cpu,mem,priority,burst\n";

    SUBCASE("missing column") {
        std::istringstream in(header + "t1,0,10,0.5,0.25,1\n");
        try {
            parse_trace(in);
            FAIL("expected TraceParseError");
        } catch (const TraceParseError& e) {
            CHECK(e.line() == 2);
            CHECK(e.column() == "burst");
        }
    }
    SUBCASE("non-numeric field") {
        std::istringstream in(header + "t1,zero,10,0.5,0.25,1,0\n");
        try {
            parse_trace(in);
            FAIL("expected TraceParseError");
        } catch (const TraceParseError& e) {
            CHECK(e.line() == 2);
            CHECK(e.column() == "submit_time_s");
        }
    }
    SUBCASE("negative duration") {
        std::istringstream in(header + "t1,0,-5,0.5,0.25,1,0\n");
        try {
            parse_trace(in);
            FAIL("expected TraceParseError");
        } catch (const TraceParseError& e) {
            CHECK(e.line() == 2);
            CHECK(e.column() == "duration_s");
        }
    }
    SUBCASE("bad burst flag") {
        std::istringstream in(header + "t1,0,5,0.5,0.25,1,yes\n");
        CHECK_THROWS_AS(parse_trace(in), TraceParseError);
    }
    SUBCASE("wrong header") {
        std::istringstream in("id,submit,duration,cpu,mem,priority,burst\nt1,0,5,0.5,0.25,1,0\n");
        CHECK_THROWS_AS(parse_trace(in), TraceParseError);
    }
    SUBCASE("duplicate task id") {
        std::istringstream in(header + "t1,0,5,0.5,0.25,1,0\nt1,1,5,0.5,0.25,1,0\n");
        CHECK_THROWS_AS(parse_trace(in), TraceParseError);
    }
}

TEST_CASE("serialize then parse round-trips every field exactly") {
    SyntheticTraceConfig cfg;
    cfg.num_tasks = 200;
    cfg.base_arrival_rate = 0.7;
    cfg.burst_start = 50.0;
    cfg.burst_end = 120.0;
    cfg.burst_rate_multiplier = 4.0;

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        cfg.seed = seed;
        const Trace original = generate_synthetic_trace(cfg);

        std::ostringstream out;
        serialize_trace(original, out);
        std::istringstream in(out.str());
        const Trace parsed = parse_trace(in);

        REQUIRE(parsed.size() == original.size());
        for (std::size_t i = 0; i < parsed.size(); ++i) {
            CHECK(parsed.records()[i] == original.records()[i]);
        }
        CHECK(parsed.horizon() == original.horizon());
    }
}

TEST_CASE("generate_synthetic_trace") {
    SUBCASE("zero tasks") {
        SyntheticTraceConfig cfg;
        cfg.num_tasks = 0;
        CHECK(generate_synthetic_trace(cfg).empty());
    }
    SUBCASE("same seed reproduces the trace") {
        SyntheticTraceConfig cfg;
        cfg.num_tasks = 100;
        cfg.seed = 77;
        const auto a = generate_synthetic_trace(cfg);
        const auto b = generate_synthetic_trace(cfg);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a.records()[i] == b.records()[i]);
        }
    }
    SUBCASE("records satisfy the invariants and are sorted") {
        SyntheticTraceConfig cfg;
        cfg.num_tasks = 500;
        cfg.burst_start = 100.0;
        cfg.burst_end = 200.0;
        cfg.burst_rate_multiplier = 5.0;
        cfg.seed = 3;
        const auto t = generate_synthetic_trace(cfg);
        REQUIRE(t.size() == 500);
        double prev = 0.0;
        for (const auto& r : t.records()) {
            CHECK(r.submit_time >= prev);
            prev = r.submit_time;
            CHECK(r.duration >= 1.0);
            CHECK(r.duration <= std::max(1.0, t.horizon()));
            CHECK(r.demand.cpu > 0.0);
            CHECK(r.demand.cpu <= 1.0);
            CHECK(r.demand.mem > 0.0);
            CHECK(r.demand.mem <= 1.0);
            CHECK(r.burst == (r.submit_time >= 100.0 && r.submit_time < 200.0));
        }
    }
    SUBCASE("multiplier 1 keeps the arrival rate homogeneous") {
        // Two-sample rate test: with N arrivals over the horizon, the count
        // inside a fixed window is Binomial(N, w/H); |z| < 3.29 is p > 0.001.
        SyntheticTraceConfig cfg;
        cfg.num_tasks = 2000;
        cfg.base_arrival_rate = 2.0;
        cfg.burst_rate_multiplier = 1.0;
        cfg.seed = 12;
        const auto t = generate_synthetic_trace(cfg);
        const double horizon = t.horizon();
        const double w0 = horizon * 0.25;
        const double w1 = horizon * 0.5;
        std::size_t inside = 0;
        for (const auto& r : t.records()) {
            if (r.submit_time >= w0 && r.submit_time < w1) {
                ++inside;
            }
        }
        const double p = (w1 - w0) / horizon;
        const double n = static_cast<double>(t.size());
        const double z = (static_cast<double>(inside) - n * p) / std::sqrt(n * p * (1.0 - p));
        CHECK(std::abs(z) < 3.29);
    }
    SUBCASE("multiplier 5 lifts the in-window rate by roughly 5x") {
        SyntheticTraceConfig cfg;
        cfg.base_arrival_rate = 1.0;
        cfg.burst_start = 100.0;
        cfg.burst_end = 200.0;
        cfg.burst_rate_multiplier = 5.0;
        cfg.num_tasks = 1200;  // roughly a 1000 s horizon at these rates

        double in_count = 0.0;
        double out_count = 0.0;
        double out_time = 0.0;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            cfg.seed = seed;
            const auto t = generate_synthetic_trace(cfg);
            for (const auto& r : t.records()) {
                if (r.burst) {
                    in_count += 1.0;
                } else {
                    out_count += 1.0;
                }
            }
            out_time += t.horizon() - 100.0;
        }
        const double in_rate = in_count / (20.0 * 100.0);
        const double out_rate = out_count / out_time;
        const double ratio = in_rate / out_rate;
        CHECK(ratio > 3.0);
        CHECK(ratio < 7.0);
    }
    SUBCASE("invalid configs are rejected") {
        SyntheticTraceConfig cfg;
        cfg.base_arrival_rate = 0.0;
        CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
        cfg = SyntheticTraceConfig{};
        cfg.burst_rate_multiplier = 0.5;
        CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
        cfg = SyntheticTraceConfig{};
        cfg.burst_rate_multiplier = 2.0;
        cfg.burst_start = 10.0;
        cfg.burst_end = 10.0;
        CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    }
}
