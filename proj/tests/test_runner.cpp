#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "osfib/monitors.hpp"
#include "osfib/runner.hpp"
#include "osfib/verify.hpp"

using namespace osfib;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("default checkpoints") {
    const auto points = default_checkpoints(100000);
    CHECK(points.front() == 1);
    CHECK(points.back() == 100000);
    CHECK(std::is_sorted(points.begin(), points.end()));
    CHECK(std::adjacent_find(points.begin(), points.end()) == points.end());
    for (long p = 1; p <= 100000; p *= 2) {
        CHECK(std::binary_search(points.begin(), points.end(), p));
    }
    for (long t = 1000; t <= 100000; t += 1000) {
        CHECK(std::binary_search(points.begin(), points.end(), t));
    }

    const auto small = default_checkpoints(7);
    CHECK(small == std::vector<long>{1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("summaries") {
    SUBCASE("identical runs have a zero-width interval") {
        const auto rows = summarize({{5.0, 9.0}, {5.0, 9.0}, {5.0, 9.0}}, {10, 20});
        REQUIRE(rows.size() == 2);
        CHECK(rows[0].mean == 5.0);
        CHECK(rows[0].ci_low == 5.0);
        CHECK(rows[0].ci_high == 5.0);
        CHECK(rows[1].runs == 3);
    }
    SUBCASE("two runs at 0 and 2") {
        const auto rows = summarize({{0.0}, {2.0}}, {100});
        REQUIRE(rows.size() == 1);
        // sample std sqrt(2), standard error 1, z = 2.576
        CHECK(rows[0].mean == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(rows[0].ci_low == doctest::Approx(1.0 - 2.576).epsilon(1e-12));
        CHECK(rows[0].ci_high == doctest::Approx(1.0 + 2.576).epsilon(1e-12));
    }
    SUBCASE("interval width scales as one over the root of the run count") {
        std::vector<std::vector<double>> runs;
        for (int r = 0; r < 100; ++r) runs.push_back({static_cast<double>(r % 2)});
        const auto rows = summarize(runs, {1});
        MeanVar acc;
        for (const auto& run : runs) acc.add(run[0]);
        const double expected = kZ99 * acc.stddev() / 10.0;
        CHECK(rows[0].ci_high - rows[0].mean == doctest::Approx(expected).epsilon(1e-12));
    }
    SUBCASE("a single run still summarizes") {
        const auto rows = summarize({{4.0}}, {1});
        CHECK(rows[0].ci_low == 4.0);
        CHECK(rows[0].ci_high == 4.0);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(summarize({}, {1}), Error);
        CHECK_THROWS_AS(summarize({{1.0, 2.0}}, {1}), Error);
    }
}

TEST_CASE("experiments are deterministic and thread-count independent") {
    ExperimentConfig cfg;
    cfg.algo = "elim";
    cfg.instance = "uniform-gap";
    cfg.k = 4;
    cfg.best = 3;
    cfg.delta = 0.2;
    cfg.horizon = 400;
    cfg.runs = 6;
    cfg.seed = 11;

    const ExperimentResult serial = run_experiment_in_memory(cfg);
    const ExperimentResult again = run_experiment_in_memory(cfg);
    CHECK(serial.cum == again.cum);
    CHECK(serial.arms == again.arms);

    cfg.threads = 3;
    const ExperimentResult parallel = run_experiment_in_memory(cfg);
    CHECK(serial.cum == parallel.cum);
    CHECK(serial.arms == parallel.arms);

    SUBCASE("cumulative regret never decreases along the checkpoints") {
        for (const auto& run : serial.cum) {
            for (std::size_t c = 1; c < run.size(); ++c) CHECK(run[c] >= run[c - 1]);
        }
    }
    SUBCASE("policy randomness does not leak into the environment") {
        // Replaying the environment lane reproduces the exact rewards a run
        // faced, policy notwithstanding: an instrumented elimination run on
        // the same (seed, run) key sees the same draws simulate_run used.
        const InstanceSpec inst = make_instance(cfg);
        std::vector<long> every_round;
        for (long t = 1; t <= cfg.horizon; ++t) every_round.push_back(t);
        const RunResult via_sim = simulate_run(inst, "elim", cfg.horizon, cfg.seed, 2,
                                               every_round);
        RngStream env(cfg.seed, 2, StreamLane::environment);
        const ElimTrace trace = run_elim_instrumented(inst, cfg.horizon, env);
        const GapProfile gaps = gap_profile(inst);
        double cum = 0.0;
        for (long t = 1; t <= cfg.horizon; ++t) {
            cum += gaps.gaps[static_cast<std::size_t>(
                trace.rows[static_cast<std::size_t>(t - 1)].active.front() - 1)];
            CHECK(via_sim.cum_regret[static_cast<std::size_t>(t - 1)] ==
                  doctest::Approx(cum).epsilon(1e-12));
        }
    }
}

TEST_CASE("single round, single run") {
    ExperimentConfig cfg;
    cfg.algo = "elim";
    cfg.k = 3;
    cfg.best = 3;
    cfg.delta = 0.1;
    cfg.horizon = 1;
    cfg.runs = 1;
    const ExperimentResult result = run_experiment_in_memory(cfg);
    REQUIRE(result.checkpoints == std::vector<long>{1});
    CHECK(result.arms[0][0] == 1); // the first play is always the first arm
    CHECK(result.cum[0][0] == doctest::Approx(0.1));
}

TEST_CASE("file artifacts") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "osfib_runner_test";
    fs::remove_all(dir);

    ExperimentConfig cfg;
    cfg.algo = "ucbn";
    cfg.k = 3;
    cfg.best = 2;
    cfg.delta = 0.2;
    cfg.horizon = 120;
    cfg.runs = 3;
    cfg.seed = 5;
    cfg.out_dir = (dir / "a").string();
    run_experiment(cfg);

    const std::string traces = slurp(dir / "a" / "traces.csv");
    CHECK(traces.rfind("run,t,arm,cum_regret\n", 0) == 0);
    const std::string summary = slurp(dir / "a" / "summary.csv");
    CHECK(summary.rfind("t,mean,ci_low,ci_high,runs\n", 0) == 0);
    CHECK(slurp(dir / "a" / "metadata.json").find("\"version\"") != std::string::npos);

    SUBCASE("byte-identical on a rerun") {
        cfg.out_dir = (dir / "b").string();
        run_experiment(cfg);
        CHECK(slurp(dir / "b" / "traces.csv") == traces);
        CHECK(slurp(dir / "b" / "summary.csv") == summary);
    }
    SUBCASE("summary round-trips exactly") {
        std::istringstream in(summary);
        const auto rows = read_summary_csv(in);
        std::ostringstream out;
        write_summary_csv(out, rows);
        CHECK(out.str() == summary);
    }
    fs::remove_all(dir);
}

TEST_CASE("plot data") {
    const std::vector<SummaryRow> a{{1, 0.5, 0.4, 0.6, 3}, {2, 1.0, 0.9, 1.1, 3}};
    const std::vector<SummaryRow> b{{1, 0.7, 0.6, 0.8, 3}, {2, 1.4, 1.3, 1.5, 3}};

    SUBCASE("two algos over two checkpoints give four ordered rows") {
        const auto rows = merge_summaries({"elim", "ucbn"}, {a, b});
        REQUIRE(rows.size() == 4);
        CHECK(rows[0].algo == "elim");
        CHECK(rows[0].t == 1);
        CHECK(rows[1].t == 2);
        CHECK(rows[2].algo == "ucbn");
        CHECK(rows[3].mean == 1.4);
    }
    SUBCASE("mismatched grids are rejected") {
        const std::vector<SummaryRow> c{{1, 0.7, 0.6, 0.8, 3}, {3, 1.4, 1.3, 1.5, 3}};
        CHECK_THROWS_AS(merge_summaries({"x", "y"}, {a, c}), Error);
        const std::vector<SummaryRow> d{{1, 0.7, 0.6, 0.8, 3}};
        CHECK_THROWS_AS(merge_summaries({"x", "y"}, {a, d}), Error);
        CHECK_THROWS_AS(merge_summaries({"x"}, {a, b}), Error);
    }
    SUBCASE("emitted bytes survive a read-write cycle") {
        const auto rows = merge_summaries({"elim", "ucbn"}, {a, b});
        std::ostringstream out;
        write_plot_csv(out, rows);
        std::istringstream in(out.str());
        const auto parsed = read_plot_csv(in);
        std::ostringstream out2;
        write_plot_csv(out2, parsed);
        CHECK(out2.str() == out.str());
    }
}

TEST_CASE("streaming regret equals the full trace") {
    const InstanceSpec inst = make_uniform_gap_instance(5, 4, 0.5, 0.3);
    const long horizon = 60;
    std::vector<long> every_round;
    for (long t = 1; t <= horizon; ++t) every_round.push_back(t);
    const RunResult run = simulate_run(inst, "elim", horizon, 3, 0, every_round);

    const GapProfile gaps = gap_profile(inst);
    RegretTrace trace;
    for (long t = 1; t <= horizon; ++t) {
        accumulate_regret(trace, gaps, t, run.arms[static_cast<std::size_t>(t - 1)]);
        CHECK(trace.rows.back().cumulative ==
              doctest::Approx(run.cum_regret[static_cast<std::size_t>(t - 1)]).epsilon(1e-12));
    }
}

TEST_CASE("check CSV emission") {
    const std::vector<CheckRow> rows{{"a_check", "k=1", 1.0, 2.0, true},
                                     {"b_check", "k=2", 3.0, 2.0, false}};
    std::ostringstream out;
    write_check_csv(out, rows);
    CHECK(out.str().rfind("check,params,lhs,rhs,pass\n", 0) == 0);
    CHECK(out.str().find("a_check,k=1,1,2,1") != std::string::npos);
    CHECK(out.str().find("b_check,k=2,3,2,0") != std::string::npos);
    CHECK(!all_pass(rows));
}
