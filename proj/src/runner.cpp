#include "osfib/runner.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <thread>

#include <nlohmann/json.hpp>

#include "osfib/version.hpp"

namespace osfib {

InstanceSpec make_instance(const ExperimentConfig& cfg) {
    if (cfg.instance == "uniform-gap") {
        return make_uniform_gap_instance(cfg.k, cfg.best, cfg.base, cfg.delta);
    }
    if (cfg.instance == "random-mean") {
        return make_random_mean_instance(cfg.k, cfg.best, cfg.lambda, cfg.lo, cfg.hi, cfg.seed);
    }
    if (cfg.instance == "auction") {
        // Evenly spaced reserves in (0,1); arms are reserves sorted ascending.
        std::vector<double> reserves(static_cast<std::size_t>(cfg.k));
        for (int i = 1; i <= cfg.k; ++i) {
            reserves[static_cast<std::size_t>(i - 1)] =
                static_cast<double>(i) / static_cast<double>(cfg.k + 1);
        }
        return make_auction_instance(std::move(reserves), cfg.bidders,
                                     "auction k=" + std::to_string(cfg.k) + " bidders=" +
                                         std::to_string(cfg.bidders));
    }
    throw Error("unknown instance kind: " + cfg.instance);
}

ExperimentResult run_experiment_in_memory(const ExperimentConfig& cfg) {
    if (cfg.runs < 1) throw Error("run_experiment: runs must be >= 1");
    if (cfg.horizon < 1) throw Error("run_experiment: horizon must be >= 1");
    const InstanceSpec inst = make_instance(cfg);

    ExperimentResult result;
    result.checkpoints = cfg.checkpoints.empty() ? default_checkpoints(cfg.horizon)
                                                 : cfg.checkpoints;
    if (result.checkpoints.back() != cfg.horizon) {
        throw Error("run_experiment: checkpoints must end at the horizon");
    }
    result.cum.resize(static_cast<std::size_t>(cfg.runs));
    result.arms.resize(static_cast<std::size_t>(cfg.runs));

    const auto worker = [&](int first_run, int stride) {
        for (int run = first_run; run < cfg.runs; run += stride) {
            RunResult one = simulate_run(inst, cfg.algo, cfg.horizon, cfg.seed,
                                         static_cast<std::uint64_t>(run), result.checkpoints,
                                         cfg.policy_options);
            result.cum[static_cast<std::size_t>(run)] = std::move(one.cum_regret);
            result.arms[static_cast<std::size_t>(run)] = std::move(one.arms);
        }
    };

    const int threads = std::max(1, cfg.threads);
    if (threads == 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker, i, threads);
        for (std::thread& th : pool) th.join();
    }

    result.summary = summarize(result.cum, result.checkpoints);
    return result;
}

void write_trace_csv(std::ostream& out, const ExperimentResult& result) {
    out << "run,t,arm,cum_regret\n";
    for (std::size_t run = 0; run < result.cum.size(); ++run) {
        for (std::size_t c = 0; c < result.checkpoints.size(); ++c) {
            out << run << ',' << result.checkpoints[c] << ',' << result.arms[run][c] << ','
                << format_double(result.cum[run][c]) << '\n';
        }
    }
}

namespace {

nlohmann::json config_json(const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["algo"] = cfg.algo;
    j["instance"] = cfg.instance;
    j["k"] = cfg.k;
    j["horizon"] = cfg.horizon;
    j["runs"] = cfg.runs;
    j["delta"] = cfg.delta;
    j["base"] = cfg.base;
    j["lambda"] = cfg.lambda;
    j["lo"] = cfg.lo;
    j["hi"] = cfg.hi;
    j["best"] = cfg.best;
    j["bidders"] = cfg.bidders;
    j["seed"] = cfg.seed;
    j["threads"] = cfg.threads;
    if (cfg.policy_options.exp3_eta > 0.0) j["exp3_eta"] = cfg.policy_options.exp3_eta;
    if (cfg.policy_options.exp3_gamma >= 0.0) j["exp3_gamma"] = cfg.policy_options.exp3_gamma;
    return j;
}

} // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    if (cfg.out_dir.empty()) throw Error("run_experiment: no output directory");
    ExperimentResult result = run_experiment_in_memory(cfg);

    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(cfg.out_dir, ec);
    const auto open = [&](const char* name) {
        std::ofstream out(fs::path(cfg.out_dir) / name, std::ios::binary);
        if (!out) throw Error(std::string("cannot write ") + name + " in " + cfg.out_dir);
        return out;
    };

    {
        auto out = open("traces.csv");
        write_trace_csv(out, result);
    }
    {
        auto out = open("summary.csv");
        write_summary_csv(out, result.summary);
    }
    {
        nlohmann::json meta;
        meta["version"] = kVersion;
        meta["config"] = config_json(cfg);
        meta["checkpoints"] = result.checkpoints;
        meta["ci"] = "normal approximation, mean +/- 2.576 * sample std / sqrt(runs)";
        meta["rng"] = "mt19937_64 per (seed, run, lane), SplitMix64-mixed key";
        if (cfg.algo == "exp3rtb") {
            meta["note"] = "exp3rtb is this project's documented exponential-weights baseline "
                           "with one-sided importance weighting, not a published algorithm's "
                           "reference implementation";
        }
        auto out = open("metadata.json");
        out << meta.dump(2) << '\n';
    }
    return result;
}

std::vector<PlotRow> merge_summaries(const std::vector<std::string>& labels,
                                     const std::vector<std::vector<SummaryRow>>& summaries) {
    if (labels.size() != summaries.size()) throw Error("plot-data: one label per summary");
    if (summaries.empty()) throw Error("plot-data: no summaries");
    for (const auto& rows : summaries) {
        if (rows.size() != summaries.front().size()) {
            throw Error("plot-data: summaries have different checkpoint grids");
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].t != summaries.front()[i].t) {
                throw Error("plot-data: summaries have different checkpoint grids");
            }
        }
    }
    std::vector<PlotRow> rows;
    for (std::size_t a = 0; a < summaries.size(); ++a) {
        for (const SummaryRow& row : summaries[a]) {
            rows.push_back(PlotRow{labels[a], row.t, row.mean, row.ci_low, row.ci_high});
        }
    }
    return rows;
}

} // namespace osfib
