// One-sided full-information bandit lab.
//
// Subcommands:
//   run         simulate a policy on an instance family and write trace,
//               summary, and metadata files
//   verify      evaluate the bound / oracle / monitor / exact-tail check
//               suites; exit 1 if any check fails
//   lower-bound exact tail suites plus the prediction-accuracy and
//               regret-scaling experiments
//   plot-data   merge summary files into one long-format CSV
//
// Flags can also come from an INI config file (--config); explicit flags win.
// OSFIB_SEED provides the default master seed.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "osfib/bounds.hpp"
#include "osfib/lowerbound.hpp"
#include "osfib/runner.hpp"
#include "osfib/verify.hpp"
#include "osfib/version.hpp"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string trim(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

// Flat key=value lines whose keys mirror the long option names; '#' or ';'
// starts a comment. Values with spaces become repeated option values.
std::vector<std::pair<std::string, std::vector<std::string>>> load_config(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) throw osfib::Error("cannot read config file " + path);
    std::vector<std::pair<std::string, std::vector<std::string>>> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto comment = line.find_first_of("#;");
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = path + ":" + std::to_string(lineno);
        if (line.front() == '[') {
            throw osfib::Error("config keys mirror flag names directly, no sections (" +
                               where + ")");
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw osfib::Error("expected key=value at " + where);
        const std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) throw osfib::Error("expected key=value at " + where);
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
            value = value.substr(1, value.size() - 2);
        }
        std::vector<std::string> tokens;
        std::stringstream ss(value);
        std::string token;
        while (ss >> token) tokens.push_back(token);
        entries.emplace_back(key, std::move(tokens));
    }
    return entries;
}

// Pulls --config out of the raw arguments and appends the file's options for
// every flag not already given, so explicit flags win.
std::vector<std::string> apply_config(std::vector<std::string> args) {
    std::string config_path;
    for (auto it = args.begin(); it != args.end();) {
        if (*it == "--config") {
            if (std::next(it) == args.end()) throw osfib::Error("--config needs a file");
            config_path = *std::next(it);
            it = args.erase(it, std::next(it, 2));
        } else if (it->rfind("--config=", 0) == 0) {
            config_path = it->substr(9);
            it = args.erase(it);
        } else {
            ++it;
        }
    }
    if (config_path.empty()) return args;
    const auto given = [&args](const std::string& flag) {
        for (const std::string& arg : args) {
            if (arg == flag || arg.rfind(flag + "=", 0) == 0) return true;
        }
        return false;
    };
    for (const auto& [key, values] : load_config(config_path)) {
        const std::string flag = "--" + key;
        if (given(flag)) continue;
        args.push_back(flag);
        args.insert(args.end(), values.begin(), values.end());
    }
    return args;
}

void add_config_support(CLI::App& cmd) {
    // consumed before parsing; registered here so it shows up in --help
    static std::string ignored;
    cmd.add_option("--config", ignored,
                   "flat key=value file of these options; explicit flags override it");
}

int emit_checks(const std::vector<osfib::CheckRow>& rows, const std::string& out_path) {
    if (out_path.empty()) {
        osfib::write_check_csv(std::cout, rows);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return kExitCheckFailed;
        }
        osfib::write_check_csv(out, rows);
    }
    std::size_t failed = 0;
    for (const auto& row : rows) failed += row.pass ? 0 : 1;
    std::cerr << rows.size() - failed << "/" << rows.size() << " checks passed\n";
    return failed == 0 ? 0 : kExitCheckFailed;
}

struct VerifyArgs {
    std::string suite = "all";
    std::string out;
    osfib::ExperimentConfig bounds_cfg; // instance/seed knobs for the empirical suite
    int lp_instances = 200;
    int monitor_k = 10;
    double monitor_delta = 0.1;
    int monitor_best = 5;
    long monitor_horizon = 1000;
    int monitor_runs = 1000;
    int chernoff_n_max = 500;
    int stirling_n_max = 200;
};

int run_verify(const VerifyArgs& args) {
    std::vector<osfib::CheckRow> rows;
    const bool all = args.suite == "all";
    if (all || args.suite == "bounds") {
        auto sub = osfib::verify_bounds(args.bounds_cfg);
        rows.insert(rows.end(), sub.begin(), sub.end());
    }
    if (all || args.suite == "lp") {
        auto sub = osfib::verify_lp(args.lp_instances, args.bounds_cfg.seed);
        rows.insert(rows.end(), sub.begin(), sub.end());
    }
    if (all || args.suite == "monitor") {
        auto sub = osfib::verify_monitor(args.monitor_k, args.monitor_delta, args.monitor_best,
                                         args.monitor_horizon, args.monitor_runs,
                                         args.bounds_cfg.seed);
        rows.insert(rows.end(), sub.begin(), sub.end());
    }
    if (all || args.suite == "chernoff") {
        auto sub = osfib::verify_chernoff(args.chernoff_n_max);
        rows.insert(rows.end(), sub.begin(), sub.end());
    }
    if (all || args.suite == "stirling") {
        auto sub = osfib::verify_stirling(args.stirling_n_max);
        rows.insert(rows.end(), sub.begin(), sub.end());
    }
    return emit_checks(rows, args.out);
}

struct LowerBoundArgs {
    std::string suite = "all";
    std::string out;
    std::uint64_t seed = 1;
    int chernoff_n_max = 500;
    int stirling_n_max = 200;
    int k = 20;
    double eps = 0.2;
    long horizon = 10000;
    int runs = 50;
    std::string predictor = "ftl";
    std::string policy = "elim";
    std::vector<int> k_list{2, 5, 10, 20};
};

int run_lower_bound(const LowerBoundArgs& args) {
    int status = 0;
    const bool all = args.suite == "all";

    if (all || args.suite == "chernoff") {
        std::cout << "n,delta,exact_tail,bound,holds\n";
        bool ok = true;
        for (int n = 25; n <= args.chernoff_n_max; n += 25) {
            for (int d = 15; d <= 50; d += 5) {
                const auto check = osfib::check_reverse_chernoff(n, d / 100.0);
                if (!check.precondition_met) continue;
                ok = ok && check.holds;
                std::cout << n << ',' << osfib::format_double(check.delta) << ','
                          << osfib::format_double(check.exact_tail.get_d()) << ','
                          << osfib::format_double(check.bound) << ',' << (check.holds ? 1 : 0)
                          << '\n';
            }
        }
        if (!ok) status = kExitCheckFailed;
    }
    if (all || args.suite == "stirling") {
        const auto rows = osfib::verify_stirling(args.stirling_n_max);
        if (!osfib::all_pass(rows)) status = kExitCheckFailed;
        std::cerr << "stirling sweep n<=" << args.stirling_n_max << ": "
                  << (osfib::all_pass(rows) ? "all hold" : "FAILED") << '\n';
    }
    if (all || args.suite == "bwp") {
        const auto family = osfib::make_family(args.k, args.eps);
        const osfib::Predictor predictor =
            args.predictor == "constant"
                ? osfib::Predictor([](const std::vector<double>&) { return 1; })
                : osfib::ftl_predictor();
        const auto result = osfib::bwp_accuracy(family, args.horizon, args.runs, predictor,
                                                args.seed);
        std::cout << "K,T,member,success_freq\n";
        for (const auto& member : result.members) {
            std::cout << args.k << ',' << args.horizon << ',' << member.member << ','
                      << osfib::format_double(member.success_freq) << '\n';
        }
        std::cerr << "aggregate=" << result.aggregate << " (se=" << result.aggregate_se
                  << ")\n";
    }
    if (all || args.suite == "scaling") {
        const auto rows = osfib::regret_scaling_probe(args.k_list, args.horizon, args.runs,
                                                      args.policy, args.seed);
        std::cout << "K,eps,mean_regret,ci_low,ci_high,runs\n";
        for (const auto& row : rows) {
            std::cout << row.k << ',' << osfib::format_double(row.eps) << ','
                      << osfib::format_double(row.mean_regret) << ','
                      << osfib::format_double(row.ci_low) << ','
                      << osfib::format_double(row.ci_high) << ',' << row.runs << '\n';
        }
    }
    return status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"one-sided full-information bandit lab", "osfib"};
    app.set_version_flag("--version", osfib::kVersion);
    app.require_subcommand(1);

    // --- run ---------------------------------------------------------------
    osfib::ExperimentConfig cfg;
    std::string checkpoints_text;
    CLI::App* run = app.add_subcommand("run", "simulate a policy and write CSV artifacts");
    add_config_support(*run);
    run->add_option("--algo", cfg.algo, "elim | elim-doubling | ucbn | ucb1 | exp3rtb")
        ->check(CLI::IsMember({"elim", "elim-doubling", "ucbn", "ucb1", "exp3rtb"}));
    run->add_option("--instance", cfg.instance, "uniform-gap | random-mean | auction")
        ->check(CLI::IsMember({"uniform-gap", "random-mean", "auction"}));
    run->add_option("--k", cfg.k, "number of arms")->check(CLI::PositiveNumber);
    run->add_option("--horizon", cfg.horizon, "rounds per run")->check(CLI::PositiveNumber);
    run->add_option("--runs", cfg.runs, "replications")->check(CLI::PositiveNumber);
    run->add_option("--delta", cfg.delta, "uniform-gap: gap of the best arm");
    run->add_option("--base", cfg.base, "uniform-gap: suboptimal mean");
    run->add_option("--lambda", cfg.lambda, "random-mean: best mean is 0.6 + lambda");
    run->add_option("--lo", cfg.lo, "random-mean: lower draw bound");
    run->add_option("--hi", cfg.hi, "random-mean: upper draw bound");
    run->add_option("--best", cfg.best, "position of the best arm");
    run->add_option("--bidders", cfg.bidders, "auction: bidder count");
    run->add_option("--seed", cfg.seed, "master seed")->envname("OSFIB_SEED");
    run->add_option("--threads", cfg.threads, "worker threads (output is identical)");
    run->add_option("--checkpoints", checkpoints_text, "comma-separated rounds to record");
    run->add_option("--exp3-eta", cfg.policy_options.exp3_eta, "override the exp3rtb rate");
    run->add_option("--exp3-gamma", cfg.policy_options.exp3_gamma,
                    "override the exp3rtb exploration mix");
    run->add_option("--out", cfg.out_dir, "output directory")->required();

    // --- verify ------------------------------------------------------------
    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run check suites; exit 1 on any failure");
    add_config_support(*verify);
    verify->add_option("--suite", verify_args.suite, "bounds | lp | monitor | chernoff | stirling | all")
        ->check(CLI::IsMember({"bounds", "lp", "monitor", "chernoff", "stirling", "all"}));
    verify->add_option("--out", verify_args.out, "write the check CSV here instead of stdout");
    verify->add_option("--seed", verify_args.bounds_cfg.seed, "master seed")->envname("OSFIB_SEED");
    verify->add_option("--k", verify_args.bounds_cfg.k)->check(CLI::PositiveNumber);
    verify->add_option("--horizon", verify_args.bounds_cfg.horizon)->check(CLI::PositiveNumber);
    verify->add_option("--runs", verify_args.bounds_cfg.runs)->check(CLI::PositiveNumber);
    verify->add_option("--delta", verify_args.bounds_cfg.delta);
    verify->add_option("--best", verify_args.bounds_cfg.best);
    verify->add_option("--threads", verify_args.bounds_cfg.threads);
    verify->add_option("--lp-instances", verify_args.lp_instances)->check(CLI::PositiveNumber);
    verify->add_option("--monitor-k", verify_args.monitor_k)->check(CLI::PositiveNumber);
    verify->add_option("--monitor-delta", verify_args.monitor_delta);
    verify->add_option("--monitor-best", verify_args.monitor_best);
    verify->add_option("--monitor-horizon", verify_args.monitor_horizon)->check(CLI::PositiveNumber);
    verify->add_option("--monitor-runs", verify_args.monitor_runs)->check(CLI::PositiveNumber);
    verify->add_option("--chernoff-n-max", verify_args.chernoff_n_max)->check(CLI::PositiveNumber);
    verify->add_option("--stirling-n-max", verify_args.stirling_n_max)->check(CLI::PositiveNumber);

    // --- lower-bound ---------------------------------------------------------
    LowerBoundArgs lb_args;
    CLI::App* lower = app.add_subcommand("lower-bound",
                                         "exact tail suites and prediction experiments");
    add_config_support(*lower);
    lower->add_option("--suite", lb_args.suite, "chernoff | stirling | bwp | scaling | all")
        ->check(CLI::IsMember({"chernoff", "stirling", "bwp", "scaling", "all"}));
    lower->add_option("--seed", lb_args.seed, "master seed")->envname("OSFIB_SEED");
    lower->add_option("--chernoff-n-max", lb_args.chernoff_n_max)->check(CLI::PositiveNumber);
    lower->add_option("--stirling-n-max", lb_args.stirling_n_max)->check(CLI::PositiveNumber);
    lower->add_option("--k", lb_args.k, "family size")->check(CLI::PositiveNumber);
    lower->add_option("--eps", lb_args.eps, "family gap parameter (best mean (1+eps)/2)");
    lower->add_option("--horizon", lb_args.horizon, "observed rounds")->check(CLI::NonNegativeNumber);
    lower->add_option("--runs", lb_args.runs, "Monte Carlo runs per member")->check(CLI::PositiveNumber);
    lower->add_option("--predictor", lb_args.predictor, "ftl | constant")
        ->check(CLI::IsMember({"ftl", "constant"}));
    lower->add_option("--policy", lb_args.policy, "policy for the scaling probe")
        ->check(CLI::IsMember({"elim", "elim-doubling", "ucbn", "ucb1", "exp3rtb"}));
    lower->add_option("--k-list", lb_args.k_list, "arm counts for the scaling probe");

    // --- plot-data -----------------------------------------------------------
    std::vector<std::string> summary_files;
    std::vector<std::string> labels;
    std::string plot_out;
    CLI::App* plot = app.add_subcommand("plot-data", "merge summaries into one CSV");
    add_config_support(*plot);
    plot->add_option("--summaries", summary_files, "summary.csv files")->required();
    plot->add_option("--labels", labels, "one label per summary file")->required();
    plot->add_option("--out", plot_out, "output CSV (default: stdout)");

    std::vector<std::string> args;
    try {
        args = apply_config({argv + 1, argv + argc});
    } catch (const osfib::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::reverse(args.begin(), args.end()); // the vector overload wants back-to-front
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (run->parsed()) {
            if (!checkpoints_text.empty()) {
                std::stringstream ss(checkpoints_text);
                std::string token;
                while (std::getline(ss, token, ',')) cfg.checkpoints.push_back(std::stol(token));
            }
            osfib::run_experiment(cfg);
            std::cerr << "wrote " << cfg.out_dir << "/{traces.csv,summary.csv,metadata.json}\n";
            return 0;
        }
        if (verify->parsed()) return run_verify(verify_args);
        if (lower->parsed()) return run_lower_bound(lb_args);
        if (plot->parsed()) {
            std::vector<std::vector<osfib::SummaryRow>> summaries;
            for (const std::string& path : summary_files) {
                std::ifstream in(path, std::ios::binary);
                if (!in) throw osfib::Error("cannot read " + path);
                summaries.push_back(osfib::read_summary_csv(in));
            }
            const auto rows = osfib::merge_summaries(labels, summaries);
            if (plot_out.empty()) {
                osfib::write_plot_csv(std::cout, rows);
            } else {
                std::ofstream out(plot_out, std::ios::binary);
                if (!out) throw osfib::Error("cannot write " + plot_out);
                osfib::write_plot_csv(out, rows);
            }
            return 0;
        }
    } catch (const osfib::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return 0;
}
